#include "sgao/recur.hpp"

#include <stdexcept>

#include "sgao/gasket.hpp"

namespace sgao {

void RecursionSystem::check() const {
    validate_spec({d, b, 0});
    if (pieces != piece_count(d, b)) throw std::logic_error("system: wrong piece count");
    if (static_cast<int>(polys.size()) != classes.size())
        throw std::logic_error("system: one polynomial per class required");
    int k = d + 1;
    if (classes.k != k) throw std::logic_error("system: class table arity mismatch");
    if (classes.reps.empty() || classes.reps[0].num_pairs() != k * (k - 1) / 2)
        throw std::logic_error("system: first class must be the chain");
    for (const auto& p : polys) {
        if (p.nvars() != classes.size()) throw std::logic_error("system: poly arity");
        if (!p.is_homogeneous(pieces))
            throw std::logic_error("system: polynomials must be homogeneous of piece degree");
    }
}

const ClassVector& StageSequence::at(int n) const {
    if (n < 0 || n >= static_cast<int>(stages.size()))
        throw std::out_of_range("stage " + std::to_string(n) + " not computed");
    return stages[n];
}

BigCount StageSequence::f(int n) const {
    const ClassVector& v = at(n);
    BigCount total = 0;
    for (std::size_t i = 0; i < v.x.size(); ++i) total += orbit_size[i] * v.x[i];
    return total;
}

StageSequence iterate(const RecursionSystem& sys, int n_max) {
    if (n_max < 0) throw std::invalid_argument("iterate: n_max must be >= 0");
    sys.check();

    StageSequence seq;
    seq.d = sys.d;
    seq.b = sys.b;
    seq.orbit_size = sys.classes.orbit_size;

    // Stage 0 is the complete graph on the corners: every acyclic
    // orientation is a total order, one per labeled chain.
    ClassVector v0;
    v0.stage = 0;
    v0.x.assign(sys.num_classes(), 0);
    v0.x[0] = 1;
    seq.stages.push_back(v0);

    for (int n = 1; n <= n_max; ++n) {
        const ClassVector& prev = seq.stages.back();
        ClassVector next;
        next.stage = n;
        next.x.reserve(sys.num_classes());
        for (const auto& p : sys.polys) next.x.push_back(p.eval(prev.x));
        seq.stages.push_back(std::move(next));
    }
    return seq;
}

Polynomial pair_presence_poly(const ClassTable& t, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= t.k || v >= t.k)
        throw std::invalid_argument("pair_presence_poly: bad pair");
    Polynomial p(t.size());
    for (const auto& poset : enumerate_posets(t.k)) {
        if (!poset.has(u, v)) continue;
        Polynomial::Exponents e(t.size(), 0);
        e[t.class_of(poset)] = 1;
        p.add_term(e, 1);
    }
    return p;
}

BigCount f_direct(const StageSequence& seq, int n) {
    if (n < 1) throw std::invalid_argument("f_direct: need n >= 1");
    if (seq.d != 2 || (seq.b != 2 && seq.b != 3))
        throw std::invalid_argument("f_direct: closed form known only for (2,2) and (2,3)");
    const ClassVector& prev = seq.at(n - 1);

    ClassTable t = orbit_classes(3, true);
    BigCount s = pair_presence_poly(t, 0, 1).eval(prev.x);
    BigCount r = f_rejection_cofactor(seq.d, seq.b, 4).eval(prev.x);
    unsigned pieces = static_cast<unsigned>(seq.b * (seq.b + 1) / 2);
    return big_pow(seq.f(n - 1), pieces) - 2 * s * s * s * r;
}

}  // namespace sgao
