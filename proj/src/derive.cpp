#include "sgao/derive.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

#include "sgao/errors.hpp"
#include "derive_internal.hpp"

namespace sgao {

namespace {

constexpr int kMaxJunctions = 32;

// Junction digraph with incrementally maintained reachability closure.
// reach[x] holds everything reachable from x (x excluded), rin[x] holds
// everything that reaches x.  Snapshots make backtracking cheap.
struct JunctionReach {
    int n = 0;
    std::array<std::uint32_t, kMaxJunctions> reach{}, rin{};

    void clear(int count) {
        n = count;
        reach.fill(0);
        rin.fill(0);
    }

    // False when the arc closes a cycle; otherwise commits the arc and its
    // closure consequences.
    bool add_arc(int u, int v) {
        if (u == v) return false;
        if ((reach[v] >> u) & 1) return false;  // v already reaches u
        std::uint32_t to = reach[v] | (1u << v);
        std::uint32_t from = rin[u] | (1u << u);
        for (std::uint32_t m = from; m;) {
            int x = std::countr_zero(m);
            m &= m - 1;
            reach[x] |= to;
        }
        for (std::uint32_t m = to; m;) {
            int y = std::countr_zero(m);
            m &= m - 1;
            rin[y] |= from;
        }
        return true;
    }
};

}  // namespace

std::optional<CornerPoset> glue(const GluingLayout& lay,
                                const std::vector<CornerPoset>& piece_states) {
    if (static_cast<int>(piece_states.size()) != lay.num_pieces())
        throw std::invalid_argument("glue: one state per piece required");
    if (lay.num_junctions > kMaxJunctions)
        throw ResourceError("glue: too many junction vertices");
    int k = lay.d + 1;

    JunctionReach jr;
    jr.clear(lay.num_junctions);
    for (int p = 0; p < lay.num_pieces(); ++p) {
        const CornerPoset& st = piece_states[p];
        if (st.k != k) throw std::invalid_argument("glue: piece state arity mismatch");
        for (auto [u, v] : st.pairs())
            if (!jr.add_arc(lay.piece_slots[p][u], lay.piece_slots[p][v]))
                return std::nullopt;
    }

    CornerPoset out{k, 0};
    for (int a = 0; a < k; ++a)
        for (int c = 0; c < k; ++c)
            if (c != a && ((jr.reach[lay.outer[a]] >> lay.outer[c]) & 1))
                out = out.with(a, c);
    return out;
}

namespace detail {

void merge_raw(RawPolys& into, const RawPolys& from) {
    for (const auto& [rel, poly] : from.per_outer) {
        auto& dst = into.per_outer[rel];
        for (const auto& [key, cnt] : poly) dst[key] += cnt;
    }
}

RawPolys enumerate_direct(const GluingLayout& lay, const ClassTable& table,
                          int threads) {
    const auto& posets = enumerate_posets(table.k);
    int nposets = static_cast<int>(posets.size());
    int npieces = lay.num_pieces();

    // Pre-route every poset's pairs through every piece's slots.
    std::vector<std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>>> arcs(
        npieces);
    for (int p = 0; p < npieces; ++p) {
        arcs[p].resize(nposets);
        for (int r = 0; r < nposets; ++r)
            for (auto [u, v] : posets[r].pairs())
                arcs[p][r].emplace_back(
                    static_cast<std::uint8_t>(lay.piece_slots[p][u]),
                    static_cast<std::uint8_t>(lay.piece_slots[p][v]));
    }
    std::vector<int> class_of(nposets);
    for (int r = 0; r < nposets; ++r) class_of[r] = table.class_of(posets[r]);

    int k = table.k;
    std::vector<int> outer = lay.outer;

    auto run_slice = [&](int first_lo, int first_hi) {
        RawPolys out;
        JunctionReach jr;
        jr.clear(lay.num_junctions);
        std::vector<JunctionReach> snap(npieces + 1);
        ExpKey key = 0;

        auto rec = [&](auto&& self, int piece) -> void {
            if (piece == npieces) {
                std::uint32_t rel = 0;
                for (int a = 0; a < k; ++a)
                    for (int c = 0; c < k; ++c)
                        if (c != a && ((jr.reach[outer[a]] >> outer[c]) & 1))
                            rel |= 1u << CornerPoset::slot(k, a, c);
                ++out.per_outer[rel][key];
                return;
            }
            int lo = piece == 0 ? first_lo : 0;
            int hi = piece == 0 ? first_hi : nposets;
            for (int r = lo; r < hi; ++r) {
                snap[piece] = jr;
                bool ok = true;
                for (auto [u, v] : arcs[piece][r])
                    if (!jr.add_arc(u, v)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    key += exp_field(class_of[r]);
                    self(self, piece + 1);
                    key -= exp_field(class_of[r]);
                }
                jr = snap[piece];
            }
        };
        rec(rec, 0);
        return out;
    };

    if (threads <= 1) return run_slice(0, nposets);

    int nt = std::min(threads, nposets);
    std::vector<RawPolys> parts(nt);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            for (;;) {
                int r = next.fetch_add(1);
                if (r >= nposets) break;
                RawPolys piece = run_slice(r, r + 1);
                merge_raw(parts[t], piece);
            }
        });
    for (auto& th : pool) th.join();
    RawPolys out;
    for (const auto& p : parts) merge_raw(out, p);
    return out;
}

RecursionSystem assemble_system(int d, int b, int pieces, const ClassTable& table,
                                const RawPolys& raw) {
    if (table.size() > 16 || pieces > 15)
        throw ResourceError("assemble_system: exponent packing limits exceeded");

    // Class well-definedness: the polynomial accumulated for a labeled outer
    // poset may depend only on its orbit.  A violation here means the
    // symmetry group used for the class table does not match the layout.
    static const RawPoly kEmpty;
    auto poly_of = [&](std::uint32_t rel) -> const RawPoly& {
        auto it = raw.per_outer.find(rel);
        return it == raw.per_outer.end() ? kEmpty : it->second;
    };
    for (const auto& poset : enumerate_posets(table.k)) {
        const RawPoly& mine = poly_of(poset.rel);
        const RawPoly& reps = poly_of(table.canonical(poset).rel);
        if (mine != reps)
            throw std::logic_error(
                "derive: labeled outer posets of one orbit got different polynomials");
    }
    for (const auto& [rel, poly] : raw.per_outer)
        if (!CornerPoset{table.k, rel}.is_valid())
            throw std::logic_error("derive: outer state is not a poset");

    RecursionSystem sys;
    sys.d = d;
    sys.b = b;
    sys.pieces = pieces;
    sys.classes = table;
    for (int c = 0; c < table.size(); ++c) {
        Polynomial poly(table.size());
        for (const auto& [key, cnt] : poly_of(table.reps[c].rel)) {
            Polynomial::Exponents e(table.size());
            for (int i = 0; i < table.size(); ++i)
                e[i] = static_cast<std::uint8_t>((key >> (4 * i)) & 15);
            poly.add_term(e, BigCount(static_cast<unsigned long>(cnt)));
        }
        sys.polys.push_back(std::move(poly));
    }
    sys.check();
    return sys;
}

}  // namespace detail

RecursionSystem derive_recursion(int d, int b, const DeriveOptions& opts,
                                 DeriveStats* stats) {
    validate_spec({d, b, 0});
    GluingLayout lay = build_layout(d, b);
    ClassTable table = orbit_classes(d + 1, true);

    detail::RawPolys raw;
    if (!opts.force_dp && lay.num_pieces() <= 6)
        raw = detail::enumerate_direct(lay, table, std::max(opts.threads, 1));
    else
        raw = detail::enumerate_dp(lay, table, opts.max_dp_states);

    if (stats) {
        stats->assignments =
            big_pow(BigCount(static_cast<long>(enumerate_posets(d + 1).size())),
                    static_cast<unsigned long>(lay.num_pieces()));
        stats->accepted = 0;
        for (const auto& [rel, poly] : raw.per_outer)
            for (const auto& [key, cnt] : poly)
                stats->accepted += static_cast<unsigned long>(cnt);
    }
    return detail::assemble_system(d, b, lay.num_pieces(), table, raw);
}

ClassVector fold_to_classes(const LabeledStateVector& v, const ClassTable& t,
                            int stage) {
    if (v.k != t.k) throw std::invalid_argument("fold_to_classes: arity mismatch");
    ClassVector out;
    out.stage = stage;
    out.x.assign(t.size(), 0);
    std::vector<bool> seen(t.size(), false);
    for (const auto& [poset, cnt] : v.states) {
        int c = t.class_of(poset);
        if (!seen[c]) {
            out.x[c] = cnt;
            seen[c] = true;
        } else if (out.x[c] != cnt) {
            throw std::runtime_error(
                "fold_to_classes: labeled posets of one class carry different counts");
        }
    }
    // Posets absent from `v` have count zero; classes partially present
    // would have tripped the branch above only if some member was nonzero,
    // so a seen class with zero-count members left out is inconsistent.
    for (const auto& poset : enumerate_posets(t.k)) {
        int c = t.class_of(poset);
        if (seen[c] && out.x[c] != 0 && v.count_of(poset) == 0)
            throw std::runtime_error(
                "fold_to_classes: class member missing from labeled counts");
    }
    return out;
}

VerifyReport verify_recursion(const RecursionSystem& sys, const ClassVector& from,
                              const LabeledStateVector& observed_next) {
    VerifyReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };

    if (static_cast<int>(from.x.size()) != sys.num_classes()) {
        fail("class vector arity does not match system");
        return rep;
    }
    std::vector<BigCount> predicted;
    for (const auto& p : sys.polys) predicted.push_back(p.eval(from.x));

    ClassVector folded;
    try {
        folded = fold_to_classes(observed_next, sys.classes, from.stage + 1);
    } catch (const std::runtime_error& e) {
        fail(e.what());
        return rep;
    }
    for (int c = 0; c < sys.num_classes(); ++c)
        if (predicted[c] != folded.x[c])
            fail("class " + sys.classes.names[c] + ": predicted " +
                 to_decimal(predicted[c]) + ", observed " + to_decimal(folded.x[c]));

    BigCount total_pred = 0;
    for (int c = 0; c < sys.num_classes(); ++c)
        total_pred += sys.classes.orbit_size[c] * predicted[c];
    if (total_pred != observed_next.total())
        fail("total: predicted " + to_decimal(total_pred) + ", observed " +
             to_decimal(observed_next.total()));
    return rep;
}

}  // namespace sgao
