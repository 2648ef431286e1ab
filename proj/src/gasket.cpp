#include "sgao/gasket.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "sgao/errors.hpp"

namespace sgao {

namespace {

using Coord = std::vector<std::int64_t>;

// All length-m vectors of nonnegative integers summing to s, in
// lexicographic order.
std::vector<Coord> compositions(int m, int s) {
    std::vector<Coord> out;
    Coord cur(m, 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == m - 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (m > 0) rec(rec, 0, s);
    return out;
}

}  // namespace

void validate_spec(const GasketSpec& spec) {
    if (spec.d < 2) throw std::invalid_argument("gasket: need d >= 2");
    if (spec.b < 2) throw std::invalid_argument("gasket: need b >= 2");
    if (spec.n < 0) throw std::invalid_argument("gasket: need n >= 0");
    if (spec.d >= 3 && spec.b >= 3)
        throw std::invalid_argument(
            "gasket: d >= 3 is only supported with b = 2 (side subdivision of a "
            "higher simplex does not tile by simplices)");
}

BigCount count_vertices(const GasketSpec& spec) {
    validate_spec(spec);
    if (spec.b == 2) {
        // (d+1) ((d+1)^n + 1) / 2
        BigCount t = big_pow(spec.d + 1, spec.n);
        BigCount r = (t + 1) * (spec.d + 1);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 2);
        return r;
    }
    // d = 2: ((b+4) P^n + 2(b+1)) / (b+2) with P = b(b+1)/2
    BigCount p = BigCount(spec.b) * (spec.b + 1) / 2;
    BigCount num = (spec.b + 4) * big_pow(p, spec.n) + 2 * (spec.b + 1);
    if (!mpz_divisible_ui_p(num.get_mpz_t(), spec.b + 2))
        throw std::logic_error("count_vertices: closed form not divisible");
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), spec.b + 2);
    return num;
}

BigCount count_edges(const GasketSpec& spec) {
    validate_spec(spec);
    if (spec.b == 2) {
        // (d/2) (d+1)^(n+1)
        BigCount r = big_pow(spec.d + 1, spec.n + 1) * spec.d;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 2);
        return r;
    }
    BigCount p = BigCount(spec.b) * (spec.b + 1) / 2;
    return 3 * big_pow(p, spec.n);
}

int piece_count(int d, int b) {
    BigCount c = big_binomial(b + d - 1, d);
    if (!c.fits_sint_p()) throw ResourceError("piece_count: overflow");
    return static_cast<int>(c.get_si());
}

Graph build_gasket(const GasketSpec& spec, std::int64_t max_vertices) {
    validate_spec(spec);
    BigCount nv = count_vertices(spec);
    if (nv > max_vertices)
        throw ResourceError("build_gasket: stage needs " + to_decimal(nv) +
                            " vertices, cap is " + std::to_string(max_vertices));

    int k = spec.d + 1;

    // Stage 0: complete graph on the corner coordinates e_0..e_d.
    std::vector<Coord> coords;
    for (int t = 0; t < k; ++t) {
        Coord c(k, 0);
        c[t] = 1;
        coords.push_back(c);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);

    // Each stage places one copy of the previous stage per offset vector
    // (sum b-1), scaled by the previous side length.  Copies overlap only
    // in single vertices, which the coordinate map merges.
    std::vector<Coord> offsets = compositions(k, spec.b - 1);
    std::int64_t side = 1;
    for (int stage = 0; stage < spec.n; ++stage) {
        std::map<Coord, int> index;
        for (const Coord& off : offsets) {
            Coord nc(k);
            for (const Coord& c : coords) {
                for (int t = 0; t < k; ++t) nc[t] = off[t] * side + c[t];
                index.emplace(nc, 0);
            }
        }
        int next_id = 0;
        for (auto& [c, id] : index) id = next_id++;

        std::set<std::pair<int, int>> new_edges;
        Coord cu(k), cv(k);
        for (const Coord& off : offsets) {
            for (auto [u, v] : edges) {
                for (int t = 0; t < k; ++t) {
                    cu[t] = off[t] * side + coords[u][t];
                    cv[t] = off[t] * side + coords[v][t];
                }
                int iu = index.at(cu), iv = index.at(cv);
                new_edges.emplace(std::min(iu, iv), std::max(iu, iv));
            }
        }

        coords.clear();
        coords.reserve(index.size());
        for (const auto& [c, id] : index) coords.push_back(c);
        edges.assign(new_edges.begin(), new_edges.end());
        side *= spec.b;
    }

    Graph g;
    g.num_vertices = static_cast<int>(coords.size());
    g.edges = std::move(edges);
    g.corners.resize(k, -1);
    for (int v = 0; v < g.num_vertices; ++v) {
        for (int t = 0; t < k; ++t) {
            if (coords[v][t] == side) {
                g.corners[t] = v;
                break;
            }
        }
    }
    for (int t = 0; t < k; ++t)
        if (g.corners[t] < 0) throw std::logic_error("build_gasket: corner missing");
    g.normalize();

    if (BigCount(g.num_vertices) != nv || BigCount(g.num_edges()) != count_edges(spec))
        throw std::logic_error("build_gasket: size disagrees with closed form");
    return g;
}

GluingLayout build_layout(int d, int b) {
    validate_spec({d, b, 0});
    int k = d + 1;
    std::vector<Coord> junction_coords = compositions(k, b);
    std::map<Coord, int> index;
    for (int i = 0; i < static_cast<int>(junction_coords.size()); ++i)
        index.emplace(junction_coords[i], i);

    GluingLayout lay;
    lay.d = d;
    lay.b = b;
    lay.num_junctions = static_cast<int>(junction_coords.size());

    for (const Coord& off : compositions(k, b - 1)) {
        std::vector<int> slots(k);
        for (int t = 0; t < k; ++t) {
            Coord c = off;
            c[t] += 1;
            slots[t] = index.at(c);
        }
        lay.piece_slots.push_back(std::move(slots));
    }

    lay.outer.resize(k);
    for (int t = 0; t < k; ++t) {
        Coord c(k, 0);
        c[t] = b;
        lay.outer[t] = index.at(c);
    }
    return lay;
}

}  // namespace sgao
