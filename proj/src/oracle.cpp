#include "sgao/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

#include "sgao/errors.hpp"

namespace sgao {

namespace {

constexpr int kMaxVerts = 32;

struct SweepPlan {
    int nv = 0, ne = 0;
    std::uint32_t all = 0;
    std::array<std::uint8_t, 40> eu{}, ev{};
    // Directed triangle (u<v<w) is a cycle iff the three edge bits match one
    // of two patterns under `mask`.
    struct Tri {
        OrientationBits mask, pat1, pat2;
    };
    std::vector<Tri> tris;
};

SweepPlan make_plan(const Graph& g, const SweepLimits& limits) {
    if (g.num_vertices > kMaxVerts)
        throw ResourceError("orientation sweep: more than 32 vertices");
    if (g.num_edges() > limits.max_edges || g.num_edges() > 40)
        throw ResourceError("orientation sweep: " + std::to_string(g.num_edges()) +
                            " edges exceeds cap " + std::to_string(std::min(limits.max_edges, 40)));
    SweepPlan p;
    p.nv = g.num_vertices;
    p.ne = g.num_edges();
    p.all = p.nv == 32 ? ~0u : (1u << p.nv) - 1;

    std::array<std::array<int, kMaxVerts>, kMaxVerts> eidx;
    for (auto& row : eidx) row.fill(-1);
    std::array<std::uint32_t, kMaxVerts> adj{};
    for (int i = 0; i < p.ne; ++i) {
        auto [u, v] = g.edges[i];
        p.eu[i] = static_cast<std::uint8_t>(u);
        p.ev[i] = static_cast<std::uint8_t>(v);
        eidx[u][v] = eidx[v][u] = i;
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    if (limits.triangle_filter) {
        for (int i = 0; i < p.ne; ++i) {
            int u = p.eu[i], v = p.ev[i];
            std::uint32_t common = adj[u] & adj[v];
            while (common) {
                int w = std::countr_zero(common);
                common &= common - 1;
                if (w <= v) continue;  // enumerate each triangle once, u<v<w
                OrientationBits e1 = 1ull << eidx[u][v];
                OrientationBits e2 = 1ull << eidx[v][w];
                OrientationBits e3 = 1ull << eidx[u][w];
                // u->v->w->u sets e1, e2, clears e3; the reverse cycle is the
                // complement within the mask.
                p.tris.push_back({e1 | e2 | e3, e1 | e2, e3});
            }
        }
    }
    return p;
}

// Mutable per-thread sweep state: in/out neighbor masks per vertex,
// maintained incrementally across single-bit flips of the orientation.
struct SweepState {
    std::array<std::uint32_t, kMaxVerts> in{}, out{};

    void init(const SweepPlan& p, OrientationBits bits) {
        in.fill(0);
        out.fill(0);
        for (int i = 0; i < p.ne; ++i) apply(p, i, (bits >> i) & 1, true);
    }

    void apply(const SweepPlan& p, int i, bool low_to_high, bool fresh = false) {
        int u = p.eu[i], v = p.ev[i];
        std::uint32_t bu = 1u << u, bv = 1u << v;
        if (low_to_high) {
            out[u] |= bv;
            in[v] |= bu;
            if (!fresh) {
                out[v] &= ~bu;
                in[u] &= ~bv;
            }
        } else {
            out[v] |= bu;
            in[u] |= bv;
            if (!fresh) {
                out[u] &= ~bv;
                in[v] &= ~bu;
            }
        }
    }

    // Repeatedly strip sources; acyclic iff everything strips.
    bool acyclic(const SweepPlan& p) const {
        std::uint32_t rem = p.all;
        while (rem) {
            std::uint32_t src = 0;
            for (std::uint32_t m = rem; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (!(in[v] & rem)) src |= 1u << v;
            }
            if (!src) return false;
            rem &= ~src;
        }
        return true;
    }

    std::uint32_t reach_from(int start) const {
        std::uint32_t seen = out[start];
        std::uint32_t todo = seen;
        while (todo) {
            int v = std::countr_zero(todo);
            todo &= todo - 1;
            std::uint32_t fresh = out[v] & ~seen;
            seen |= fresh;
            todo |= fresh;
        }
        return seen;
    }
};

// Walks orientations gray(lo), gray(lo+1), ..., gray(hi-1) so consecutive
// orientations differ in one edge.  Calls on_acyclic(state) for each acyclic
// one.  Blocks partition [0, 2^E) and the gray map is a bijection, so a
// partition of index space is a partition of orientation space.
template <class Fn>
void run_sweep(const SweepPlan& p, OrientationBits lo, OrientationBits hi, Fn&& on_acyclic) {
    if (lo >= hi) return;
    OrientationBits bits = lo ^ (lo >> 1);
    SweepState st;
    st.init(p, bits);
    for (OrientationBits i = lo;;) {
        bool cyclic = false;
        for (const auto& t : p.tris) {
            OrientationBits x = bits & t.mask;
            if (x == t.pat1 || x == t.pat2) {
                cyclic = true;
                break;
            }
        }
        if (!cyclic && st.acyclic(p)) on_acyclic(st);
        if (++i == hi) break;
        int e = std::countr_zero(i);
        bits ^= 1ull << e;
        st.apply(p, e, (bits >> e) & 1);
    }
}

int resolve_threads(int threads) {
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");
    if (threads == 0) {
        unsigned hc = std::thread::hardware_concurrency();
        return hc ? static_cast<int>(hc) : 1;
    }
    return threads;
}

// Runs fn(block, lo, hi) over an even partition of [0, 2^ne).
template <class Fn>
void partitioned(const SweepPlan& p, int threads, Fn&& fn) {
    OrientationBits total = 1ull << p.ne;
    int nb = threads;
    if (static_cast<OrientationBits>(nb) > total) nb = static_cast<int>(total);
    if (nb <= 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    for (int b = 0; b < nb; ++b) {
        OrientationBits lo = total / nb * b + std::min<OrientationBits>(b, total % nb);
        OrientationBits hi = lo + total / nb + (static_cast<OrientationBits>(b) < total % nb ? 1 : 0);
        pool.emplace_back([&fn, b, lo, hi] { fn(b, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

bool is_acyclic(const Graph& g, OrientationBits bits) {
    SweepLimits lim;
    lim.triangle_filter = false;
    SweepPlan p = make_plan(g, lim);
    SweepState st;
    st.init(p, bits);
    return st.acyclic(p);
}

CornerPoset corner_reachability(const Graph& g, OrientationBits bits) {
    int k = static_cast<int>(g.corners.size());
    if (k < 2 || k > 5)
        throw std::invalid_argument("corner_reachability: need 2..5 corners");
    SweepLimits lim;
    lim.triangle_filter = false;
    SweepPlan p = make_plan(g, lim);
    SweepState st;
    st.init(p, bits);
    if (!st.acyclic(p))
        throw std::invalid_argument("corner_reachability: orientation has a cycle");
    CornerPoset poset{k, 0};
    for (int a = 0; a < k; ++a) {
        std::uint32_t seen = st.reach_from(g.corners[a]);
        for (int b = 0; b < k; ++b)
            if (b != a && ((seen >> g.corners[b]) & 1)) poset = poset.with(a, b);
    }
    return poset;
}

BigCount count_bruteforce(const Graph& g, const SweepLimits& limits, int threads) {
    SweepPlan p = make_plan(g, limits);
    int nt = resolve_threads(threads);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(std::max(nt, 1)), 0);
    partitioned(p, nt, [&](int b, OrientationBits lo, OrientationBits hi) {
        std::uint64_t n = 0;
        run_sweep(p, lo, hi, [&n](const SweepState&) { ++n; });
        partial[b] = n;
    });
    std::uint64_t total = 0;
    for (auto n : partial) total += n;
    return BigCount(static_cast<unsigned long>(total));
}

BigCount LabeledStateVector::total() const {
    BigCount t = 0;
    for (const auto& [p, c] : states) t += c;
    return t;
}

BigCount LabeledStateVector::count_of(const CornerPoset& p) const {
    for (const auto& [q, c] : states)
        if (q == p) return c;
    return 0;
}

LabeledStateVector classify_orientations(const Graph& g, const SweepLimits& limits,
                                         int threads) {
    int k = static_cast<int>(g.corners.size());
    if (k < 2 || k > 5)
        throw std::invalid_argument("classify_orientations: need 2..5 corners");
    SweepPlan p = make_plan(g, limits);
    int nt = resolve_threads(threads);

    std::array<std::uint8_t, 5> corner{};
    for (int a = 0; a < k; ++a) corner[a] = static_cast<std::uint8_t>(g.corners[a]);

    std::size_t nrel = 1u << (k * (k - 1));
    std::vector<std::vector<std::uint64_t>> partial(
        static_cast<std::size_t>(std::max(nt, 1)));
    partitioned(p, nt, [&](int b, OrientationBits lo, OrientationBits hi) {
        std::vector<std::uint64_t> counts(nrel, 0);
        run_sweep(p, lo, hi, [&](const SweepState& st) {
            std::uint32_t rel = 0;
            for (int a = 0; a < k; ++a) {
                std::uint32_t seen = st.reach_from(corner[a]);
                for (int c = 0; c < k; ++c)
                    if (c != a && ((seen >> corner[c]) & 1))
                        rel |= 1u << CornerPoset::slot(k, a, c);
            }
            ++counts[rel];
        });
        partial[b] = std::move(counts);
    });

    LabeledStateVector out;
    out.k = k;
    for (std::uint32_t rel = 0; rel < nrel; ++rel) {
        std::uint64_t sum = 0;
        for (const auto& counts : partial) sum += counts[rel];
        if (sum == 0) continue;
        CornerPoset poset{k, rel};
        if (!poset.is_valid())
            throw std::logic_error("classify: reachability produced a non-poset");
        out.states.emplace_back(poset, BigCount(static_cast<unsigned long>(sum)));
    }
    return out;
}

}  // namespace sgao
