// Deletion-contraction evaluation of (-1)^v P(G, -1).
//
// Written against the identity A(G) = A(G - e) + A(G / e) for simple e,
// with A(G) = (-1)^{v(G)} P(G, -1); the signs fold away and every
// intermediate value stays a nonnegative count.  Base cases: a forest
// component contributes 2^(edges), a clique on m vertices contributes m!.
// Parallel edges arising from contraction are collapsed (they do not change
// the chromatic polynomial); a self-loop would zero the polynomial but
// cannot arise when only simple edges are contracted.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sgao/errors.hpp"
#include "sgao/oracle.hpp"

namespace sgao {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

struct DcContext {
    bool memoize = false;
    std::map<std::pair<int, EdgeList>, BigCount> memo;
};

// edges: normalized (u < v), sorted, unique, over vertices 0..nv-1.
BigCount a_value(int nv, EdgeList edges, DcContext& ctx);

BigCount a_connected(int nv, EdgeList edges, DcContext& ctx) {
    int ne = static_cast<int>(edges.size());
    if (ne == nv - 1) {
        // Connected and acyclic: a tree.
        BigCount r = 1;
        mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), ne);
        return r;
    }
    if (2 * ne == nv * (nv - 1)) return big_factorial(nv);

    if (ctx.memoize) {
        auto it = ctx.memo.find({nv, edges});
        if (it != ctx.memo.end()) return it->second;
    }

    // Branch edge: most common neighbors first, so contraction collapses
    // parallels quickly; ties broken by degree sum.
    std::vector<int> deg(nv, 0);
    std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
        adj[u][v] = adj[v][u] = true;
    }
    int best = 0, best_common = -1, best_deg = -1;
    for (int i = 0; i < ne; ++i) {
        auto [u, v] = edges[i];
        int common = 0;
        for (int w = 0; w < nv; ++w)
            if (adj[u][w] && adj[v][w]) ++common;
        int ds = deg[u] + deg[v];
        if (common > best_common || (common == best_common && ds > best_deg)) {
            best = i;
            best_common = common;
            best_deg = ds;
        }
    }

    auto [bu, bv] = edges[best];

    EdgeList del = edges;
    del.erase(del.begin() + best);

    // Contract bv into bu, relabel the last vertex down into bv's slot.
    EdgeList con;
    con.reserve(edges.size() - 1);
    for (int i = 0; i < ne; ++i) {
        if (i == best) continue;
        auto [u, v] = edges[i];
        if (u == bv) u = bu;
        if (v == bv) v = bu;
        if (u == bv || v == bv) throw std::logic_error("unreachable");
        if (u == v) continue;  // parallel partner of the contracted edge
        auto fix = [&](int x) { return x == nv - 1 ? bv : x; };
        if (bv != nv - 1) {
            u = fix(u);
            v = fix(v);
        }
        if (u > v) std::swap(u, v);
        con.emplace_back(u, v);
    }
    std::sort(con.begin(), con.end());
    con.erase(std::unique(con.begin(), con.end()), con.end());

    BigCount r = a_value(nv, std::move(del), ctx) + a_value(nv - 1, std::move(con), ctx);
    if (ctx.memoize) ctx.memo.emplace(std::make_pair(nv, std::move(edges)), r);
    return r;
}

BigCount a_value(int nv, EdgeList edges, DcContext& ctx) {
    // Split into connected components; A is multiplicative over them and
    // isolated vertices contribute 1.
    std::vector<int> root(nv);
    for (int i = 0; i < nv; ++i) root[i] = i;
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (auto [u, v] : edges) root[find(u)] = find(v);

    std::map<int, std::vector<int>> comps;
    for (int i = 0; i < nv; ++i) comps[find(i)].push_back(i);

    BigCount result = 1;
    for (auto& [r, verts] : comps) {
        if (verts.size() == 1) continue;
        std::vector<int> local(nv, -1);
        for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
        EdgeList sub;
        for (auto [u, v] : edges)
            if (find(u) == r) sub.emplace_back(local[u], local[v]);
        for (auto& [u, v] : sub)
            if (u > v) std::swap(u, v);
        std::sort(sub.begin(), sub.end());
        result *= a_connected(static_cast<int>(verts.size()), std::move(sub), ctx);
    }
    if (result < 0) throw std::logic_error("count_chromatic: negative intermediate");
    return result;
}

}  // namespace

BigCount count_chromatic(const Graph& g, const ChromaticLimits& limits) {
    if (g.num_edges() > limits.max_edges)
        throw ResourceError("count_chromatic: " + std::to_string(g.num_edges()) +
                            " edges exceeds cap " + std::to_string(limits.max_edges));
    Graph copy = g;
    copy.normalize();
    DcContext ctx;
    ctx.memoize = limits.memoize;
    return a_value(copy.num_vertices, copy.edges, ctx);
}

}  // namespace sgao
