#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sgao/errors.hpp"
#include "sgao/gasket.hpp"
#include "sgao/oracle.hpp"

using namespace sgao;

namespace {

Graph make(int nv, std::vector<std::pair<int, int>> edges, std::vector<int> corners = {}) {
    Graph g;
    g.num_vertices = nv;
    g.edges = std::move(edges);
    g.corners = std::move(corners);
    g.normalize();
    return g;
}

Graph triangle() { return make(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 1, 2}); }

}  // namespace

TEST_CASE("acyclicity of single orientations") {
    Graph g = triangle();
    // edges sorted: (0,1), (0,2), (1,2); bit set = low -> high
    CHECK(is_acyclic(g, 0b111));   // 0->1, 0->2, 1->2: total order
    CHECK(is_acyclic(g, 0b000));   // all reversed: still a total order
    CHECK_FALSE(is_acyclic(g, 0b101));  // 0->1, 1->2, 2->0 cycle
    CHECK_FALSE(is_acyclic(g, 0b010));  // the reverse cycle
}

TEST_CASE("brute force on tiny graphs") {
    CHECK(count_bruteforce(triangle()) == 6);
    // trees: every orientation is acyclic
    CHECK(count_bruteforce(make(3, {{0, 1}, {1, 2}})) == 4);
    CHECK(count_bruteforce(make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})) == 16);
    // complete graphs: v! acyclic orientations
    CHECK(count_bruteforce(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 24);
    // two disjoint triangles multiply
    CHECK(count_bruteforce(make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})) == 36);
}

TEST_CASE("chromatic oracle equals brute force") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 12; ++trial) {
        int nv = 4 + static_cast<int>(rng() % 4);  // 4..7 vertices
        std::vector<std::pair<int, int>> all;
        for (int u = 0; u < nv; ++u)
            for (int v = u + 1; v < nv; ++v) all.emplace_back(u, v);
        std::shuffle(all.begin(), all.end(), rng);
        std::size_t ne = 3 + rng() % (all.size() - 3);
        Graph g = make(nv, {all.begin(), all.begin() + static_cast<long>(ne)});
        CAPTURE(trial);
        CAPTURE(nv);
        CAPTURE(ne);
        CHECK(count_bruteforce(g) == count_chromatic(g));
    }
}

TEST_CASE("oracles agree on the 1-stage gaskets") {
    Graph g21 = build_gasket({2, 2, 1});
    CHECK(count_bruteforce(g21) == 162);
    CHECK(count_chromatic(g21) == 162);

    Graph g231 = build_gasket({2, 3, 1});
    CHECK(count_bruteforce(g231) == 19602);
    CHECK(count_chromatic(g231) == 19602);
}

TEST_CASE("triangle filter and memoization change nothing") {
    Graph g = build_gasket({2, 3, 1});
    SweepLimits no_filter;
    no_filter.triangle_filter = false;
    CHECK(count_bruteforce(g, no_filter) == 19602);
    ChromaticLimits memo;
    memo.memoize = true;
    CHECK(count_chromatic(g, memo) == 19602);
}

TEST_CASE("thread partition is exact") {
    Graph g = build_gasket({2, 3, 1});
    BigCount one = count_bruteforce(g, {}, 1);
    BigCount four = count_bruteforce(g, {}, 4);
    CHECK(one == four);
    LabeledStateVector c1 = classify_orientations(g, {}, 1);
    LabeledStateVector c3 = classify_orientations(g, {}, 3);
    CHECK(c1 == c3);
}

TEST_CASE("corner reachability") {
    Graph g = triangle();
    CornerPoset p = corner_reachability(g, 0b111);  // 0->1, 0->2, 1->2
    CHECK(p.k == 3);
    CHECK(p.has(0, 1));
    CHECK(p.has(0, 2));
    CHECK(p.has(1, 2));
    CHECK(p.num_pairs() == 3);
    CHECK_THROWS_AS(corner_reachability(g, 0b101), std::invalid_argument);

    // path 0-1-2 with corners (0,2): orientation 0->1->2 reaches, 0->1<-2 does not
    Graph path = make(3, {{0, 1}, {1, 2}}, {0, 2});
    CHECK(corner_reachability(path, 0b11).has(0, 1));
    CHECK(corner_reachability(path, 0b01).num_pairs() == 0);
}

TEST_CASE("classification sums to the count and is reversal symmetric") {
    for (GasketSpec spec : {GasketSpec{2, 2, 1}, {2, 3, 1}}) {
        CAPTURE(spec.b);
        Graph g = build_gasket(spec);
        LabeledStateVector v = classify_orientations(g);
        CHECK(v.total() == count_bruteforce(g));
        // reversing every edge maps acyclic onto acyclic and transposes the
        // corner poset, so counts must be symmetric under reversal
        for (const auto& [poset, count] : v.states)
            CHECK(v.count_of(poset.reversed()) == count);
    }
}

TEST_CASE("classification of the stage-0 simplex") {
    // complete graph: acyclic orientations are the k! total orders, one per
    // labeled chain
    Graph k3 = build_gasket({2, 2, 0});
    LabeledStateVector v = classify_orientations(k3);
    CHECK(v.total() == 6);
    CHECK(v.states.size() == 6);
    for (const auto& [poset, count] : v.states) {
        CHECK(poset.num_pairs() == 3);
        CHECK(count == 1);
    }
}

TEST_CASE("edge cap is enforced") {
    Graph g = build_gasket({2, 2, 2});  // 27 edges
    SweepLimits tight;
    tight.max_edges = 20;
    CHECK_THROWS_AS(count_bruteforce(g, tight), ResourceError);
    ChromaticLimits climits;
    climits.max_edges = 10;
    CHECK_THROWS_AS(count_chromatic(g, climits), ResourceError);
}

TEST_CASE("disconnected graphs multiply over components") {
    Graph g = make(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {5, 6}});
    CHECK(count_chromatic(g) == BigCount(6 * 2 * 2));
    CHECK(count_bruteforce(g) == BigCount(6 * 2 * 2));
}
