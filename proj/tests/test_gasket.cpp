#include <doctest.h>

#include <set>
#include <stdexcept>

#include "sgao/errors.hpp"
#include "sgao/gasket.hpp"

using namespace sgao;

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate_spec({2, 2, 0}));
    CHECK_NOTHROW(validate_spec({2, 9, 3}));
    CHECK_NOTHROW(validate_spec({9, 2, 2}));
    CHECK_THROWS_AS(validate_spec({1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_spec({2, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_spec({2, 2, -1}), std::invalid_argument);
    // juxtaposition with b >= 3 is only defined for the planar family
    CHECK_THROWS_AS(validate_spec({3, 3, 1}), std::invalid_argument);
}

TEST_CASE("piece counts") {
    CHECK(piece_count(2, 2) == 3);
    CHECK(piece_count(2, 3) == 6);
    CHECK(piece_count(2, 4) == 10);
    CHECK(piece_count(3, 2) == 4);
    CHECK(piece_count(4, 2) == 5);
}

TEST_CASE("closed-form sizes match built graphs") {
    for (GasketSpec spec : {GasketSpec{2, 2, 0}, {2, 2, 1}, {2, 2, 2}, {2, 2, 3},
                            {2, 3, 0}, {2, 3, 1}, {2, 3, 2}, {2, 4, 1},
                            {3, 2, 0}, {3, 2, 1}, {3, 2, 2}, {4, 2, 1}}) {
        CAPTURE(spec.d);
        CAPTURE(spec.b);
        CAPTURE(spec.n);
        Graph g = build_gasket(spec);
        CHECK(BigCount(g.num_vertices) == count_vertices(spec));
        CHECK(BigCount(g.num_edges()) == count_edges(spec));
        CHECK(static_cast<int>(g.corners.size()) == spec.d + 1);
    }
}

TEST_CASE("known sizes") {
    // v = (d+1)((d+1)^n + 1)/2 and e = C(d+1,2)(d+1)^n for b=2
    CHECK(count_vertices({2, 2, 1}) == 6);
    CHECK(count_edges({2, 2, 1}) == 9);
    CHECK(count_vertices({2, 2, 2}) == 15);
    CHECK(count_edges({2, 2, 2}) == 27);
    CHECK(count_vertices({3, 2, 1}) == 10);
    CHECK(count_edges({3, 2, 1}) == 24);
    // v = ((b+4) P^n + 2(b+1))/(b+2) and e = 3 P^n for d=2
    CHECK(count_vertices({2, 3, 1}) == 10);
    CHECK(count_edges({2, 3, 1}) == 18);
    CHECK(count_vertices({2, 4, 1}) == 15);
    CHECK(count_edges({2, 4, 1}) == 30);
    CHECK(count_vertices({2, 3, 2}) == 52);
    CHECK(count_edges({2, 3, 2}) == 108);
}

TEST_CASE("stage 0 is the complete graph") {
    for (int d = 2; d <= 5; ++d) {
        Graph g = build_gasket({d, 2, 0});
        CHECK(g.num_vertices == d + 1);
        CHECK(g.num_edges() == d * (d + 1) / 2);
        for (int v : g.corners) CHECK(g.degrees()[v] == d);
    }
}

TEST_CASE("corner degrees and distinctness") {
    for (GasketSpec spec : {GasketSpec{2, 2, 2}, {2, 3, 1}, {3, 2, 1}}) {
        Graph g = build_gasket(spec);
        std::set<int> uniq(g.corners.begin(), g.corners.end());
        CHECK(uniq.size() == g.corners.size());
        // outer corners keep the stage-0 degree d
        for (int v : g.corners) CHECK(g.degrees()[v] == spec.d);
    }
}

TEST_CASE("deterministic construction") {
    Graph a = build_gasket({2, 3, 2});
    Graph b = build_gasket({2, 3, 2});
    CHECK(a.edges == b.edges);
    CHECK(a.corners == b.corners);
}

TEST_CASE("resource cap") {
    CHECK_THROWS_AS(build_gasket({2, 2, 3}, 10), ResourceError);
    // 3(3^14+1)/2 is 7.2M vertices, past the 4M default cap
    CHECK_THROWS_AS(build_gasket({2, 2, 14}), ResourceError);
}

TEST_CASE("gluing layout shape") {
    GluingLayout lay = build_layout(2, 2);
    CHECK(lay.num_pieces() == 3);
    CHECK(lay.num_junctions == 6);  // stage-1 vertex count
    CHECK(lay.outer.size() == 3);
    for (const auto& slots : lay.piece_slots) CHECK(slots.size() == 3);

    GluingLayout lay23 = build_layout(2, 3);
    CHECK(lay23.num_pieces() == 6);
    CHECK(lay23.num_junctions == 10);

    GluingLayout lay32 = build_layout(3, 2);
    CHECK(lay32.num_pieces() == 4);
    CHECK(lay32.num_junctions == 10);
}

TEST_CASE("layout is consistent with the stage-1 graph") {
    // Junction indices are barycentric coordinates of stage 1 in lex order,
    // exactly how build_gasket numbers stage-1 vertices.  So piece p's slot
    // set must be a clique in SG(1), and the outer slots its corners.
    for (auto [d, b] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        CAPTURE(d);
        CAPTURE(b);
        GluingLayout lay = build_layout(d, b);
        Graph g1 = build_gasket({d, b, 1});
        CHECK(lay.num_junctions == g1.num_vertices);
        for (int k = 0; k <= d; ++k) CHECK(lay.outer[k] == g1.corners[k]);
        std::set<std::pair<int, int>> edges(g1.edges.begin(), g1.edges.end());
        for (const auto& slots : lay.piece_slots)
            for (std::size_t i = 0; i < slots.size(); ++i)
                for (std::size_t j = i + 1; j < slots.size(); ++j) {
                    int u = slots[i], v = slots[j];
                    if (u > v) std::swap(u, v);
                    CHECK(edges.count({u, v}) == 1);
                }
        // every edge of SG(1) lies in exactly one piece
        std::size_t covered = 0;
        for (const auto& slots : lay.piece_slots)
            covered += slots.size() * (slots.size() - 1) / 2;
        CHECK(covered == edges.size());
    }
}
