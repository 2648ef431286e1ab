#include <doctest.h>

#include <map>
#include <stdexcept>

#include "sgao/derive.hpp"
#include "sgao/errors.hpp"
#include "sgao/gasket.hpp"
#include "sgao/oracle.hpp"

using namespace sgao;

TEST_CASE("gluing matches whole-graph reachability on every orientation") {
    // The gluing rule (composite acyclic <=> junction digraph acyclic,
    // composite poset = closure restricted to outer corners) is checked
    // against ground truth: enumerate all 2^9 orientations of the 3-piece
    // stage-1 gasket, restrict each to the pieces, glue the piece posets and
    // compare with the directly computed answer.
    Graph g = build_gasket({2, 2, 1});
    GluingLayout lay = build_layout(2, 2);
    REQUIRE(lay.outer == g.corners);

    std::map<std::pair<int, int>, int> edge_index;
    for (int i = 0; i < g.num_edges(); ++i) edge_index[g.edges[i]] = i;

    int checked_acyclic = 0, checked_cyclic = 0, piece_cyclic = 0;
    for (OrientationBits mask = 0; mask < (1u << g.num_edges()); ++mask) {
        std::vector<CornerPoset> piece_states;
        bool all_pieces_acyclic = true;
        for (const auto& slots : lay.piece_slots) {
            Graph local;
            local.num_vertices = 3;
            local.edges = {{0, 1}, {0, 2}, {1, 2}};
            local.corners = {0, 1, 2};
            local.normalize();
            OrientationBits lbits = 0;
            for (int li = 0; li < 3; ++li) {
                auto [a, b] = local.edges[li];
                int u = slots[a], v = slots[b];
                int gi = edge_index.at({std::min(u, v), std::max(u, v)});
                bool forward = (u < v) == (((mask >> gi) & 1) != 0);
                if (forward) lbits |= OrientationBits{1} << li;
            }
            if (!is_acyclic(local, lbits)) {
                all_pieces_acyclic = false;
                break;
            }
            piece_states.push_back(corner_reachability(local, lbits));
        }
        if (!all_pieces_acyclic) {
            // a cycle inside one piece is a cycle of the composite
            CHECK_FALSE(is_acyclic(g, mask));
            ++piece_cyclic;
            continue;
        }
        std::optional<CornerPoset> glued = glue(lay, piece_states);
        if (is_acyclic(g, mask)) {
            REQUIRE(glued.has_value());
            CHECK(*glued == corner_reachability(g, mask));
            ++checked_acyclic;
        } else {
            CHECK_FALSE(glued.has_value());
            ++checked_cyclic;
        }
    }
    CHECK(checked_acyclic == 162);
    CHECK(checked_acyclic + checked_cyclic + piece_cyclic == 512);
}

TEST_CASE("gluing the all-antichain assignment") {
    GluingLayout lay = build_layout(2, 2);
    std::vector<CornerPoset> states(static_cast<std::size_t>(lay.num_pieces()),
                                    CornerPoset{3, 0});
    std::optional<CornerPoset> out = glue(lay, states);
    REQUIRE(out.has_value());
    CHECK(out->num_pairs() == 0);
    CHECK_THROWS_AS(glue(lay, {CornerPoset{3, 0}}), std::invalid_argument);
}

TEST_CASE("derived 3-piece system equals the hand-transcribed one") {
    DeriveStats st;
    RecursionSystem sys = derive_recursion(2, 2, {}, &st);
    CHECK(sys == builtin_system(2, 2));
    CHECK(st.assignments == 6859);  // 19^3 poset assignments
    CHECK(st.accepted > 0);
    CHECK(st.accepted < st.assignments);

    DeriveOptions two_threads;
    two_threads.threads = 2;
    CHECK(derive_recursion(2, 2, two_threads) == sys);
}

TEST_CASE("frontier DP agrees with direct enumeration") {
    DeriveOptions dp;
    dp.force_dp = true;
    CHECK(derive_recursion(2, 2, dp) == builtin_system(2, 2));

    dp.max_dp_states = 4;
    CHECK_THROWS_AS(derive_recursion(2, 2, dp), ResourceError);
}

TEST_CASE("folding labeled counts into classes") {
    Graph g = build_gasket({2, 2, 1});
    ClassTable t = orbit_classes(3);
    ClassVector cv = fold_to_classes(classify_orientations(g), t, 1);
    CHECK(cv.stage == 1);
    CHECK(cv.x == std::vector<BigCount>{5, 12, 6, 24});

    // stage 0: only chains occur, one orientation each
    ClassVector cv0 = fold_to_classes(classify_orientations(build_gasket({2, 2, 0})), t, 0);
    CHECK(cv0.x == std::vector<BigCount>{1, 0, 0, 0});

    // unequal counts inside one orbit are a hard error, not an average
    LabeledStateVector bad;
    bad.k = 3;
    bad.states.emplace_back(t.reps[0], 1);
    bad.states.emplace_back(t.reps[0].reversed(), 2);
    std::sort(bad.states.begin(), bad.states.end());
    CHECK_THROWS_AS(fold_to_classes(bad, t, 0), std::runtime_error);
}

TEST_CASE("one observed stage step verifies against the recursion") {
    RecursionSystem sys = builtin_system(2, 2);
    ClassVector from = fold_to_classes(classify_orientations(build_gasket({2, 2, 0})),
                                       sys.classes, 0);
    LabeledStateVector observed = classify_orientations(build_gasket({2, 2, 1}));
    VerifyReport rep = verify_recursion(sys, from, observed);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());

    // tampering with one labeled count must be caught and named
    LabeledStateVector wrong = observed;
    wrong.states[0].second += 1;
    VerifyReport bad = verify_recursion(sys, from, wrong);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.failures.empty());
}
