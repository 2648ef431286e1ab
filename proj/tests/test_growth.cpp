#include <doctest.h>

#include <stdexcept>

#include "sgao/growth.hpp"
#include "sgao/reference_values.hpp"

using namespace sgao;

TEST_CASE("high precision basics") {
    HighPrecision one = HighPrecision::of_long(1);
    CHECK(one.ln().abs() < HighPrecision::pow10(-45));
    CHECK(matches_decimal(ln_big(6), "1.791759469228055"));
    CHECK_THROWS_AS(HighPrecision::of_long(0).ln(), std::domain_error);
    CHECK_THROWS_AS(HighPrecision::of_long(-3).ln(), std::domain_error);

    HighPrecision r = HighPrecision::of_ratio(1, 3, 40);
    CHECK(matches_decimal(r, "0.3333333333333333"));
    CHECK(HighPrecision::parse("-2.5").sign() == -1);
    CHECK((r - r).sign() == 0);
}

TEST_CASE("decimal matching semantics") {
    HighPrecision x = HighPrecision::parse("1.127299070536616");
    CHECK(matches_decimal(x, "1.127299070536616"));
    // one ulp of slack in the last printed digit, no more
    CHECK(matches_decimal(x, "1.127299070536617"));
    CHECK_FALSE(matches_decimal(x, "1.127299070536619"));
    CHECK_FALSE(matches_decimal(x, "1.127299170536616"));
    // shorter expected strings compare at coarser resolution
    CHECK(matches_decimal(x, "1.1273"));
    CHECK_FALSE(matches_decimal(x, "1.1275"));
}

TEST_CASE("normalization constants") {
    // b = 2: 2/(d+1)^(m+1); d = 2: ((b+2)/(b+4))/P^m
    CHECK(matches_decimal(growth_norm(2, 2, 0), "0.6666666666666667"));
    CHECK(matches_decimal(growth_norm(2, 2, 2), "0.07407407407407407"));
    CHECK(matches_decimal(growth_norm(3, 2, 1), "0.125"));
    CHECK(matches_decimal(growth_norm(2, 3, 0), "0.7142857142857143"));
    CHECK(matches_decimal(growth_norm(2, 3, 2), "0.01984126984126984"));
}

TEST_CASE("two-sided bounds contract and bracket the constant") {
    StageSequence seq = iterate(builtin_system(2, 2), 5);
    HighPrecision z = HighPrecision::parse(ref::kZ22);
    GrowthEstimate prev = growth_bounds(seq, 1);
    for (int m = 1; m <= 5; ++m) {
        CAPTURE(m);
        GrowthEstimate e = growth_bounds(seq, m);
        CHECK(e.lower < e.upper);
        CHECK(e.lower < z);
        CHECK(z < e.upper);
        if (m > 1) {
            CHECK(prev.lower <= e.lower);
            CHECK(e.upper <= prev.upper);
        }
        prev = e;
    }
    CHECK(matches_decimal(growth_bounds(seq, 4).upper, ref::kUpper22[4].upper));
    CHECK(matches_decimal(growth_bounds(seq, 5).upper, ref::kUpper22[5].upper));
    CHECK_THROWS_AS(growth_bounds(seq, 0), std::invalid_argument);
    CHECK_THROWS_AS(growth_bounds(seq, 6), std::out_of_range);
}

TEST_CASE("upper estimates against the published stages") {
    StageSequence seq = iterate(builtin_system(2, 2), 5);
    for (const auto& row : ref::kUpper22) {
        CAPTURE(row.m);
        CHECK(matches_decimal(upper_estimate(2, 2, row.m, seq.f(row.m)), row.upper));
    }
    StageSequence s23 = iterate(builtin_system(2, 3), 3);
    for (const auto& row : ref::kUpper23) {
        CAPTURE(row.m);
        CHECK(matches_decimal(upper_estimate(2, 3, row.m, s23.f(row.m)), row.upper));
    }
    // the m = 0 cell needs no recursion at all: f(0) = 6
    CHECK(matches_decimal(upper_from_count_of(2, 2, 0), ref::kUpper22[0].upper));
}

TEST_CASE("converged growth constant") {
    StageSequence seq = iterate(builtin_system(2, 2), 8);
    ConvergedZ got = converged_z(seq, 50);
    CHECK(got.converged);
    CHECK(got.m == 8);
    CHECK(matches_decimal(got.z, ref::kZ22));

    // a short sequence reports its best value but refuses the verdict
    StageSequence shallow = iterate(builtin_system(2, 2), 3);
    ConvergedZ weak = converged_z(shallow, 50);
    CHECK_FALSE(weak.converged);
    CHECK(matches_decimal(weak.z, ref::kUpper22[3].upper));

    StageSequence s23 = iterate(builtin_system(2, 3), 5);
    ConvergedZ z23 = converged_z(s23, 30);
    CHECK(z23.converged);
    CHECK(matches_decimal(z23.z, ref::kZ23));
}

TEST_CASE("gap bound is sound and shrinks doubly exponentially") {
    StageSequence seq = iterate(builtin_system(2, 2), 7);
    // m = 0: bound is (1/3) ln(216/(216 - 2*27)) = (1/3) ln(4/3)
    HighPrecision g0 = gap_bound(seq, 0);
    CHECK(matches_decimal(g0, "0.09589402415059364"));

    // soundness is judged against the converged value, not the 16-digit
    // frozen string: its rounding is far coarser than the stage-5 gap
    ConvergedZ z = converged_z(seq, 50);
    REQUIRE(z.converged);
    for (int m = 0; m <= 5; ++m) {
        CAPTURE(m);
        HighPrecision diff = upper_estimate(2, 2, m, seq.f(m)) - z.z;
        CHECK(diff.sign() >= 0);
        CHECK(diff <= gap_bound(seq, m));
    }
    // quadratic contraction: a handful of stages buys hundreds of digits
    CHECK(gap_bound(seq, 5) < HighPrecision::pow10(-25));
    CHECK(gap_bound(seq, 6) < HighPrecision::pow10(-30));
    StageSequence deep = iterate(builtin_system(2, 2), 9);
    CHECK(gap_bound(deep, 9, 200) < HighPrecision::pow10(-100, 200));
    CHECK_THROWS_AS(gap_bound(seq, 8), std::out_of_range);
}

TEST_CASE("stage-0 closed forms") {
    for (const auto& row : ref::kStage0ByDim) {
        CAPTURE(row.param);
        CHECK(matches_decimal(stage0_upper(row.param), row.upper));
        CHECK(matches_decimal(hausdorff_dimension(row.param, 2), row.dimension));
    }
    for (const auto& row : ref::kStage0BySide) {
        CAPTURE(row.param);
        CHECK(matches_decimal(stage0_upper_2b(row.param), row.upper));
        CHECK(matches_decimal(hausdorff_dimension(2, row.param), row.dimension));
    }
    // stage-0 bound for side length 2 coincides with the generic d = 2 row
    CHECK(matches_decimal(stage0_upper(2), ref::kUpper22[0].upper));
    CHECK(matches_decimal(stage0_upper_2b(3), ref::kUpper23[0].upper));
}
