#pragma once

#include <mpfr.h>

#include <string>

#include "sgao/bigint.hpp"
#include "sgao/recur.hpp"

namespace sgao {

// Arbitrary-precision real number with value semantics, sized in decimal
// significant digits.  Backed by MPFR with round-to-nearest and ~32 bits of
// guard precision, so ln of an exact integer is correct to well under 1 ulp
// of the requested digits.
class HighPrecision {
public:
    explicit HighPrecision(int digits = 50);
    HighPrecision(const HighPrecision& o);
    HighPrecision(HighPrecision&& o) noexcept;
    HighPrecision& operator=(HighPrecision o);
    ~HighPrecision();

    static HighPrecision of_long(long v, int digits = 50);
    static HighPrecision of_big(const BigCount& v, int digits = 50);
    // num/den as a single correctly rounded division.
    static HighPrecision of_ratio(const BigCount& num, const BigCount& den,
                                  int digits = 50);
    static HighPrecision parse(const std::string& decimal, int digits = 50);
    static HighPrecision pow10(int exp, int digits = 50);

    int digits() const { return digits_; }
    int sign() const { return mpfr_sgn(v_); }

    HighPrecision ln() const;  // domain_error on values <= 0
    HighPrecision abs() const;

    HighPrecision operator+(const HighPrecision& o) const;
    HighPrecision operator-(const HighPrecision& o) const;
    HighPrecision operator*(const HighPrecision& o) const;
    HighPrecision operator/(const HighPrecision& o) const;

    int compare(const HighPrecision& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const HighPrecision& o) const { return compare(o) < 0; }
    bool operator<=(const HighPrecision& o) const { return compare(o) <= 0; }
    bool operator>(const HighPrecision& o) const { return compare(o) > 0; }
    bool operator>=(const HighPrecision& o) const { return compare(o) >= 0; }

    // Fixed-point decimal with `significant` digits (default: full working
    // precision).  No exponent notation for the magnitudes this toolkit
    // produces; falls back to d.ddd_eN outside [1e-9, 1e9).
    std::string str(int significant = -1) const;
    double to_double() const;

private:
    mpfr_t v_;
    int digits_;
};

// ln N for exact N >= 1.
HighPrecision ln_big(const BigCount& n, int digits = 50);

// |x - parse(expected)| <= ulps * 10^(last printed digit of expected).
// The comparison tool for published decimal values.
bool matches_decimal(const HighPrecision& x, const std::string& expected, int ulps = 1);

// Normalization c(d,b,m): per-vertex scaling of ln N in the stage-m bound.
//   b = 2:  2 / (d+1)^(m+1)
//   d = 2:  ((b+2)/(b+4)) / P^m with P = b(b+1)/2
HighPrecision growth_norm(int d, int b, int m, int digits = 50);

struct GrowthEstimate {
    int d = 0, b = 0, m = 0, digits = 0;
    HighPrecision lower, upper;  // c ln(antichain count), c ln(total count)
};

// Two-sided bounds on the growth constant from stage m of a computed
// sequence.  Pieces in the antichain state always glue acyclically, and a
// composite acyclic orientation restricts to acyclic pieces, which gives
// antichain(m)^(P^(n-m)) < f(n) < f(m)^(P^(n-m)); scaling by c(n) and
// letting n grow turns stage m into the two bounds.  Requires m >= 1
// (stage 0 has no antichain orientations, the lower bound degenerates).
GrowthEstimate growth_bounds(const StageSequence& seq, int m, int digits = 50);

// Upper estimate c(d,b,m) ln N for an externally obtained exact count N.
HighPrecision upper_estimate(int d, int b, int m, const BigCount& n_ao,
                             int digits = 50);

// Upper estimate at stage m, obtaining the count from the builtin recursion
// when one exists, otherwise from the brute-force oracle.  Propagates
// ResourceError when the count is unobtainable at this m.
HighPrecision upper_from_count_of(int d, int b, int m, int digits = 50,
                                  int threads = 1);

// Closed forms for the stage-0 upper estimates.
HighPrecision stage0_upper(int d, int digits = 50);      // (2/(d+1)) ln((d+1)!)
HighPrecision stage0_upper_2b(int b, int digits = 50);   // ((b+2)/(b+4)) ln 6

HighPrecision hausdorff_dimension(int d, int b, int digits = 50);

// Bound on upper(m) - z for (2,2):
//   (1/3^(m+1)) * (ln f(m)^3 - ln(f(m)^3 - 2 (3a+2b+c)^3))
// computed from exact stage-m integers.
HighPrecision gap_bound(const StageSequence& seq, int m, int digits = 50);

struct ConvergedZ {
    HighPrecision z;     // upper estimate at the deepest computed stage
    int m = 0;           // that stage
    bool converged = false;
};

// Best estimate of z from a computed sequence, with a convergence verdict
// at tolerance 10^(5 - digits).  The sandwich width upper-lower shrinks
// only geometrically, far too slowly for fine tolerances; the upper
// sequence itself converges doubly exponentially, so the verdict comes
// from its per-step increments: once the per-step rejected fraction
// 1 - f(m+1)/f(m)^P is (exactly) verified non-increasing over the computed
// range, the tail beyond the last stage is at most the final increment
// divided by P-1.  The bound is evaluated from the exact stage integers,
// never as a float difference of two nearly equal bounds, so it stays
// meaningful far below the working precision.  Converged means the tail
// bound is under tolerance.  Deepen the sequence to reach finer tolerances.
ConvergedZ converged_z(const StageSequence& seq, int digits = 50);

}  // namespace sgao
