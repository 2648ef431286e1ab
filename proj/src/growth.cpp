#include "sgao/growth.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "sgao/errors.hpp"
#include "sgao/gasket.hpp"
#include "sgao/oracle.hpp"

namespace sgao {

namespace {

mpfr_prec_t bits_for(int digits) {
    if (digits < 1 || digits > 100000)
        throw std::invalid_argument("HighPrecision: digits out of range");
    // log2(10) ~ 3.3220, rounded up, plus guard bits.
    return static_cast<mpfr_prec_t>(digits * 3.3220 + 34);
}

}  // namespace

HighPrecision::HighPrecision(int digits) : digits_(digits) {
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_zero(v_, 1);
}

HighPrecision::HighPrecision(const HighPrecision& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HighPrecision::HighPrecision(HighPrecision&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

HighPrecision& HighPrecision::operator=(HighPrecision o) {
    mpfr_swap(v_, o.v_);
    std::swap(digits_, o.digits_);
    return *this;
}

HighPrecision::~HighPrecision() { mpfr_clear(v_); }

HighPrecision HighPrecision::of_long(long v, int digits) {
    HighPrecision r(digits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

HighPrecision HighPrecision::of_big(const BigCount& v, int digits) {
    HighPrecision r(digits);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

HighPrecision HighPrecision::of_ratio(const BigCount& num, const BigCount& den,
                                      int digits) {
    if (den == 0) throw std::invalid_argument("of_ratio: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    HighPrecision r(digits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

HighPrecision HighPrecision::parse(const std::string& decimal, int digits) {
    HighPrecision r(digits);
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("HighPrecision: cannot parse \"" + decimal + "\"");
    return r;
}

HighPrecision HighPrecision::pow10(int exp, int digits) {
    HighPrecision r(digits);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, exp, MPFR_RNDN);
    return r;
}

HighPrecision HighPrecision::ln() const {
    if (mpfr_sgn(v_) <= 0) throw std::domain_error("ln: argument must be positive");
    HighPrecision r(digits_);
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

HighPrecision HighPrecision::abs() const {
    HighPrecision r(digits_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

#define SGAO_HP_BINOP(op, fn)                                            \
    HighPrecision HighPrecision::operator op(const HighPrecision& o) const { \
        HighPrecision r(std::max(digits_, o.digits_));                  \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                                   \
        return r;                                                        \
    }

SGAO_HP_BINOP(+, mpfr_add)
SGAO_HP_BINOP(-, mpfr_sub)
SGAO_HP_BINOP(*, mpfr_mul)
SGAO_HP_BINOP(/, mpfr_div)

#undef SGAO_HP_BINOP

double HighPrecision::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string HighPrecision::str(int significant) const {
    int sig = significant < 0 ? digits_ : significant;
    if (sig < 1) throw std::invalid_argument("str: need at least one digit");
    if (mpfr_zero_p(v_)) return "0";

    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(sig), v_,
                             MPFR_RNDN);
    std::string digits = raw;
    mpfr_free_str(raw);
    std::string sign;
    if (digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // value = 0.digits * 10^e
    std::string out;
    if (e >= -8 && e <= 0)
        out = "0." + std::string(static_cast<std::size_t>(-e), '0') + digits;
    else if (e > 0 && e <= 9 + static_cast<mpfr_exp_t>(digits.size())) {
        if (e >= static_cast<mpfr_exp_t>(digits.size()))
            out = digits + std::string(static_cast<std::size_t>(e) - digits.size(), '0');
        else
            out = digits.substr(0, static_cast<std::size_t>(e)) + "." +
                  digits.substr(static_cast<std::size_t>(e));
    } else {
        out = digits.substr(0, 1) + "." + digits.substr(1) + "e" +
              std::to_string(e - 1);
    }
    return sign + out;
}

HighPrecision ln_big(const BigCount& n, int digits) {
    if (n < 1) throw std::domain_error("ln_big: need N >= 1");
    return HighPrecision::of_big(n, digits).ln();
}

bool matches_decimal(const HighPrecision& x, const std::string& expected, int ulps) {
    int work = std::max<int>(x.digits(), 40);
    HighPrecision want = HighPrecision::parse(expected, work);

    // Position of the last printed digit: count significant digits and
    // locate the decimal exponent of the leading one.
    std::string_view sv = expected;
    if (!sv.empty() && (sv[0] == '-' || sv[0] == '+')) sv.remove_prefix(1);
    auto dot = sv.find('.');
    std::string intpart(sv.substr(0, dot == std::string_view::npos ? sv.size() : dot));
    std::string frac(dot == std::string_view::npos ? "" : sv.substr(dot + 1));
    std::string alldig = intpart + frac;
    std::size_t lead = alldig.find_first_not_of('0');
    if (lead == std::string::npos) throw std::invalid_argument("matches_decimal: zero expected value");
    int sig = static_cast<int>(alldig.size() - lead);
    int lead_exp = static_cast<int>(intpart.size()) - 1 - static_cast<int>(lead);
    int last_exp = lead_exp - (sig - 1);

    HighPrecision tol =
        HighPrecision::pow10(last_exp, work) * HighPrecision::of_long(ulps, work);
    // Half-ulp slack for the rounding of x itself.
    tol = tol + HighPrecision::pow10(last_exp, work) *
                    HighPrecision::of_ratio(55, 100, work);
    return (x - want).abs() <= tol;
}

HighPrecision growth_norm(int d, int b, int m, int digits) {
    validate_spec({d, b, 0});
    if (m < 0) throw std::invalid_argument("growth_norm: m >= 0");
    if (b == 2)
        return HighPrecision::of_ratio(2, big_pow(d + 1, m + 1), digits);
    BigCount p = BigCount(b) * (b + 1) / 2;
    return HighPrecision::of_ratio(b + 2, (b + 4) * big_pow(p, m), digits);
}

GrowthEstimate growth_bounds(const StageSequence& seq, int m, int digits) {
    if (m < 1) throw std::invalid_argument("growth_bounds: need m >= 1");
    const ClassVector& v = seq.at(m);
    const BigCount& antichain = v.x.back();
    if (antichain < 1) throw std::logic_error("growth_bounds: empty antichain count");
    HighPrecision c = growth_norm(seq.d, seq.b, m, digits);
    GrowthEstimate est{seq.d, seq.b, m, digits, HighPrecision(digits), HighPrecision(digits)};
    est.lower = c * ln_big(antichain, digits);
    est.upper = c * ln_big(seq.f(m), digits);
    return est;
}

HighPrecision upper_estimate(int d, int b, int m, const BigCount& n_ao, int digits) {
    if (n_ao < 1) throw std::invalid_argument("upper_estimate: count must be >= 1");
    return growth_norm(d, b, m, digits) * ln_big(n_ao, digits);
}

HighPrecision upper_from_count_of(int d, int b, int m, int digits, int threads) {
    BigCount n;
    if (has_builtin_system(d, b)) {
        n = iterate(builtin_system(d, b), m).f(m);
    } else {
        Graph g = build_gasket({d, b, m});
        n = count_bruteforce(g, {}, threads);
    }
    return upper_estimate(d, b, m, n, digits);
}

HighPrecision stage0_upper(int d, int digits) {
    if (d < 2) throw std::invalid_argument("stage0_upper: d >= 2");
    return HighPrecision::of_ratio(2, d + 1, digits) *
           ln_big(big_factorial(d + 1), digits);
}

HighPrecision stage0_upper_2b(int b, int digits) {
    if (b < 2) throw std::invalid_argument("stage0_upper_2b: b >= 2");
    return HighPrecision::of_ratio(b + 2, b + 4, digits) * ln_big(6, digits);
}

HighPrecision hausdorff_dimension(int d, int b, int digits) {
    validate_spec({d, b, 0});
    return ln_big(big_binomial(b + d - 1, d), digits) / ln_big(b, digits);
}

HighPrecision gap_bound(const StageSequence& seq, int m, int digits) {
    if (seq.d != 2 || seq.b != 2)
        throw std::invalid_argument("gap_bound: closed form only for (2,2)");
    const ClassVector& v = seq.at(m);
    BigCount f = seq.f(m);
    BigCount s = 3 * v.x[0] + 2 * v.x[1] + v.x[2];
    BigCount den = f * f * f;
    BigCount num = den - 2 * s * s * s;
    if (num <= 0) throw std::logic_error("gap_bound: rejection exceeds total");
    HighPrecision scale = HighPrecision::of_ratio(1, big_pow(3, m + 1), digits);
    return scale * (ln_big(den, digits) - ln_big(num, digits));
}

// The sandwich [lower(m), upper(m)] narrows only geometrically (its width
// tracks the slowly vanishing non-antichain share), so waiting for it to
// reach fine tolerances is hopeless: 50 digits would need stage ~30 and
// integers of ~10^14 digits.  The upper sequence itself converges doubly
// exponentially.  Each increment is
//   upper(m) - upper(m+1) = (c(m)/P) ln( f(m)^P / f(m+1) ),
// and the rejected fraction 1 - f(m+1)/f(m)^P dies off quadratically.  When
// the log factors are verified to decrease over the computed range, every
// later increment picks up at least the 1/P from the normalization, so the
// tail beyond the last computed stage M is at most increment(M-1 -> M)
// divided by P-1.  z is reported as upper(M) with that tail as its error.
ConvergedZ converged_z(const StageSequence& seq, int digits) {
    int last = static_cast<int>(seq.stages.size()) - 1;
    if (last < 2) throw std::invalid_argument("converged_z: need stages through m >= 2");
    ConvergedZ out{HighPrecision(digits), last, false};
    HighPrecision tol = HighPrecision::pow10(5 - digits, digits);

    int p = piece_count(seq.d, seq.b);
    out.z = growth_bounds(seq, last, digits).upper;

    // Monotone contraction of the per-step rejection factor, checked as an
    // exact rational comparison.  rej(m) = 1 - f(m+1)/f(m)^P must not
    // increase along the computed range:
    //   rej(m) >= rej(m+1)  <=>  f(m+1) * f(m+1)^P <= f(m+2) * f(m)^P.
    for (int m = 1; m + 2 <= last; ++m) {
        BigCount fp0 = big_pow(seq.f(m), static_cast<unsigned long>(p));
        BigCount fp1 = big_pow(seq.f(m + 1), static_cast<unsigned long>(p));
        if (seq.f(m + 1) * fp1 > seq.f(m + 2) * fp0) return out;  // not settled
    }

    // Tail bound from the final computed step.  The increment
    // u(M-1) - u(M) = c(M) rho, rho = -ln(1 - rej(M-1)), cannot be formed
    // by subtracting the two bounds (they agree to far more places than
    // the working precision holds); instead rej(M-1) is formed in exact
    // integers, where the subtraction cancels nothing rounded, and
    // -ln(1-x) <= x/(1-x) bounds the log factor from above.
    BigCount fp_last = big_pow(seq.f(last - 1), static_cast<unsigned long>(p));
    BigCount rej_num = fp_last - seq.f(last);
    if (rej_num < 0 || rej_num >= fp_last) return out;  // sandwich violated
    HighPrecision rej = HighPrecision::of_ratio(rej_num, fp_last, digits);
    HighPrecision one = HighPrecision::of_long(1, digits);
    HighPrecision tail = growth_norm(seq.d, seq.b, last, digits) * (rej / (one - rej)) *
                         HighPrecision::of_ratio(1, p - 1, digits);
    if (tail < tol) out.converged = true;
    return out;
}

}  // namespace sgao
