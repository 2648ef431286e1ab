#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sgao/bigint.hpp"

namespace sgao {

// Multivariate polynomial with BigCount coefficients over a fixed number of
// variables.  Terms are keyed by exponent vector; the map keeps term order
// deterministic for printing, serialization and comparison.  Exponents stay
// tiny (total degree = number of glued pieces), hence uint8.
class Polynomial {
public:
    using Exponents = std::vector<std::uint8_t>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial variable(int nvars, int idx);
    static Polynomial constant(int nvars, const BigCount& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }
    const std::map<Exponents, BigCount>& terms() const { return terms_; }

    // Adds c * prod(x_i^e_i); drops the term if the coefficient cancels.
    void add_term(const Exponents& e, const BigCount& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(unsigned e) const;
    Polynomial operator*(const BigCount& c) const;

    bool operator==(const Polynomial& o) const = default;

    // Total degree of every term equals `degree` (vacuously true when zero).
    bool is_homogeneous(int degree) const;

    // Evaluation with per-variable power tables, so each big power is
    // computed once per call.
    BigCount eval(const std::vector<BigCount>& x) const;

    // Human-readable form like "5*a^3 + 8*a^2*b", using the given names.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::map<Exponents, BigCount> terms_;
};

}  // namespace sgao
