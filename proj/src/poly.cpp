#include "sgao/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgao {

Polynomial Polynomial::variable(int nvars, int idx) {
    if (idx < 0 || idx >= nvars) throw std::invalid_argument("variable index");
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[idx] = 1;
    p.terms_[e] = 1;
    return p;
}

Polynomial Polynomial::constant(int nvars, const BigCount& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
    return p;
}

void Polynomial::add_term(const Exponents& e, const BigCount& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("add_term: exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) {
                int s = e1[i] + e2[i];
                if (s > 255) throw std::overflow_error("polynomial exponent overflow");
                e[i] = static_cast<std::uint8_t>(s);
            }
            r.add_term(e, c1 * c2);
        }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(nvars_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::operator*(const BigCount& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

bool Polynomial::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_) {
        int total = 0;
        for (auto x : e) total += x;
        if (total != degree) return false;
    }
    return true;
}

BigCount Polynomial::eval(const std::vector<BigCount>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("eval: arity mismatch");
    std::vector<unsigned> max_exp(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) max_exp[i] = std::max<unsigned>(max_exp[i], e[i]);

    std::vector<std::vector<BigCount>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        powers[i].resize(max_exp[i] + 1);
        powers[i][0] = 1;
        for (unsigned p = 1; p <= max_exp[i]; ++p) powers[i][p] = powers[i][p - 1] * x[i];
    }

    BigCount sum = 0;
    for (const auto& [e, c] : terms_) {
        BigCount term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) term *= powers[i][e[i]];
        sum += term;
    }
    return sum;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(static_cast<int>(e[i]));
        }
        if (mono.empty())
            out += to_decimal(c);
        else if (c == 1)
            out += mono;
        else
            out += to_decimal(c) + "*" + mono;
    }
    return out;
}

}  // namespace sgao
