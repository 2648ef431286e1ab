#include "sgao/bigint.hpp"

#include <stdexcept>

namespace sgao {

BigCount parse_big(const std::string& text) {
    std::string digits;
    digits.reserve(text.size());
    for (char c : text) {
        if (c == ',' || c == '_' || c == ' ') continue;
        digits.push_back(c);
    }
    if (digits.empty()) throw std::invalid_argument("parse_big: empty input");
    BigCount r;
    if (mpz_set_str(r.get_mpz_t(), digits.c_str(), 10) != 0)
        throw std::invalid_argument("parse_big: not a decimal integer: " + text);
    return r;
}

std::string with_thousands(const BigCount& x) {
    std::string s = x.get_str(10);
    bool neg = !s.empty() && s[0] == '-';
    std::size_t start = neg ? 1 : 0;
    std::string out = s.substr(0, start);
    std::size_t len = s.size() - start;
    for (std::size_t i = 0; i < len; ++i) {
        if (i > 0 && (len - i) % 3 == 0) out.push_back(',');
        out.push_back(s[start + i]);
    }
    return out;
}

}  // namespace sgao
