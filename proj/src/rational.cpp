#include "weylface/rational.hpp"

#include <algorithm>
#include <cctype>

namespace weylface {
namespace detail {

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    uint128 u = uabs(v);
    std::string out;
    while (u != 0) {
        out.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

int128 int128_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("sign without digits");
    uint128 u = 0;
    const uint128 limit = uint128(1) << 126;  // coarse cap, far above any sane input
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("invalid digit in integer literal: '" + std::string(s) + "'");
        u = u * 10 + uint128(s[i] - '0');
        if (u > limit) throw rational_overflow();
    }
    return neg ? -int128(u) : int128(u);
}

} // namespace detail

std::string Rat::str() const {
    std::string s = detail::int128_to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += detail::int128_to_string(den_);
    }
    return s;
}

Rat Rat::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rat(detail::int128_from_string(s), 1);
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    return Rat(detail::int128_from_string(num), detail::int128_from_string(den));
}

} // namespace weylface
