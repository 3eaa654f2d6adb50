#pragma once

#include "weylface/linalg.hpp"

#include <string>

namespace weylface {

/// A weight in fundamental-weight coordinates: coords[i] is the value of the
/// weight on the i-th simple coroot. Equality is exact rational equality.
struct Weight {
    QVec coords;

    Weight() = default;
    explicit Weight(QVec c) : coords(std::move(c)) {}

    int rank() const { return int(coords.size()); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return vec_less(a.coords, b.coords); }

    friend Weight operator+(const Weight& a, const Weight& b) { return Weight(vec_add(a.coords, b.coords)); }
    friend Weight operator-(const Weight& a, const Weight& b) { return Weight(vec_sub(a.coords, b.coords)); }
    Weight operator-() const { return Weight(vec_neg(coords)); }
    friend Weight operator*(const Rat& c, const Weight& w) { return Weight(vec_scale(c, w.coords)); }

    bool is_zero() const { return vec_is_zero(coords); }

    /// True when every coordinate is a nonnegative integer (dominant integral).
    bool is_dominant_integral() const {
        for (const auto& c : coords)
            if (!c.is_nonneg_integer()) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += coords[i].str();
        }
        return s + ")";
    }
};

} // namespace weylface
