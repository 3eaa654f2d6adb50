#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylface {

/// A subset of the node set {1,..,n} of the Dynkin diagram, stored as a
/// bit set over 0-based indices. The printable form is 1-based.
struct Subset {
    std::uint32_t mask = 0;
    int rank = 0;

    Subset() = default;
    Subset(std::uint32_t m, int n) : mask(m), rank(n) {
        if (n < 0 || n > 31) throw std::invalid_argument("subset rank out of range");
        if (m >> n) throw std::invalid_argument("subset member outside 1.." + std::to_string(n));
    }

    static Subset empty(int n) { return Subset(0, n); }
    static Subset full(int n) { return Subset(n == 0 ? 0u : ((n == 31 ? 0x7fffffffu : ((1u << n) - 1u))), n); }

    /// From 0-based indices.
    static Subset of(std::initializer_list<int> idx, int n) {
        Subset s = empty(n);
        for (int i : idx) s = s.with(i);
        return s;
    }

    bool contains(int i) const { return i >= 0 && i < rank && ((mask >> i) & 1u); }
    Subset with(int i) const {
        if (i < 0 || i >= rank) throw std::invalid_argument("subset member outside 1.." + std::to_string(rank));
        return Subset(mask | (1u << i), rank);
    }
    bool subset_of(const Subset& o) const { return (mask & ~o.mask) == 0; }
    Subset intersect(const Subset& o) const { return Subset(mask & o.mask, rank); }
    Subset unite(const Subset& o) const { return Subset(mask | o.mask, rank); }
    Subset minus(const Subset& o) const { return Subset(mask & ~o.mask, rank); }
    Subset complement() const { return full(rank).minus(*this); }
    bool is_empty() const { return mask == 0; }
    int size() const { return __builtin_popcount(mask); }

    /// 0-based members in increasing order.
    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < rank; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Subset& a, const Subset& b) { return a.mask == b.mask && a.rank == b.rank; }
    friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }
    friend bool operator<(const Subset& a, const Subset& b) { return a.mask < b.mask; }

    /// 1-based comma list, "{}" when empty.
    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int i : members()) {
            if (!first) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
        return s + "}";
    }
};

/// All subsets of {1..n} in mask order (2^n of them).
inline std::vector<Subset> all_subsets(int n) {
    std::vector<Subset> out;
    out.reserve(size_t(1) << n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) out.emplace_back(m, n);
    return out;
}

} // namespace weylface
