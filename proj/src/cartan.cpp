#include "weylface/cartan.hpp"

#include <cctype>
#include <stdexcept>

namespace weylface {

namespace {

void check_rank(Family f, int n) {
    auto fail = [&](const char* constraint) {
        throw std::invalid_argument("invalid rank " + std::to_string(n) + " for family " +
                                    std::string(1, char(f)) + " (requires " + constraint + ")");
    };
    switch (f) {
        case Family::A:
            if (n < 1) fail("n >= 1");
            break;
        case Family::B:
        case Family::C:
            if (n < 2) fail("n >= 2");
            break;
        case Family::D:
            if (n < 3) fail("n >= 3");
            break;
        case Family::E:
            if (n < 6 || n > 8) fail("n in {6,7,8}");
            break;
        case Family::F:
            if (n != 4) fail("n = 4");
            break;
        case Family::G:
            if (n != 2) fail("n = 2");
            break;
    }
}

} // namespace

CartanType::CartanType(Family f, int n) : family(f), rank(n) { check_rank(f, n); }

CartanType CartanType::parse(std::string_view s) {
    if (s.size() < 2) throw std::invalid_argument("Cartan type must be a family letter followed by a rank, e.g. \"A3\"");
    char c = char(std::toupper(static_cast<unsigned char>(s[0])));
    if (c < 'A' || c > 'G') throw std::invalid_argument(std::string("unknown family letter '") + s[0] + "'");
    int n = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("invalid rank in Cartan type '" + std::string(s) + "'");
        n = n * 10 + (s[i] - '0');
        if (n > 1000) throw std::invalid_argument("rank out of range");
    }
    return CartanType(Family(c), n);
}

std::string CartanType::str() const { return std::string(1, char(family)) + std::to_string(rank); }

std::vector<std::vector<long>> cartan_matrix(const CartanType& t) {
    const int n = t.rank;
    std::vector<std::vector<long>> c(size_t(n), std::vector<long>(size_t(n), 0));
    for (int i = 0; i < n; ++i) c[size_t(i)][size_t(i)] = 2;
    auto bond = [&](int i, int j, long cij, long cji) {
        // 1-based Bourbaki labels; cij = value of alpha_j on coroot i
        c[size_t(i - 1)][size_t(j - 1)] = cij;
        c[size_t(j - 1)][size_t(i - 1)] = cji;
    };
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) bond(i, i + 1, -1, -1);
    };
    switch (t.family) {
        case Family::A:
            chain(1, n);
            break;
        case Family::B:
            chain(1, n - 1);
            bond(n - 1, n, -1, -2);  // alpha_n short
            break;
        case Family::C:
            chain(1, n - 1);
            bond(n - 1, n, -2, -1);  // alpha_n long
            break;
        case Family::D:
            chain(1, n - 2);
            bond(n - 2, n - 1, -1, -1);
            bond(n - 2, n, -1, -1);
            break;
        case Family::E:
            // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4
            bond(1, 3, -1, -1);
            bond(3, 4, -1, -1);
            bond(2, 4, -1, -1);
            chain(4, n);
            break;
        case Family::F:
            bond(1, 2, -1, -1);
            bond(2, 3, -1, -2);  // alpha_3, alpha_4 short
            bond(3, 4, -1, -1);
            break;
        case Family::G:
            bond(1, 2, -3, -1);  // alpha_1 short, alpha_2 long
            break;
    }
    return c;
}

int positive_root_count(const CartanType& t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
        case Family::F: return 24;
        case Family::G: return 6;
    }
    throw std::logic_error("unreachable");
}

std::vector<CartanType> all_types_up_to_rank(int max_rank) {
    std::vector<CartanType> out;
    for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
    for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::B, n);
    for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::C, n);
    for (int n = 3; n <= max_rank; ++n) out.emplace_back(Family::D, n);
    for (int n = 6; n <= max_rank && n <= 8; ++n) out.emplace_back(Family::E, n);
    if (max_rank >= 4) out.emplace_back(Family::F, 4);
    if (max_rank >= 2) out.emplace_back(Family::G, 2);
    return out;
}

} // namespace weylface
