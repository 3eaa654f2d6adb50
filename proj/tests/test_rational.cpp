#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylface/rational.hpp"

#include <random>

using namespace weylface;

TEST_CASE("construction reduces and normalizes signs") {
    CHECK(Rat::of(2, 4) == Rat::of(1, 2));
    CHECK(Rat::of(-2, 4) == Rat::of(1, -2));
    CHECK(Rat::of(3, -6).str() == "-1/2");
    CHECK(Rat(0, 5) == Rat(0));
    CHECK_THROWS_AS(Rat::of(1, 0), std::domain_error);
}

TEST_CASE("arithmetic identities on random small fractions") {
    std::mt19937 gen(42);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 30);
    for (int i = 0; i < 2000; ++i) {
        Rat a = Rat::of(num(gen), den(gen));
        Rat b = Rat::of(num(gen), den(gen));
        Rat c = Rat::of(num(gen), den(gen));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b - b == a);
        if (!b.is_zero()) CHECK(a * b / b == a);
        CHECK((a < b) == !(b <= a));
    }
}

TEST_CASE("string round-trips") {
    for (const char* s : {"0", "7", "-3", "5/3", "-22/7", "1000000007/999999937"}) {
        CHECK(Rat::parse(s).str() == s);
    }
    CHECK(Rat::parse("4/2").str() == "2");
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("a/b"), std::invalid_argument);
}

TEST_CASE("integrality predicates") {
    CHECK(Rat(5).is_nonneg_integer());
    CHECK(Rat(0).is_nonneg_integer());
    CHECK_FALSE(Rat(-1).is_nonneg_integer());
    CHECK_FALSE(Rat::of(1, 2).is_nonneg_integer());
    CHECK(Rat::of(8, 4).is_integer());
}

TEST_CASE("overflow raises instead of wrapping") {
    Rat big(Rat::int128(1) << 100, 1);
    CHECK_THROWS_AS(big * big, rational_overflow);
    Rat huge(Rat::int128(1) << 126, 1);
    CHECK_THROWS_AS(huge + huge, rational_overflow);
}
