#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "weylface/verify.hpp"
#include "weylface/weight_sets.hpp"

#include <set>

using namespace weylface;

namespace {

Weight w_of(const RootSystem& rs, std::initializer_list<long long> coords) {
    QVec v;
    for (auto c : coords) v.push_back(Rat(c));
    REQUIRE(int(v.size()) == rs.rank);
    return Weight(std::move(v));
}

WeightSet set_of(const RootSystem& rs, std::initializer_list<std::initializer_list<long long>> ws) {
    std::vector<Weight> elems;
    for (auto w : ws) {
        QVec v;
        for (auto c : w) v.push_back(Rat(c));
        elems.emplace_back(std::move(v));
    }
    return WeightSet(std::move(elems), Provenance::ad_hoc, rs.rank);
}

} // namespace

TEST_CASE("simple module weights: frozen small cases") {
    RootSystem a1 = build_root_system(CartanType::parse("A1"));
    WeightSet sl2 = simple_module_weights(a1, w_of(a1, {2}));
    CHECK(sl2.elements == set_of(a1, {{-2}, {0}, {2}}).elements);

    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    WeightSet adjoint = simple_module_weights(a2, w_of(a2, {1, 1}));
    CHECK(adjoint.size() == 7);
    // the six roots and zero
    std::set<QVec, bool (*)(const QVec&, const QVec&)> expected(vec_less);
    for (const auto& r : a2.positive_roots) {
        expected.insert(r.omega.coords);
        expected.insert(vec_neg(r.omega.coords));
    }
    expected.insert(zero_vec(2));
    for (const auto& w : adjoint.elements) CHECK(expected.count(w.coords) == 1);

    // fundamental representation: lambda, lambda - a1, lambda - a1 - a2
    WeightSet fund = simple_module_weights(a2, w_of(a2, {1, 0}));
    CHECK(fund.elements == set_of(a2, {{-1, 1}, {0, -1}, {1, 0}}).elements);

    CHECK_THROWS_AS(simple_module_weights(a2, w_of(a2, {-1, 0})), std::domain_error);
    CHECK_THROWS_AS(simple_module_weights(a2, Weight(QVec{Rat::of(1, 2), Rat(0)})),
                    std::domain_error);
}

TEST_CASE("simple module invariants: W-stability and root-cone containment") {
    for (const auto& t : {"A2", "B2", "G2"}) {
        RootSystem rs = build_root_system(CartanType::parse(t));
        for (const auto& lambda : dominant_grid(rs.rank, 2, false)) {
            WeightSet ws = simple_module_weights(rs, lambda);
            CHECK(ws.contains(lambda));
            Subset all = Subset::full(rs.rank);
            for (const auto& mu : ws.elements) {
                CHECK(in_nonneg_root_span(rs, lambda - mu, all));
                for (int i = 0; i < rs.rank; ++i) {
                    WeylWord s{{i}, all};
                    CHECK(ws.contains(apply_weyl(rs, s, mu)));
                }
            }
        }
    }
}

TEST_CASE("saturation agrees with the multiplicity-recursion oracle") {
    for (const auto& t : {"A1", "A2", "B2", "A3"}) {
        RootSystem rs = build_root_system(CartanType::parse(t));
        for (const auto& lambda : dominant_grid(rs.rank, 4, true)) {
            std::set<Weight> expected = oracle::freudenthal_support(rs, lambda);
            WeightSet got = simple_module_weights(rs, lambda);
            CHECK(got.size() == expected.size());
            for (const auto& w : got.elements) CHECK(expected.count(w) == 1);
        }
    }
}

TEST_CASE("finite part: frozen cases and the subsystem description") {
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    Weight rho_a2 = w_of(a2, {1, 1});

    CHECK(finite_part_weights(a2, rho_a2, Subset::empty(2)).elements ==
          std::vector<Weight>{rho_a2});

    WeightSet fp = finite_part_weights(a2, rho_a2, Subset::of({0}, 2));
    CHECK(fp.elements == set_of(a2, {{-1, 2}, {1, 1}}).elements);  // lambda and lambda - alpha_1

    CHECK(finite_part_weights(a2, rho_a2, Subset::full(2)).elements ==
          simple_module_weights(a2, rho_a2).elements);

    // non-integral coordinate outside J rides along
    Weight mixed(QVec{Rat(2), Rat::of(-3, 7)});
    WeightSet fp2 = finite_part_weights(a2, mixed, Subset::of({0}, 2));
    CHECK(fp2.size() == 3);
    for (const auto& mu : fp2.elements) CHECK(in_nonneg_root_span(a2, mixed - mu, Subset::of({0}, 2)));

    // J must sit inside the integral dominant index set, error names the index
    CHECK_THROWS_WITH_AS(finite_part_weights(a2, mixed, Subset::of({1}, 2)),
                         doctest::Contains("index 2"), std::domain_error);
}

TEST_CASE("finite part is stable under the J-subgroup") {
    for (const auto& t : {"A2", "B2", "G2"}) {
        RootSystem rs = build_root_system(CartanType::parse(t));
        for (const auto& lambda : dominant_grid(rs.rank, 2, false)) {
            for (const auto& j : all_subsets(rs.rank)) {
                WeightSet fp = finite_part_weights(rs, lambda, j);
                for (int g : j.members()) {
                    WeylWord s{{g}, j};
                    for (const auto& mu : fp.elements) CHECK(fp.contains(apply_weyl(rs, s, mu)));
                }
            }
        }
    }
}

TEST_CASE("generalized Verma membership") {
    RootSystem a1 = build_root_system(CartanType::parse("A1"));
    GVMWeights verma = gvm_weights(a1, zero_weight(a1), Subset::empty(1));
    CHECK(verma.ray_roots.size() == 1);
    for (long k = 0; k <= 5; ++k)
        CHECK(gvm_contains(a1, verma, Weight(QVec{Rat(-2 * k)})));  // -k alpha_1
    CHECK_FALSE(gvm_contains(a1, verma, w_of(a1, {1})));
    CHECK_FALSE(gvm_contains(a1, verma, w_of(a1, {2})));  // +alpha_1

    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    Weight rho_a2 = w_of(a2, {1, 1});
    GVMWeights gw = gvm_weights(a2, rho_a2, Subset::of({0}, 2));
    CHECK(gw.ray_roots.size() == 2);  // alpha_2 and alpha_1 + alpha_2
    CHECK(gvm_contains(a2, gw, rho_a2));
    CHECK(gvm_contains(a2, gw, rho_a2 - a2.simple_roots[1]));
    CHECK_FALSE(gvm_contains(a2, gw, rho_a2 + a2.simple_roots[1]));
    // finite part lies in lambda minus the J-root cone
    for (const auto& mu : gw.finite_part.elements)
        CHECK(in_nonneg_root_span(a2, rho_a2 - mu, Subset::of({0}, 2)));
}

TEST_CASE("membership is invariant under the J-subgroup on a sampled grid") {
    RootSystem b2 = build_root_system(CartanType::parse("B2"));
    Weight lambda = w_of(b2, {1, 1});
    Subset j = Subset::of({0}, 2);
    GVMWeights gw = gvm_weights(b2, lambda, j);
    auto group = weyl_subgroup(b2, j);
    for (long long a = -3; a <= 2; ++a) {
        for (long long b = -3; b <= 2; ++b) {
            Weight mu = w_of(b2, {a, b});
            bool base = gvm_contains(b2, gw, mu);
            for (const auto& w : group)
                CHECK(gvm_contains(b2, gw, apply_weyl(b2, w, mu)) == base);
        }
    }
}

TEST_CASE("truncations: frozen cases") {
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    Weight rho_a2 = w_of(a2, {1, 1});
    CHECK(truncated_weights(a2, rho_a2, Subset::full(2)) ==
          WeightSet(simple_module_weights(a2, rho_a2).elements, Provenance::truncation, 2));
    CHECK(truncated_weights(a2, rho_a2, Subset::of({0}, 2)).elements ==
          set_of(a2, {{-1, 2}, {1, 1}}).elements);
    CHECK(truncated_weights(a2, w_of(a2, {1, 0}), Subset::of({1}, 2)).elements ==
          std::vector<Weight>{w_of(a2, {1, 0})});
}

TEST_CASE("truncation equals the finite part for dominant integral weights (rank <= 3)") {
    for (const auto& t : all_types_up_to_rank(3)) {
        RootSystem rs = build_root_system(t);
        for (const auto& lambda : dominant_grid(rs.rank, 2, true)) {
            for (const auto& j : all_subsets(rs.rank)) {
                CHECK(truncated_weights(rs, lambda, j).elements ==
                      finite_part_weights(rs, lambda, j).elements);
            }
        }
    }
}

TEST_CASE("truncating by J or by its component closure gives the same set (rank <= 3)") {
    for (const auto& t : all_types_up_to_rank(3)) {
        RootSystem rs = build_root_system(t);
        for (const auto& lambda : dominant_grid(rs.rank, 2, true)) {
            Subset closure = component_closure(rs, lambda);
            for (const auto& j : all_subsets(rs.rank)) {
                CHECK(truncated_weights(rs, lambda, j).elements ==
                      truncated_weights(rs, lambda, j.intersect(closure)).elements);
            }
        }
    }
}

TEST_CASE("weight sums") {
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    Weight rho_a2 = w_of(a2, {1, 1});
    // whole module sums to zero
    CHECK(rho(simple_module_weights(a2, rho_a2)).is_zero());
    CHECK(rho(simple_module_weights(a2, w_of(a2, {2, 0}))).is_zero());
    // singleton and the frozen truncation sum
    CHECK(rho(WeightSet({rho_a2}, Provenance::ad_hoc, 2)) == rho_a2);
    CHECK(rho(truncated_weights(a2, rho_a2, Subset::of({0}, 2))) == w_of(a2, {0, 3}));
    // empty set
    CHECK(rho(WeightSet({}, Provenance::ad_hoc, 2)).is_zero());
}

TEST_CASE("argmax of a functional over a weight set") {
    RootSystem a1 = build_root_system(CartanType::parse("A1"));
    WeightSet sl2 = simple_module_weights(a1, w_of(a1, {2}));
    WeightSet top = maximizer_weights(a1, sl2, fundamental_weight(a1, 0));
    CHECK(top.elements == std::vector<Weight>{w_of(a1, {2})});
    CHECK(inner_product(a1, fundamental_weight(a1, 0), w_of(a1, {2})) == Rat(1));

    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    WeightSet adjoint = simple_module_weights(a2, w_of(a2, {1, 1}));
    WeightSet edge = maximizer_weights(a2, adjoint, w_of(a2, {0, 3}));
    CHECK(edge.elements == set_of(a2, {{-1, 2}, {1, 1}}).elements);
    CHECK(inner_product(a2, w_of(a2, {0, 3}), w_of(a2, {1, 1})) == Rat(3));

    // the zero functional keeps everything
    CHECK(maximizer_weights(a2, adjoint, zero_weight(a2)).size() == adjoint.size());
}
