#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylface/polyhedron.hpp"
#include "weylface/verify.hpp"
#include "weylface/weakface.hpp"

#include <random>
#include <set>

using namespace weylface;

namespace {

Weight w_of(const RootSystem& rs, std::initializer_list<long long> coords) {
    QVec v;
    for (auto c : coords) v.push_back(Rat(c));
    REQUIRE(int(v.size()) == rs.rank);
    return Weight(std::move(v));
}

WeightSet subset_by_mask(const WeightSet& x, std::uint64_t mask) {
    std::vector<Weight> elems;
    for (size_t i = 0; i < x.size(); ++i)
        if ((mask >> i) & 1u) elems.push_back(x.elements[i]);
    return WeightSet(std::move(elems), Provenance::ad_hoc, x.rank);
}

WeightSet direct_sum_example(const RootSystem& a2) {
    std::vector<Weight> both;
    for (const auto& w : simple_module_weights(a2, Weight(QVec{Rat(0), Rat(2)})).elements)
        both.push_back(w);
    for (const auto& w : simple_module_weights(a2, Weight(QVec{Rat(1), Rat(1)})).elements)
        both.push_back(w);
    return WeightSet(std::move(both), Provenance::ad_hoc, a2.rank);
}

} // namespace

TEST_CASE("weak-face basics on the sl2 string") {
    RootSystem a1 = build_root_system(CartanType::parse("A1"));
    WeightSet x = simple_module_weights(a1, w_of(a1, {2}));  // {-2, 0, 2}

    // the whole set is always weak
    CHECK(is_weak_face(a1, x, x, WeakCheck::verified).is_weak);

    // {0} fails: it is the midpoint of the other two
    WeightSet mid({zero_weight(a1)}, Provenance::ad_hoc, 1);
    WeakFaceVerdict v = is_weak_face(a1, x, mid, WeakCheck::verified);
    CHECK_FALSE(v.is_weak);
    REQUIRE(v.counterexample.has_value());
    REQUIRE(v.counterexample->violator.has_value());
    // the witness combination really is an equal-sum identity leaking outside {0}
    QVec m = v.counterexample->m_coeffs, r = v.counterexample->r_coeffs;
    Weight lhs = zero_weight(a1), rhs = zero_weight(a1);
    Rat msum, rsum;
    for (size_t i = 0; i < m.size(); ++i) {
        lhs = lhs + m[i] * mid.elements[i];
        msum += m[i];
    }
    for (size_t i = 0; i < r.size(); ++i) {
        rhs = rhs + r[i] * x.elements[i];
        rsum += r[i];
    }
    CHECK(lhs == rhs);
    CHECK(msum == rsum);
    CHECK_FALSE(mid.contains(*v.counterexample->violator));

    // endpoints are weak and positive
    WeightSet top({w_of(a1, {2})}, Provenance::ad_hoc, 1);
    WeakFaceVerdict tv = is_positive_weak_face(a1, x, top, WeakCheck::verified);
    CHECK(tv.is_weak);
    CHECK(tv.is_positive);

    // Y not inside X is rejected
    WeightSet outside({w_of(a1, {5})}, Provenance::ad_hoc, 1);
    CHECK_THROWS_AS(is_weak_face(a1, x, outside), std::invalid_argument);
}

TEST_CASE("positivity: the full weight set of a module is weak but not positive") {
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    WeightSet x = simple_module_weights(a2, w_of(a2, {1, 1}));
    WeakFaceVerdict v = is_positive_weak_face(a2, x, x, WeakCheck::verified);
    CHECK(v.is_weak);
    CHECK_FALSE(v.is_positive);

    // {0} inside a symmetric set is not positive (and not weak here)
    WeightSet zero({zero_weight(a2)}, Provenance::ad_hoc, 2);
    WeakFaceVerdict vz = is_positive_weak_face(a2, x, zero, WeakCheck::verified);
    CHECK_FALSE(vz.is_weak);
    CHECK_FALSE(vz.is_positive);
}

TEST_CASE("the direct-sum example: singleton weak face vs its argmax") {
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    WeightSet x = direct_sum_example(a2);
    CHECK(x.size() == 13);

    Weight adj = w_of(a2, {1, 1});
    WeightSet singleton({adj}, Provenance::ad_hoc, 2);
    CHECK(is_weak_face(a2, x, singleton, WeakCheck::verified).is_weak);

    WeightSet arg = maximizer_weights(a2, x, adj);
    WeightSet expected({adj, w_of(a2, {0, 2})}, Provenance::ad_hoc, 2);
    CHECK(arg == expected);
}

TEST_CASE("enumerating weak faces: frozen counts") {
    RootSystem a1 = build_root_system(CartanType::parse("A1"));
    WeightSet x = simple_module_weights(a1, w_of(a1, {2}));
    auto faces = enumerate_weak_faces(a1, x);
    REQUIRE(faces.size() == 3);
    std::set<std::vector<Weight>> got;
    for (const auto& f : faces) got.insert(f.elements);
    CHECK(got.count({w_of(a1, {2})}) == 1);
    CHECK(got.count({w_of(a1, {-2})}) == 1);
    CHECK(got.count(x.elements) == 1);

    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    WeightSet adjoint = simple_module_weights(a2, w_of(a2, {1, 1}));
    CHECK(enumerate_weak_faces(a2, adjoint).size() == 13);

    WeightSet single({w_of(a2, {1, 1})}, Provenance::ad_hoc, 2);
    auto fs = enumerate_weak_faces(a2, single);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].elements == single.elements);

    WeightSet big = direct_sum_example(a2);
    CHECK_THROWS_AS(enumerate_weak_faces(a2, big, 10), std::domain_error);
}

TEST_CASE("positive weak faces are argmax sets with positive maximum") {
    // T44-style property on small symmetric sets where 0 is interior:
    // positive <=> weak and proper
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    WeightSet x = simple_module_weights(a2, w_of(a2, {1, 1}));
    for (std::uint64_t mask = 1; mask < (1u << x.size()); ++mask) {
        WeightSet y = subset_by_mask(x, mask);
        WeakFaceVerdict v = is_positive_weak_face(a2, x, y);
        bool proper = y.size() < x.size();
        CHECK(v.is_positive == (v.is_weak && proper));
        if (v.is_positive) {
            // exhibit the functional: the weight sum of Y maximizes exactly on Y
            Weight rho_y = rho(y);
            WeightSet arg = maximizer_weights(a2, x, rho_y);
            CHECK(arg == y);
            Rat maxval = inner_product(a2, rho_y, arg.elements.front());
            CHECK(Rat(0) < maxval);
        }
    }
}

TEST_CASE("aggregate and per-generator weak checks agree on random subsets") {
    RootSystem b2 = build_root_system(CartanType::parse("B2"));
    WeightSet x = simple_module_weights(b2, w_of(b2, {0, 2}));
    std::mt19937 gen(3);
    std::uniform_int_distribution<std::uint64_t> mask(1, (1u << x.size()) - 1);
    for (int trial = 0; trial < 200; ++trial) {
        WeightSet y = subset_by_mask(x, mask(gen));
        // verified mode cross-checks the two routes internally
        is_positive_weak_face(b2, x, y, WeakCheck::verified);
    }
}

TEST_CASE("equivalence sweep reports: small modules") {
    RootSystem a1 = build_root_system(CartanType::parse("A1"));
    WeightSet sl2 = simple_module_weights(a1, w_of(a1, {2}));
    TheoremReport r = verify_weak_face_equivalence(a1, sl2);
    CHECK(r.ok());
    CHECK(r.subsets_checked == 6);  // 2^3 - 2 proper nonempty subsets

    // trivial module takes the excluded branch
    WeightSet trivial({zero_weight(a1)}, Provenance::ad_hoc, 1);
    TheoremReport tr = verify_weak_face_equivalence(a1, trivial);
    CHECK(tr.hypothesis_excluded);

    // a lopsided set is not a module weight set; the hypothesis is named
    WeightSet lopsided({w_of(a1, {2}), w_of(a1, {0})}, Provenance::ad_hoc, 1);
    CHECK_THROWS_WITH_AS(verify_weak_face_equivalence(a1, lopsided),
                         doctest::Contains("stable"), std::domain_error);

    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    TheoremReport r2 = verify_weak_face_equivalence(a2, direct_sum_example(a2));
    CHECK(r2.ok());
}

TEST_CASE("sampled mode engages beyond the brute-force bound") {
    // B2 with lambda = omega_1 + 2 omega_2 has 21 weights, past the cap of 16
    RootSystem b2 = build_root_system(CartanType::parse("B2"));
    Weight lambda(QVec{Rat(1), Rat(2)});
    WeightSet x = simple_module_weights(b2, lambda);
    REQUIRE(x.size() == 21);

    TheoremReport t2 = verify_weak_face_equivalence(b2, x, kWeakFaceBruteBound, 99);
    CHECK(t2.ok());
    CHECK(t2.subsets_checked > 100);  // all face traces plus sampled subsets

    TheoremReport t32 = verify_truncation_maximizers(b2, lambda, kWeakFaceBruteBound, 99);
    CHECK(t32.ok());
    CHECK(t32.subsets_checked > 100);
}

TEST_CASE("truncation-maximizer sweep: frozen instance") {
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    TheoremReport r = verify_truncation_maximizers(a2, w_of(a2, {1, 1}));
    CHECK(r.ok());
    CHECK(r.subsets_checked == 127);  // 2^7 - 1 nonempty subsets

    CHECK_THROWS_AS(verify_truncation_maximizers(a2, zero_weight(a2)), std::domain_error);

    // frozen membership facts used in the sweep
    WeightSet x = simple_module_weights(a2, w_of(a2, {1, 1}));
    WeightSet edge({w_of(a2, {1, 1}), w_of(a2, {-1, 2})}, Provenance::ad_hoc, 2);
    CHECK(rho(edge) == w_of(a2, {0, 3}));
    CHECK(maximizer_weights(a2, x, rho(edge)) == edge);
    CHECK(rho(x).is_zero());
    CHECK(maximizer_weights(a2, x, rho(x)) == x);
}
