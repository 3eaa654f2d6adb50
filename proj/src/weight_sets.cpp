#include "weylface/weight_sets.hpp"

#include "weylface/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylface {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::simple_module: return "simple-module";
        case Provenance::finite_part: return "finite-part";
        case Provenance::truncation: return "truncation";
        case Provenance::ad_hoc: return "ad-hoc";
    }
    throw std::logic_error("unreachable");
}

Provenance provenance_from_name(const std::string& s) {
    if (s == "simple-module") return Provenance::simple_module;
    if (s == "finite-part") return Provenance::finite_part;
    if (s == "truncation") return Provenance::truncation;
    if (s == "ad-hoc") return Provenance::ad_hoc;
    throw std::invalid_argument("unknown provenance '" + s + "'");
}

WeightSet::WeightSet(std::vector<Weight> elems, Provenance prov, int n)
    : elements(std::move(elems)), provenance(prov), rank(n) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
}

bool WeightSet::contains(const Weight& w) const {
    return std::binary_search(elements.begin(), elements.end(), w);
}

bool WeightSet::is_subset_of(const WeightSet& o) const {
    return std::all_of(elements.begin(), elements.end(),
                       [&](const Weight& w) { return o.contains(w); });
}

std::vector<QVec> WeightSet::coord_vectors() const {
    std::vector<QVec> out;
    out.reserve(elements.size());
    for (const auto& w : elements) out.push_back(w.coords);
    return out;
}

namespace {

// Enumerates mu = lambda - sum_{j in idx} c_j alpha_j over the integer box
// 0 <= c_j <= box_j and keeps those passing the filter.
template <typename Filter>
std::vector<Weight> saturate(const RootSystem& rs, const Weight& lambda,
                             const std::vector<int>& idx, const std::vector<long>& box,
                             Filter&& keep) {
    std::vector<Weight> out;
    std::vector<long> c(idx.size(), 0);
    for (;;) {
        Weight mu = lambda;
        for (size_t t = 0; t < idx.size(); ++t)
            if (c[t] != 0) mu = mu - Rat(c[t]) * rs.simple_roots[size_t(idx[t])];
        if (keep(mu)) out.push_back(std::move(mu));
        size_t pos = 0;
        while (pos < c.size() && c[pos] == box[pos]) {
            c[pos] = 0;
            ++pos;
        }
        if (pos == c.size()) break;
        ++c[pos];
    }
    return out;
}

std::vector<long> integer_box(const RootSystem& rs, const Weight& diff, const std::vector<int>& idx) {
    QVec a = alpha_coordinates(rs, diff);
    std::vector<long> box;
    for (int i : idx) {
        const Rat& v = a[size_t(i)];
        if (!v.is_nonneg_integer()) throw std::logic_error("saturation box is not integral");
        box.push_back(long(v.num()));
    }
    return box;
}

} // namespace

WeightSet simple_module_weights(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant_integral())
        throw std::domain_error("highest weight must be dominant integral (all coordinates in Z_+), got " +
                                lambda.str());
    Subset all = Subset::full(rs.rank);
    Weight lowest = antidominant_representative(rs, all, lambda).first;
    std::vector<int> idx = all.members();
    std::vector<long> box = integer_box(rs, lambda - lowest, idx);
    auto weights = saturate(rs, lambda, idx, box, [&](const Weight& mu) {
        Weight dom = dominant_representative(rs, all, mu).first;
        return in_nonneg_root_span(rs, lambda - dom, all);
    });
    return WeightSet(std::move(weights), Provenance::simple_module, rs.rank);
}

WeightSet finite_part_weights(const RootSystem& rs, const Weight& lambda, const Subset& j) {
    for (int i : j.members())
        if (!lambda.coords[size_t(i)].is_nonneg_integer())
            throw std::domain_error("J must consist of indices where lambda is a nonnegative integer; index " +
                                    std::to_string(i + 1) + " has lambda(h_" + std::to_string(i + 1) +
                                    ") = " + lambda.coords[size_t(i)].str());
    Weight lowest = antidominant_representative(rs, j, lambda).first;
    std::vector<int> idx = j.members();
    std::vector<long> box = integer_box(rs, lambda - lowest, idx);
    auto weights = saturate(rs, lambda, idx, box, [&](const Weight& mu) {
        Weight dom = dominant_representative(rs, j, mu).first;
        return in_nonneg_root_span(rs, lambda - dom, j);
    });
    return WeightSet(std::move(weights), Provenance::finite_part, rs.rank);
}

GVMWeights gvm_weights(const RootSystem& rs, const Weight& lambda, const Subset& j) {
    return GVMWeights{finite_part_weights(rs, lambda, j), positive_roots_outside(rs, j), lambda, j};
}

namespace {

bool decompose_over_rays(const std::vector<PositiveRoot>& rays, size_t at, std::vector<long>& target) {
    if (std::all_of(target.begin(), target.end(), [](long v) { return v == 0; })) return true;
    if (at == rays.size()) return false;
    const auto& r = rays[at].alpha;
    long max_coeff = -1;
    for (size_t i = 0; i < target.size(); ++i) {
        if (r[i] == 0) continue;
        long q = target[i] / r[i];
        if (max_coeff < 0 || q < max_coeff) max_coeff = q;
    }
    if (max_coeff < 0) max_coeff = 0;  // ray with zero support cannot occur
    for (long k = max_coeff; k >= 0; --k) {
        std::vector<long> rest = target;
        bool ok = true;
        for (size_t i = 0; i < rest.size(); ++i) {
            rest[i] -= k * r[i];
            if (rest[i] < 0) ok = false;
        }
        if (ok && decompose_over_rays(rays, at + 1, rest)) {
            target = rest;  // not used by callers, kept simple
            return true;
        }
    }
    return false;
}

} // namespace

bool gvm_contains(const RootSystem& rs, const GVMWeights& gw, const Weight& mu) {
    for (const auto& nu : gw.finite_part.elements) {
        QVec delta = alpha_coordinates(rs, nu - mu);
        bool integral = true;
        std::vector<long> target;
        for (const auto& v : delta) {
            if (!v.is_nonneg_integer()) {
                integral = false;
                break;
            }
            target.push_back(long(v.num()));
        }
        if (!integral) continue;
        if (decompose_over_rays(gw.ray_roots, 0, target)) return true;
    }
    return false;
}

WeightSet truncated_weights(const RootSystem& rs, const Weight& lambda, const Subset& i0) {
    WeightSet full = simple_module_weights(rs, lambda);
    std::vector<Weight> kept;
    for (const auto& mu : full.elements)
        if (in_nonneg_root_span(rs, lambda - mu, i0)) kept.push_back(mu);
    return WeightSet(std::move(kept), Provenance::truncation, rs.rank);
}

Weight rho(const WeightSet& y) {
    Weight sum(zero_vec(y.rank));
    for (const auto& w : y.elements) sum = sum + w;
    return sum;
}

WeightSet maximizer_weights(const RootSystem& rs, const WeightSet& x, const Weight& nu) {
    if (x.elements.empty()) throw std::invalid_argument("maximizer over an empty weight set");
    LinearFunctional phi{nu.coords, &rs.fundamental_weight_gram};
    auto [arg, best] = maximizer_subset(x.coord_vectors(), phi);
    (void)best;
    std::vector<Weight> out;
    out.reserve(arg.size());
    for (auto& v : arg) out.emplace_back(std::move(v));
    return WeightSet(std::move(out), Provenance::ad_hoc, x.rank);
}

} // namespace weylface
