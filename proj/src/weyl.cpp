#include "weylface/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>

namespace weylface {

namespace {

Weight reflect(const RootSystem& rs, int i, const Weight& mu) {
    // s_i(mu) = mu - mu(h_i) alpha_i
    Rat pairing = mu.coords[size_t(i)];
    if (pairing.is_zero()) return mu;
    return mu - pairing * rs.simple_roots[size_t(i)];
}

} // namespace

Weight apply_weyl(const RootSystem& rs, const WeylWord& w, const Weight& mu) {
    Weight out = mu;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = reflect(rs, *it, out);
    return out;
}

QMat weyl_action_matrix(const RootSystem& rs, const WeylWord& w) {
    QMat m;
    m.reserve(size_t(rs.rank));
    for (int j = 0; j < rs.rank; ++j)
        m.push_back(apply_weyl(rs, w, fundamental_weight(rs, j)).coords);
    // rows currently hold images of the basis; transpose to an action matrix
    QMat t(static_cast<size_t>(rs.rank), QVec(static_cast<size_t>(rs.rank)));
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) t[size_t(i)][size_t(j)] = m[size_t(j)][size_t(i)];
    return t;
}

long weyl_enumeration_bound() {
    if (const char* env = std::getenv("WEYLFACE_MAX_WEYL")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10080;
}

std::vector<WeylWord> weyl_subgroup(const RootSystem& rs, const Subset& j, long bound) {
    // BFS over generator multiplication; elements keyed by their action on
    // the fundamental-weight basis.
    using Key = std::vector<QVec>;
    auto key_of = [&](const WeylWord& w) {
        Key k;
        for (int i = 0; i < rs.rank; ++i) k.push_back(apply_weyl(rs, w, fundamental_weight(rs, i)).coords);
        return k;
    };
    std::map<Key, bool> seen;
    std::vector<WeylWord> out;
    std::deque<WeylWord> queue;
    WeylWord id = WeylWord::identity(j);
    seen.emplace(key_of(id), true);
    out.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        WeylWord w = queue.front();
        queue.pop_front();
        for (int g : j.members()) {
            WeylWord next{{}, j};
            next.letters = w.letters;
            next.letters.push_back(g);
            Key k = key_of(next);
            if (seen.count(k)) continue;
            if (long(out.size()) >= bound)
                throw std::domain_error("Weyl subgroup enumeration exceeded bound " + std::to_string(bound) +
                                        " (at least " + std::to_string(out.size() + 1) + " elements)");
            seen.emplace(std::move(k), true);
            out.push_back(next);
            queue.push_back(std::move(next));
        }
    }
    return out;
}

WeylWord longest_element(const RootSystem& rs, const Subset& j, long bound) {
    auto elements = weyl_subgroup(rs, j, bound);
    const WeylWord* best = &elements.front();
    for (const auto& w : elements)
        if (w.length() > best->length()) best = &w;
    // sanity: the longest element negates the whole J-positive system
    for (const auto& r : positive_roots_in(rs, j)) {
        Weight img = apply_weyl(rs, *best, r.omega);
        QVec a = alpha_coordinates(rs, img);
        for (const auto& c : a)
            if (Rat(0) < c) throw std::logic_error("longest element failed to negate a J-positive root");
    }
    return *best;
}

std::pair<Weight, WeylWord> dominant_representative(const RootSystem& rs, const Subset& j,
                                                    const Weight& nu) {
    Weight cur = nu;
    WeylWord w = WeylWord::identity(j);
    for (;;) {
        int neg = -1;
        for (int i : j.members()) {
            if (cur.coords[size_t(i)] < Rat(0)) {
                neg = i;
                break;
            }
        }
        if (neg < 0) break;
        cur = reflect(rs, neg, cur);
        w.letters.insert(w.letters.begin(), neg);  // acts after everything so far
    }
    return {cur, w};
}

std::pair<Weight, WeylWord> antidominant_representative(const RootSystem& rs, const Subset& j,
                                                        const Weight& nu) {
    Weight cur = nu;
    WeylWord w = WeylWord::identity(j);
    for (;;) {
        int pos = -1;
        for (int i : j.members()) {
            if (Rat(0) < cur.coords[size_t(i)]) {
                pos = i;
                break;
            }
        }
        if (pos < 0) break;
        cur = reflect(rs, pos, cur);
        w.letters.insert(w.letters.begin(), pos);
    }
    return {cur, w};
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Subset& j, const Weight& mu) {
    std::map<QVec, bool, bool (*)(const QVec&, const QVec&)> seen(vec_less);
    std::vector<Weight> queue{mu};
    seen.emplace(mu.coords, true);
    size_t head = 0;
    while (head < queue.size()) {
        Weight w = queue[head++];
        for (int i : j.members()) {
            Weight img = reflect(rs, i, w);
            if (!seen.count(img.coords)) {
                seen.emplace(img.coords, true);
                queue.push_back(img);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

} // namespace weylface
