#include "weylface/json_io.hpp"

namespace weylface {

json rat_vec_to_json(const QVec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

QVec rat_vec_from_json(const json& j) {
    QVec v;
    for (const auto& e : j) v.push_back(Rat::parse(e.get<std::string>()));
    return v;
}

json weight_set_to_json(const WeightSet& ws) {
    json arr = json::array();
    for (const auto& w : ws.elements) arr.push_back(rat_vec_to_json(w.coords));
    return json{{"weights", arr}, {"provenance", provenance_name(ws.provenance)}};
}

WeightSet weight_set_from_json(const json& j) {
    std::vector<Weight> elems;
    int rank = 0;
    for (const auto& e : j.at("weights")) {
        elems.emplace_back(rat_vec_from_json(e));
        rank = elems.back().rank();
    }
    return WeightSet(std::move(elems), provenance_from_name(j.at("provenance").get<std::string>()),
                     rank);
}

json vpolyhedron_to_json(const VPolyhedron& p) {
    json pts = json::array(), rays = json::array();
    for (const auto& q : p.points) pts.push_back(rat_vec_to_json(q));
    for (const auto& r : p.rays) rays.push_back(rat_vec_to_json(r));
    return json{{"points", pts}, {"rays", rays}};
}

VPolyhedron vpolyhedron_from_json(const json& j) {
    VPolyhedron p;
    for (const auto& e : j.at("points")) p.points.push_back(rat_vec_from_json(e));
    for (const auto& e : j.at("rays")) p.rays.push_back(rat_vec_from_json(e));
    return p;
}

json face_to_json(const CanonicalFace& f) {
    json verts = json::array(), rays = json::array(), descs = json::array();
    for (const auto& v : f.vertex_set) verts.push_back(rat_vec_to_json(v.coords));
    for (const auto& r : f.ray_set) rays.push_back(rat_vec_to_json(r));
    for (const auto& d : f.descriptors) {
        json word = json::array(), i0 = json::array();
        for (int letter : d.w.letters) word.push_back(letter + 1);
        for (int i : d.i0.members()) i0.push_back(i + 1);
        descs.push_back(json{{"word", word}, {"I0", i0}});
    }
    return json{{"vertices", verts}, {"rays", rays}, {"descriptors", descs}};
}

json faces_to_json(const std::vector<CanonicalFace>& faces) {
    json arr = json::array();
    for (const auto& f : faces) arr.push_back(face_to_json(f));
    return arr;
}

CanonicalFace face_from_json(const json& j, int rank) {
    CanonicalFace f;
    for (const auto& e : j.at("vertices")) f.vertex_set.emplace_back(rat_vec_from_json(e));
    for (const auto& e : j.at("rays")) f.ray_set.push_back(rat_vec_from_json(e));
    for (const auto& d : j.at("descriptors")) {
        FaceDescriptor desc{WeylWord::identity(Subset::full(rank)), Subset::empty(rank)};
        for (const auto& i : d.at("word")) desc.w.letters.push_back(i.get<int>() - 1);
        for (const auto& i : d.at("I0")) desc.i0 = desc.i0.with(i.get<int>() - 1);
        f.descriptors.push_back(std::move(desc));
    }
    return f;
}

std::vector<CanonicalFace> faces_from_json(const json& j, int rank) {
    std::vector<CanonicalFace> out;
    for (const auto& e : j) out.push_back(face_from_json(e, rank));
    return out;
}

json gvm_weights_to_json(const GVMWeights& gw) {
    json rays = json::array();
    for (const auto& r : gw.ray_roots) rays.push_back(rat_vec_to_json(r.omega.coords));
    return json{{"finite_part", weight_set_to_json(gw.finite_part)}, {"subtracted_rays", rays}};
}

json report_to_json(const TheoremReport& r) {
    json out{{"theorem", r.theorem},
             {"instance", r.instance},
             {"subsets_checked", r.subsets_checked},
             {"violations", r.violations}};
    if (r.hypothesis_excluded) out["hypothesis_excluded"] = true;
    return out;
}

} // namespace weylface
