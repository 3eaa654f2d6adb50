#pragma once

#include "weylface/faces.hpp"
#include "weylface/weakface.hpp"

#include <json.hpp>

namespace weylface {

using nlohmann::json;

json rat_vec_to_json(const QVec& v);
QVec rat_vec_from_json(const json& j);

json weight_set_to_json(const WeightSet& ws);
WeightSet weight_set_from_json(const json& j);

json vpolyhedron_to_json(const VPolyhedron& p);
VPolyhedron vpolyhedron_from_json(const json& j);

/// Face descriptors serialize with 1-based generator and node indices.
json face_to_json(const CanonicalFace& f);
json faces_to_json(const std::vector<CanonicalFace>& faces);
CanonicalFace face_from_json(const json& j, int rank);
std::vector<CanonicalFace> faces_from_json(const json& j, int rank);

json gvm_weights_to_json(const GVMWeights& gw);

json report_to_json(const TheoremReport& r);

} // namespace weylface
