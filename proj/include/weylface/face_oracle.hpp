#pragma once

#include "weylface/polyhedron.hpp"

namespace weylface {

/// A face in canonical form: its vertices and its extremal rays, both sorted.
struct OracleFace {
    std::vector<QVec> vertex_set;
    std::vector<QVec> ray_set;

    friend bool operator==(const OracleFace& a, const OracleFace& b) {
        return a.vertex_set == b.vertex_set && a.ray_set == b.ray_set;
    }
    friend bool operator<(const OracleFace& a, const OracleFace& b);
};

/// Enumerates every face of a pointed V-polyhedron (the improper face
/// included) by supporting-hyperplane search: candidate facet normals are
/// read off spanning subsets of generators, argmax faces are collected, and
/// the search recurses into each discovered face. Purely geometric -- this
/// is the independent cross-check for the descriptor-based classification.
///
/// The cost grows like C(#generators, dim), so this is meant for the small
/// verification instances, not for production enumeration.
std::vector<OracleFace> all_faces_oracle(const VPolyhedron& p);

} // namespace weylface
