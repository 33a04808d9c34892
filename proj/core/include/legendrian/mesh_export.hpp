#pragma once

// Mesh serialization of sampled surfaces.
//
// json: full R^5 vertices, quad faces over complete grid cells, per-vertex
// conformality and minimality residuals.
//
// obj: vertices first stereographically projected from a coordinate pole
// +-e_k of S^4 (k = pole_axis, sign = pole_sign) into the remaining four
// coordinates, of which the first three in coordinate order are written;
// quads are triangulated.

#include <iosfwd>

#include "legendrian/reports.hpp"

namespace legendrian {

enum class MeshProjection { r5, stereo3 };

struct MeshOptions {
    MeshProjection projection = MeshProjection::r5;
    int pole_axis = 4;   // 0..4
    int pole_sign = 1;   // +-1
};

struct MeshBuffers {
    std::vector<std::array<double, 5>> vertices;
    std::vector<std::array<int, 4>> quads;
    std::vector<double> conformality, minimality;  // one entry per vertex
};

MeshBuffers build_mesh(const SurfaceSample& s);

void export_mesh_json(const SurfaceSample& s, std::ostream& out);
// PoleOnSurface when a vertex comes within 1e-6 of the chosen pole.
void export_mesh_obj(const SurfaceSample& s, std::ostream& out, const MeshOptions& options = {
                                                                     MeshProjection::stereo3, 4, 1});

std::array<double, 3> stereo3_project(const std::array<double, 5>& x, int pole_axis, int pole_sign);

}  // namespace legendrian
