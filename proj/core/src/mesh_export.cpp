#include "legendrian/mesh_export.hpp"

#include <cmath>
#include <ostream>

#include <json.hpp>

namespace legendrian {

MeshBuffers build_mesh(const SurfaceSample& s) {
    MeshBuffers mesh;
    ConformalityReport conf = conformality_report(s);
    MinimalityReport minim = minimality_report(s);

    std::vector<int> vertex_id(s.valid.size(), -1);
    for (int j = 0; j < s.nv; ++j) {
        for (int i = 0; i < s.nu; ++i) {
            if (!s.is_valid(i, j)) continue;
            std::size_t idx = static_cast<std::size_t>(s.index(i, j));
            vertex_id[idx] = static_cast<int>(mesh.vertices.size());
            mesh.vertices.push_back(s.points[idx]);
            mesh.conformality.push_back(conf.per_vertex[idx]);
            mesh.minimality.push_back(minim.per_vertex[idx]);
        }
    }
    for (int j = 0; j + 1 < s.nv; ++j) {
        for (int i = 0; i + 1 < s.nu; ++i) {
            if (!(s.is_valid(i, j) && s.is_valid(i + 1, j) && s.is_valid(i + 1, j + 1) &&
                  s.is_valid(i, j + 1)))
                continue;
            mesh.quads.push_back({vertex_id[static_cast<std::size_t>(s.index(i, j))],
                                  vertex_id[static_cast<std::size_t>(s.index(i + 1, j))],
                                  vertex_id[static_cast<std::size_t>(s.index(i + 1, j + 1))],
                                  vertex_id[static_cast<std::size_t>(s.index(i, j + 1))]});
        }
    }
    return mesh;
}

void export_mesh_json(const SurfaceSample& s, std::ostream& out) {
    MeshBuffers mesh = build_mesh(s);
    nlohmann::ordered_json doc;
    doc["grid"] = {{"nu", s.nu}, {"nv", s.nv}, {"h", s.h}};
    auto& verts = doc["vertices_r5"] = nlohmann::ordered_json::array();
    for (const auto& v : mesh.vertices) verts.push_back({v[0], v[1], v[2], v[3], v[4]});
    auto& faces = doc["faces"] = nlohmann::ordered_json::array();
    for (const auto& q : mesh.quads) faces.push_back({q[0], q[1], q[2], q[3]});
    doc["residuals"] = {{"conformality", mesh.conformality}, {"minimality", mesh.minimality}};
    out << doc.dump(1) << "\n";
}

std::array<double, 3> stereo3_project(const std::array<double, 5>& x, int pole_axis, int pole_sign) {
    double denom = 1.0 - pole_sign * x[static_cast<std::size_t>(pole_axis)];
    std::array<double, 3> out{};
    int k = 0;
    for (int c = 0; c < 5 && k < 3; ++c) {
        if (c == pole_axis) continue;
        out[static_cast<std::size_t>(k++)] = x[static_cast<std::size_t>(c)] / denom;
    }
    return out;
}

void export_mesh_obj(const SurfaceSample& s, std::ostream& out, const MeshOptions& options) {
    if (options.pole_axis < 0 || options.pole_axis > 4 ||
        (options.pole_sign != 1 && options.pole_sign != -1))
        throw InvalidInput("pole must be a signed coordinate axis of R^5");
    MeshBuffers mesh = build_mesh(s);
    for (const auto& v : mesh.vertices) {
        double at_pole = 1.0 - options.pole_sign * v[static_cast<std::size_t>(options.pole_axis)];
        if (at_pole < 1e-6)
            throw PoleOnSurface("projection pole lies on the sampled surface; choose another pole");
    }
    out.precision(17);
    for (const auto& v : mesh.vertices) {
        std::array<double, 3> p = options.projection == MeshProjection::stereo3
                                      ? stereo3_project(v, options.pole_axis, options.pole_sign)
                                      : std::array<double, 3>{v[0], v[1], v[2]};
        out << "v " << p[0] << " " << p[1] << " " << p[2] << "\n";
    }
    for (const auto& q : mesh.quads) {
        out << "f " << q[0] + 1 << " " << q[1] + 1 << " " << q[2] + 1 << "\n";
        out << "f " << q[0] + 1 << " " << q[2] + 1 << " " << q[3] + 1 << "\n";
    }
}

}  // namespace legendrian
