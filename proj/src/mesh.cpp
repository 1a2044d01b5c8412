#include "nodal/mesh.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "mc_tables.hpp"
#include "nodal/surfaces.hpp"

namespace nodal {

namespace {

constexpr std::array<std::array<int, 3>, 8> kCorners{{
    {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}}};

}  // namespace

Mesh marching_cubes(const ScalarField& field, double box, int resolution) {
  if (resolution < 16) throw std::invalid_argument("marching_cubes: resolution must be >= 16");
  if (!(box > 0.0)) throw std::invalid_argument("marching_cubes: box half-width must be positive");

  const int n = resolution + 1;
  const double step = 2.0 * box / resolution;
  auto coord = [&](int k) { return -box + step * k; };
  auto node = [&](int i, int j, int k) { return (static_cast<std::int64_t>(k) * n + j) * n + i; };

  std::vector<double> values(static_cast<std::size_t>(n) * n * n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) values[node(i, j, k)] = field(coord(i), coord(j), coord(k));

  Mesh mesh;
  std::unordered_map<std::int64_t, int> edge_vertex;

  // Vertex on the grid edge between two adjacent nodes, shared by all cells touching it.
  auto vertex_on_edge = [&](std::array<int, 3> a, std::array<int, 3> b) {
    if (b < a) std::swap(a, b);
    int axis = a[0] != b[0] ? 0 : (a[1] != b[1] ? 1 : 2);
    const std::int64_t key = node(a[0], a[1], a[2]) * 3 + axis;
    auto [it, inserted] = edge_vertex.try_emplace(key, static_cast<int>(mesh.vertices.size()));
    if (inserted) {
      const double fa = values[node(a[0], a[1], a[2])];
      const double fb = values[node(b[0], b[1], b[2])];
      const double t = fa == fb ? 0.5 : fa / (fa - fb);
      std::array<double, 3> p{coord(a[0]), coord(a[1]), coord(a[2])};
      p[axis] += t * step;
      mesh.vertices.push_back(p);
    }
    return it->second;
  };

  for (int k = 0; k < resolution; ++k) {
    for (int j = 0; j < resolution; ++j) {
      for (int i = 0; i < resolution; ++i) {
        int cube = 0;
        for (int c = 0; c < 8; ++c)
          if (values[node(i + kCorners[c][0], j + kCorners[c][1], k + kCorners[c][2])] < 0.0) cube |= 1 << c;
        const auto& tris = detail::kTriTable[cube];
        for (int t = 0; tris[t] != -1; t += 3) {
          std::array<int, 3> face;
          for (int e = 0; e < 3; ++e) {
            const auto& edge = detail::kCubeEdges[tris[t + e]];
            const auto& c0 = kCorners[edge[0]];
            const auto& c1 = kCorners[edge[1]];
            face[e] = vertex_on_edge({i + c0[0], j + c0[1], k + c0[2]}, {i + c1[0], j + c1[1], k + c1[2]});
          }
          if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2]) continue;
          mesh.faces.push_back({face[0], face[2], face[1]});
        }
      }
    }
  }
  if (mesh.faces.empty()) mesh.warnings.push_back("zero level set does not meet the sampling box");
  return mesh;
}

Mesh mesh_polynomial(const MultiPoly& real_poly, double box, int resolution) {
  if (real_poly.arity() != 3) throw std::invalid_argument("mesh_polynomial: trivariate polynomial expected");
  for (const auto& [m, c] : real_poly.terms())
    if (!c.is_real()) throw std::invalid_argument("mesh_polynomial: polynomial has non-real coefficients");
  const CompiledPoly f(real_poly);
  return marching_cubes(
      [&f](double x, double y, double z) {
        const std::array<double, 3> p{x, y, z};
        return f.eval_real(p);
      },
      box, resolution);
}

Mesh mesh_real_variant(int d, double box, int resolution) {
  if (resolution < 16) throw std::invalid_argument("mesh_real_variant: resolution must be >= 16");
  return mesh_polynomial(real_variant(d), box, resolution);
}

std::size_t count_interior_border_edges(const Mesh& mesh, double box) {
  std::map<std::pair<int, int>, int> uses;
  for (const auto& f : mesh.faces)
    for (int e = 0; e < 3; ++e) {
      int a = f[e], b = f[(e + 1) % 3];
      ++uses[{std::min(a, b), std::max(a, b)}];
    }
  const double eps = 1e-9 * box;
  auto on_box = [&](int v, int axis) { return std::abs(std::abs(mesh.vertices[v][axis]) - box) < eps; };
  std::size_t count = 0;
  for (const auto& [edge, n] : uses) {
    if (n != 1) continue;
    bool boundary = false;
    for (int axis = 0; axis < 3; ++axis) boundary |= on_box(edge.first, axis) && on_box(edge.second, axis);
    if (!boundary) ++count;
  }
  return count;
}

void write_obj(std::ostream& os, const Mesh& mesh) {
  char buf[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.9g %.9g %.9g\n", v[0], v[1], v[2]);
    os << buf;
  }
  for (const auto& f : mesh.faces) os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

}  // namespace nodal
