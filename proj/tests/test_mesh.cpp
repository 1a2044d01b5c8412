#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "nodal/mesh.hpp"
#include "nodal/surfaces.hpp"

using namespace nodal;

namespace {

std::array<double, 3> sub(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

TEST_CASE("sphere is closed and oriented outward") {
  auto sphere = [](double x, double y, double z) { return x * x + y * y + z * z - 1.0; };
  const auto mesh = marching_cubes(sphere, 1.5, 24);
  REQUIRE_FALSE(mesh.empty());
  CHECK(mesh.warnings.empty());
  CHECK(count_interior_border_edges(mesh, 1.5) == 0);
  for (const auto& v : mesh.vertices) CHECK(std::abs(std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) - 1.0) < 0.02);
  int outward = 0;
  for (const auto& f : mesh.faces) {
    const auto& a = mesh.vertices[f[0]];
    const auto n = cross(sub(mesh.vertices[f[1]], a), sub(mesh.vertices[f[2]], a));
    outward += n[0] * a[0] + n[1] * a[1] + n[2] * a[2] > 0;
  }
  CHECK(outward == static_cast<int>(mesh.faces.size()));
}

TEST_CASE("real variant of U_3") {
  const auto mesh = mesh_real_variant(3, 2.0, 64);
  CHECK_FALSE(mesh.empty());
  CHECK(mesh.warnings.empty());
  MESSAGE("U_3 real mesh: ", mesh.vertices.size(), " vertices, ", mesh.faces.size(), " faces, ",
          count_interior_border_edges(mesh, 2.0), " open interior edges");
  CHECK(count_interior_border_edges(mesh, 2.0) == 0);

  std::ostringstream a, b;
  write_obj(a, mesh);
  write_obj(b, mesh_real_variant(3, 2.0, 64));
  CHECK(a.str() == b.str());
}

TEST_CASE("preconditions and empty level sets") {
  CHECK_THROWS_AS(mesh_real_variant(3, 2.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(marching_cubes([](double, double, double) { return 1.0; }, 0.0, 16), std::invalid_argument);
  const auto empty = mesh_polynomial(MultiPoly::constant(3, Cyclo12(5L)), 1.0, 16);
  CHECK(empty.empty());
  CHECK(empty.vertices.empty());
  CHECK(empty.warnings.size() == 1);
  CHECK_THROWS_AS(mesh_polynomial(Cyclo12::omega() * MultiPoly::variable(3, 0), 1.0, 16), std::invalid_argument);
}

TEST_CASE("obj layout") {
  Mesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0.5}};
  m.faces = {{0, 1, 2}};
  std::ostringstream os;
  write_obj(os, m);
  CHECK(os.str() == "v 0 0 0\nv 1 0 0\nv 0 1 0.5\nf 1 2 3\n");
}
