// Marching-cubes triangulation of implicit surfaces and Wavefront OBJ export.

#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "nodal/poly.hpp"

namespace nodal {

struct Mesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> faces;  // zero-based; oriented towards f > 0
  std::vector<std::string> warnings;

  bool empty() const { return faces.empty(); }
};

using ScalarField = std::function<double(double, double, double)>;

/// Zero level set of `field` on [-box, box]^3 sampled with `resolution` cells per axis.
/// Vertices on shared cube edges are merged; output order is deterministic.
Mesh marching_cubes(const ScalarField& field, double box, int resolution);

/// Zero set of a real trivariate polynomial (all coefficients real).
Mesh mesh_polynomial(const MultiPoly& real_poly, double box, int resolution);

Mesh mesh_real_variant(int d, double box, int resolution);

/// Number of triangle edges used by exactly one face that do not lie on the sampling box.
std::size_t count_interior_border_edges(const Mesh& mesh, double box);

void write_obj(std::ostream& os, const Mesh& mesh);

}  // namespace nodal
