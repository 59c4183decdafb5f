#pragma once

#include <memory>

#include "barops/algebra.hpp"
#include "barops/simplicial.hpp"

namespace barops::builtin {

// F_2[x]/(x^3) with x in cohomological degree 2.
std::shared_ptr<CommutativeAlgebra> truncated_polynomial();

// Exterior algebra on one generator in cohomological degree 1.
std::shared_ptr<CommutativeAlgebra> exterior();

// The 2-sphere as a 2-simplex with its boundary collapsed: one vertex,
// one nondegenerate 2-simplex.
std::shared_ptr<SimplicialSet> sphere2();

// A contractible reduced model with one vertex, one edge e and one
// 2-simplex with faces (e, s0 pt, s0 pt); its cochain differential is
// nonzero.
std::shared_ptr<SimplicialSet> disk2();

// Interval: two vertices and one edge.
std::shared_ptr<SimplicialSet> interval();

// Standard 2-simplex with all faces.
std::shared_ptr<SimplicialSet> simplex2();

// Six-vertex triangulation of the projective plane (every pair of vertices
// is an edge, ten triangles).
std::shared_ptr<SimplicialSet> projective_plane();

} // namespace barops::builtin
