#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holocolor/coloring.hpp"
#include "holocolor/triangulation.hpp"

namespace holocolor {

/// All (n+1)-subsets of {1, ..., n+2}.
Triangulation simplex_boundary(int n);

/// Boundary of the (n+1)-dimensional cross-polytope on vertices 1..2(n+1);
/// vertex k and k+n+1 form an antipodal pair.
Triangulation cross_polytope_boundary(int n);

/// m arcs {i, i+1 mod m} on vertices 1..m.
Triangulation circle(int m);

/// Seven-vertex torus on vertices 0..6.
Triangulation torus7();

/// Six-vertex real projective plane (antipodal quotient of the icosahedron).
Triangulation rp2_6();

/// Named builder lookup. Names: simplex_boundary, cross_polytope_boundary,
/// circle, torus7, rp2_6. Throws DomainError on unknown names or bad params.
Triangulation example(std::string_view name, const std::vector<int>& params);

/// Parses "name" or "name:p1,p2" and calls `example`.
Triangulation example_by_name(std::string_view name);

/// Barycentric subdivision: one vertex per face of `t`, one simplex per maximal
/// chain of faces. Faces are numbered from 1 in (dimension, lexicographic)
/// order; the coloring gives each new vertex color 1 + dim(face).
std::pair<Triangulation, Coloring> barycentric_subdivide(const Triangulation& t);

/// Stellar subdivision of `face` at a new vertex `apex` (not already in `t`).
Triangulation stellar_subdivide(const Triangulation& t, const Simplex& face, VertexId apex);

/// Applies the order-preserving map id -> scale*id + shift to every vertex.
Triangulation relabel_affine(const Triangulation& t, VertexId scale, VertexId shift);

}  // namespace holocolor
