/**
 * Lattice polyhedra in vertex/ray form, exact face enumeration, and
 * validation of finite complete polyhedral subdivisions of R^n.
 *
 * A polyhedron is P = Conv(vertices) + Cone(rays) with rational vertices and
 * primitive integer rays. All derived data (dimension, supporting
 * half-spaces, faces) is computed through the homogenization cone
 * C(P) = Cone{ (d*v, d), (r, 0) } in R^(n+1), which doubles as the cone the
 * toric pipeline works with. Everything is exact rational arithmetic.
 *
 * Polyhedra are pointed: the vertex list must contain at least one genuine
 * vertex, which rules out lineality. Construction canonicalizes the input
 * (redundant generators dropped, vertices and rays sorted), so equal
 * polyhedra compare equal.
 */

#ifndef PATCHGLUE_POLYHEDRA_HPP
#define PATCHGLUE_POLYHEDRA_HPP

#include "patchglue/znlinalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace patchglue {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

std::size_t rat_rank(RatMatrix rows);
/// Basis of { x in Q^n : <r, x> = 0 for every row r }.
RatMatrix rat_kernel(const RatMatrix& rows, std::size_t n);
/// Clear denominators and divide by the content; requires a nonzero vector.
IntVector primitive_of_rational(const RatVector& v);

class LatticePolyhedron {
 public:
  /// Canonicalizing constructor. Throws std::invalid_argument if the vertex
  /// list is empty, a ray is zero, or the data has lineality (a vertex list
  /// can never be irredundant for a polyhedron containing a line).
  LatticePolyhedron(std::size_t ambient, RatMatrix vertices, IntMatrix rays);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return dim_; }
  bool bounded() const { return rays_.empty(); }
  bool is_cone_at_origin() const;

  const RatMatrix& vertices() const { return vertices_; }
  const IntMatrix& rays() const { return rays_; }

  /// Generators of the homogenization cone in Z^(n+1): primitive lifts
  /// (d*v, d) of the vertices followed by (r, 0) for the rays.
  const IntMatrix& cone_generators() const { return coneGens_; }
  /// Primitive integer equations cutting out span(C(P)).
  const IntMatrix& cone_equations() const { return coneEqs_; }
  /// Primitive integer facet normals of C(P), each nonnegative on the cone.
  const IntMatrix& cone_facets() const { return coneFacets_; }

  bool contains(const RatVector& point) const;

  /// All faces of P, including P itself and excluding the empty face, in
  /// vertex/ray form, sorted by (dim, vertex data, ray data). Faces are
  /// exactly the argmin sets of linear functionals bounded below on P.
  std::vector<LatticePolyhedron> faces() const;

  LatticePolyhedron recession_cone() const;

  /// Saturated Z-basis of the linear span of P - vertex; rank = dim P.
  IntMatrix tangent_lattice() const;

  std::string key() const;  // printable canonical form

  friend bool operator==(const LatticePolyhedron& a, const LatticePolyhedron& b) {
    return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_ && a.rays_ == b.rays_;
  }
  friend bool operator<(const LatticePolyhedron& a, const LatticePolyhedron& b);

 private:
  std::size_t ambient_ = 0;
  std::size_t dim_ = 0;
  RatMatrix vertices_;  // sorted
  IntMatrix rays_;      // primitive, sorted
  IntMatrix coneGens_;
  IntMatrix coneEqs_;
  IntMatrix coneFacets_;
};

/// Exact intersection of two polyhedra in the same ambient space;
/// std::nullopt when the intersection is empty.
std::optional<LatticePolyhedron> intersect(const LatticePolyhedron& a,
                                           const LatticePolyhedron& b);

struct SubdivisionError : std::runtime_error {
  explicit SubdivisionError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * A finite complete polyhedral subdivision of R^n: face-closed, cells meet
 * in common faces, and the maximal cells cover R^n. Cell ids are stable:
 * cells are sorted by (dim, lexicographic vertex/ray data).
 */
struct Subdivision {
  std::size_t ambient = 0;
  std::vector<LatticePolyhedron> cells;
  /// Per cell: ids of all its faces, including itself (sorted).
  std::vector<std::vector<std::size_t>> face_ids;
  /// Ids of maximal cells.
  std::vector<std::size_t> maximal;
  /// The recession fan Omega = { Rec(sigma) } with its face closure,
  /// canonically sorted.
  std::vector<LatticePolyhedron> recession_fan;
  /// Per cell: index into recession_fan of Rec(cell).
  std::vector<std::size_t> recession_of;

  const LatticePolyhedron& cell(std::size_t id) const { return cells.at(id); }
  std::optional<std::size_t> find(const LatticePolyhedron& p) const;
  /// Faces of dimension dim(cell) - 1.
  std::vector<std::size_t> facets_of(std::size_t id) const;
  /// Cells that have `id` among their faces (including id itself).
  std::vector<std::size_t> cofaces_of(std::size_t id) const;
};

/// Validates a raw cell list into a Subdivision. Missing faces are added
/// automatically. Throws SubdivisionError with messages naming offending
/// cell ids: "dimension mismatch", "cells overlap in non-face",
/// "subdivision not complete".
Subdivision validate_subdivision(std::size_t ambient, std::vector<LatticePolyhedron> cells);

/// The scaled subdivision d*Sigma (vertices scaled, rays unchanged), d >= 1.
Subdivision scale(const Subdivision& s, const Int& d);

/// A subdivision all of whose cells are cones with apex 0.
struct Fan {
  Subdivision complex;
};

bool is_fan(const Subdivision& s);

/// Star fan of a cell: the fan in R(sigma) = R^n / span(T(sigma)) formed by
/// the images of the cells containing sigma. Used for inspecting the local
/// structure; the glued complex itself never needs an embedding.
/// Throws std::invalid_argument if the cell id is out of range.
Fan star_fan(const Subdivision& s, std::size_t cellId);

}  // namespace patchglue

#endif  // PATCHGLUE_POLYHEDRA_HPP
