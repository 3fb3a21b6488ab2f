/**
 * Combinatorial Viro patchworking.
 *
 * Input: lattice points of a Newton polytope Delta, signs (or nonzero
 * rational coefficients) and an integer convex lifting. The lifting induces
 * a regular subdivision of Delta as the projection of the lower hull of the
 * lifted points. In combinatorial mode the subdivision must be a unimodular
 * triangulation; the patchwork curve then lives in the identification space
 * Delta x Z_2^n / ~, where two copies are glued along a facet F of Delta
 * when their labels differ by the primitive normal of F mod 2.
 *
 * Curve cells are stored combinatorially: a curve edge is a maximal simplex
 * with mixed vertex signs in one orthant copy; a curve vertex is a
 * mixed-sign edge of the triangulation in an identification class of
 * copies. Geometry (edge midpoints) exists only at SVG time.
 */

#ifndef PATCHGLUE_PATCHWORK_HPP
#define PATCHGLUE_PATCHWORK_HPP

#include "patchglue/polyhedra.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace patchglue {

enum class Sign : int { Plus = 1, Minus = -1 };

struct ViroInput {
  std::size_t n = 0;
  std::vector<IntVector> points;  // lattice points of Delta
  std::vector<Sign> signs;        // one per point
  std::vector<Rat> coeffs;        // optional; nonzero when present
  std::vector<Int> lifting;       // nu(I) per point

  void validate() const;  // sizes, nonzero coefficients, coherent signs
};

struct RegularSubdivision {
  /// Maximal cells as sorted lists of input point indices (every input
  /// point lying on the lower facet, not only the cell vertices).
  std::vector<std::vector<std::size_t>> cells;
  std::vector<LatticePolyhedron> cell_polyhedra;
  bool trivial = false;  // affine lifting: the single cell Delta
};

/// Projection of the lower hull of { (I, nu(I)) }. Exact rational
/// arithmetic; the output is checked to tile Delta. Throws
/// std::invalid_argument when the points do not affinely span R^n.
RegularSubdivision regular_subdivision(const ViroInput& in);

/// True iff every maximal cell is a simplex of normalized lattice volume 1.
bool check_combinatorial(const ViroInput& in, const RegularSubdivision& g);

/// s_eps(I) = sign(a_I) * (-1)^<eps, I>: the sign of a_I x^I on the orthant
/// labelled eps.
std::vector<Sign> extend_signs(const std::vector<Sign>& signs,
                               const std::vector<IntVector>& points, const Mod2Vector& eps);

Sign sign_of(const Rat& x);

struct PatchworkComplex {
  std::size_t n = 0;
  std::optional<LatticePolyhedron> delta;
  /// Facets of Delta: primitive normal (mod-2 identification mask) and the
  /// indices of input points lying on the facet.
  struct DeltaFacet {
    IntVector normal;
    Int offset;             // <normal, x> = offset on the facet
    std::uint64_t mask;     // normal mod 2 as bits
    std::vector<std::size_t> points;
  };
  std::vector<DeltaFacet> facets;

  struct CurveEdge {
    std::size_t simplex = 0;                 // index into RegularSubdivision::cells
    Mod2Vector eps;                          // orthant copy
    std::array<std::size_t, 2> endpoints{};  // curve vertex ids
  };
  struct CurveVertex {
    std::array<std::size_t, 2> segment{};  // point indices of the mixed edge
    Mod2Vector eps;                        // canonical copy label of the class
    std::optional<std::size_t> delta_facet;  // set when the edge lies in a facet
  };
  std::vector<CurveEdge> curve_edges;
  std::vector<CurveVertex> curve_vertices;
  /// curve vertex id -> incident curve edge ids
  std::vector<std::vector<std::size_t>> incident;
};

/// Throws std::invalid_argument("combinatorial mode requires unimodular
/// triangulation") unless check_combinatorial passes. n = 2 only.
PatchworkComplex build_patchwork(const ViroInput& in, const RegularSubdivision& g);

struct CurveReport {
  std::size_t components = 0;
  Int chi = 0;
  bool closed_1_manifold = false;
  /// Delta facet index -> number of curve vertices on it.
  std::map<std::size_t, std::size_t> boundary_incidences;
};

CurveReport curve_report(const PatchworkComplex& p);

/// chi of the ambient identification space Delta x Z_2^n / ~ (the real
/// toric variety of Delta), from the face poset of the subdivision.
Int ambient_euler(const ViroInput& in, const RegularSubdivision& g);

struct OracleReport {
  std::size_t components = 0;
  std::vector<std::size_t> per_orthant_pieces;  // curve pieces per copy
  std::string note;
};

/// Numeric stand-in: evaluates F(x, t) = sum t^nu(I) a_I x^I on a grid over
/// the moment chart of the projective plane (Delta must be the standard
/// simplex of some size d) and counts sign-boundary components, stitching
/// antipodal boundary points. Errors: t <= 0, grid < 8, missing
/// coefficients, Delta not a standard simplex.
OracleReport numeric_oracle(const ViroInput& in, const Rat& t, std::size_t grid);

/// The Harnack sign distribution on the size-d triangle:
/// s(i,j) = Minus iff i and j are both odd. Returns points and signs;
/// throws for d < 1.
std::pair<std::vector<IntVector>, std::vector<Sign>> harnack_signs(long long d);

/// Convex lifting nu(i,j) = i^2 + i*j + j^2; induces a unimodular
/// triangulation on the lattice points of a triangle.
std::vector<Int> quadratic_lifting(const std::vector<IntVector>& points);

/// Renders the four reflected copies of Delta with triangulation, signs and
/// curve into an SVG file (1000x1000 canvas, deterministic colors).
std::string render_svg(const ViroInput& in, const RegularSubdivision& g,
                       const PatchworkComplex& p);

}  // namespace patchglue

#endif  // PATCHGLUE_PATCHWORK_HPP
