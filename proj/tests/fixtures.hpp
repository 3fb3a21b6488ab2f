// Shared subdivision fixtures used across the test suites.

#ifndef PATCHGLUE_TESTS_FIXTURES_HPP
#define PATCHGLUE_TESTS_FIXTURES_HPP

#include "patchglue/polyhedra.hpp"

#include <initializer_list>
#include <vector>

namespace patchglue::fixtures {

inline RatVector rv(std::initializer_list<long long> xs) {
  RatVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

inline IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

inline LatticePolyhedron poly(std::size_t n, std::vector<RatVector> verts,
                              std::vector<IntVector> rays = {}) {
  return LatticePolyhedron(n, RatMatrix(std::move(verts)), IntMatrix(std::move(rays)));
}

/// { {0}, [0, inf), (-inf, 0] } on the line.
inline Subdivision model_1d() {
  return validate_subdivision(
      1, {poly(1, {rv({0})}, {iv({1})}), poly(1, {rv({0})}, {iv({-1})})});
}

/// The fan of P^2 (rays (1,0), (0,1), (-1,-1)) as a trivial subdivision.
inline Subdivision p2_fan() {
  return validate_subdivision(2, {poly(2, {rv({0, 0})}, {iv({1, 0}), iv({0, 1})}),
                                  poly(2, {rv({0, 0})}, {iv({0, 1}), iv({-1, -1})}),
                                  poly(2, {rv({0, 0})}, {iv({-1, -1}), iv({1, 0})})});
}

/// The fan of P^1 x P^1 (rays +-e1, +-e2) as a trivial subdivision.
inline Subdivision p1xp1_fan() {
  return validate_subdivision(2, {poly(2, {rv({0, 0})}, {iv({1, 0}), iv({0, 1})}),
                                  poly(2, {rv({0, 0})}, {iv({0, 1}), iv({-1, 0})}),
                                  poly(2, {rv({0, 0})}, {iv({-1, 0}), iv({0, -1})}),
                                  poly(2, {rv({0, 0})}, {iv({0, -1}), iv({1, 0})})});
}

/**
 * The line degeneration of the projective plane: a strongly unimodular
 * subdivision of R^2 with recession fan equal to the P^2 fan and exactly
 * two vertices P = (0,0) and Q = (1,0). The star of P is the P^2 fan, the
 * star of Q is the fan of the blow-up (rays (1,0), (0,1), (-1,0), (-1,-1)).
 */
inline Subdivision p2_line_degeneration() {
  return validate_subdivision(
      2, {
             // Q + cone(e1, e2)
             poly(2, {rv({1, 0})}, {iv({1, 0}), iv({0, 1})}),
             // strip [P,Q] + cone(e2)
             poly(2, {rv({0, 0}), rv({1, 0})}, {iv({0, 1})}),
             // P + cone(e2, -e1-e2)
             poly(2, {rv({0, 0})}, {iv({0, 1}), iv({-1, -1})}),
             // strip [P,Q] + cone(-e1-e2)
             poly(2, {rv({0, 0}), rv({1, 0})}, {iv({-1, -1})}),
             // Q + cone(-e1-e2, e1)
             poly(2, {rv({1, 0})}, {iv({-1, -1}), iv({1, 0})}),
         });
}

/// Vertex at 1/2 on the line; not unimodular (determinant 2).
inline Subdivision half_vertex_1d() {
  return validate_subdivision(1, {poly(1, {RatVector{Rat(1) / 2}}, {iv({1})}),
                                  poly(1, {RatVector{Rat(1) / 2}}, {iv({-1})})});
}

}  // namespace patchglue::fixtures

#endif  // PATCHGLUE_TESTS_FIXTURES_HPP
