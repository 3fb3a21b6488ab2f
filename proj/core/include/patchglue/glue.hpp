/**
 * The glued stratified cell model of the real positive special fibre.
 *
 * Cells are pairs (sigma, eps_hat) with sigma a cell of Sigma and eps_hat a
 * class in Z_2(Rec sigma); the cell has dimension n - dim sigma. The cell
 * (sigma, eps_hat) is a face of (sigma', eps_hat') exactly when sigma' is a
 * proper face of sigma and eps_hat' maps to eps_hat under
 * Z_2(Rec sigma') -> Z_2(Rec sigma). Face pairs are stored as the covering
 * relation (transitive reduction); the closure is computed on demand.
 *
 * The complex is abstract: pieces are face posets, never embeddings.
 */

#ifndef PATCHGLUE_GLUE_HPP
#define PATCHGLUE_GLUE_HPP

#include "patchglue/strata.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace patchglue {

struct GluedCell {
  std::size_t sigma = 0;  // base cell id
  Mod2Vector eps_hat;     // class in Z_2(Rec sigma)
  std::size_t dim = 0;    // n - dim sigma
};

struct GluedComplex {
  std::size_t ambient = 0;
  Subdivision base;
  std::vector<GluedCell> cells;  // sorted by (sigma, eps_hat)
  /// Covering face pairs (lower id, higher id): lower lies in the closure of
  /// higher and dim(lower) + 1 == dim(higher).
  std::vector<std::pair<std::size_t, std::size_t>> face_pairs;
  /// Per base cell: quotient Z_2(Rec sigma) and the offset of its cells.
  std::vector<Mod2Quotient> rec_quotients;
  std::vector<std::size_t> cell_offset;

  std::size_t find_cell(std::size_t sigma, const Mod2Vector& epsHat) const;
  /// Full face closure, one sorted id list per cell (excluding the cell).
  std::vector<std::vector<std::size_t>> closure() const;
  std::vector<std::size_t> f_vector() const;
};

/// Throws SubdivisionError when Sigma is not strongly unimodular.
GluedComplex build_glued_complex(const Subdivision& s);

/// Alternating cell count: sum over cells of (-1)^dim. This is the
/// independent verifier for the weighted stratum formula.
Int chi_direct(const GluedComplex& g);

/// Connected components of the cell-adjacency graph. Labels are dense,
/// deterministic (numbered by first occurrence in cell order) and the count
/// is always >= 1 for a nonempty complex.
std::vector<std::size_t> components(const GluedComplex& g);
std::size_t component_count(const GluedComplex& g);

struct SurfaceReport {
  bool closed = false;
  bool orientable = false;
  Int chi = 0;
  std::string classification;  // empty when not closed or not connected
  long long genus_or_crosscaps = -1;
  std::vector<std::string> notes;
};

/// Surface diagnostics for n = 2 (throws std::invalid_argument otherwise).
/// closed: every 1-cell lies in exactly two 2-cell boundary incidences,
/// counted with multiplicity along the boundary cycles of the 2-cells.
/// Orientability propagates orientations across 1-cells in the dual graph.
/// Closed connected surfaces are classified by (chi, orientability).
SurfaceReport surface_type(const GluedComplex& g);

struct TopologyReport {
  std::vector<std::size_t> f_vector;
  Int chi = 0;
  std::size_t component_count = 0;
  std::vector<std::size_t> component_of;
  std::optional<SurfaceReport> surface;
};

TopologyReport topology_report(const GluedComplex& g);

}  // namespace patchglue

#endif  // PATCHGLUE_GLUE_HPP
