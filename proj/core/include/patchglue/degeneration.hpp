/**
 * The cone complex C(Sigma) of a complete subdivision and its validation:
 * unimodularity of every cone, the strong form (all primitive ray
 * generators at level 0 or 1), multiplicities for the weakly semi-stable
 * case, and the three-way classification of positive orthant counts.
 */

#ifndef PATCHGLUE_DEGENERATION_HPP
#define PATCHGLUE_DEGENERATION_HPP

#include "patchglue/polyhedra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace patchglue {

struct ConeRecord {
  std::size_t id = 0;
  /// Primitive generators in Z^(n+1), sorted; last coordinate >= 0.
  IntMatrix generators;
  /// Cell of the base subdivision this cone lies over, if any.
  std::optional<std::size_t> base_cell;
  /// Index into the base recession fan for level-0 cones.
  std::optional<std::size_t> recession_cone;
};

/// C(Sigma): the cone over Sigma x {1} completed at level 0 by the
/// recession fan. Cones over cells come first (in cell-id order), then the
/// recession-fan cones.
struct ConeComplex {
  Subdivision base;
  std::vector<ConeRecord> cones;

  const ConeRecord& cone_of_cell(std::size_t cellId) const { return cones.at(cellId); }
};

ConeComplex cone_over(const Subdivision& s);

struct ValidationIssue {
  std::size_t cone_id = 0;
  std::string reason;
};

struct ValidationReport {
  bool unimodular = false;
  bool strongly_unimodular = false;
  std::vector<ValidationIssue> offending_cones;
  /// Per base cell: the multiplicities (a_1, ..., a_k); filled only when the
  /// complex is unimodular.
  std::vector<std::vector<Int>> multiplicities;
};

/// Per-cone checks run in parallel; the report is merged in cone-id order.
/// unimodular: every cone is simplicial and its primitive generators extend
/// to a basis of Z^(n+1). strongly_unimodular additionally requires every
/// generator's last coordinate to be 0 or 1.
ValidationReport check_strongly_unimodular(const ConeComplex& c);

/// The multiplicities (a_1, ..., a_k) of a cell: last coordinates of the
/// level-positive primitive generators of C(sigma). For strongly unimodular
/// input these are all 1. At least one a_i is always odd; a violation means
/// the complex is invalid and throws std::logic_error. Throws
/// std::invalid_argument("multiplicities require unimodular C(Sigma)") when
/// the complex is not unimodular.
std::vector<Int> multiplicities(const ConeComplex& c, std::size_t cellId);
std::vector<Int> multiplicities(const ConeComplex& c, const ValidationReport& report,
                                std::size_t cellId);

enum class Parity { Odd, Even };
enum class PositiveCount { Half, Full, Empty };

/// Number of positive-orthant sheets of a local form
/// +-x_1^{a_1}...x_k^{a_k} by sign and parities of the a_i:
/// Half  = 2^(k-1)  (sign +, some a_i odd; also sign -, some a_i odd,
///                   reduced to the + case by a coordinate flip),
/// Full  = 2^k      (sign +, all a_i even),
/// Empty = 0        (sign -, all a_i even).
PositiveCount classify_positive_count(bool positiveSign, const std::vector<Parity>& parities);

/// The covering degree as a number: 2^(k-1), 2^k or 0.
Int positive_count_degree(PositiveCount c, std::size_t k);

}  // namespace patchglue

#endif  // PATCHGLUE_DEGENERATION_HPP
