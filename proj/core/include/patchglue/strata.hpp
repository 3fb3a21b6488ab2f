/**
 * Strata of the special fibre of a strongly unimodular toric degeneration.
 *
 * A stratum is a pair (sigma, eps) with sigma a cell of Sigma and eps a
 * class in Z_2(sigma) = Z_2^n / (Z_2 (x) T_Z(sigma)); it is an open orthant
 * of dimension n - dim sigma, so chi_c = (-1)^(n - dim sigma). Its
 * codimension k counts the special-fibre sheets through it, which in the
 * toric case is the number of vertices of sigma.
 *
 * The orthant set Q(S) lives in the quotient of Z_2^(n+1) by the mod-2 span
 * of T_Z(Rec sigma x {0}): it is the fibre of the class of (eps, 0) under
 * the map to Z_2^(n+1) / span(C(sigma)), of size 2^k. The positive subset
 * Q+(S) is cut out by last coordinate 0 and is identified with the fibre
 * q^{-1}(eps) of q : Z_2(Rec sigma) -> Z_2(sigma), of size 2^(k-1).
 */

#ifndef PATCHGLUE_STRATA_HPP
#define PATCHGLUE_STRATA_HPP

#include "patchglue/degeneration.hpp"
#include "patchglue/polyhedra.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace patchglue {

struct StratumRecord {
  std::size_t cell = 0;        // sigma id
  Mod2Vector eps;              // canonical class in Z_2(sigma), dim n
  std::size_t k = 0;           // codimension in the ambient degeneration
  std::size_t dim = 0;         // n - dim sigma
  int chi_c = 0;               // (-1)^dim
  std::vector<Mod2Vector> Qplus;  // classes in Z_2(Rec sigma), dim n
  std::vector<Mod2Vector> Q;      // classes in Z_2^(n+1)/(Z_2 (x) T(Rec sigma x 0))
};

/// Cached mod-2 quotients attached to one cell.
struct CellQuotients {
  Mod2Quotient cell;      // Z_2(sigma), ambient n
  Mod2Quotient rec;       // Z_2(Rec sigma), ambient n
  Mod2Quotient rec_ext;   // Z_2^(n+1) / span(T(Rec sigma) x 0)
  Mod2Quotient cone;      // Z_2^(n+1) / span(T(C(sigma)))
};

CellQuotients cell_quotients(const Subdivision& s, std::size_t cellId);

/// k(S) = number of special-fibre sheets through the stratum = number of
/// vertices of sigma.
std::size_t codimension_k(const Subdivision& s, std::size_t cellId);

/// Throws SubdivisionError when Sigma is not strongly unimodular.
std::vector<StratumRecord> enumerate_strata(const Subdivision& s);

/// The canonical orthant inclusion on positive orthants for sigma a face of
/// tau: the map Z_2(Rec sigma) -> Z_2(Rec tau) restricted to Q+(S). Returns
/// the image pairs (q, mu(q)); std::nullopt when the eps labels are
/// incompatible (the strata are not adjacent in the glued space). Throws
/// std::invalid_argument("no adjacency") when sigma is not a face of tau.
std::optional<std::vector<std::pair<Mod2Vector, Mod2Vector>>> orthant_inclusion(
    const Subdivision& s, const StratumRecord& from, const StratumRecord& to);

struct ChiSummary {
  std::map<std::size_t, Int> per_codim;  // k -> sum of chi_c over strata with k(S)=k
  Int chi_positive = 0;                  // sum 2^(k-1) chi_c(S)
  Int chi_total = 0;                     // sum 2^k chi_c(S) over all listed strata
  Int chi_boundary = 0;                  // sum over k >= 1 of 2^k chi_c(S)
};

ChiSummary chi_formula(const Subdivision& s);

/// The same weighted sums over hand-entered (chi_c, k) stratification data.
/// Entries with k = 0 contribute only to chi_total. Throws on negative k.
std::tuple<Int, Int, Int> chi_blowup_abstract(
    const std::vector<std::pair<long long, long long>>& strata);

}  // namespace patchglue

#endif  // PATCHGLUE_STRATA_HPP
