/**
 * Exact linear algebra over the integers and over GF(2): primitive vectors,
 * lattice saturation via integer normal-form reduction, and mod-2 subspaces
 * and quotient spaces with canonical class representatives.
 *
 * All number types are arbitrary precision; nothing here overflows silently.
 */

#ifndef PATCHGLUE_ZNLINALG_HPP
#define PATCHGLUE_ZNLINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace patchglue {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;  // rows

/// v / gcd(|v_1|, ..., |v_n|). Throws on the zero vector.
IntVector primitive(const IntVector& v);

/// Canonical Hermite basis of the lattice spanned by the given rows:
/// positive pivots, entries above a pivot reduced into [0, pivot),
/// pivot columns strictly increasing. Zero rows are dropped.
IntMatrix hermite_basis(IntMatrix rows);

/// Basis of { x in Z^n : <r, x> = 0 for every row r }. The result is a
/// basis of a saturated lattice (it comes from a unimodular transform).
IntMatrix kernel_lattice(const IntMatrix& rows, std::size_t n);

/// Z-basis of span_R(generators) intersected with Z^n, i.e. the saturation
/// of the lattice the generators span. Computed as the double orthogonal
/// complement; the output is Hermite-reduced and sorted lexicographically
/// so that repeated runs produce identical bases. Empty input -> empty basis.
IntMatrix saturate(const IntMatrix& generators);

/// Rank of the row lattice.
std::size_t int_rank(const IntMatrix& rows);

/// Whether v is an integer combination of the rows of a Hermite basis.
bool in_lattice(IntVector v, const IntMatrix& hermiteRows);

/// Whether two generating sets span the same lattice (not just the same
/// subspace): compares canonical Hermite bases.
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

/// Element of Z_2^n, n <= 64. Addition is coordinatewise XOR.
class Mod2Vector {
 public:
  Mod2Vector() = default;
  Mod2Vector(std::size_t dim, std::uint64_t bits);

  /// Coordinatewise reduction of an integer vector mod 2.
  static Mod2Vector reduction(const IntVector& v);

  std::size_t dim() const { return dim_; }
  std::uint64_t bits() const { return bits_; }
  bool get(std::size_t i) const { return (bits_ >> i) & 1u; }
  void set(std::size_t i, bool value);
  bool is_zero() const { return bits_ == 0; }
  /// Sum of all coordinates mod 2.
  bool parity() const;

  Mod2Vector operator+(const Mod2Vector& other) const;
  /// Coordinate string in coordinate order, e.g. "0110".
  std::string to_string() const;

  friend auto operator<=>(const Mod2Vector&, const Mod2Vector&) = default;

 private:
  std::size_t dim_ = 0;
  std::uint64_t bits_ = 0;
};

/// Subspace of Z_2^n kept in reduced row echelon form; pivot columns are
/// strictly increasing and cleared in all other rows.
class Mod2Subspace {
 public:
  Mod2Subspace() = default;
  explicit Mod2Subspace(std::size_t ambient) : ambient_(ambient) {}
  static Mod2Subspace span(std::size_t ambient, const std::vector<Mod2Vector>& generators);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Mod2Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduce v against the echelon basis; the result vanishes on all pivot
  /// coordinates and is the canonical representative of v's class.
  Mod2Vector reduce(Mod2Vector v) const;
  bool contains(const Mod2Vector& v) const { return reduce(v).is_zero(); }
  bool contains_subspace(const Mod2Subspace& other) const;

  friend bool operator==(const Mod2Subspace&, const Mod2Subspace&) = default;

 private:
  void insert(Mod2Vector v);

  std::size_t ambient_ = 0;
  std::vector<Mod2Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/**
 * The quotient Z_2^n / W for a subspace W, with a canonical representative
 * per class (echelon reduction against W's pivot columns). canonical_form is
 * idempotent, and canonical_form(u) == canonical_form(v) iff u + v in W.
 * The number of classes is 2^(n - rank W).
 */
class Mod2Quotient {
 public:
  Mod2Quotient() = default;
  Mod2Quotient(std::size_t ambient, Mod2Subspace subspace);

  std::size_t ambient() const { return ambient_; }
  const Mod2Subspace& subspace() const { return subspace_; }
  std::size_t num_classes() const;
  Mod2Vector canonical_form(const Mod2Vector& v) const;
  /// All canonical representatives, in a fixed deterministic order.
  std::vector<Mod2Vector> classes() const;

  friend bool operator==(const Mod2Quotient&, const Mod2Quotient&) = default;

 private:
  std::size_t ambient_ = 0;
  Mod2Subspace subspace_;
};

/// The well-defined map class-of-u -> class-of-u between two quotients of
/// the same ambient space with nested subspaces. Always surjective.
struct Mod2QuotientMap {
  Mod2Quotient source;
  Mod2Quotient target;

  Mod2Vector operator()(const Mod2Vector& cls) const { return target.canonical_form(cls); }
};

/// Quotient of Z_2^n by the mod-2 reduction of a lattice basis. The basis
/// must be saturated: reducing a non-saturated basis mod 2 computes the
/// wrong subspace (span Z(2,0) has saturated basis (1,0), which reduces to
/// (1,0), while the raw generator (2,0) reduces to (0,0)).
Mod2Quotient mod2_quotient(std::size_t n, const IntMatrix& saturatedBasis);

/// Throws std::invalid_argument("no induced quotient map") unless
/// source.subspace is contained in target.subspace.
Mod2QuotientMap induced_map(const Mod2Quotient& source, const Mod2Quotient& target);

}  // namespace patchglue

#endif  // PATCHGLUE_ZNLINALG_HPP
