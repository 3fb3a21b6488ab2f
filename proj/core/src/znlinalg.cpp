#include "patchglue/znlinalg.hpp"

#include <algorithm>
#include <limits>

namespace patchglue {

namespace {

// floor division for b > 0
Int floordiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void check_rectangular(const IntMatrix& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("matrix rows have mixed dimensions");
  }
}

}  // namespace

IntVector primitive(const IntVector& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) throw std::invalid_argument("zero vector has no primitive representative");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntMatrix hermite_basis(IntMatrix rows) {
  if (rows.empty()) return {};
  check_rectangular(rows);
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    // Euclidean elimination within column c over rows r..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() ||
            boost::multiprecision::abs(rows[i][c]) < boost::multiprecision::abs(rows[best][c]))
          best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = rows[i][c] / rows[r][c];
        if (q != 0)
          for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (std::size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
      for (std::size_t i = 0; i < r; ++i) {
        Int q = floordiv(rows[i][c], rows[r][c]);
        if (q != 0)
          for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
      }
      ++r;
    }
  }
  rows.resize(r);
  return rows;
}

IntMatrix kernel_lattice(const IntMatrix& rows, std::size_t n) {
  check_rectangular(rows);
  if (!rows.empty() && rows[0].size() != n)
    throw std::invalid_argument("kernel_lattice: dimension mismatch");
  const std::size_t m = rows.size();
  // Work on [A^T | I_n]; rows of the identity part track the transform.
  IntMatrix work(n, IntVector(m + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) work[i][j] = rows[j][i];
    work[i][m + i] = 1;
  }
  // Hermite elimination with pivots restricted to the first m columns.
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    while (true) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i) {
        if (work[i][c] == 0) continue;
        if (best == n ||
            boost::multiprecision::abs(work[i][c]) < boost::multiprecision::abs(work[best][c]))
          best = i;
      }
      if (best == n) break;
      std::swap(work[r], work[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (work[i][c] == 0) continue;
        Int q = work[i][c] / work[r][c];
        if (q != 0)
          for (std::size_t j = 0; j < m + n; ++j) work[i][j] -= q * work[r][j];
        if (work[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (work[r][c] != 0) ++r;
  }
  IntMatrix kernel;
  for (std::size_t i = r; i < n; ++i)
    kernel.emplace_back(work[i].begin() + static_cast<std::ptrdiff_t>(m), work[i].end());
  return hermite_basis(std::move(kernel));
}

IntMatrix saturate(const IntMatrix& generators) {
  if (generators.empty()) return {};
  check_rectangular(generators);
  const std::size_t n = generators[0].size();
  IntMatrix orth = kernel_lattice(generators, n);
  IntMatrix sat = kernel_lattice(orth, n);
  sat = hermite_basis(std::move(sat));
  std::sort(sat.begin(), sat.end());
  return sat;
}

std::size_t int_rank(const IntMatrix& rows) { return hermite_basis(rows).size(); }

bool in_lattice(IntVector v, const IntMatrix& hermiteRows) {
  for (const IntVector& row : hermiteRows) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    if (v[p] % row[p] != 0) continue;
    Int q = v[p] / row[p];
    if (q != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  return hermite_basis(a) == hermite_basis(b);
}

Mod2Vector::Mod2Vector(std::size_t dim, std::uint64_t bits) : dim_(dim), bits_(bits) {
  if (dim > 64) throw std::invalid_argument("Mod2Vector supports dimension <= 64");
  if (dim < 64) bits_ &= (std::uint64_t{1} << dim) - 1;
}

Mod2Vector Mod2Vector::reduction(const IntVector& v) {
  Mod2Vector out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) out.set(i, v[i] % 2 != 0);
  return out;
}

void Mod2Vector::set(std::size_t i, bool value) {
  if (i >= dim_) throw std::out_of_range("Mod2Vector index");
  if (value)
    bits_ |= std::uint64_t{1} << i;
  else
    bits_ &= ~(std::uint64_t{1} << i);
}

bool Mod2Vector::parity() const {
#ifdef __GNUC__
  return __builtin_parityll(bits_);
#else
  std::uint64_t b = bits_;
  b ^= b >> 32; b ^= b >> 16; b ^= b >> 8; b ^= b >> 4; b ^= b >> 2; b ^= b >> 1;
  return b & 1;
#endif
}

Mod2Vector Mod2Vector::operator+(const Mod2Vector& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("Mod2Vector dimension mismatch");
  return Mod2Vector(dim_, bits_ ^ other.bits_);
}

std::string Mod2Vector::to_string() const {
  std::string s(dim_, '0');
  for (std::size_t i = 0; i < dim_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

Mod2Subspace Mod2Subspace::span(std::size_t ambient, const std::vector<Mod2Vector>& generators) {
  Mod2Subspace s(ambient);
  for (const Mod2Vector& g : generators) {
    if (g.dim() != ambient) throw std::invalid_argument("Mod2Subspace generator dimension mismatch");
    s.insert(g);
  }
  return s;
}

void Mod2Subspace::insert(Mod2Vector v) {
  v = reduce(v);
  if (v.is_zero()) return;
  std::size_t pivot = 0;
  while (!v.get(pivot)) ++pivot;
  // keep pivots strictly increasing
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), v);
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
  // clear the new pivot column in older rows
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i != pos && rows_[i].get(pivot)) rows_[i] = rows_[i] + v;
  }
}

Mod2Vector Mod2Subspace::reduce(Mod2Vector v) const {
  if (v.dim() != ambient_) throw std::invalid_argument("Mod2Subspace reduce: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v = v + rows_[i];
  return v;
}

bool Mod2Subspace::contains_subspace(const Mod2Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Mod2Vector& r) { return contains(r); });
}

Mod2Quotient::Mod2Quotient(std::size_t ambient, Mod2Subspace subspace)
    : ambient_(ambient), subspace_(std::move(subspace)) {
  if (subspace_.ambient() != ambient_)
    throw std::invalid_argument("Mod2Quotient: subspace ambient mismatch");
}

std::size_t Mod2Quotient::num_classes() const {
  return std::size_t{1} << (ambient_ - subspace_.rank());
}

Mod2Vector Mod2Quotient::canonical_form(const Mod2Vector& v) const { return subspace_.reduce(v); }

std::vector<Mod2Vector> Mod2Quotient::classes() const {
  std::vector<std::size_t> free;  // non-pivot coordinates
  const auto& piv = subspace_.pivots();
  std::size_t pi = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (pi < piv.size() && piv[pi] == i)
      ++pi;
    else
      free.push_back(i);
  }
  std::vector<Mod2Vector> out;
  out.reserve(std::size_t{1} << free.size());
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << free.size()); ++x) {
    Mod2Vector v(ambient_, 0);
    for (std::size_t j = 0; j < free.size(); ++j)
      if ((x >> j) & 1u) v.set(free[j], true);
    out.push_back(v);
  }
  return out;
}

Mod2Quotient mod2_quotient(std::size_t n, const IntMatrix& saturatedBasis) {
  std::vector<Mod2Vector> gens;
  gens.reserve(saturatedBasis.size());
  for (const IntVector& b : saturatedBasis) {
    if (b.size() != n) throw std::invalid_argument("mod2_quotient: basis dimension mismatch");
    gens.push_back(Mod2Vector::reduction(b));
  }
  return Mod2Quotient(n, Mod2Subspace::span(n, gens));
}

Mod2QuotientMap induced_map(const Mod2Quotient& source, const Mod2Quotient& target) {
  if (source.ambient() != target.ambient() ||
      !target.subspace().contains_subspace(source.subspace()))
    throw std::invalid_argument("no induced quotient map");
  return Mod2QuotientMap{source, target};
}

}  // namespace patchglue
