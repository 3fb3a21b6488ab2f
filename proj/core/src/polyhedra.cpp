#include "patchglue/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace patchglue {

namespace {

Rat dot_ir(const IntVector& a, const RatVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int idot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out;
  out.reserve(m.size());
  for (const IntVector& row : m) {
    RatVector r(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) r[i] = Rat(row[i]);
    out.push_back(std::move(r));
  }
  return out;
}

// Gaussian elimination to row echelon form; returns pivot columns.
std::vector<std::size_t> echelonize(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t n = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t sel = m.size();
    for (std::size_t i = r; i < m.size(); ++i)
      if (m[i][c] != 0) { sel = i; break; }
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    Rat inv = m[r][c];
    for (std::size_t j = 0; j < n; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// All k-subsets of {0..n-1}, invoking fn(indices).
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  if (k == 0) {
    fn(std::vector<std::size_t>{});
    return;
  }
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return;
    }
    if (idx[i] == i + n - k) return;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct ConeHull {
  IntMatrix equations;  // primitive, sorted; cut out span(C)
  IntMatrix facets;     // primitive, sorted; nonnegative on C
  std::size_t span_dim = 0;
};

// Supporting half-space description of Cone(gens) inside R^m, exact.
// Facet candidates come from (d-1)-subsets of the generators; a candidate
// survives if every generator lies weakly on one side.
ConeHull cone_hull(const IntMatrix& gens, std::size_t m) {
  ConeHull hull;
  RatMatrix ratGens = to_rational(gens);
  RatMatrix complement = rat_kernel(ratGens, m);
  for (const RatVector& e : complement) hull.equations.push_back(primitive_of_rational(e));
  std::sort(hull.equations.begin(), hull.equations.end());
  const std::size_t d = m - complement.size();
  hull.span_dim = d;
  if (d == 0) return hull;

  RatMatrix basis = ratGens;
  echelonize(basis);  // rows now form a basis of span(C)

  std::set<IntVector> found;
  for_each_subset(gens.size(), d - 1, [&](const std::vector<std::size_t>& subset) {
    // lambda * basis orthogonal to the subset: kernel of (d-1) x d system
    RatMatrix system;
    system.reserve(subset.size());
    for (std::size_t t : subset) {
      RatVector row(d);
      for (std::size_t i = 0; i < d; ++i) row[i] = dot_ir(gens[t], basis[i]);
      system.push_back(std::move(row));
    }
    RatMatrix ker = rat_kernel(system, d);
    if (ker.size() != 1) return;
    RatVector h(m, Rat(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < m; ++j) h[j] += ker[0][i] * basis[i][j];
    IntVector normal = primitive_of_rational(h);
    bool pos = false, neg = false;
    for (const IntVector& g : gens) {
      Int v = idot(normal, g);
      if (v > 0) pos = true;
      if (v < 0) neg = true;
    }
    if (pos && neg) return;
    if (!pos && !neg) return;
    if (neg)
      for (Int& x : normal) x = -x;
    found.insert(std::move(normal));
  });
  hull.facets.assign(found.begin(), found.end());
  return hull;
}

std::size_t rank_of(const IntMatrix& a, const IntMatrix& b) {
  RatMatrix rows = to_rational(a);
  RatMatrix more = to_rational(b);
  rows.insert(rows.end(), more.begin(), more.end());
  return rat_rank(std::move(rows));
}

}  // namespace

std::size_t rat_rank(RatMatrix rows) { return echelonize(rows).size(); }

RatMatrix rat_kernel(const RatMatrix& rows, std::size_t n) {
  RatMatrix m = rows;
  for (const RatVector& r : m)
    if (r.size() != n) throw std::invalid_argument("rat_kernel: dimension mismatch");
  std::vector<std::size_t> pivots = echelonize(m);
  std::vector<bool> isPivot(n, false);
  for (std::size_t p : pivots) isPivot[p] = true;
  RatMatrix kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (isPivot[f]) continue;
    RatVector v(n, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

IntVector primitive_of_rational(const RatVector& v) {
  Int lcm = 1;
  for (const Rat& x : v)
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
  IntVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(lcm);
    w[i] = boost::multiprecision::numerator(scaled);
  }
  return primitive(w);
}

LatticePolyhedron::LatticePolyhedron(std::size_t ambient, RatMatrix vertices, IntMatrix rays)
    : ambient_(ambient) {
  if (vertices.empty())
    throw std::invalid_argument("polyhedron needs at least one vertex");
  for (const RatVector& v : vertices)
    if (v.size() != ambient) throw std::invalid_argument("vertex dimension mismatch");
  for (IntVector& r : rays) {
    if (r.size() != ambient) throw std::invalid_argument("ray dimension mismatch");
    r = primitive(r);  // throws on the zero vector
  }

  const std::size_t m = ambient + 1;
  std::set<IntVector> rawSet;
  for (const RatVector& v : vertices) {
    RatVector lifted = v;
    lifted.push_back(Rat(1));
    rawSet.insert(primitive_of_rational(lifted));
  }
  for (const IntVector& r : rays) {
    IntVector lifted = r;
    lifted.push_back(Int(0));
    rawSet.insert(lifted);
  }
  IntMatrix raw(rawSet.begin(), rawSet.end());

  ConeHull hull = cone_hull(raw, m);
  if (rank_of(hull.equations, hull.facets) != m)
    throw std::invalid_argument("polyhedron has lineality; vertex list cannot be irredundant");
  dim_ = hull.span_dim - 1;

  // keep exactly the extreme generators
  for (const IntVector& g : raw) {
    IntMatrix active = hull.equations;
    for (const IntVector& h : hull.facets)
      if (idot(h, g) == 0) active.push_back(h);
    if (rat_rank(to_rational(active)) != m - 1) continue;
    if (g[ambient] == 0) {
      rays_.push_back(IntVector(g.begin(), g.end() - 1));
    } else {
      RatVector v(ambient);
      for (std::size_t i = 0; i < ambient; ++i) v[i] = Rat(g[i]) / Rat(g[ambient]);
      vertices_.push_back(std::move(v));
    }
  }
  if (vertices_.empty())
    throw std::invalid_argument("polyhedron has no extreme vertex");
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(rays_.begin(), rays_.end());

  for (const RatVector& v : vertices_) {
    RatVector lifted = v;
    lifted.push_back(Rat(1));
    coneGens_.push_back(primitive_of_rational(lifted));
  }
  for (const IntVector& r : rays_) {
    IntVector lifted = r;
    lifted.push_back(Int(0));
    coneGens_.push_back(lifted);
  }
  coneEqs_ = std::move(hull.equations);
  coneFacets_ = std::move(hull.facets);
}

bool LatticePolyhedron::is_cone_at_origin() const {
  if (vertices_.size() != 1) return false;
  return std::all_of(vertices_[0].begin(), vertices_[0].end(),
                     [](const Rat& x) { return x == 0; });
}

bool LatticePolyhedron::contains(const RatVector& point) const {
  if (point.size() != ambient_) throw std::invalid_argument("contains: dimension mismatch");
  RatVector lifted = point;
  lifted.push_back(Rat(1));
  for (const IntVector& e : coneEqs_) {
    Rat s = 0;
    for (std::size_t i = 0; i <= ambient_; ++i) s += Rat(e[i]) * lifted[i];
    if (s != 0) return false;
  }
  for (const IntVector& h : coneFacets_) {
    Rat s = 0;
    for (std::size_t i = 0; i <= ambient_; ++i) s += Rat(h[i]) * lifted[i];
    if (s < 0) return false;
  }
  return true;
}

std::vector<LatticePolyhedron> LatticePolyhedron::faces() const {
  // Faces of the homogenization cone are iterated facet intersections,
  // tracked as generator index sets; a face of P is a cone face that still
  // contains a level-1 generator.
  std::set<std::vector<std::size_t>> seen;
  std::queue<std::vector<std::size_t>> todo;
  std::vector<std::size_t> full(coneGens_.size());
  for (std::size_t i = 0; i < full.size(); ++i) full[i] = i;
  seen.insert(full);
  todo.push(full);
  while (!todo.empty()) {
    std::vector<std::size_t> s = todo.front();
    todo.pop();
    for (const IntVector& h : coneFacets_) {
      std::vector<std::size_t> cut;
      for (std::size_t i : s)
        if (idot(h, coneGens_[i]) == 0) cut.push_back(i);
      if (seen.insert(cut).second) todo.push(cut);
    }
  }
  std::vector<LatticePolyhedron> out;
  for (const auto& s : seen) {
    RatMatrix verts;
    IntMatrix rays;
    for (std::size_t i : s) {
      const IntVector& g = coneGens_[i];
      if (g[ambient_] == 0) {
        rays.push_back(IntVector(g.begin(), g.end() - 1));
      } else {
        RatVector v(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) v[j] = Rat(g[j]) / Rat(g[ambient_]);
        verts.push_back(std::move(v));
      }
    }
    if (verts.empty()) continue;  // recession-only or empty face
    out.emplace_back(ambient_, std::move(verts), std::move(rays));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticePolyhedron LatticePolyhedron::recession_cone() const {
  RatMatrix origin{RatVector(ambient_, Rat(0))};
  return LatticePolyhedron(ambient_, origin, rays_);
}

IntMatrix LatticePolyhedron::tangent_lattice() const {
  IntMatrix dirs;
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    RatVector d(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) d[j] = vertices_[i][j] - vertices_[0][j];
    dirs.push_back(primitive_of_rational(d));
  }
  for (const IntVector& r : rays_) dirs.push_back(r);
  return saturate(dirs);
}

std::string LatticePolyhedron::key() const {
  std::ostringstream os;
  os << "dim" << dim_ << "|V";
  for (const RatVector& v : vertices_) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  }
  os << "|R";
  for (const IntVector& r : rays_) {
    os << "(";
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ")";
  }
  return os.str();
}

bool operator<(const LatticePolyhedron& a, const LatticePolyhedron& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  if (a.vertices_ != b.vertices_) return a.vertices_ < b.vertices_;
  return a.rays_ < b.rays_;
}

namespace {

// True if a facet of A strictly separates all generators of B; then the
// homogenization cones meet only at the origin and the cells are disjoint.
bool quick_separated(const LatticePolyhedron& a, const LatticePolyhedron& b) {
  for (const IntVector& h : a.cone_facets()) {
    bool allNegative = true;
    for (const IntVector& g : b.cone_generators()) {
      if (idot(h, g) >= 0) { allNegative = false; break; }
    }
    if (allNegative) return true;
  }
  return false;
}

}  // namespace

std::optional<LatticePolyhedron> intersect(const LatticePolyhedron& a,
                                           const LatticePolyhedron& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: dimension mismatch");
  const std::size_t n = a.ambient();
  const std::size_t m = n + 1;

  IntMatrix eqs = a.cone_equations();
  eqs.insert(eqs.end(), b.cone_equations().begin(), b.cone_equations().end());
  IntMatrix ineqs = a.cone_facets();
  ineqs.insert(ineqs.end(), b.cone_facets().begin(), b.cone_facets().end());

  // A nonempty intersection of pointed polyhedra is pointed, so lineality in
  // the combined cone means the cells are disjoint.
  if (rank_of(eqs, ineqs) != m) return std::nullopt;

  const std::size_t eqRank = rat_rank(to_rational(eqs));
  if (eqRank >= m) return std::nullopt;
  const std::size_t k = m - 1 - eqRank;

  std::set<IntVector> rays;
  for_each_subset(ineqs.size(), k, [&](const std::vector<std::size_t>& subset) {
    RatMatrix system = to_rational(eqs);
    for (std::size_t t : subset) system.push_back(to_rational({ineqs[t]})[0]);
    RatMatrix ker = rat_kernel(system, m);
    if (ker.size() != 1) return;
    IntVector y = primitive_of_rational(ker[0]);
    bool pos = false, neg = false;
    for (const IntVector& h : ineqs) {
      Int v = idot(h, y);
      if (v > 0) pos = true;
      if (v < 0) neg = true;
    }
    if (pos && neg) return;
    if (neg)
      for (Int& x : y) x = -x;
    rays.insert(std::move(y));
  });

  RatMatrix verts;
  IntMatrix recRays;
  for (const IntVector& y : rays) {
    if (y[n] == 0) {
      recRays.push_back(IntVector(y.begin(), y.end() - 1));
    } else if (y[n] > 0) {
      RatVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = Rat(y[i]) / Rat(y[n]);
      verts.push_back(std::move(v));
    }
  }
  if (verts.empty()) return std::nullopt;
  return LatticePolyhedron(n, std::move(verts), std::move(recRays));
}

namespace {

// Face-to-face check over a face-closed, canonically sorted cell list.
// Returns an error message naming the offending pair, or empty.
std::string check_face_to_face(const std::vector<LatticePolyhedron>& cells,
                               const std::vector<std::vector<std::size_t>>& faceIds) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const bool related =
          std::binary_search(faceIds[j].begin(), faceIds[j].end(), i) ||
          std::binary_search(faceIds[i].begin(), faceIds[i].end(), j);
      if (related) continue;
      if (quick_separated(cells[i], cells[j]) || quick_separated(cells[j], cells[i])) continue;
      std::optional<LatticePolyhedron> meet = intersect(cells[i], cells[j]);
      if (!meet) continue;
      auto pos = std::lower_bound(cells.begin(), cells.end(), *meet);
      bool ok = false;
      if (pos != cells.end() && *pos == *meet) {
        std::size_t f = static_cast<std::size_t>(pos - cells.begin());
        ok = std::binary_search(faceIds[i].begin(), faceIds[i].end(), f) &&
             std::binary_search(faceIds[j].begin(), faceIds[j].end(), f);
      }
      if (!ok)
        return "cells overlap in non-face (cells " + std::to_string(i) + ", " +
               std::to_string(j) + ")";
    }
  }
  return {};
}

struct ClosedComplex {
  std::vector<LatticePolyhedron> cells;            // sorted
  std::vector<std::vector<std::size_t>> face_ids;  // per cell, sorted
};

ClosedComplex close_and_index(std::vector<LatticePolyhedron> cells) {
  std::set<LatticePolyhedron> all(cells.begin(), cells.end());
  std::map<LatticePolyhedron, std::vector<LatticePolyhedron>> faceLists;
  std::queue<LatticePolyhedron> todo;
  for (const auto& c : all) todo.push(c);
  while (!todo.empty()) {
    LatticePolyhedron c = todo.front();
    todo.pop();
    auto faces = c.faces();
    for (const auto& f : faces)
      if (all.insert(f).second) todo.push(f);
    faceLists.emplace(std::move(c), std::move(faces));
  }
  ClosedComplex out;
  out.cells.assign(all.begin(), all.end());
  out.face_ids.resize(out.cells.size());
  for (std::size_t i = 0; i < out.cells.size(); ++i) {
    for (const auto& f : faceLists.at(out.cells[i])) {
      auto pos = std::lower_bound(out.cells.begin(), out.cells.end(), f);
      out.face_ids[i].push_back(static_cast<std::size_t>(pos - out.cells.begin()));
    }
    std::sort(out.face_ids[i].begin(), out.face_ids[i].end());
  }
  return out;
}

IntVector drop_last(const IntVector& v) { return IntVector(v.begin(), v.end() - 1); }

}  // namespace

std::optional<std::size_t> Subdivision::find(const LatticePolyhedron& p) const {
  auto pos = std::lower_bound(cells.begin(), cells.end(), p);
  if (pos != cells.end() && *pos == p) return static_cast<std::size_t>(pos - cells.begin());
  return std::nullopt;
}

std::vector<std::size_t> Subdivision::facets_of(std::size_t id) const {
  std::vector<std::size_t> out;
  for (std::size_t f : face_ids.at(id))
    if (cells[f].dim() + 1 == cells[id].dim()) out.push_back(f);
  return out;
}

std::vector<std::size_t> Subdivision::cofaces_of(std::size_t id) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (std::binary_search(face_ids[c].begin(), face_ids[c].end(), id)) out.push_back(c);
  return out;
}

Subdivision validate_subdivision(std::size_t ambient, std::vector<LatticePolyhedron> cells) {
  if (cells.empty()) throw SubdivisionError("subdivision not complete: no cells");
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].ambient() != ambient)
      throw SubdivisionError("dimension mismatch: input cell " + std::to_string(i) +
                             " lives in dimension " + std::to_string(cells[i].ambient()));

  Subdivision s;
  s.ambient = ambient;

  if (ambient == 0) {
    // R^0: the unique complete subdivision is the single point.
    LatticePolyhedron pt(0, RatMatrix{RatVector{}}, {});
    s.cells = {pt};
    s.face_ids = {{0}};
    s.maximal = {0};
    s.recession_fan = {pt};
    s.recession_of = {0};
    return s;
  }

  ClosedComplex closed = close_and_index(std::move(cells));
  s.cells = std::move(closed.cells);
  s.face_ids = std::move(closed.face_ids);

  std::vector<bool> isProperFace(s.cells.size(), false);
  for (std::size_t i = 0; i < s.cells.size(); ++i)
    for (std::size_t f : s.face_ids[i])
      if (f != i) isProperFace[f] = true;
  for (std::size_t i = 0; i < s.cells.size(); ++i)
    if (!isProperFace[i]) s.maximal.push_back(i);

  if (std::string err = check_face_to_face(s.cells, s.face_ids); !err.empty())
    throw SubdivisionError(err);

  for (std::size_t id : s.maximal)
    if (s.cells[id].dim() != ambient)
      throw SubdivisionError("subdivision not complete: maximal cell " + std::to_string(id) +
                             " has dimension " + std::to_string(s.cells[id].dim()));

  // Recession fan: collect Rec(sigma) with face closure and check it is a fan.
  std::vector<LatticePolyhedron> recCells;
  recCells.reserve(s.cells.size());
  for (const auto& c : s.cells) recCells.push_back(c.recession_cone());
  ClosedComplex recClosed = close_and_index(recCells);
  if (std::string err = check_face_to_face(recClosed.cells, recClosed.face_ids); !err.empty())
    throw SubdivisionError("subdivision not complete: recession cones are not a fan (" + err + ")");
  s.recession_fan = recClosed.cells;
  s.recession_of.resize(s.cells.size());
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    LatticePolyhedron rc = s.cells[i].recession_cone();
    auto pos = std::lower_bound(s.recession_fan.begin(), s.recession_fan.end(), rc);
    s.recession_of[i] = static_cast<std::size_t>(pos - s.recession_fan.begin());
  }

  // Completeness through the cone complex: every wall of a maximal
  // homogenization cone that reaches level > 0 is shared by exactly two
  // maximal cells; walls in the level-0 hyperplane are recession facets and
  // must close up into a complete fan of R^n.
  std::map<IntMatrix, std::vector<std::size_t>> wallOwners;
  for (std::size_t id : s.maximal) {
    const LatticePolyhedron& c = s.cells[id];
    for (const IntVector& h : c.cone_facets()) {
      IntMatrix wall;
      for (const IntVector& g : c.cone_generators())
        if (idot(h, g) == 0) wall.push_back(g);
      std::sort(wall.begin(), wall.end());
      wallOwners[wall].push_back(id);
    }
  }
  std::vector<IntMatrix> levelZeroWalls;
  for (const auto& [wall, owners] : wallOwners) {
    bool reachesLevelOne = std::any_of(wall.begin(), wall.end(),
                                       [&](const IntVector& g) { return g[ambient] != 0; });
    if (reachesLevelOne) {
      if (owners.size() != 2) {
        std::string ids;
        for (std::size_t o : owners) ids += (ids.empty() ? "" : ", ") + std::to_string(o);
        throw SubdivisionError(
            "subdivision not complete: interior wall bounded by " +
            std::to_string(owners.size()) + " maximal cell(s) (cells " + ids + ")");
      }
    } else {
      if (owners.size() != 1)
        throw SubdivisionError("subdivision not complete: recession facet shared by " +
                               std::to_string(owners.size()) + " maximal cells");
      levelZeroWalls.push_back(wall);
    }
  }
  if (levelZeroWalls.empty())
    throw SubdivisionError("subdivision not complete: no unbounded maximal cells");

  // The full-dimensional recession cones must tile R^n.
  std::map<IntMatrix, std::size_t> recWallCount;
  for (const IntMatrix& wall : levelZeroWalls) {
    IntMatrix rays;
    for (const IntVector& g : wall) rays.push_back(drop_last(g));
    ConeHull hull = cone_hull(rays, ambient);
    for (const IntVector& h : hull.facets) {
      IntMatrix sub;
      for (const IntVector& r : rays)
        if (idot(h, r) == 0) sub.push_back(r);
      std::sort(sub.begin(), sub.end());
      ++recWallCount[sub];
    }
  }
  for (const auto& [wall, count] : recWallCount) {
    if (count != 2)
      throw SubdivisionError(
          "subdivision not complete: recession fan does not close up (a wall has " +
          std::to_string(count) + " incidences)");
  }

  return s;
}

Subdivision scale(const Subdivision& s, const Int& d) {
  if (d < 1) throw std::invalid_argument("scale factor must be a positive integer");
  std::vector<LatticePolyhedron> scaled;
  scaled.reserve(s.cells.size());
  for (const auto& c : s.cells) {
    RatMatrix verts = c.vertices();
    for (RatVector& v : verts)
      for (Rat& x : v) x *= Rat(d);
    scaled.emplace_back(s.ambient, std::move(verts), c.rays());
  }
  return validate_subdivision(s.ambient, std::move(scaled));
}

bool is_fan(const Subdivision& s) {
  return std::all_of(s.cells.begin(), s.cells.end(),
                     [](const LatticePolyhedron& c) { return c.is_cone_at_origin(); });
}

Fan star_fan(const Subdivision& s, std::size_t cellId) {
  if (cellId >= s.cells.size())
    throw std::invalid_argument("star_fan: cell not in subdivision");
  const LatticePolyhedron& sigma = s.cells[cellId];
  const std::size_t n = s.ambient;

  IntMatrix tangent = sigma.tangent_lattice();
  IntMatrix projection = kernel_lattice(tangent, n);  // rows span the quotient
  const std::size_t q = projection.size();

  const RatVector& base = sigma.vertices()[0];
  auto project = [&](const RatVector& x) {
    RatVector img(q, Rat(0));
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < n; ++j) img[i] += Rat(projection[i][j]) * x[j];
    return img;
  };

  std::set<LatticePolyhedron> cones;
  for (std::size_t tau : s.cofaces_of(cellId)) {
    const LatticePolyhedron& t = s.cells[tau];
    IntMatrix gens;
    for (const RatVector& v : t.vertices()) {
      RatVector d(n);
      for (std::size_t j = 0; j < n; ++j) d[j] = v[j] - base[j];
      RatVector img = project(d);
      if (std::any_of(img.begin(), img.end(), [](const Rat& x) { return x != 0; }))
        gens.push_back(primitive_of_rational(img));
    }
    for (const IntVector& r : t.rays()) {
      RatVector d(n);
      for (std::size_t j = 0; j < n; ++j) d[j] = Rat(r[j]);
      RatVector img = project(d);
      if (std::any_of(img.begin(), img.end(), [](const Rat& x) { return x != 0; }))
        gens.push_back(primitive_of_rational(img));
    }
    cones.emplace(q, RatMatrix{RatVector(q, Rat(0))}, gens);
  }
  Subdivision complex =
      validate_subdivision(q, std::vector<LatticePolyhedron>(cones.begin(), cones.end()));
  if (!is_fan(complex)) throw std::logic_error("star_fan produced a non-fan complex");
  return Fan{std::move(complex)};
}

}  // namespace patchglue
