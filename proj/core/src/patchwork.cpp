#include "patchglue/patchwork.hpp"

#include "patchglue/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace patchglue {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

Rat rat_det(RatMatrix m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i)
      if (m[i][c] != 0) { sel = i; break; }
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

Int idot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector to_rat_point(const IntVector& p) {
  RatVector v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = Rat(p[i]);
  return v;
}

bool point_on_facet(const IntVector& p, const PatchworkComplex::DeltaFacet& f) {
  return idot(f.normal, p) == f.offset;
}

}  // namespace

Sign sign_of(const Rat& x) {
  if (x == 0) throw std::invalid_argument("zero coefficient has no sign");
  return x > 0 ? Sign::Plus : Sign::Minus;
}

void ViroInput::validate() const {
  if (points.empty()) throw std::invalid_argument("no lattice points");
  for (const IntVector& p : points)
    if (p.size() != n) throw std::invalid_argument("lattice point dimension mismatch");
  if (signs.size() != points.size())
    throw std::invalid_argument("missing sign: need one sign per lattice point");
  if (lifting.size() != points.size())
    throw std::invalid_argument("need one lifting value per lattice point");
  if (!coeffs.empty()) {
    if (coeffs.size() != points.size())
      throw std::invalid_argument("need one coefficient per lattice point");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (sign_of(coeffs[i]) != signs[i])
        throw std::invalid_argument("coefficient sign disagrees with sign vector");
  }
  std::set<IntVector> unique(points.begin(), points.end());
  if (unique.size() != points.size()) throw std::invalid_argument("duplicate lattice point");
}

RegularSubdivision regular_subdivision(const ViroInput& in) {
  in.validate();
  const std::size_t n = in.n;
  // points must affinely span
  {
    IntMatrix dirs;
    for (std::size_t i = 1; i < in.points.size(); ++i) {
      IntVector d(n);
      for (std::size_t j = 0; j < n; ++j) d[j] = in.points[i][j] - in.points[0][j];
      dirs.push_back(std::move(d));
    }
    if (int_rank(dirs) != n)
      throw std::invalid_argument("degenerate input: points do not affinely span R^n");
  }

  RatMatrix lifted;
  for (std::size_t i = 0; i < in.points.size(); ++i) {
    RatVector v = to_rat_point(in.points[i]);
    v.push_back(Rat(in.lifting[i]));
    lifted.push_back(std::move(v));
  }
  LatticePolyhedron hull(n + 1, lifted, {});

  RegularSubdivision out;
  if (hull.dim() == n) {
    // affine lifting: the trivial subdivision { Delta }
    out.trivial = true;
    std::vector<std::size_t> all(in.points.size());
    std::iota(all.begin(), all.end(), 0);
    out.cells.push_back(std::move(all));
    RatMatrix verts;
    for (const IntVector& p : in.points) verts.push_back(to_rat_point(p));
    out.cell_polyhedra.emplace_back(n, verts, IntMatrix{});
    return out;
  }

  // lower facets: homogenized facet normal (a, b) with positive lifting
  // coordinate a[n]
  for (const IntVector& h : hull.cone_facets()) {
    if (h[n] <= 0) continue;
    std::vector<std::size_t> cell;
    for (std::size_t i = 0; i < in.points.size(); ++i) {
      Rat s = Rat(h[n + 1]);
      for (std::size_t j = 0; j <= n; ++j) s += Rat(h[j]) * lifted[i][j];
      if (s == 0) cell.push_back(i);
    }
    std::sort(cell.begin(), cell.end());
    RatMatrix verts;
    for (std::size_t i : cell) verts.push_back(to_rat_point(in.points[i]));
    out.cell_polyhedra.emplace_back(n, verts, IntMatrix{});
    out.cells.push_back(std::move(cell));
  }
  // canonical order
  std::vector<std::size_t> order(out.cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return out.cells[a] < out.cells[b]; });
  RegularSubdivision sorted;
  for (std::size_t i : order) {
    sorted.cells.push_back(std::move(out.cells[i]));
    sorted.cell_polyhedra.push_back(std::move(out.cell_polyhedra[i]));
  }

  // tiling check: interior walls shared by exactly two cells, boundary
  // walls on a facet of Delta by one
  RatMatrix deltaVerts;
  for (const IntVector& p : in.points) deltaVerts.push_back(to_rat_point(p));
  LatticePolyhedron delta(n, deltaVerts, {});
  std::map<LatticePolyhedron, std::size_t> wallCount;
  for (const auto& cp : sorted.cell_polyhedra)
    for (const auto& f : cp.faces())
      if (f.dim() + 1 == cp.dim()) ++wallCount[f];
  for (const auto& [wall, count] : wallCount) {
    bool onBoundary = false;
    for (const IntVector& h : delta.cone_facets()) {
      bool allOn = true;
      for (const IntVector& g : wall.cone_generators())
        if (idot(h, g) != 0) { allOn = false; break; }
      if (allOn) { onBoundary = true; break; }
    }
    const std::size_t expected = onBoundary ? 1 : 2;
    if (count != expected)
      throw std::logic_error("lower hull did not tile the Newton polytope");
  }
  return sorted;
}

bool check_combinatorial(const ViroInput& in, const RegularSubdivision& g) {
  const std::size_t n = in.n;
  for (const auto& cell : g.cells) {
    if (cell.size() != n + 1) return false;
    RatMatrix m;
    for (std::size_t i = 1; i <= n; ++i) {
      RatVector row(n);
      for (std::size_t j = 0; j < n; ++j)
        row[j] = Rat(in.points[cell[i]][j] - in.points[cell[0]][j]);
      m.push_back(std::move(row));
    }
    Rat det = rat_det(std::move(m));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

std::vector<Sign> extend_signs(const std::vector<Sign>& signs,
                               const std::vector<IntVector>& points, const Mod2Vector& eps) {
  if (signs.size() != points.size())
    throw std::invalid_argument("missing sign: need one sign per lattice point");
  std::vector<Sign> out(signs.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    Mod2Vector p = Mod2Vector::reduction(points[i]);
    bool flip = false;
    for (std::size_t j = 0; j < eps.dim(); ++j)
      if (eps.get(j) && p.get(j)) flip = !flip;
    out[i] = flip ? (signs[i] == Sign::Plus ? Sign::Minus : Sign::Plus) : signs[i];
  }
  return out;
}

PatchworkComplex build_patchwork(const ViroInput& in, const RegularSubdivision& g) {
  if (in.n != 2)
    throw std::invalid_argument("combinatorial patchworking is implemented for n = 2");
  if (!check_combinatorial(in, g))
    throw std::invalid_argument("combinatorial mode requires unimodular triangulation");

  PatchworkComplex p;
  p.n = 2;
  RatMatrix deltaVerts;
  for (const IntVector& pt : in.points) deltaVerts.push_back(to_rat_point(pt));
  p.delta.emplace(2, deltaVerts, IntMatrix{});

  for (const IntVector& h : p.delta->cone_facets()) {
    PatchworkComplex::DeltaFacet f;
    f.normal = primitive(IntVector(h.begin(), h.end() - 1));
    // <normal, x> is constant on the facet; read it off a point on it
    f.offset = 0;
    bool found = false;
    for (std::size_t i = 0; i < in.points.size(); ++i) {
      Rat s = Rat(h[2]);
      for (std::size_t j = 0; j < 2; ++j) s += Rat(h[j]) * Rat(in.points[i][j]);
      if (s == 0) {
        if (!found) {
          f.offset = idot(f.normal, in.points[i]);
          found = true;
        }
        f.points.push_back(i);
      }
    }
    f.mask = Mod2Vector::reduction(f.normal).bits();
    if (f.mask == 0) throw std::logic_error("primitive facet normal vanished mod 2");
    p.facets.push_back(std::move(f));
  }

  auto facet_of_edge = [&](const std::array<std::size_t, 2>& e) -> std::optional<std::size_t> {
    for (std::size_t f = 0; f < p.facets.size(); ++f)
      if (point_on_facet(in.points[e[0]], p.facets[f]) &&
          point_on_facet(in.points[e[1]], p.facets[f]))
        return f;
    return std::nullopt;
  };

  // curve vertices: mixed edges per identification class of orthant copies
  std::map<std::pair<std::array<std::size_t, 2>, std::uint64_t>, std::size_t> vertexIndex;
  auto vertex_id = [&](const std::array<std::size_t, 2>& edge, const Mod2Vector& eps,
                       const std::optional<std::size_t>& deltaFacet) {
    std::uint64_t rep = eps.bits();
    if (deltaFacet) rep = std::min(rep, rep ^ p.facets[*deltaFacet].mask);
    auto [it, fresh] = vertexIndex.emplace(std::make_pair(edge, rep), p.curve_vertices.size());
    if (fresh) {
      PatchworkComplex::CurveVertex v;
      v.segment = edge;
      v.eps = Mod2Vector(2, rep);
      v.delta_facet = deltaFacet;
      p.curve_vertices.push_back(std::move(v));
    }
    return it->second;
  };

  for (std::uint64_t bits = 0; bits < 4; ++bits) {
    Mod2Vector eps(2, bits);
    std::vector<Sign> signs = extend_signs(in.signs, in.points, eps);
    for (std::size_t t = 0; t < g.cells.size(); ++t) {
      const auto& c = g.cells[t];
      std::vector<std::array<std::size_t, 2>> mixed;
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
          if (signs[c[a]] != signs[c[b]]) mixed.push_back({c[a], c[b]});
      if (mixed.empty()) continue;
      if (mixed.size() != 2)
        throw std::logic_error("a triangle must have exactly two mixed edges");
      PatchworkComplex::CurveEdge edge;
      edge.simplex = t;
      edge.eps = eps;
      edge.endpoints = {vertex_id(mixed[0], eps, facet_of_edge(mixed[0])),
                        vertex_id(mixed[1], eps, facet_of_edge(mixed[1]))};
      p.curve_edges.push_back(std::move(edge));
    }
  }
  p.incident.resize(p.curve_vertices.size());
  for (std::size_t e = 0; e < p.curve_edges.size(); ++e) {
    p.incident[p.curve_edges[e].endpoints[0]].push_back(e);
    p.incident[p.curve_edges[e].endpoints[1]].push_back(e);
  }
  return p;
}

CurveReport curve_report(const PatchworkComplex& p) {
  if (p.n != 2) throw std::invalid_argument("curve_report requires n = 2");
  CurveReport r;
  r.closed_1_manifold = true;
  for (const auto& inc : p.incident)
    if (inc.size() != 2) r.closed_1_manifold = false;
  r.chi = Int(static_cast<long long>(p.curve_vertices.size())) -
          Int(static_cast<long long>(p.curve_edges.size()));
  UnionFind uf(p.curve_edges.size());
  for (const auto& inc : p.incident)
    for (std::size_t i = 1; i < inc.size(); ++i) uf.unite(inc[0], inc[i]);
  std::set<std::size_t> roots;
  for (std::size_t e = 0; e < p.curve_edges.size(); ++e) roots.insert(uf.find(e));
  r.components = roots.size();
  for (const auto& v : p.curve_vertices)
    if (v.delta_facet) r.boundary_incidences[*v.delta_facet]++;
  return r;
}

Int ambient_euler(const ViroInput& in, const RegularSubdivision& g) {
  const std::size_t n = in.n;
  RatMatrix deltaVerts;
  for (const IntVector& pt : in.points) deltaVerts.push_back(to_rat_point(pt));
  LatticePolyhedron delta(n, deltaVerts, {});
  const IntMatrix& facetNormals = delta.cone_facets();  // homogenized (a, b)

  std::set<LatticePolyhedron> faces;
  for (const auto& cp : g.cell_polyhedra)
    for (const auto& f : cp.faces()) faces.insert(f);

  Int chi = 0;
  for (const auto& f : faces) {
    std::vector<Mod2Vector> masks;
    for (const IntVector& h : facetNormals) {
      bool allOn = true;
      for (const IntVector& gen : f.cone_generators())
        if (idot(h, gen) != 0) { allOn = false; break; }
      if (allOn)
        masks.push_back(Mod2Vector::reduction(primitive(IntVector(h.begin(), h.end() - 1))));
    }
    const std::size_t r = Mod2Subspace::span(n, masks).rank();
    Int copies = Int(1) << (n - r);
    chi += (f.dim() % 2 == 0) ? copies : -copies;
  }
  return chi;
}

std::pair<std::vector<IntVector>, std::vector<Sign>> harnack_signs(long long d) {
  if (d < 1) throw std::invalid_argument("harnack_signs requires degree >= 1");
  std::vector<IntVector> points;
  std::vector<Sign> signs;
  for (long long i = 0; i <= d; ++i) {
    for (long long j = 0; j <= d - i; ++j) {
      points.push_back(IntVector{Int(i), Int(j)});
      signs.push_back((i % 2 == 1 && j % 2 == 1) ? Sign::Minus : Sign::Plus);
    }
  }
  return {points, signs};
}

std::vector<Int> quadratic_lifting(const std::vector<IntVector>& points) {
  std::vector<Int> nu;
  nu.reserve(points.size());
  for (const IntVector& p : points) {
    Int v = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      v += p[i] * p[i];
      for (std::size_t j = i + 1; j < p.size(); ++j) v += p[i] * p[j];
    }
    nu.push_back(v);
  }
  return nu;
}

OracleReport numeric_oracle(const ViroInput& in, const Rat& t, std::size_t grid) {
  if (in.n != 2) throw std::invalid_argument("numeric_oracle requires n = 2");
  if (t <= 0) throw std::invalid_argument("numeric_oracle requires t > 0");
  if (t >= 1) throw std::invalid_argument("numeric_oracle requires t < 1");
  if (grid < 8) throw std::invalid_argument("numeric_oracle requires grid resolution >= 8");
  if (in.coeffs.empty()) throw std::invalid_argument("numeric_oracle requires coefficients");
  in.validate();

  // Delta must be the standard simplex of size d; the chart below
  // compactifies the four quadrants into the projective plane, with curve
  // ends leaving along the three divisor directions (-1,0), (0,-1), (1,1).
  Int d = 0;
  for (const IntVector& p : in.points) {
    if (p[0] < 0 || p[1] < 0) throw std::invalid_argument("oracle: negative exponents");
    d = std::max(d, Int(p[0] + p[1]));
  }
  {
    std::set<IntVector> have(in.points.begin(), in.points.end());
    if (!have.count(IntVector{Int(0), Int(0)}) || !have.count(IntVector{d, Int(0)}) ||
        !have.count(IntVector{Int(0), d}))
      throw std::invalid_argument(
          "oracle: Newton polytope must be the standard simplex of size d");
  }

  // Sample in log_t coordinates: the point of orthant copy eps at u in R^2
  // is x = ((-1)^eps1 t^(-u1), (-1)^eps2 t^(-u2)). The sign boundary stays
  // within unit distance of the tropical curve of the lifting, whose
  // vertices are bounded by the spread of nu.
  Int nuLo = in.lifting[0], nuHi = in.lifting[0];
  for (const Int& v : in.lifting) {
    nuLo = std::min(nuLo, v);
    nuHi = std::max(nuHi, v);
  }
  const long double R = (nuHi - nuLo).convert_to<long double>() + 4.0L;
  const std::size_t N = grid;
  const long double h = 2.0L * R / static_cast<long double>(N);
  const long double logInvT =
      -std::log(static_cast<long double>(boost::multiprecision::numerator(t)) /
                static_cast<long double>(boost::multiprecision::denominator(t)));

  struct Term {
    long double c;  // coefficient with orthant sign folded in later
    long double nu;
    long double i, j;
  };
  std::vector<Term> terms;
  for (std::size_t k = 0; k < in.points.size(); ++k)
    terms.push_back({static_cast<long double>(in.coeffs[k].convert_to<double>()),
                     in.lifting[k].convert_to<long double>(),
                     in.points[k][0].convert_to<long double>(),
                     in.points[k][1].convert_to<long double>()});

  std::vector<long double> us(N);
  for (std::size_t i = 0; i < N; ++i)
    us[i] = -R + (static_cast<long double>(i) + 0.5L) * h;

  // sign of F on copy eps at u, via max-term normalization
  auto evalSign = [&](std::uint64_t eps, long double u1, long double u2) -> int {
    long double top = -1e30L;
    for (const Term& term : terms)
      top = std::max(top, (u1 * term.i + u2 * term.j - term.nu) * logInvT);
    long double sum = 0.0L;
    for (const Term& term : terms) {
      long double e = (u1 * term.i + u2 * term.j - term.nu) * logInvT - top;
      long double sgn = 1.0L;
      if ((eps & 1u) && (static_cast<long long>(term.i) % 2 != 0)) sgn = -sgn;
      if ((eps & 2u) && (static_cast<long long>(term.j) % 2 != 0)) sgn = -sgn;
      sum += term.c * sgn * std::exp(e);
    }
    return sum >= 0.0L ? 1 : -1;
  };

  // per-copy sign fields and flip nodes
  struct Flip {
    std::uint64_t copy;
    long double mx, my;
  };
  std::vector<Flip> flips;
  std::vector<std::vector<long long>> hNode(4), vNode(4);
  std::vector<std::vector<int>> sgn(4);
  for (std::uint64_t eps = 0; eps < 4; ++eps) {
    sgn[eps].assign(N * N, 0);
    hNode[eps].assign(N * N, -1);
    vNode[eps].assign(N * N, -1);
  }
  for (std::uint64_t eps = 0; eps < 4; ++eps) {
    parallel_for(N, [&, eps](std::size_t j) {
      for (std::size_t i = 0; i < N; ++i) sgn[eps][j * N + i] = evalSign(eps, us[i], us[j]);
    });
  }
  for (std::uint64_t eps = 0; eps < 4; ++eps) {
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t i = 0; i + 1 < N; ++i)
        if (sgn[eps][j * N + i] != sgn[eps][j * N + i + 1]) {
          hNode[eps][j * N + i] = static_cast<long long>(flips.size());
          flips.push_back({eps, (us[i] + us[i + 1]) / 2, us[j]});
        }
    for (std::size_t j = 0; j + 1 < N; ++j)
      for (std::size_t i = 0; i < N; ++i)
        if (sgn[eps][j * N + i] != sgn[eps][(j + 1) * N + i]) {
          vNode[eps][j * N + i] = static_cast<long long>(flips.size());
          flips.push_back({eps, us[i], (us[j] + us[j + 1]) / 2});
        }
  }

  UnionFind uf(flips.size());
  UnionFind ufLocal(flips.size());  // without the cross-copy stitches
  for (std::uint64_t eps = 0; eps < 4; ++eps) {
    for (std::size_t j = 0; j + 1 < N; ++j) {
      for (std::size_t i = 0; i + 1 < N; ++i) {
        long long B = hNode[eps][j * N + i], T = hNode[eps][(j + 1) * N + i];
        long long L = vNode[eps][j * N + i], Rn = vNode[eps][j * N + i + 1];
        std::vector<long long> e;
        for (long long x : {B, T, L, Rn})
          if (x >= 0) e.push_back(x);
        auto link = [&](long long a, long long b) {
          uf.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
          ufLocal.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        };
        if (e.size() == 2) {
          link(e[0], e[1]);
        } else if (e.size() == 4) {
          int center = evalSign(eps, (us[i] + us[i + 1]) / 2, (us[j] + us[j + 1]) / 2);
          if (center == sgn[eps][j * N + i]) {
            link(B, Rn);
            link(T, L);
          } else {
            link(B, L);
            link(T, Rn);
          }
        }
      }
    }
  }

  // Cross-copy stitching along the divisor directions. An end leaving
  // through u1 = -R continues in the copy across the x1 = 0 divisor at the
  // same u2; similarly for u2 = -R. Ends leaving along (1,1) cross the line
  // at infinity into the copy with both signs flipped, at the same u1 - u2.
  const long double margin = 2.5L * h;
  const long double tolerance = 4.0L * h;
  enum class Exit { Left, Bottom, Diagonal };
  struct BoundaryFlip {
    std::size_t node;
    std::uint64_t copy;
    Exit exit;
    long double key;
  };
  std::vector<BoundaryFlip> boundary;
  for (std::size_t f = 0; f < flips.size(); ++f) {
    const Flip& fl = flips[f];
    if (fl.mx < -R + margin)
      boundary.push_back({f, fl.copy, Exit::Left, fl.my});
    else if (fl.my < -R + margin)
      boundary.push_back({f, fl.copy, Exit::Bottom, fl.mx});
    else if (fl.mx > R - margin || fl.my > R - margin)
      boundary.push_back({f, fl.copy, Exit::Diagonal, fl.mx - fl.my});
  }
  for (const BoundaryFlip& a : boundary) {
    std::uint64_t partnerCopy = a.copy;
    switch (a.exit) {
      case Exit::Left: partnerCopy ^= 1u; break;
      case Exit::Bottom: partnerCopy ^= 2u; break;
      case Exit::Diagonal: partnerCopy ^= 3u; break;
    }
    std::size_t best = flips.size();
    long double bestDist = tolerance;
    for (const BoundaryFlip& b : boundary) {
      if (b.copy != partnerCopy || b.exit != a.exit) continue;
      long double dist = std::fabs(a.key - b.key);
      if (dist < bestDist) {
        bestDist = dist;
        best = b.node;
      }
    }
    if (best != flips.size()) uf.unite(a.node, best);
  }

  OracleReport report;
  std::set<std::size_t> roots;
  for (std::size_t f = 0; f < flips.size(); ++f) roots.insert(uf.find(f));
  report.components = roots.size();
  report.per_orthant_pieces.assign(4, 0);
  for (std::uint64_t eps = 0; eps < 4; ++eps) {
    std::set<std::size_t> local;
    for (std::size_t f = 0; f < flips.size(); ++f)
      if (flips[f].copy == eps) local.insert(ufLocal.find(f));
    report.per_orthant_pieces[eps] = local.size();
  }
  std::ostringstream note;
  note << "log-scale chart, window radius " << static_cast<double>(R) << ", grid=" << N
       << ", t=" << t << "; the estimate is grid-dependent, increase the resolution "
       << "if pieces fragment";
  report.note = note.str();
  return report;
}

std::string render_svg(const ViroInput& in, const RegularSubdivision& g,
                       const PatchworkComplex& p) {
  if (in.n != 2) throw std::invalid_argument("render_svg requires n = 2");
  Rat maxCoord = 1;
  for (const IntVector& pt : in.points)
    for (const Int& c : pt)
      if (Rat(boost::multiprecision::abs(c)) > maxCoord)
        maxCoord = Rat(boost::multiprecision::abs(c));
  const double scale = 460.0 / maxCoord.convert_to<double>();

  auto px = [&](double x) { return 500.0 + x * scale; };
  auto py = [&](double y) { return 500.0 - y * scale; };
  auto coord = [&](const IntVector& pt, const Mod2Vector& eps, double& x, double& y) {
    x = pt[0].convert_to<double>() * (eps.get(0) ? -1.0 : 1.0);
    y = pt[1].convert_to<double>() * (eps.get(1) ? -1.0 : 1.0);
  };
  auto midpoint = [&](const std::array<std::size_t, 2>& e, const Mod2Vector& eps, double& x,
                      double& y) {
    double x0, y0, x1, y1;
    coord(in.points[e[0]], eps, x0, y0);
    coord(in.points[e[1]], eps, x1, y1);
    x = (x0 + x1) / 2;
    y = (y0 + y1) / 2;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n";
  svg << "<rect width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";

  // triangulation edges, all four reflected copies
  std::set<std::array<std::size_t, 2>> edges;
  for (const auto& c : g.cells)
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) edges.insert({c[a], c[b]});
  for (std::uint64_t bits = 0; bits < 4; ++bits) {
    Mod2Vector eps(2, bits);
    for (const auto& e : edges) {
      double x0, y0, x1, y1;
      coord(in.points[e[0]], eps, x0, y0);
      coord(in.points[e[1]], eps, x1, y1);
      svg << "<line x1=\"" << px(x0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(x1)
          << "\" y2=\"" << py(y1) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
  }
  // signs
  for (std::uint64_t bits = 0; bits < 4; ++bits) {
    Mod2Vector eps(2, bits);
    std::vector<Sign> signs = extend_signs(in.signs, in.points, eps);
    for (std::size_t i = 0; i < in.points.size(); ++i) {
      double x, y;
      coord(in.points[i], eps, x, y);
      const char* fill = signs[i] == Sign::Plus ? "#1f77b4" : "#d62728";
      svg << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"5\" fill=\"" << fill
          << "\"/>\n";
    }
  }
  // curve
  for (const auto& e : p.curve_edges) {
    const auto& mixedA = p.curve_vertices[e.endpoints[0]].segment;
    const auto& mixedB = p.curve_vertices[e.endpoints[1]].segment;
    double x0, y0, x1, y1;
    midpoint(mixedA, e.eps, x0, y0);
    midpoint(mixedB, e.eps, x1, y1);
    svg << "<line x1=\"" << px(x0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(x1)
        << "\" y2=\"" << py(y1) << "\" stroke=\"#2ca02c\" stroke-width=\"3\" "
           "stroke-linecap=\"round\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace patchglue
