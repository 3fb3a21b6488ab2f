#include "patchglue/glue.hpp"

#include "patchglue/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

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

void require_strongly_unimodular_for_glue(const Subdivision& s) {
  ValidationReport report = check_strongly_unimodular(cone_over(s));
  if (!report.strongly_unimodular)
    throw SubdivisionError("glued complex requires a strongly unimodular subdivision");
}

// exact angular order on nonzero integer vectors in the plane
bool angular_less(const IntVector& a, const IntVector& b) {
  auto half = [](const IntVector& v) {
    // 0: positive x-axis up to (but not including) negative x-axis; 1: rest
    if (v[1] > 0) return 0;
    if (v[1] < 0) return 1;
    return v[0] > 0 ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Int cross = a[0] * b[1] - a[1] * b[0];
  return cross > 0;
}

}  // namespace

std::size_t GluedComplex::find_cell(std::size_t sigma, const Mod2Vector& epsHat) const {
  const std::size_t lo = cell_offset.at(sigma);
  const std::size_t hi = sigma + 1 < cell_offset.size() ? cell_offset[sigma + 1] : cells.size();
  for (std::size_t i = lo; i < hi; ++i)
    if (cells[i].eps_hat == epsHat) return i;
  throw std::logic_error("glued cell not found");
}

std::vector<std::vector<std::size_t>> GluedComplex::closure() const {
  std::vector<std::vector<std::size_t>> below(cells.size());
  // face_pairs are sorted by (higher, lower); peel dimensions downward
  std::vector<std::vector<std::size_t>> covers(cells.size());
  for (const auto& [lower, higher] : face_pairs) covers[higher].push_back(lower);
  // cells sorted by sigma; process by increasing cell dim means decreasing
  // sigma dim, so recurse with memoization instead
  std::vector<bool> done(cells.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (done[c]) continue;
    stack.push_back(c);
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      bool ready = true;
      for (std::size_t child : covers[cur])
        if (!done[child]) {
          stack.push_back(child);
          ready = false;
        }
      if (!ready) continue;
      stack.pop_back();
      if (done[cur]) continue;
      std::vector<std::size_t> acc;
      for (std::size_t child : covers[cur]) {
        acc.push_back(child);
        acc.insert(acc.end(), below[child].begin(), below[child].end());
      }
      std::sort(acc.begin(), acc.end());
      acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
      below[cur] = std::move(acc);
      done[cur] = true;
    }
  }
  return below;
}

std::vector<std::size_t> GluedComplex::f_vector() const {
  std::vector<std::size_t> f(ambient + 1, 0);
  for (const GluedCell& c : cells) f.at(c.dim)++;
  return f;
}

GluedComplex build_glued_complex(const Subdivision& s) {
  require_strongly_unimodular_for_glue(s);
  GluedComplex g;
  g.ambient = s.ambient;
  g.base = s;
  g.rec_quotients.resize(s.cells.size());
  g.cell_offset.resize(s.cells.size());

  std::vector<std::vector<Mod2Vector>> classes(s.cells.size());
  parallel_for(s.cells.size(), [&](std::size_t id) {
    IntMatrix tRec = s.cells[id].recession_cone().tangent_lattice();
    g.rec_quotients[id] = mod2_quotient(s.ambient, tRec);
    classes[id] = g.rec_quotients[id].classes();
  });
  for (std::size_t id = 0; id < s.cells.size(); ++id) {
    g.cell_offset[id] = g.cells.size();
    for (const Mod2Vector& epsHat : classes[id])
      g.cells.push_back({id, epsHat, s.ambient - s.cells[id].dim()});
  }

  // covering pairs: sigma' a facet of sigma gives (sigma, q(eps')) below
  // (sigma', eps') for every class eps' of Z_2(Rec sigma')
  for (std::size_t sigma = 0; sigma < s.cells.size(); ++sigma) {
    for (std::size_t facet : s.facets_of(sigma)) {
      Mod2QuotientMap q = induced_map(g.rec_quotients[facet], g.rec_quotients[sigma]);
      for (const Mod2Vector& epsPrime : classes[facet]) {
        std::size_t higher = g.find_cell(facet, epsPrime);
        std::size_t lower = g.find_cell(sigma, q(epsPrime));
        g.face_pairs.emplace_back(lower, higher);
      }
    }
  }
  std::sort(g.face_pairs.begin(), g.face_pairs.end());
  g.face_pairs.erase(std::unique(g.face_pairs.begin(), g.face_pairs.end()), g.face_pairs.end());
  return g;
}

Int chi_direct(const GluedComplex& g) {
  Int chi = 0;
  for (const GluedCell& c : g.cells) chi += (c.dim % 2 == 0) ? 1 : -1;
  return chi;
}

std::vector<std::size_t> components(const GluedComplex& g) {
  UnionFind uf(g.cells.size());
  for (const auto& [lower, higher] : g.face_pairs) uf.unite(lower, higher);
  std::map<std::size_t, std::size_t> label;
  std::vector<std::size_t> out(g.cells.size());
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    std::size_t root = uf.find(i);
    auto [it, fresh] = label.emplace(root, label.size());
    out[i] = it->second;
  }
  return out;
}

std::size_t component_count(const GluedComplex& g) {
  std::vector<std::size_t> c = components(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

SurfaceReport surface_type(const GluedComplex& g) {
  if (g.ambient != 2) throw std::invalid_argument("surface_type requires n = 2");
  const Subdivision& s = g.base;
  SurfaceReport report;
  report.chi = chi_direct(g);

  // Boundary cycle of each 2-cell (a polygon over a vertex of Sigma): the
  // rays of the star at the vertex in angular order; edge slots sit between
  // consecutive 2-cells of the star.
  struct Slot {
    std::size_t polygon;
    std::size_t from;  // glued 0-cell
    std::size_t to;    // glued 0-cell
  };
  std::map<std::size_t, std::vector<Slot>> slotsOf;  // glued 1-cell -> slots

  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    if (g.cells[c].dim != 2) continue;
    const std::size_t v = g.cells[c].sigma;  // a vertex of Sigma
    const RatVector& base = s.cells[v].vertices()[0];

    struct Spoke {
      IntVector dir;
      std::size_t edge;
    };
    std::vector<Spoke> spokes;
    for (std::size_t e : s.cofaces_of(v)) {
      if (s.cells[e].dim() != 1) continue;
      IntVector dir;
      if (s.cells[e].rays().empty()) {
        RatVector d(2);
        bool zero = true;
        for (const RatVector& w : s.cells[e].vertices()) {
          for (std::size_t j = 0; j < 2; ++j) d[j] = w[j] - base[j];
          zero = std::all_of(d.begin(), d.end(), [](const Rat& x) { return x == 0; });
          if (!zero) break;
        }
        dir = primitive_of_rational(d);
      } else {
        dir = s.cells[e].rays()[0];
      }
      spokes.push_back({std::move(dir), e});
    }
    std::sort(spokes.begin(), spokes.end(),
              [](const Spoke& a, const Spoke& b) { return angular_less(a.dir, b.dir); });
    const std::size_t m = spokes.size();
    if (m < 3) throw std::logic_error("vertex star with fewer than three rays");

    // 2-cell of Sigma between consecutive spokes
    std::vector<std::size_t> corner(m);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t e1 = spokes[i].edge;
      const std::size_t e2 = spokes[(i + 1) % m].edge;
      std::size_t found = s.cells.size();
      for (std::size_t tau : s.cofaces_of(e1)) {
        if (s.cells[tau].dim() != 2) continue;
        if (std::binary_search(s.face_ids[tau].begin(), s.face_ids[tau].end(), e2)) {
          found = tau;
          break;
        }
      }
      if (found == s.cells.size()) throw std::logic_error("open corner in a vertex star");
      corner[i] = found;
    }

    const Mod2Vector& epsHat = g.cells[c].eps_hat;
    auto glued = [&](std::size_t cellId) {
      Mod2QuotientMap q = induced_map(g.rec_quotients[v], g.rec_quotients[cellId]);
      return g.find_cell(cellId, q(epsHat));
    };
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t edgeCell = glued(spokes[i].edge);
      std::size_t fromCell = glued(corner[(i + m - 1) % m]);
      std::size_t toCell = glued(corner[i]);
      slotsOf[edgeCell].push_back({c, fromCell, toCell});
    }
  }

  report.closed = true;
  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    if (g.cells[c].dim != 1) continue;
    auto it = slotsOf.find(c);
    if (it == slotsOf.end() || it->second.size() != 2) {
      report.closed = false;
      report.notes.push_back("1-cell " + std::to_string(c) + " has " +
                             std::to_string(it == slotsOf.end() ? 0 : it->second.size()) +
                             " boundary incidences");
    }
  }
  if (!report.closed) return report;

  // Orientation propagation: opposite traversal directions across a shared
  // 1-cell mean the two polygons can keep the same orientation sign.
  std::vector<int> sign(g.cells.size(), 0);
  bool orientable = true;
  for (std::size_t seed = 0; seed < g.cells.size() && orientable; ++seed) {
    if (g.cells[seed].dim != 2 || sign[seed] != 0) continue;
    sign[seed] = 1;
    std::vector<std::size_t> queue{seed};
    while (!queue.empty() && orientable) {
      std::size_t p = queue.back();
      queue.pop_back();
      for (const auto& [edge, slots] : slotsOf) {
        (void)edge;
        if (slots[0].polygon != p && slots[1].polygon != p) continue;
        const Slot& a = slots[0];
        const Slot& b = slots[1];
        const bool sameDirection = (a.from == b.from);
        const int relation = sameDirection ? -1 : 1;
        if (a.polygon == b.polygon) {
          if (sameDirection) orientable = false;
          continue;
        }
        std::size_t other = (a.polygon == p) ? b.polygon : a.polygon;
        int expected = sign[p] * relation;
        if (sign[other] == 0) {
          sign[other] = expected;
          queue.push_back(other);
        } else if (sign[other] != expected) {
          orientable = false;
        }
      }
    }
  }
  report.orientable = orientable;

  if (component_count(g) == 1) {
    long long chi = report.chi.convert_to<long long>();
    if (orientable) {
      report.genus_or_crosscaps = (2 - chi) / 2;
      if (chi == 2)
        report.classification = "sphere";
      else if (chi == 0)
        report.classification = "torus";
      else
        report.classification =
            "orientable surface of genus " + std::to_string((2 - chi) / 2);
    } else {
      report.genus_or_crosscaps = 2 - chi;
      if (chi == 1)
        report.classification = "real projective plane";
      else if (chi == 0)
        report.classification = "klein bottle";
      else
        report.classification =
            "non-orientable surface with " + std::to_string(2 - chi) + " crosscaps";
    }
  } else {
    report.notes.push_back("complex is not connected; classification per component skipped");
  }
  return report;
}

TopologyReport topology_report(const GluedComplex& g) {
  TopologyReport t;
  t.f_vector = g.f_vector();
  t.chi = chi_direct(g);
  t.component_of = components(g);
  t.component_count = t.component_of.empty()
                          ? 0
                          : *std::max_element(t.component_of.begin(), t.component_of.end()) + 1;
  if (g.ambient == 2) t.surface = surface_type(g);
  return t;
}

}  // namespace patchglue
