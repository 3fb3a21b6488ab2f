#include "patchglue/glue.hpp"

#include "fixtures.hpp"
#include "patchglue/parallel.hpp"
#include "patchglue/sampling.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>

using namespace patchglue;
using namespace patchglue::fixtures;

TEST_CASE("glued 1-D model is a circle") {
  GluedComplex g = build_glued_complex(model_1d());
  REQUIRE(g.cells.size() == 4);
  CHECK(g.f_vector() == std::vector<std::size_t>{2, 2});
  CHECK(chi_direct(g) == 0);
  CHECK(component_count(g) == 1);
  // every 0-cell lies under exactly two 1-cells
  std::map<std::size_t, std::size_t> degree;
  for (const auto& [lower, higher] : g.face_pairs) {
    CHECK(g.cells[lower].dim == 0);
    CHECK(g.cells[higher].dim == 1);
    degree[lower]++;
  }
  for (const auto& [cell, d] : degree) CHECK(d == 2);
  CHECK(degree.size() == 2);
}

TEST_CASE("glued line degeneration: four copies of each component piece") {
  Subdivision s = p2_line_degeneration();
  GluedComplex g = build_glued_complex(s);
  // maximal cells sit over the two vertices: 4 + 4
  std::map<std::size_t, std::size_t> over;
  for (const GluedCell& c : g.cells)
    if (c.dim == 2) over[c.sigma]++;
  CHECK(over.size() == 2);
  for (const auto& [sigma, count] : over) {
    CHECK(s.cells[sigma].dim() == 0);
    CHECK(count == 4);
  }
  std::size_t total2 = 0;
  for (const auto& [sigma, count] : over) total2 += count;
  CHECK(total2 == 8);
  CHECK(chi_direct(g) == 1);
  CHECK(component_count(g) == 1);
}

TEST_CASE("cell count over sigma is 2^(n - dim Rec sigma)") {
  for (const Subdivision& s :
       {model_1d(), p2_fan(), p1xp1_fan(), p2_line_degeneration()}) {
    GluedComplex g = build_glued_complex(s);
    std::map<std::size_t, std::size_t> over;
    for (const GluedCell& c : g.cells) over[c.sigma]++;
    for (std::size_t id = 0; id < s.cells.size(); ++id) {
      const std::size_t dimRec = s.cells[id].recession_cone().dim();
      CHECK(over[id] == (std::size_t{1} << (s.ambient - dimRec)));
    }
  }
}

TEST_CASE("grouping glued cells by strata gives |Q+| per stratum") {
  for (const Subdivision& s : {model_1d(), p2_line_degeneration()}) {
    GluedComplex g = build_glued_complex(s);
    std::vector<StratumRecord> strata = enumerate_strata(s);
    for (const StratumRecord& r : strata) {
      CellQuotients q = cell_quotients(s, r.cell);
      Mod2QuotientMap toCell = induced_map(q.rec, q.cell);
      std::size_t count = 0;
      for (const GluedCell& c : g.cells)
        if (c.sigma == r.cell && toCell(c.eps_hat) == r.eps) ++count;
      CHECK(count == r.Qplus.size());
    }
  }
}

TEST_CASE("product degeneration over the P^2 fan is the classic RP^2 complex") {
  GluedComplex g = build_glued_complex(p2_fan());
  CHECK(g.f_vector() == std::vector<std::size_t>{3, 6, 4});
  CHECK(chi_direct(g) == 1);
  CHECK(component_count(g) == 1);
  SurfaceReport surf = surface_type(g);
  CHECK(surf.closed);
  CHECK_FALSE(surf.orientable);
  CHECK(surf.classification == "real projective plane");
  CHECK(surf.genus_or_crosscaps == 1);
}

TEST_CASE("product degeneration over the P^1 x P^1 fan is a torus") {
  GluedComplex g = build_glued_complex(p1xp1_fan());
  CHECK(g.f_vector() == std::vector<std::size_t>{4, 8, 4});
  CHECK(chi_direct(g) == 0);
  SurfaceReport surf = surface_type(g);
  CHECK(surf.closed);
  CHECK(surf.orientable);
  CHECK(surf.classification == "torus");
  CHECK(surf.genus_or_crosscaps == 1);
}

TEST_CASE("Hirzebruch fans separate torus from Klein bottle at chi = 0") {
  auto hirzebruch = [](long long a) {
    return validate_subdivision(
        2, {poly(2, {rv({0, 0})}, {iv({1, 0}), iv({0, 1})}),
            poly(2, {rv({0, 0})}, {iv({0, 1}), iv({-1, a})}),
            poly(2, {rv({0, 0})}, {iv({-1, a}), iv({0, -1})}),
            poly(2, {rv({0, 0})}, {iv({0, -1}), iv({1, 0})})});
  };
  SurfaceReport f1 = surface_type(build_glued_complex(hirzebruch(1)));
  CHECK(f1.closed);
  CHECK(f1.chi == 0);
  CHECK_FALSE(f1.orientable);
  CHECK(f1.classification == "klein bottle");

  SurfaceReport f2 = surface_type(build_glued_complex(hirzebruch(2)));
  CHECK(f2.closed);
  CHECK(f2.chi == 0);
  CHECK(f2.orientable);
  CHECK(f2.classification == "torus");
}

TEST_CASE("blowing up a fixed point of P^2 gives the Klein bottle") {
  Subdivision bl = validate_subdivision(
      2, {poly(2, {rv({0, 0})}, {iv({1, 0}), iv({0, 1})}),
          poly(2, {rv({0, 0})}, {iv({0, 1}), iv({-1, 0})}),
          poly(2, {rv({0, 0})}, {iv({-1, 0}), iv({-1, -1})}),
          poly(2, {rv({0, 0})}, {iv({-1, -1}), iv({1, 0})})});
  SurfaceReport surf = surface_type(build_glued_complex(bl));
  CHECK(surf.closed);
  CHECK(surf.chi == 0);
  CHECK_FALSE(surf.orientable);
  CHECK(surf.classification == "klein bottle");
}

TEST_CASE("line degeneration glues to the real projective plane") {
  GluedComplex g = build_glued_complex(p2_line_degeneration());
  SurfaceReport surf = surface_type(g);
  CHECK(surf.closed);
  CHECK_FALSE(surf.orientable);
  CHECK(surf.chi == 1);
  CHECK(surf.classification == "real projective plane");
}

TEST_CASE("square degeneration of P^1 x P^1 still glues to a torus") {
  // unit square split into two triangles, completed by its normal fan; the
  // vertex stars mix bounded and unbounded edges
  Subdivision s = validate_subdivision(
      2, {poly(2, {rv({0, 0}), rv({1, 0}), rv({1, 1})}),
          poly(2, {rv({0, 0}), rv({1, 1}), rv({0, 1})}),
          poly(2, {rv({0, 0}), rv({1, 0})}, {iv({0, -1})}),
          poly(2, {rv({0, 1}), rv({1, 1})}, {iv({0, 1})}),
          poly(2, {rv({0, 0}), rv({0, 1})}, {iv({-1, 0})}),
          poly(2, {rv({1, 0}), rv({1, 1})}, {iv({1, 0})}),
          poly(2, {rv({0, 0})}, {iv({-1, 0}), iv({0, -1})}),
          poly(2, {rv({1, 0})}, {iv({1, 0}), iv({0, -1})}),
          poly(2, {rv({0, 1})}, {iv({-1, 0}), iv({0, 1})}),
          poly(2, {rv({1, 1})}, {iv({1, 0}), iv({0, 1})})});
  GluedComplex g = build_glued_complex(s);
  CHECK(chi_direct(g) == 0);
  CHECK(chi_direct(g) == chi_formula(s).chi_positive);
  SurfaceReport surf = surface_type(g);
  CHECK(surf.closed);
  CHECK(surf.orientable);
  CHECK(surf.classification == "torus");
}

TEST_CASE("surface_type rejects n != 2") {
  GluedComplex g = build_glued_complex(model_1d());
  CHECK_THROWS_AS(surface_type(g), std::invalid_argument);
}

TEST_CASE("maximal chains under a d-cell have length d") {
  for (const Subdivision& s : {model_1d(), p2_line_degeneration()}) {
    GluedComplex g = build_glued_complex(s);
    auto below = g.closure();
    std::vector<std::vector<std::size_t>> covers(g.cells.size());
    for (const auto& [lower, higher] : g.face_pairs) covers[higher].push_back(lower);
    // walk all maximal chains downward from every cell
    std::function<std::size_t(std::size_t)> depth = [&](std::size_t c) -> std::size_t {
      std::size_t best = 0;
      for (std::size_t child : covers[c]) best = std::max(best, depth(child) + 1);
      return best;
    };
    for (std::size_t c = 0; c < g.cells.size(); ++c) {
      CHECK(depth(c) == g.cells[c].dim);
      // closure is graded: it contains cells of every dimension below
      std::set<std::size_t> dims;
      for (std::size_t f : below[c]) dims.insert(g.cells[f].dim);
      CHECK(dims.size() == g.cells[c].dim);
    }
  }
}

TEST_CASE("chi cross-check: weighted formula equals direct count") {
  for (const Subdivision& s :
       {model_1d(), p2_fan(), p1xp1_fan(), p2_line_degeneration()}) {
    CHECK(chi_formula(s).chi_positive == chi_direct(build_glued_complex(s)));
  }
  std::mt19937 rng(2026);
  for (int i = 0; i < 10; ++i) {
    Subdivision s = random_subdivision_1d(rng);
    CHECK(chi_formula(s).chi_positive == chi_direct(build_glued_complex(s)));
  }
  for (int i = 0; i < 5; ++i) {
    Subdivision s = random_subdivision_2d(rng);
    CHECK(chi_formula(s).chi_positive == chi_direct(build_glued_complex(s)));
  }
}

TEST_CASE("random 2-D samples glue to closed surfaces") {
  std::mt19937 rng(7);
  for (int i = 0; i < 3; ++i) {
    GluedComplex g = build_glued_complex(random_subdivision_2d(rng));
    SurfaceReport surf = surface_type(g);
    CHECK(surf.closed);
  }
}

TEST_CASE("build_glued_complex rejects non-strongly-unimodular input") {
  CHECK_THROWS_AS(build_glued_complex(half_vertex_1d()), SubdivisionError);
}

TEST_CASE("chi of the empty complex is zero") {
  GluedComplex empty;
  CHECK(chi_direct(empty) == 0);
  CHECK(component_count(empty) == 0);
}

namespace {

// product of two cells, living in the concatenated ambient space
LatticePolyhedron product_cell(const LatticePolyhedron& a, const LatticePolyhedron& b) {
  const std::size_t n = a.ambient() + b.ambient();
  RatMatrix verts;
  for (const RatVector& va : a.vertices())
    for (const RatVector& vb : b.vertices()) {
      RatVector v = va;
      v.insert(v.end(), vb.begin(), vb.end());
      verts.push_back(std::move(v));
    }
  IntMatrix rays;
  for (const IntVector& ra : a.rays()) {
    IntVector r = ra;
    r.resize(n, Int(0));
    rays.push_back(std::move(r));
  }
  for (const IntVector& rb : b.rays()) {
    IntVector r(a.ambient(), Int(0));
    r.insert(r.end(), rb.begin(), rb.end());
    rays.push_back(std::move(r));
  }
  return LatticePolyhedron(n, std::move(verts), std::move(rays));
}

}  // namespace

TEST_CASE("three-dimensional cross-check: line degeneration times the P^1 fan") {
  // generic fibre RP^2 x S^1, so both Euler counts must give 0
  Subdivision plane = p2_line_degeneration();
  Subdivision line = model_1d();
  std::vector<LatticePolyhedron> cells;
  for (std::size_t a : plane.maximal)
    for (std::size_t b : line.maximal)
      cells.push_back(product_cell(plane.cells[a], line.cells[b]));
  Subdivision s = validate_subdivision(3, std::move(cells));
  CHECK(s.cells.size() == 39);  // 13 x 3 product faces
  REQUIRE(check_strongly_unimodular(cone_over(s)).strongly_unimodular);
  Int formula = chi_formula(s).chi_positive;
  GluedComplex g = build_glued_complex(s);
  CHECK(formula == 0);
  CHECK(chi_direct(g) == 0);
  CHECK(component_count(g) == 1);
  // the bounded edge of the plane factor times the vertex of the line
  // factor keeps its two vertices, so k = 2
  auto deep = s.find(product_cell(
      plane.cells[*plane.find(fixtures::poly(2, {rv({0, 0}), rv({1, 0})}))],
      line.cells[*line.find(fixtures::poly(1, {rv({0})}))]));
  REQUIRE(deep.has_value());
  CHECK(codimension_k(s, *deep) == 2);
  for (const StratumRecord& r : enumerate_strata(s)) {
    CHECK(r.Q.size() == (std::size_t{1} << r.k));
    CHECK(r.Qplus.size() == (std::size_t{1} << (r.k - 1)));
  }
}

TEST_CASE("product of complete fans is complete in R^3 (the P^3-like check)") {
  // fan of P^3: rays e1, e2, e3, -(1,1,1); glued complex is the standard
  // cell structure of RP^3 with f-vector (4, 12, 16, 8)
  std::vector<IntVector> rays = {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}),
                                 iv({-1, -1, -1})};
  std::vector<LatticePolyhedron> cones;
  for (std::size_t drop = 0; drop < 4; ++drop) {
    IntMatrix gens;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != drop) gens.push_back(rays[i]);
    cones.emplace_back(3, RatMatrix{RatVector(3, Rat(0))}, gens);
  }
  Subdivision s = validate_subdivision(3, std::move(cones));
  CHECK(s.cells.size() == 15);  // 1 + 4 + 6 + 4
  GluedComplex g = build_glued_complex(s);
  CHECK(g.f_vector() == std::vector<std::size_t>{4, 12, 16, 8});
  CHECK(chi_direct(g) == 0);
  CHECK(chi_formula(s).chi_positive == 0);
  CHECK(component_count(g) == 1);
}

TEST_CASE("PATCHGLUE_THREADS caps the worker count") {
  setenv("PATCHGLUE_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  unsetenv("PATCHGLUE_THREADS");
  CHECK(worker_count() >= 1);
  // the complex built serially matches the parallel one
  setenv("PATCHGLUE_THREADS", "1", 1);
  GluedComplex serial = build_glued_complex(p2_line_degeneration());
  unsetenv("PATCHGLUE_THREADS");
  GluedComplex parallel = build_glued_complex(p2_line_degeneration());
  CHECK(serial.face_pairs == parallel.face_pairs);
  CHECK(serial.cells.size() == parallel.cells.size());
}
