#include "patchglue/polyhedra.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace patchglue;

namespace {

RatVector rv(std::initializer_list<long long> xs) {
  RatVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

LatticePolyhedron poly(std::size_t n, std::initializer_list<RatVector> verts,
                       std::initializer_list<IntVector> rays = {}) {
  return LatticePolyhedron(n, RatMatrix(verts), IntMatrix(rays));
}

std::vector<std::size_t> face_counts_by_dim(const std::vector<LatticePolyhedron>& faces,
                                            std::size_t maxDim) {
  std::vector<std::size_t> counts(maxDim + 1, 0);
  for (const auto& f : faces) counts.at(f.dim())++;
  return counts;
}

// The three cells of the 1-dimensional model subdivision of R^1.
std::vector<LatticePolyhedron> model_1d_cells() {
  return {poly(1, {rv({0})}, {iv({1})}), poly(1, {rv({0})}, {iv({-1})})};
}

// Fan of the projective plane as a subdivision of R^2.
std::vector<LatticePolyhedron> p2_fan_cells() {
  return {poly(2, {rv({0, 0})}, {iv({1, 0}), iv({0, 1})}),
          poly(2, {rv({0, 0})}, {iv({0, 1}), iv({-1, -1})}),
          poly(2, {rv({0, 0})}, {iv({-1, -1}), iv({1, 0})})};
}

}  // namespace

TEST_CASE("unit triangle has 7 faces") {
  auto t = poly(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})});
  auto faces = t.faces();
  CHECK(faces.size() == 7);
  CHECK(face_counts_by_dim(faces, 2) == std::vector<std::size_t>{3, 3, 1});
}

TEST_CASE("a ray has two faces") {
  auto r = poly(2, {rv({0, 0})}, {iv({1, 0})});
  auto faces = r.faces();
  CHECK(faces.size() == 2);
  CHECK(face_counts_by_dim(faces, 2) == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("half-strip face enumeration (frozen hand count)") {
  // Conv{(0,0),(1,0)} + Cone{(0,1)}: 2 vertices, bottom edge, two vertical
  // unbounded edges, and the strip itself.
  auto s = poly(2, {rv({0, 0}), rv({1, 0})}, {iv({0, 1})});
  auto faces = s.faces();
  CHECK(faces.size() == 6);
  CHECK(face_counts_by_dim(faces, 2) == std::vector<std::size_t>{2, 3, 1});
  std::size_t unbounded_edges = 0;
  for (const auto& f : faces)
    if (f.dim() == 1 && !f.bounded()) ++unbounded_edges;
  CHECK(unbounded_edges == 2);
}

TEST_CASE("faces of faces are faces (transitivity)") {
  auto s = poly(2, {rv({0, 0}), rv({2, 1}), rv({1, 3})}, {iv({1, 0}), iv({1, 5})});
  auto faces = s.faces();
  std::set<LatticePolyhedron> all(faces.begin(), faces.end());
  for (const auto& f : faces)
    for (const auto& g : f.faces()) CHECK(all.count(g) == 1);
}

TEST_CASE("recession cone") {
  auto strip = poly(2, {rv({0, 0}), rv({1, 0})}, {iv({0, 1})});
  auto rec = strip.recession_cone();
  CHECK(rec.is_cone_at_origin());
  CHECK(rec.rays() == IntMatrix{iv({0, 1})});

  auto triangle = poly(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})});
  CHECK(triangle.recession_cone().dim() == 0);

  auto cone = poly(2, {rv({0, 0})}, {iv({1, 0}), iv({0, 1})});
  CHECK(cone.recession_cone() == cone);
}

TEST_CASE("tangent lattice") {
  auto seg = poly(2, {rv({0, 0}), rv({2, 0})});
  CHECK(seg.tangent_lattice() == IntMatrix{iv({1, 0})});

  auto pt = poly(2, {rv({3, 4})});
  CHECK(pt.tangent_lattice().empty());

  // Directions (1,1) and (1,-1) span R^2; the saturation is all of Z^2.
  auto wedge = poly(2, {rv({0, 0}), rv({1, 1})}, {iv({1, -1})});
  IntMatrix t = wedge.tangent_lattice();
  CHECK(t.size() == 2);
  CHECK(in_lattice(iv({1, 0}), hermite_basis(t)));
}

TEST_CASE("rank of recession tangent space never exceeds the cell's") {
  auto cells = {poly(2, {rv({0, 0}), rv({1, 0})}, {iv({0, 1})}),
                poly(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})}),
                poly(2, {rv({0, 0})}, {iv({1, 0}), iv({1, 2})}),
                poly(3, {rv({0, 0, 0}), rv({1, 0, 0})}, {iv({0, 1, 0})})};
  for (const auto& p : cells)
    CHECK(p.recession_cone().tangent_lattice().size() <= p.tangent_lattice().size());
}

TEST_CASE("construction canonicalizes redundant generators") {
  // (1,0) below is a vertex + 1 * ray, hence redundant.
  auto a = poly(2, {rv({0, 0}), rv({1, 0})}, {iv({1, 0})});
  auto b = poly(2, {rv({0, 0})}, {iv({1, 0})});
  CHECK(a == b);
}

TEST_CASE("lineality is rejected") {
  CHECK_THROWS_AS(poly(2, {rv({0, 0})}, {iv({1, 0}), iv({-1, 0})}), std::invalid_argument);
}

TEST_CASE("validate_subdivision accepts the 1-D model") {
  Subdivision s = validate_subdivision(1, model_1d_cells());
  CHECK(s.cells.size() == 3);
  CHECK(s.maximal.size() == 2);
  CHECK(s.recession_fan.size() == 3);  // {0} and both half-lines
}

TEST_CASE("validate_subdivision rejects overlapping rays") {
  std::vector<LatticePolyhedron> bad = {poly(1, {rv({0})}, {iv({1})}),
                                        poly(1, {rv({-1})}, {iv({1})})};
  CHECK_THROWS_AS(validate_subdivision(1, bad), SubdivisionError);
  try {
    validate_subdivision(1, bad);
  } catch (const SubdivisionError& e) {
    CHECK(std::string(e.what()).find("overlap in non-face") != std::string::npos);
  }
}

TEST_CASE("validate_subdivision rejects incomplete complexes") {
  std::vector<LatticePolyhedron> half = {poly(1, {rv({0})}, {iv({1})})};
  CHECK_THROWS_AS(validate_subdivision(1, half), SubdivisionError);

  std::vector<LatticePolyhedron> bounded = {poly(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})})};
  CHECK_THROWS_AS(validate_subdivision(2, bounded), SubdivisionError);

  // fan of P^2 with one maximal cone removed: a missing wedge
  std::vector<LatticePolyhedron> wedgeless = {
      poly(2, {rv({0, 0})}, {iv({1, 0}), iv({0, 1})}),
      poly(2, {rv({0, 0})}, {iv({0, 1}), iv({-1, -1})})};
  CHECK_THROWS_AS(validate_subdivision(2, wedgeless), SubdivisionError);
  try {
    validate_subdivision(2, wedgeless);
  } catch (const SubdivisionError& e) {
    CHECK(std::string(e.what()).find("not complete") != std::string::npos);
  }
}

TEST_CASE("validate_subdivision rejects overlapping 2-D cones") {
  // two quadrants sharing a full-dimensional overlap
  std::vector<LatticePolyhedron> bad = {
      poly(2, {rv({0, 0})}, {iv({1, 0}), iv({0, 1})}),
      poly(2, {rv({0, 0})}, {iv({1, 1}), iv({-1, 1})}),
      poly(2, {rv({0, 0})}, {iv({0, 1}), iv({-1, 0})})};
  CHECK_THROWS_AS(validate_subdivision(2, bad), SubdivisionError);
  try {
    validate_subdivision(2, bad);
  } catch (const SubdivisionError& e) {
    CHECK(std::string(e.what()).find("overlap in non-face") != std::string::npos);
  }
}

TEST_CASE("the P^2 fan is a complete subdivision with 7 cells") {
  Subdivision s = validate_subdivision(2, p2_fan_cells());
  CHECK(s.cells.size() == 7);
  CHECK(s.maximal.size() == 3);
  CHECK(is_fan(s));
}

TEST_CASE("validate_subdivision is idempotent") {
  Subdivision s = validate_subdivision(2, p2_fan_cells());
  Subdivision again = validate_subdivision(2, s.cells);
  CHECK(s.cells == again.cells);
  CHECK(s.face_ids == again.face_ids);
  CHECK(s.maximal == again.maximal);
}

TEST_CASE("pairwise intersections are common faces on fixtures") {
  for (const Subdivision& s : {validate_subdivision(1, model_1d_cells()),
                               validate_subdivision(2, p2_fan_cells())}) {
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
      for (std::size_t j = i + 1; j < s.cells.size(); ++j) {
        auto meet = intersect(s.cells[i], s.cells[j]);
        if (!meet) continue;
        auto id = s.find(*meet);
        REQUIRE(id.has_value());
        CHECK(std::binary_search(s.face_ids[i].begin(), s.face_ids[i].end(), *id));
        CHECK(std::binary_search(s.face_ids[j].begin(), s.face_ids[j].end(), *id));
      }
    }
  }
}

TEST_CASE("star fans") {
  SUBCASE("1-D model at the origin: two half-lines") {
    Subdivision s = validate_subdivision(1, model_1d_cells());
    auto vertex = s.find(poly(1, {rv({0})}));
    REQUIRE(vertex.has_value());
    Fan f = star_fan(s, *vertex);
    CHECK(f.complex.ambient == 1);
    CHECK(f.complex.cells.size() == 3);
    CHECK(f.complex.maximal.size() == 2);
  }
  SUBCASE("maximal cell: fan in R^0") {
    Subdivision s = validate_subdivision(2, p2_fan_cells());
    Fan f = star_fan(s, s.maximal[0]);
    CHECK(f.complex.ambient == 0);
    CHECK(f.complex.cells.size() == 1);
  }
  SUBCASE("P^2 fan at the ray (1,0): two rays in R^1") {
    Subdivision s = validate_subdivision(2, p2_fan_cells());
    auto ray = s.find(poly(2, {rv({0, 0})}, {iv({1, 0})}));
    REQUIRE(ray.has_value());
    Fan f = star_fan(s, *ray);
    CHECK(f.complex.ambient == 1);
    CHECK(f.complex.maximal.size() == 2);
    std::set<IntMatrix> rays;
    for (std::size_t id : f.complex.maximal) rays.insert(f.complex.cells[id].rays());
    CHECK(rays == std::set<IntMatrix>{{iv({1})}, {iv({-1})}});
  }
  SUBCASE("unknown cell id") {
    Subdivision s = validate_subdivision(2, p2_fan_cells());
    CHECK_THROWS_AS(star_fan(s, 999), std::invalid_argument);
  }
}

TEST_CASE("star fans of the line-degeneration vertices") {
  // One vertex has the fan of the projective plane around it (3 rays), the
  // other the fan of the blow-up (4 rays).
  Subdivision s = validate_subdivision(
      2, {poly(2, {rv({1, 0})}, {iv({1, 0}), iv({0, 1})}),
          poly(2, {rv({0, 0}), rv({1, 0})}, {iv({0, 1})}),
          poly(2, {rv({0, 0})}, {iv({0, 1}), iv({-1, -1})}),
          poly(2, {rv({0, 0}), rv({1, 0})}, {iv({-1, -1})}),
          poly(2, {rv({1, 0})}, {iv({-1, -1}), iv({1, 0})})});
  auto p = s.find(poly(2, {rv({0, 0})}));
  auto q = s.find(poly(2, {rv({1, 0})}));
  REQUIRE(p.has_value());
  REQUIRE(q.has_value());
  auto ray_count = [](const Fan& f) {
    std::size_t rays = 0;
    for (const auto& c : f.complex.cells)
      if (c.dim() == 1) ++rays;
    return rays;
  };
  CHECK(ray_count(star_fan(s, *p)) == 3);
  CHECK(ray_count(star_fan(s, *q)) == 4);
}

TEST_CASE("scaling a subdivision") {
  std::vector<LatticePolyhedron> half = {
      poly(1, {RatVector{Rat(1) / 2}}, {iv({1})}),
      poly(1, {RatVector{Rat(1) / 2}}, {iv({-1})})};
  Subdivision s = validate_subdivision(1, half);
  Subdivision doubled = scale(s, 2);
  CHECK(doubled.find(poly(1, {rv({1})})).has_value());
}
