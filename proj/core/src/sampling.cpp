#include "patchglue/sampling.hpp"

#include "patchglue/degeneration.hpp"

namespace patchglue {

namespace {

RatVector rat_point(long long x, long long y) { return RatVector{Rat(x), Rat(y)}; }

IntVector int_vec(long long x, long long y) { return IntVector{Int(x), Int(y)}; }

// apply a unimodular matrix [[a,b],[c,d]] to every vertex and ray
std::vector<LatticePolyhedron> twist(const std::vector<LatticePolyhedron>& cells, long long a,
                                     long long b, long long c, long long d) {
  std::vector<LatticePolyhedron> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) {
    RatMatrix verts;
    for (const RatVector& v : cell.vertices())
      verts.push_back(RatVector{Rat(a) * v[0] + Rat(b) * v[1], Rat(c) * v[0] + Rat(d) * v[1]});
    IntMatrix rays;
    for (const IntVector& r : cell.rays())
      rays.push_back(IntVector{a * r[0] + b * r[1], c * r[0] + d * r[1]});
    out.emplace_back(2, std::move(verts), std::move(rays));
  }
  return out;
}

}  // namespace

Subdivision random_subdivision_1d(std::mt19937& rng) {
  std::uniform_int_distribution<long long> offset(-6, 6);
  std::uniform_int_distribution<long long> length(1, 5);
  const long long lo = offset(rng);
  const long long hi = lo + length(rng);
  std::vector<LatticePolyhedron> cells;
  cells.emplace_back(1, RatMatrix{RatVector{Rat(lo)}}, IntMatrix{IntVector{Int(-1)}});
  cells.emplace_back(1, RatMatrix{RatVector{Rat(hi)}}, IntMatrix{IntVector{Int(1)}});
  for (long long v = lo; v < hi; ++v)
    cells.emplace_back(1, RatMatrix{RatVector{Rat(v)}, RatVector{Rat(v + 1)}}, IntMatrix{});
  return validate_subdivision(1, std::move(cells));
}

Subdivision random_subdivision_2d(std::mt19937& rng) {
  std::uniform_int_distribution<long long> sideDist(1, 3);
  std::uniform_int_distribution<long long> offsetDist(-2, 2);
  std::uniform_int_distribution<long long> liftDist(0, 12);
  std::uniform_int_distribution<int> shearDist(-1, 1);

  for (int attempt = 0; attempt < 64; ++attempt) {
    const long long a = sideDist(rng), b = sideDist(rng);
    const long long ox = offsetDist(rng), oy = offsetDist(rng);

    // random regular triangulation of the rectangle
    ViroInput lift;
    lift.n = 2;
    for (long long i = 0; i <= a; ++i)
      for (long long j = 0; j <= b; ++j) {
        lift.points.push_back(int_vec(i, j));
        lift.signs.push_back(Sign::Plus);
        lift.lifting.push_back(Int(liftDist(rng)));
      }
    RegularSubdivision tri = regular_subdivision(lift);
    if (!check_combinatorial(lift, tri)) continue;

    std::vector<LatticePolyhedron> cells;
    for (const auto& cell : tri.cells) {
      RatMatrix verts;
      for (std::size_t idx : cell)
        verts.push_back(rat_point(lift.points[idx][0].convert_to<long long>() + ox,
                                  lift.points[idx][1].convert_to<long long>() + oy));
      cells.emplace_back(2, std::move(verts), IntMatrix{});
    }
    // outside of the rectangle: edge strips and corner cones of the normal fan
    const long long x0 = ox, x1 = ox + a, y0 = oy, y1 = oy + b;
    for (long long i = 0; i < a; ++i) {
      cells.emplace_back(2, RatMatrix{rat_point(x0 + i, y0), rat_point(x0 + i + 1, y0)},
                         IntMatrix{int_vec(0, -1)});
      cells.emplace_back(2, RatMatrix{rat_point(x0 + i, y1), rat_point(x0 + i + 1, y1)},
                         IntMatrix{int_vec(0, 1)});
    }
    for (long long j = 0; j < b; ++j) {
      cells.emplace_back(2, RatMatrix{rat_point(x0, y0 + j), rat_point(x0, y0 + j + 1)},
                         IntMatrix{int_vec(-1, 0)});
      cells.emplace_back(2, RatMatrix{rat_point(x1, y0 + j), rat_point(x1, y0 + j + 1)},
                         IntMatrix{int_vec(1, 0)});
    }
    cells.emplace_back(2, RatMatrix{rat_point(x0, y0)}, IntMatrix{int_vec(-1, 0), int_vec(0, -1)});
    cells.emplace_back(2, RatMatrix{rat_point(x1, y0)}, IntMatrix{int_vec(1, 0), int_vec(0, -1)});
    cells.emplace_back(2, RatMatrix{rat_point(x0, y1)}, IntMatrix{int_vec(-1, 0), int_vec(0, 1)});
    cells.emplace_back(2, RatMatrix{rat_point(x1, y1)}, IntMatrix{int_vec(1, 0), int_vec(0, 1)});

    // unimodular twist for variety
    const long long s = shearDist(rng), u = shearDist(rng);
    // [[1, s], [0, 1]] * [[1, 0], [u, 1]] = [[1 + s*u, s], [u, 1]]
    cells = twist(cells, 1 + s * u, s, u, 1);

    Subdivision sub = validate_subdivision(2, std::move(cells));
    if (!check_strongly_unimodular(cone_over(sub)).strongly_unimodular) continue;
    return sub;
  }
  throw std::runtime_error("random_subdivision_2d: no valid sample after 64 attempts");
}

std::vector<Sign> random_signs(std::mt19937& rng, std::size_t count) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Sign> out(count);
  for (Sign& s : out) s = coin(rng) ? Sign::Plus : Sign::Minus;
  return out;
}

}  // namespace patchglue
