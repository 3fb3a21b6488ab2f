#include "patchglue/strata.hpp"

#include "patchglue/parallel.hpp"

#include <algorithm>

namespace patchglue {

namespace {

IntMatrix append_zero_column(const IntMatrix& m) {
  IntMatrix out = m;
  for (IntVector& row : out) row.push_back(Int(0));
  return out;
}

void require_strongly_unimodular(const Subdivision& s) {
  ValidationReport report = check_strongly_unimodular(cone_over(s));
  if (!report.strongly_unimodular) {
    std::string what = "subdivision is not strongly unimodular";
    if (!report.offending_cones.empty())
      what += ": cone " + std::to_string(report.offending_cones[0].cone_id) + " " +
              report.offending_cones[0].reason;
    throw SubdivisionError(what);
  }
}

}  // namespace

CellQuotients cell_quotients(const Subdivision& s, std::size_t cellId) {
  const std::size_t n = s.ambient;
  const LatticePolyhedron& cell = s.cells.at(cellId);
  CellQuotients q;
  IntMatrix tCell = cell.tangent_lattice();
  IntMatrix tRec = cell.recession_cone().tangent_lattice();
  q.cell = mod2_quotient(n, tCell);
  q.rec = mod2_quotient(n, tRec);
  q.rec_ext = mod2_quotient(n + 1, append_zero_column(tRec));
  q.cone = mod2_quotient(n + 1, saturate(cell.cone_generators()));
  return q;
}

std::size_t codimension_k(const Subdivision& s, std::size_t cellId) {
  return s.cells.at(cellId).vertices().size();
}

std::vector<StratumRecord> enumerate_strata(const Subdivision& s) {
  require_strongly_unimodular(s);
  const std::size_t n = s.ambient;
  std::vector<std::vector<StratumRecord>> perCell(s.cells.size());
  parallel_for(s.cells.size(), [&](std::size_t id) {
    const CellQuotients q = cell_quotients(s, id);
    const std::size_t k = codimension_k(s, id);
    const std::size_t dim = n - s.cells[id].dim();
    Mod2QuotientMap toCell = induced_map(q.rec, q.cell);
    Mod2QuotientMap toCone = induced_map(q.rec_ext, q.cone);

    for (const Mod2Vector& eps : q.cell.classes()) {
      StratumRecord rec;
      rec.cell = id;
      rec.eps = eps;
      rec.k = k;
      rec.dim = dim;
      rec.chi_c = (dim % 2 == 0) ? 1 : -1;

      for (const Mod2Vector& c : q.rec.classes())
        if (toCell(c) == eps) rec.Qplus.push_back(c);

      // class of (eps, 0) in Z_2^(n+1)/span(C(sigma))
      Mod2Vector epsExt(n + 1, eps.bits());
      Mod2Vector target = q.cone.canonical_form(epsExt);
      for (const Mod2Vector& c : q.rec_ext.classes())
        if (toCone(c) == target) rec.Q.push_back(c);

      if (rec.Qplus.size() != (std::size_t{1} << (k - 1)) ||
          rec.Q.size() != (std::size_t{1} << k))
        throw std::logic_error("orthant set size violates the covering-degree law");
      perCell[id].push_back(std::move(rec));
    }
  });
  std::vector<StratumRecord> out;
  for (auto& list : perCell)
    for (auto& rec : list) out.push_back(std::move(rec));
  return out;
}

std::optional<std::vector<std::pair<Mod2Vector, Mod2Vector>>> orthant_inclusion(
    const Subdivision& s, const StratumRecord& from, const StratumRecord& to) {
  const std::size_t sigma = from.cell;
  const std::size_t tau = to.cell;
  if (!std::binary_search(s.face_ids[tau].begin(), s.face_ids[tau].end(), sigma))
    throw std::invalid_argument("no adjacency");

  const CellQuotients qs = cell_quotients(s, sigma);
  const CellQuotients qt = cell_quotients(s, tau);

  // labels must match under Z_2(sigma) -> Z_2(tau)
  Mod2QuotientMap onCells = induced_map(qs.cell, qt.cell);
  if (onCells(from.eps) != to.eps) return std::nullopt;

  Mod2QuotientMap mu = induced_map(qs.rec, qt.rec);
  std::vector<std::pair<Mod2Vector, Mod2Vector>> pairs;
  for (const Mod2Vector& q : from.Qplus) {
    Mod2Vector image = mu(q);
    if (std::find(to.Qplus.begin(), to.Qplus.end(), image) == to.Qplus.end())
      throw std::logic_error("orthant inclusion left the positive orthant set");
    pairs.emplace_back(q, image);
  }
  return pairs;
}

ChiSummary chi_formula(const Subdivision& s) {
  require_strongly_unimodular(s);
  const std::size_t n = s.ambient;
  ChiSummary summary;
  for (std::size_t id = 0; id < s.cells.size(); ++id) {
    const std::size_t k = codimension_k(s, id);
    const std::size_t dim = n - s.cells[id].dim();
    const Int strata = Int(1) << dim;                   // 2^(n - dim sigma) strata over sigma
    const Int chi = (dim % 2 == 0) ? strata : -strata;  // each contributes (-1)^dim
    summary.per_codim[k] += chi;
  }
  for (const auto& [k, chi] : summary.per_codim) {
    summary.chi_positive += (Int(1) << (k - 1)) * chi;
    summary.chi_boundary += (Int(1) << k) * chi;
  }
  summary.chi_total = summary.chi_boundary;  // every toric stratum has k >= 1
  return summary;
}

std::tuple<Int, Int, Int> chi_blowup_abstract(
    const std::vector<std::pair<long long, long long>>& strata) {
  Int total = 0, boundary = 0, positive = 0;
  for (const auto& [chi, k] : strata) {
    if (k < 0) throw std::invalid_argument("chi_blowup_abstract: negative codimension");
    Int weight = Int(1) << static_cast<unsigned>(k);
    total += weight * chi;
    if (k >= 1) {
      boundary += weight * chi;
      positive += (Int(1) << static_cast<unsigned>(k - 1)) * chi;
    }
  }
  return {total, boundary, positive};
}

}  // namespace patchglue
