#include "patchglue/degeneration.hpp"

#include "patchglue/parallel.hpp"

#include <algorithm>

namespace patchglue {

ConeComplex cone_over(const Subdivision& s) {
  ConeComplex c;
  c.base = s;
  for (std::size_t id = 0; id < s.cells.size(); ++id) {
    ConeRecord rec;
    rec.id = c.cones.size();
    rec.base_cell = id;
    rec.generators = s.cells[id].cone_generators();
    std::sort(rec.generators.begin(), rec.generators.end());
    c.cones.push_back(std::move(rec));
  }
  for (std::size_t rid = 0; rid < s.recession_fan.size(); ++rid) {
    ConeRecord rec;
    rec.id = c.cones.size();
    rec.recession_cone = rid;
    for (const IntVector& r : s.recession_fan[rid].rays()) {
      IntVector lifted = r;
      lifted.push_back(Int(0));
      rec.generators.push_back(std::move(lifted));
    }
    std::sort(rec.generators.begin(), rec.generators.end());
    c.cones.push_back(std::move(rec));
  }
  return c;
}

ValidationReport check_strongly_unimodular(const ConeComplex& c) {
  ValidationReport report;
  std::vector<std::vector<ValidationIssue>> issues(c.cones.size());
  parallel_for(c.cones.size(), [&](std::size_t i) {
    const ConeRecord& cone = c.cones[i];
    if (cone.generators.empty()) return;  // the zero cone
    const std::size_t rank = int_rank(cone.generators);
    if (rank != cone.generators.size()) {
      issues[i].push_back({cone.id, "non-simplicial"});
      return;
    }
    if (!lattice_equal(cone.generators, saturate(cone.generators))) {
      issues[i].push_back(
          {cone.id, "generators do not extend to a lattice basis (sublattice index > 1)"});
    }
    const std::size_t last = cone.generators[0].size() - 1;
    for (const IntVector& g : cone.generators) {
      if (g[last] != 0 && g[last] != 1) {
        std::string reason =
            "ray generator has last coordinate " + g[last].str() + " (not 0 or 1)";
        if (g[last] > 1)
          reason += "; scale the subdivision by " + g[last].str() +
                    " to make the vertex integral";
        issues[i].push_back({cone.id, reason});
      }
    }
  });

  report.unimodular = true;
  report.strongly_unimodular = true;
  for (const auto& list : issues) {
    for (const ValidationIssue& issue : list) {
      report.strongly_unimodular = false;
      if (issue.reason.find("last coordinate") == std::string::npos) report.unimodular = false;
      report.offending_cones.push_back(issue);
    }
  }
  if (report.unimodular) {
    report.multiplicities.resize(c.base.cells.size());
    const std::size_t last = c.base.ambient;
    for (std::size_t id = 0; id < c.base.cells.size(); ++id) {
      std::vector<Int> a;
      for (const IntVector& g : c.cone_of_cell(id).generators)
        if (g[last] > 0) a.push_back(g[last]);
      const bool someOdd =
          std::any_of(a.begin(), a.end(), [](const Int& x) { return x % 2 != 0; });
      if (!someOdd) {
        // A level-positive cone whose multiplicities are all even cannot be
        // first-type weakly semi-stable; flag it but keep the report total.
        report.strongly_unimodular = false;
        report.offending_cones.push_back(
            {id, "all multiplicities even; the positive-sheet count is not 2^(k-1) here"});
      }
      report.multiplicities[id] = std::move(a);
    }
  }
  return report;
}

std::vector<Int> multiplicities(const ConeComplex& c, const ValidationReport& report,
                                std::size_t cellId) {
  if (!report.unimodular)
    throw std::invalid_argument("multiplicities require unimodular C(Sigma)");
  const ConeRecord& cone = c.cone_of_cell(cellId);
  const std::size_t last = c.base.ambient;
  std::vector<Int> out;
  for (const IntVector& g : cone.generators)
    if (g[last] > 0) out.push_back(g[last]);
  const bool someOdd =
      std::any_of(out.begin(), out.end(), [](const Int& a) { return a % 2 != 0; });
  if (!someOdd)
    throw std::logic_error("invalid cone complex: every multiplicity is even over cell " +
                           std::to_string(cellId));
  return out;
}

std::vector<Int> multiplicities(const ConeComplex& c, std::size_t cellId) {
  return multiplicities(c, check_strongly_unimodular(c), cellId);
}

PositiveCount classify_positive_count(bool positiveSign, const std::vector<Parity>& parities) {
  if (parities.empty()) throw std::invalid_argument("classify_positive_count: empty parity list");
  const bool someOdd =
      std::any_of(parities.begin(), parities.end(), [](Parity p) { return p == Parity::Odd; });
  if (someOdd) return PositiveCount::Half;  // a coordinate flip reduces the - case to +
  return positiveSign ? PositiveCount::Full : PositiveCount::Empty;
}

Int positive_count_degree(PositiveCount c, std::size_t k) {
  switch (c) {
    case PositiveCount::Half:
      return Int(1) << (k - 1);
    case PositiveCount::Full:
      return Int(1) << k;
    case PositiveCount::Empty:
      return 0;
  }
  throw std::logic_error("unreachable");
}

}  // namespace patchglue
