#include "cli.hpp"

#include "patchglue/degeneration.hpp"
#include "patchglue/glue.hpp"
#include "patchglue/json_io.hpp"
#include "patchglue/patchwork.hpp"
#include "patchglue/strata.hpp"

#include <CLI11.hpp>

#include <fstream>

namespace patchglue::cli {

namespace {

void emit(const Json& report, const std::string& outPath, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (outPath.empty())
    out << text;
  else
    write_text_file(outPath, text);
}

Subdivision load_subdivision(const std::string& path) {
  auto [dim, cells] = subdivision_from_json(load_json_file(path));
  return validate_subdivision(dim, std::move(cells));
}

int run_validate(const std::string& input, const std::string& outPath, std::ostream& out) {
  Json report;
  try {
    Subdivision s = load_subdivision(input);
    report["valid_subdivision"] = true;
    ValidationReport vr = check_strongly_unimodular(cone_over(s));
    report["report"] = to_json(vr);
    emit(report, outPath, out);
    return vr.strongly_unimodular ? 0 : 1;
  } catch (const SubdivisionError& e) {
    report["valid_subdivision"] = false;
    report["error"] = e.what();
    emit(report, outPath, out);
    return 1;
  }
}

int run_strata(const std::string& input, const std::string& outPath, std::ostream& out) {
  Subdivision s = load_subdivision(input);
  std::vector<StratumRecord> strata = enumerate_strata(s);
  Json report;
  report["table"] = strata_table_to_json(s, strata);
  report["chi"] = to_json(chi_formula(s));
  emit(report, outPath, out);
  return 0;
}

int run_chi(const std::string& input, const std::string& outPath, std::ostream& out) {
  Subdivision s = load_subdivision(input);
  ChiSummary formula = chi_formula(s);
  Int direct = chi_direct(build_glued_complex(s));
  Json report;
  report["chi_formula"] = to_json(formula);
  report["chi_direct"] = int_to_json(direct);
  const bool agree = formula.chi_positive == direct;
  report["verdict"] = agree ? "AGREE" : "DISAGREE";
  emit(report, outPath, out);
  return agree ? 0 : 1;
}

int run_glue(const std::string& input, const std::string& outPath,
             const std::string& dumpPath, std::ostream& out) {
  Subdivision s = load_subdivision(input);
  GluedComplex g = build_glued_complex(s);
  Json report = to_json(topology_report(g));
  if (!dumpPath.empty()) write_text_file(dumpPath, glued_cells_to_json(g).dump(2) + "\n");
  emit(report, outPath, out);
  return 0;
}

int run_patchwork(const std::string& input, const std::string& outPath,
                  const std::string& svgPath, bool oracle, const std::string& tStr,
                  std::size_t gridSize, std::ostream& out) {
  ViroInput in = viro_from_json(load_json_file(input));
  RegularSubdivision g = regular_subdivision(in);
  Json report;
  report["trivial_subdivision"] = g.trivial;
  report["cells"] = g.cells.size();
  const bool combinatorial = check_combinatorial(in, g);
  report["combinatorial"] = combinatorial;
  int exitCode = 0;
  if (combinatorial) {
    PatchworkComplex p = build_patchwork(in, g);
    report["curve"] = to_json(curve_report(p));
    report["ambient_chi"] = int_to_json(ambient_euler(in, g));
    if (!svgPath.empty()) write_text_file(svgPath, render_svg(in, g, p));
  } else {
    report["curve"] = nullptr;
    exitCode = 1;  // not usable for combinatorial patchworking
  }
  if (oracle) {
    Rat t;
    const auto slash = tStr.find('/');
    if (slash == std::string::npos)
      t = Rat(Int(tStr));
    else
      t = Rat(Int(tStr.substr(0, slash)), Int(tStr.substr(slash + 1)));
    report["oracle"] = to_json(numeric_oracle(in, t, gridSize));
  }
  emit(report, outPath, out);
  return exitCode;
}

int run_render(const std::string& input, const std::string& svgPath, std::ostream& out) {
  ViroInput in = viro_from_json(load_json_file(input));
  RegularSubdivision g = regular_subdivision(in);
  PatchworkComplex p = build_patchwork(in, g);
  write_text_file(svgPath, render_svg(in, g, p));
  Json report;
  report["svg"] = svgPath;
  out << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"toric degenerations, glued special fibres and combinatorial patchworking"};
  app.require_subcommand(1);

  std::string input, outPath, dumpPath, svgPath, tStr = "1/1024";
  std::size_t gridSize = 512;
  bool oracle = false;

  CLI::App* validate = app.add_subcommand("validate", "check strong unimodularity of C(Sigma)");
  validate->add_option("input", input, "subdivision JSON")->required();
  validate->add_option("--out", outPath, "write the report here instead of stdout");

  CLI::App* strata = app.add_subcommand("strata", "stratum table and Euler characteristics");
  strata->add_option("input", input, "subdivision JSON")->required();
  strata->add_option("--out", outPath, "write the report here instead of stdout");

  CLI::App* chi = app.add_subcommand("chi", "weighted formula vs direct count");
  chi->add_option("input", input, "subdivision JSON")->required();
  chi->add_option("--out", outPath, "write the report here instead of stdout");

  CLI::App* glue = app.add_subcommand("glue", "build the glued complex and its topology");
  glue->add_option("input", input, "subdivision JSON")->required();
  glue->add_option("--out", outPath, "write the report here instead of stdout");
  glue->add_option("--dump-cells", dumpPath, "write the full cell/face list here");

  CLI::App* patchwork = app.add_subcommand("patchwork", "combinatorial patchworking");
  patchwork->add_option("input", input, "patchwork input JSON")->required();
  patchwork->add_option("--out", outPath, "write the report here instead of stdout");
  patchwork->add_option("--svg", svgPath, "render the patchwork to this SVG file");
  patchwork->add_flag("--oracle", oracle, "also run the numeric oracle (needs coeffs)");
  patchwork->add_option("--t", tStr, "oracle parameter t as a rational, default 1/1024");
  patchwork->add_option("--grid", gridSize, "oracle grid resolution, default 512");

  CLI::App* render = app.add_subcommand("render", "SVG export of a patchwork");
  render->add_option("input", input, "patchwork input JSON")->required();
  render->add_option("--svg", svgPath, "output SVG path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << app.help() << "\n" << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) return run_validate(input, outPath, out);
    if (strata->parsed()) return run_strata(input, outPath, out);
    if (chi->parsed()) return run_chi(input, outPath, out);
    if (glue->parsed()) return run_glue(input, outPath, dumpPath, out);
    if (patchwork->parsed())
      return run_patchwork(input, outPath, svgPath, oracle, tStr, gridSize, out);
    if (render->parsed()) return run_render(input, svgPath, out);
  } catch (const SubdivisionError& e) {
    err << "validation failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << app.help() << "\n";
  return 2;
}

}  // namespace patchglue::cli
