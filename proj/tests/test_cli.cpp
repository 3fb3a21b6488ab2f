#include "cli.hpp"

#include "patchglue/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace patchglue;

namespace {

const std::string kRoot = PATCHGLUE_SOURCE_DIR;

std::string fixture(const std::string& name) { return kRoot + "/fixtures/" + name; }
std::string schema(const std::string& name) { return kRoot + "/schemas/" + name; }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json parse(const std::string& text) { return Json::parse(text); }

void check_schema(const std::string& schemaName, const Json& value) {
  Json s = load_json_file(schema(schemaName));
  std::string violation = schema_check(s, value);
  CHECK_MESSAGE(violation.empty(), schemaName, ": ", violation);
}

}  // namespace

TEST_CASE("validate subcommand") {
  SUBCASE("strongly unimodular fixture exits 0") {
    CliResult r = run_cli({"validate", fixture("p2-line.json")});
    CHECK(r.code == 0);
    Json report = parse(r.out);
    CHECK(report.at("report").at("strongly_unimodular") == true);
    check_schema("validation-report.schema.json", report);
  }
  SUBCASE("half-integer vertex exits 1, report still written") {
    CliResult r = run_cli({"validate", fixture("half-vertex.json")});
    CHECK(r.code == 1);
    Json report = parse(r.out);
    CHECK(report.at("report").at("strongly_unimodular") == false);
    check_schema("validation-report.schema.json", report);
  }
  SUBCASE("malformed input exits 2") {
    CliResult r = run_cli({"validate", fixture("no-such-file.json")});
    CHECK(r.code == 2);
  }
  SUBCASE("unknown subcommand exits 2 with usage text") {
    CliResult r = run_cli({"frobnicate"});
    CHECK(r.code == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
  }
}

TEST_CASE("chi subcommand agrees on the fixtures") {
  for (const char* name :
       {"model-1d.json", "p2-line.json", "p2-fan.json", "p1xp1-fan.json"}) {
    CliResult r = run_cli({"chi", fixture(name)});
    CHECK(r.code == 0);
    Json report = parse(r.out);
    CHECK(report.at("verdict") == "AGREE");
    check_schema("chi-report.schema.json", report);
  }
  CliResult r = run_cli({"chi", fixture("model-1d.json")});
  Json report = parse(r.out);
  CHECK(report.at("chi_formula").at("chi_positive") == 0);
  CHECK(report.at("chi_direct") == 0);
}

TEST_CASE("strata subcommand") {
  CliResult r = run_cli({"strata", fixture("p2-line.json")});
  CHECK(r.code == 0);
  Json report = parse(r.out);
  check_schema("strata-report.schema.json", report);
  CHECK(report.at("chi").at("chi_positive") == 1);
}

TEST_CASE("glue subcommand with cell dump") {
  const std::string dumpPath = std::filesystem::temp_directory_path() / "patchglue-dump.json";
  CliResult r = run_cli({"glue", fixture("p2-line.json"), "--dump-cells", dumpPath});
  CHECK(r.code == 0);
  Json report = parse(r.out);
  check_schema("topology-report.schema.json", report);
  CHECK(report.at("chi_direct") == 1);
  CHECK(report.at("components").at("count") == 1);
  CHECK(report.at("surface").at("classification") == "real projective plane");

  Json dump = load_json_file(dumpPath);
  check_schema("glued-cells.schema.json", dump);
  // the dump re-validates as a consistent complex: every face pair connects
  // existing cells with a dimension step of one, and the alternating cell
  // count reproduces the reported chi
  const auto& cells = dump.at("cells");
  long long chi = 0;
  for (const auto& c : cells) chi += (c.at("dim").get<long long>() % 2 == 0) ? 1 : -1;
  CHECK(chi == report.at("chi_direct").get<long long>());
  for (const auto& pair : dump.at("face_pairs")) {
    std::size_t lower = pair.at(0).get<std::size_t>();
    std::size_t higher = pair.at(1).get<std::size_t>();
    REQUIRE(lower < cells.size());
    REQUIRE(higher < cells.size());
    CHECK(cells.at(lower).at("dim").get<std::size_t>() + 1 ==
          cells.at(higher).at("dim").get<std::size_t>());
  }
  std::remove(dumpPath.c_str());
}

TEST_CASE("glue subcommand on the 1-D model has no surface block") {
  CliResult r = run_cli({"glue", fixture("model-1d.json")});
  CHECK(r.code == 0);
  Json report = parse(r.out);
  check_schema("topology-report.schema.json", report);
  CHECK(report.at("surface").is_null());
  CHECK(report.at("f_vector") == Json::array({2, 2}));
}

TEST_CASE("patchwork subcommand with SVG and oracle") {
  const std::string svgPath = std::filesystem::temp_directory_path() / "patchglue-test.svg";
  SUBCASE("harnack-6 reports 11 components and writes the SVG") {
    CliResult r = run_cli({"patchwork", fixture("harnack-6.json"), "--svg", svgPath});
    CHECK(r.code == 0);
    Json report = parse(r.out);
    check_schema("patchwork-report.schema.json", report);
    CHECK(report.at("curve").at("components") == 11);
    std::ifstream svg(svgPath);
    REQUIRE(svg.good());
    std::stringstream buffer;
    buffer << svg.rdbuf();
    CHECK(buffer.str().find("</svg>") != std::string::npos);
    std::remove(svgPath.c_str());
  }
  SUBCASE("oracle mode on the line fixture") {
    CliResult r = run_cli({"patchwork", fixture("line-p2.json"), "--oracle", "--t", "1/64",
                           "--grid", "128"});
    CHECK(r.code == 0);
    Json report = parse(r.out);
    check_schema("patchwork-report.schema.json", report);
    CHECK(report.at("oracle").at("components") == 1);
    CHECK(report.at("curve").at("components") == 1);
  }
}

TEST_CASE("render subcommand writes an SVG") {
  const std::string svgPath = std::filesystem::temp_directory_path() / "patchglue-render.svg";
  CliResult r = run_cli({"render", fixture("conic.json"), "--svg", svgPath});
  CHECK(r.code == 0);
  std::ifstream svg(svgPath);
  CHECK(svg.good());
  std::remove(svgPath.c_str());
}

TEST_CASE("identical inputs produce byte-identical reports") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"glue", fixture("p2-line.json")},
        std::vector<std::string>{"strata", fixture("model-1d.json")},
        std::vector<std::string>{"patchwork", fixture("harnack-6.json")}}) {
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("fixture files round-trip through the subdivision schema") {
  for (const char* name :
       {"model-1d.json", "p2-line.json", "p2-fan.json", "p1xp1-fan.json", "half-vertex.json"}) {
    Json j = load_json_file(fixture(name));
    check_schema("subdivision.schema.json", j);
  }
  for (const char* name : {"harnack-6.json", "line-p2.json", "conic.json"}) {
    Json j = load_json_file(fixture(name));
    check_schema("patchwork-input.schema.json", j);
  }
}

TEST_CASE("the JSON fixture matches the built-in line degeneration") {
  auto [dim, cells] = subdivision_from_json(load_json_file(fixture("p2-line.json")));
  Subdivision s = validate_subdivision(dim, std::move(cells));
  CHECK(s.cells.size() == 13);  // 2 vertices + 6 edges + 5 two-cells
  CHECK(s.maximal.size() == 5);
}

TEST_CASE("integers beyond 2^53 round-trip as decimal strings") {
  Int huge("123456789012345678901234567890");
  Json j = int_to_json(huge);
  CHECK(j.is_string());
  CHECK(json_to_int(j) == huge);
  Json small = int_to_json(Int(-42));
  CHECK(small.is_number_integer());
  CHECK(json_to_int(small) == -42);
  CHECK_THROWS_AS(json_to_int(Json(1.5)), std::invalid_argument);
}
