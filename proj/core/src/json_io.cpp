#include "patchglue/json_io.hpp"

#include <fstream>
#include <sstream>

namespace patchglue {

namespace {

const long long kSafeInteger = 1LL << 53;

Rat json_to_rat(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  }
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_unsigned()) return Rat(j.get<unsigned long long>());
  throw std::invalid_argument(
      "expected an exact number (integers beyond 2^53 must be decimal strings): " + j.dump());
}

}  // namespace

Json int_to_json(const Int& x) {
  if (x > -kSafeInteger && x < kSafeInteger) return Json(x.convert_to<long long>());
  return Json(x.str());
}

Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument(
      "expected an exact integer (values beyond 2^53 must be decimal strings): " + j.dump());
}

std::pair<std::size_t, std::vector<LatticePolyhedron>> subdivision_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("cells"))
    throw std::invalid_argument("subdivision JSON needs \"dim\" and \"cells\"");
  const std::size_t n = j.at("dim").get<std::size_t>();
  std::vector<LatticePolyhedron> cells;
  for (const Json& cellJson : j.at("cells")) {
    RatMatrix vertices;
    const Json& vjson = cellJson.at("vertices");
    std::vector<Int> dens;
    if (cellJson.contains("denominators"))
      for (const Json& d : cellJson.at("denominators")) dens.push_back(json_to_int(d));
    std::size_t vi = 0;
    for (const Json& vrow : vjson) {
      RatVector v;
      for (const Json& x : vrow) v.push_back(json_to_rat(x));
      if (!dens.empty()) {
        const Int& d = dens.at(vi);
        if (d <= 0) throw std::invalid_argument("denominators must be positive");
        for (Rat& c : v) c /= Rat(d);
      }
      vertices.push_back(std::move(v));
      ++vi;
    }
    IntMatrix rays;
    if (cellJson.contains("rays"))
      for (const Json& rrow : cellJson.at("rays")) {
        IntVector r;
        for (const Json& x : rrow) r.push_back(json_to_int(x));
        rays.push_back(std::move(r));
      }
    cells.emplace_back(n, std::move(vertices), std::move(rays));
  }
  return {n, std::move(cells)};
}

Json subdivision_to_json(const Subdivision& s) {
  Json out;
  out["dim"] = s.ambient;
  out["cells"] = Json::array();
  for (const auto& cell : s.cells) {
    Json c;
    Json verts = Json::array();
    Json dens = Json::array();
    for (const RatVector& v : cell.vertices()) {
      Int lcm = 1;
      for (const Rat& x : v)
        lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
      Json row = Json::array();
      for (const Rat& x : v) row.push_back(int_to_json(boost::multiprecision::numerator(x * Rat(lcm))));
      verts.push_back(std::move(row));
      dens.push_back(int_to_json(lcm));
    }
    c["vertices"] = std::move(verts);
    c["denominators"] = std::move(dens);
    Json rays = Json::array();
    for (const IntVector& r : cell.rays()) {
      Json row = Json::array();
      for (const Int& x : r) row.push_back(int_to_json(x));
      rays.push_back(std::move(row));
    }
    c["rays"] = std::move(rays);
    out["cells"].push_back(std::move(c));
  }
  return out;
}

ViroInput viro_from_json(const Json& j) {
  ViroInput in;
  if (!j.is_object() || !j.contains("points"))
    throw std::invalid_argument("patchwork JSON needs \"points\"");
  for (const Json& prow : j.at("points")) {
    IntVector p;
    for (const Json& x : prow) p.push_back(json_to_int(x));
    in.points.push_back(std::move(p));
  }
  if (in.points.empty()) throw std::invalid_argument("no lattice points");
  in.n = in.points[0].size();
  if (j.contains("coeffs")) {
    for (const Json& c : j.at("coeffs")) in.coeffs.push_back(json_to_rat(c));
    for (const Rat& c : in.coeffs) in.signs.push_back(sign_of(c));
  }
  if (j.contains("signs")) {
    std::vector<Sign> given;
    for (const Json& sj : j.at("signs")) {
      const std::string s = sj.get<std::string>();
      if (s == "+")
        given.push_back(Sign::Plus);
      else if (s == "-")
        given.push_back(Sign::Minus);
      else
        throw std::invalid_argument("missing sign: signs must be \"+\" or \"-\"");
    }
    if (!in.signs.empty() && given != in.signs)
      throw std::invalid_argument("signs disagree with coefficient signs");
    in.signs = std::move(given);
  }
  if (in.signs.empty())
    throw std::invalid_argument("missing sign: provide \"signs\" or \"coeffs\"");
  if (j.contains("lifting"))
    for (const Json& x : j.at("lifting")) in.lifting.push_back(json_to_int(x));
  in.validate();
  return in;
}

Json viro_to_json(const ViroInput& in) {
  Json out;
  Json points = Json::array();
  for (const IntVector& p : in.points) {
    Json row = Json::array();
    for (const Int& x : p) row.push_back(int_to_json(x));
    points.push_back(std::move(row));
  }
  out["points"] = std::move(points);
  Json signs = Json::array();
  for (Sign s : in.signs) signs.push_back(s == Sign::Plus ? "+" : "-");
  out["signs"] = std::move(signs);
  if (!in.coeffs.empty()) {
    Json coeffs = Json::array();
    for (const Rat& c : in.coeffs) {
      if (boost::multiprecision::denominator(c) == 1)
        coeffs.push_back(int_to_json(boost::multiprecision::numerator(c)));
      else
        coeffs.push_back(boost::multiprecision::numerator(c).str() + "/" +
                         boost::multiprecision::denominator(c).str());
    }
    out["coeffs"] = std::move(coeffs);
  }
  Json lifting = Json::array();
  for (const Int& x : in.lifting) lifting.push_back(int_to_json(x));
  out["lifting"] = std::move(lifting);
  return out;
}

Json to_json(const ValidationReport& r) {
  Json out;
  out["unimodular"] = r.unimodular;
  out["strongly_unimodular"] = r.strongly_unimodular;
  Json offending = Json::array();
  for (const ValidationIssue& issue : r.offending_cones) {
    Json o;
    o["cone"] = issue.cone_id;
    o["reason"] = issue.reason;
    offending.push_back(std::move(o));
  }
  out["offending_cones"] = std::move(offending);
  Json mult = Json::array();
  for (std::size_t id = 0; id < r.multiplicities.size(); ++id) {
    Json m;
    m["cell"] = id;
    Json values = Json::array();
    for (const Int& a : r.multiplicities[id]) values.push_back(int_to_json(a));
    m["values"] = std::move(values);
    mult.push_back(std::move(m));
  }
  out["multiplicities"] = std::move(mult);
  return out;
}

Json to_json(const ChiSummary& c) {
  Json out;
  Json per = Json::object();
  for (const auto& [k, chi] : c.per_codim) per[std::to_string(k)] = int_to_json(chi);
  out["per_codim"] = std::move(per);
  out["chi_positive"] = int_to_json(c.chi_positive);
  out["chi_total"] = int_to_json(c.chi_total);
  out["chi_boundary"] = int_to_json(c.chi_boundary);
  return out;
}

Json to_json(const TopologyReport& t) {
  Json out;
  out["f_vector"] = t.f_vector;
  out["chi_direct"] = int_to_json(t.chi);
  Json comp;
  comp["count"] = t.component_count;
  comp["cells"] = t.component_of;
  out["components"] = std::move(comp);
  if (t.surface) {
    Json s;
    s["closed"] = t.surface->closed;
    if (t.surface->closed) {
      s["orientable"] = t.surface->orientable;
      s["classification"] = t.surface->classification;
      s["genus_or_crosscaps"] = t.surface->genus_or_crosscaps;
    }
    if (!t.surface->notes.empty()) s["notes"] = t.surface->notes;
    out["surface"] = std::move(s);
  } else {
    out["surface"] = nullptr;
  }
  return out;
}

Json to_json(const CurveReport& r) {
  Json out;
  out["components"] = r.components;
  out["chi"] = int_to_json(r.chi);
  out["closed_1_manifold"] = r.closed_1_manifold;
  Json b = Json::object();
  for (const auto& [facet, count] : r.boundary_incidences) b[std::to_string(facet)] = count;
  out["boundary_incidences"] = std::move(b);
  return out;
}

Json to_json(const OracleReport& r) {
  Json out;
  out["components"] = r.components;
  out["per_orthant_pieces"] = r.per_orthant_pieces;
  out["note"] = r.note;
  return out;
}

Json glued_cells_to_json(const GluedComplex& g) {
  Json out;
  out["dim"] = g.ambient;
  Json cells = Json::array();
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    Json c;
    c["id"] = i;
    c["sigma"] = g.cells[i].sigma;
    c["eps"] = g.cells[i].eps_hat.to_string();
    c["dim"] = g.cells[i].dim;
    cells.push_back(std::move(c));
  }
  out["cells"] = std::move(cells);
  Json pairs = Json::array();
  for (const auto& [lower, higher] : g.face_pairs) pairs.push_back(Json::array({lower, higher}));
  out["face_pairs"] = std::move(pairs);
  return out;
}

Json strata_table_to_json(const Subdivision& s, const std::vector<StratumRecord>& strata) {
  Json rows = Json::array();
  std::map<std::size_t, std::size_t> perCell;
  for (const StratumRecord& r : strata) perCell[r.cell]++;
  for (std::size_t id = 0; id < s.cells.size(); ++id) {
    Json row;
    row["cell"] = id;
    row["dim_sigma"] = s.cells[id].dim();
    row["k"] = codimension_k(s, id);
    row["num_strata"] = perCell[id];
    std::size_t qplus = 0;
    for (const StratumRecord& r : strata)
      if (r.cell == id) { qplus = r.Qplus.size(); break; }
    row["q_plus_size"] = qplus;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << text;
}

std::string schema_check(const Json& schema, const Json& value) {
  if (schema.contains("oneOf")) {
    for (const Json& option : schema.at("oneOf"))
      if (schema_check(option, value).empty()) return {};
    return "value matches no oneOf alternative: " + value.dump();
  }
  if (schema.contains("enum")) {
    for (const Json& e : schema.at("enum"))
      if (e == value) return {};
    return "value not in enum: " + value.dump();
  }
  if (schema.contains("type")) {
    const std::string type = schema.at("type").get<std::string>();
    const bool ok = (type == "object" && value.is_object()) ||
                    (type == "array" && value.is_array()) ||
                    (type == "string" && value.is_string()) ||
                    (type == "integer" && value.is_number_integer()) ||
                    (type == "number" && value.is_number()) ||
                    (type == "boolean" && value.is_boolean()) ||
                    (type == "null" && value.is_null());
    if (!ok) return "expected type " + type + ", got " + value.dump();
  }
  if (value.is_object() && schema.contains("required"))
    for (const Json& key : schema.at("required"))
      if (!value.contains(key.get<std::string>()))
        return "missing required key " + key.get<std::string>();
  if (value.is_object() && schema.contains("properties")) {
    for (const auto& [key, sub] : schema.at("properties").items()) {
      if (!value.contains(key)) continue;
      std::string err = schema_check(sub, value.at(key));
      if (!err.empty()) return "at ." + key + ": " + err;
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      std::string err = schema_check(schema.at("items"), value.at(i));
      if (!err.empty()) return "at [" + std::to_string(i) + "]: " + err;
    }
  }
  return {};
}

}  // namespace patchglue
