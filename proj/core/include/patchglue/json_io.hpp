/**
 * JSON parsing and serialization for subdivisions, patchwork inputs and the
 * report types. Integers that fit below 2^53 are emitted as JSON numbers;
 * anything larger becomes a decimal string, and both forms are accepted on
 * input. Serialization uses insertion-ordered objects so identical inputs
 * produce byte-identical output.
 */

#ifndef PATCHGLUE_JSON_IO_HPP
#define PATCHGLUE_JSON_IO_HPP

#include "patchglue/degeneration.hpp"
#include "patchglue/glue.hpp"
#include "patchglue/patchwork.hpp"
#include "patchglue/polyhedra.hpp"
#include "patchglue/strata.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace patchglue {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& x);
Int json_to_int(const Json& j);

/// {"dim": n, "cells": [{"vertices": [[..]..], "denominators": [..],
/// "rays": [[..]..]}, ...]}; denominators and rays are optional.
std::pair<std::size_t, std::vector<LatticePolyhedron>> subdivision_from_json(const Json& j);
Json subdivision_to_json(const Subdivision& s);

/// {"points": [[i,j],..], "signs": ["+","-",..], "lifting": [..]} or
/// {"points": .., "coeffs": ["3/2",-1,..], "lifting": ..}; signs are
/// derived from coefficients when absent.
ViroInput viro_from_json(const Json& j);
Json viro_to_json(const ViroInput& in);

Json to_json(const ValidationReport& r);
Json to_json(const ChiSummary& c);
Json to_json(const TopologyReport& t);
Json to_json(const CurveReport& r);
Json to_json(const OracleReport& r);
Json glued_cells_to_json(const GluedComplex& g);
Json strata_table_to_json(const Subdivision& s, const std::vector<StratumRecord>& strata);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/**
 * Minimal structural validator for the schema subset shipped under
 * /schemas: type, properties, required, items, enum and oneOf. Returns an
 * empty string on success, otherwise the first violation found.
 */
std::string schema_check(const Json& schema, const Json& value);

}  // namespace patchglue

#endif  // PATCHGLUE_JSON_IO_HPP
