#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gds/abscissa.hpp"
#include "gds/characters.hpp"
#include "gds/frequency.hpp"
#include "gds/lattice.hpp"
#include "gds/polynomial.hpp"

namespace gds {

/// Shortest round-trip decimal, "%.12g"; used for every CSV number so that
/// equal seeds give byte-identical files.
std::string format_num(double x);

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows);

/// Frequency spec: {"family": "...", "N": ...} for built-ins, or
/// {"symbols": [{"name","value"}...], "rows": [["p/q",...],...]} explicit.
/// Rationals are "p/q" strings, rows are 1-based in file order.
FrequencyPtr frequency_from_json(const nlohmann::json& j);
nlohmann::json frequency_to_json(const Frequency& freq);

/// Series spec: {"frequency": <frequency spec>, "terms":[{"n","re","im"}]}
/// with 1-based n.
DirichletPolynomial series_from_json(const nlohmann::json& j);
nlohmann::json series_to_json(const DirichletPolynomial& d);

nlohmann::json decomposition_to_json(const BohrDecomposition& dec);
nlohmann::json lattice_to_json(const FrequencyLattice& lat);
nlohmann::json character_to_json(const Character& chi);

/// Coefficient rule spec: {"kind": "constant|exp_decay|alternating|table",
/// "c": ..., "table":[{"re","im"}...]}.
CoefficientRule rule_from_json(const nlohmann::json& j, FrequencyPtr freq);

nlohmann::json load_json_file(const std::string& path);

}  // namespace gds
