#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "motivic/localization.hpp"
#include "motivic/ring.hpp"
#include "motivic/snc.hpp"

namespace motivic {

// {"atoms":[{"name","euler","mu_order"?,"poincare"?,"dim"?}],
//  "bundles":[{"name","euler_sign"?}]}
// Entries extend the built-in table; redefining a built-in name is an error.
AtomTable load_atom_table(const nlohmann::json& doc);
AtomTable load_atom_table_file(const std::string& path);

// {"reldim":d, "ambient":{"expr","dimU"}?, "components":[{"id","N","mu"?}],
//  "strata":[{"J":["id",...], "class":"<expression>"}]}
SncModel load_snc_model(const nlohmann::json& doc, const AtomTable& table);
SncModel load_snc_model_file(const std::string& path, const AtomTable& table);

// [{"name","index","motive":"<expression>"}]
std::vector<FixedStratum> load_strata(const nlohmann::json& doc, const AtomTable& table);
std::vector<FixedStratum> load_strata_file(const std::string& path, const AtomTable& table);

nlohmann::json read_json_file(const std::string& path);

} // namespace motivic
