#include "motivic/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "motivic/parser.hpp"

namespace motivic {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key, const char* where) {
    auto it = doc.find(key);
    if (it == doc.end())
        throw ModelError(std::string(where) + ": missing field '" + key + "'");
    return *it;
}

long long require_int(const json& doc, const char* key, const char* where) {
    const json& v = require(doc, key, where);
    if (!v.is_number_integer())
        throw ModelError(std::string(where) + ": field '" + key + "' must be an integer");
    return v.get<long long>();
}

std::string require_string(const json& doc, const char* key, const char* where) {
    const json& v = require(doc, key, where);
    if (!v.is_string())
        throw ModelError(std::string(where) + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

} // namespace

AtomTable load_atom_table(const nlohmann::json& doc) {
    AtomTable table;
    if (!doc.is_object()) throw ModelError("atom table: document must be an object");
    if (doc.contains("atoms")) {
        for (const auto& entry : doc.at("atoms")) {
            Atom a;
            a.name = require_string(entry, "name", "atom");
            a.euler = require_int(entry, "euler", "atom");
            a.mu_order = entry.value("mu_order", 1);
            if (entry.contains("poincare"))
                a.poincare = parse_laurent(entry.at("poincare").get<std::string>());
            if (entry.contains("dim")) a.dim = entry.at("dim").get<int>();
            table.add_atom(std::move(a));
        }
    }
    if (doc.contains("bundles")) {
        for (const auto& entry : doc.at("bundles")) {
            BundleGenerator g;
            g.name = require_string(entry, "name", "bundle");
            g.euler_sign = static_cast<int>(entry.value("euler_sign", 1));
            table.add_bundle(std::move(g));
        }
    }
    return table;
}

SncModel load_snc_model(const nlohmann::json& doc, const AtomTable& table) {
    if (!doc.is_object()) throw ModelError("snc model: document must be an object");
    SncModel model;
    model.reldim = require_int(doc, "reldim", "snc model");
    for (const auto& entry : require(doc, "components", "snc model")) {
        SncComponent c;
        c.id = require_string(entry, "id", "component");
        c.mult = require_int(entry, "N", "component");
        c.omega_order = entry.value("mu", 0LL);
        model.components.push_back(std::move(c));
    }
    if (doc.contains("strata")) {
        for (const auto& entry : doc.at("strata")) {
            std::vector<std::string> subset;
            for (const auto& id : require(entry, "J", "stratum")) subset.push_back(id.get<std::string>());
            std::sort(subset.begin(), subset.end());
            MotivicClass cls = parse(require_string(entry, "class", "stratum"), table);
            if (!model.strata.emplace(std::move(subset), std::move(cls)).second)
                throw ModelError("duplicate stratum subset");
        }
    }
    if (doc.contains("ambient")) {
        const json& amb = doc.at("ambient");
        SncAmbient a;
        a.cls = parse(require_string(amb, "expr", "ambient"), table);
        a.dim_u = require_int(amb, "dimU", "ambient");
        model.ambient = std::move(a);
    }
    validate(model);
    return model;
}

std::vector<FixedStratum> load_strata(const nlohmann::json& doc, const AtomTable& table) {
    if (!doc.is_array()) throw ModelError("strata: document must be an array");
    std::vector<FixedStratum> out;
    for (const auto& entry : doc) {
        FixedStratum s;
        s.name = require_string(entry, "name", "stratum");
        s.index = require_int(entry, "index", "stratum");
        s.motive = parse(require_string(entry, "motive", "stratum"), table);
        out.push_back(std::move(s));
    }
    return out;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ModelError("invalid JSON in '" + path + "': " + e.what());
    }
}

AtomTable load_atom_table_file(const std::string& path) {
    return load_atom_table(read_json_file(path));
}

SncModel load_snc_model_file(const std::string& path, const AtomTable& table) {
    return load_snc_model(read_json_file(path), table);
}

std::vector<FixedStratum> load_strata_file(const std::string& path, const AtomTable& table) {
    return load_strata(read_json_file(path), table);
}

} // namespace motivic
