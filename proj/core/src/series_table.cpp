#include "hyperexp/series_table.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "hyperexp/cli.hpp"
#include "hyperexp/error.hpp"

namespace hyperexp {

using nlohmann::json;

double EpsSeriesTable::get(int m, double z) const {
    auto it = entries.find(m);
    if (it == entries.end()) throw_domain("no such order in table");
    auto jt = it->second.find(z);
    if (jt == it->second.end()) throw_domain("no such z point in table");
    return jt->second;
}

bool EpsSeriesTable::has(int m, double z) const {
    auto it = entries.find(m);
    return it != entries.end() && it->second.count(z) > 0;
}

void EpsSeriesTable::validate() const {
    for (const auto& [m, row] : entries)
        for (const auto& [z, w] : row)
            if (!std::isfinite(z) || !std::isfinite(w))
                throw_internal("non-finite table entry at order " + std::to_string(m));
}

namespace {

json spec_to_json(const HyperSpec& spec) {
    json j;
    j["upper"] = json::array();
    j["lower"] = json::array();
    for (const auto& u : spec.upper) j["upper"].push_back(u.to_string());
    for (const auto& l : spec.lower) j["lower"].push_back(l.to_string());
    return j;
}

HyperSpec spec_from_json(const json& j) {
    HyperSpec s;
    for (const auto& u : j.at("upper")) s.upper.push_back(parse_param(u.get<std::string>()));
    for (const auto& l : j.at("lower")) s.lower.push_back(parse_param(l.get<std::string>()));
    return s;
}

}  // namespace

std::string table_to_json(const EpsSeriesTable& table) {
    json j;
    j["spec"] = spec_to_json(table.spec);
    j["provenance"] = table.provenance;
    j["orders"] = json::array();
    for (const auto& [m, row] : table.entries) {
        json o;
        o["m"] = m;
        o["values"] = json::array();
        for (const auto& [z, w] : row) {
            // doubles serialize losslessly (up to 17 significant digits)
            json v;
            v["z"] = z;
            v["w"] = w;
            o["values"].push_back(v);
        }
        j["orders"].push_back(o);
    }
    j["diagnostics"] = table.diagnostics;
    return j.dump(2);
}

EpsSeriesTable table_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw_parse(std::string("bad table JSON: ") + e.what());
    }
    EpsSeriesTable t;
    t.spec = spec_from_json(j.at("spec"));
    t.provenance = j.value("provenance", "");
    for (const auto& o : j.at("orders")) {
        int m = o.at("m").get<int>();
        t.orders = std::max(t.orders, m);
        for (const auto& v : o.at("values"))
            t.set(m, v.at("z").get<double>(), v.at("w").get<double>());
    }
    if (j.contains("diagnostics"))
        for (const auto& [k, v] : j.at("diagnostics").items())
            t.diagnostics[k] = v.get<std::string>();
    return t;
}

}  // namespace hyperexp
