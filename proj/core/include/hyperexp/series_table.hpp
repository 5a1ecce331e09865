#pragma once

#include <map>
#include <string>

#include "hyperexp/eps_param.hpp"

namespace hyperexp {

/// Table of expansion coefficients w_m evaluated at a set of z points,
/// tagged with the route that produced it.
struct EpsSeriesTable {
    HyperSpec spec;
    int orders = 0;                          ///< highest order m stored
    std::string provenance;                  ///< "oracle", "ode" or "hyperlog"
    std::map<int, std::map<double, double>> entries;  ///< m -> (z -> w_m(z))
    std::map<std::string, std::string> diagnostics;

    void set(int m, double z, double w) { entries[m][z] = w; }
    double get(int m, double z) const;
    bool has(int m, double z) const;

    /// Checks that every stored value is finite.
    void validate() const;

    friend bool operator==(const EpsSeriesTable& a, const EpsSeriesTable& b) {
        return a.spec == b.spec && a.orders == b.orders && a.provenance == b.provenance &&
               a.entries == b.entries && a.diagnostics == b.diagnostics;
    }
};

/// JSON round-trip:
///   {"spec": {"upper": [...], "lower": [...]},
///    "orders": [{"m": 0, "values": [{"z": 0.5, "w": 1.0}, ...]}, ...],
///    "provenance": "...", "diagnostics": {...}}
/// Numbers carry 17 significant digits, so parse(emit(t)) == t.
std::string table_to_json(const EpsSeriesTable& table);
EpsSeriesTable table_from_json(const std::string& text);

}  // namespace hyperexp
