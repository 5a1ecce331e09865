#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperexp/rational.hpp"

namespace hyperexp {

/// One parameter of the form fixed + slope * eps.
struct EpsParam {
    Rational fixed{0};
    Rational slope{0};

    EpsParam() = default;
    EpsParam(Rational f, Rational s) : fixed(std::move(f)), slope(std::move(s)) {}

    Rational at(const Rational& eps) const { return fixed + slope * eps; }
    bool deformed() const { return slope != 0; }

    friend bool operator==(const EpsParam& a, const EpsParam& b) {
        return a.fixed == b.fixed && a.slope == b.slope;
    }

    /// "1/2", "0+1e", "1-1/3e" -- round-trips through parse_param.
    std::string to_string() const;
};

/// Full parameter set of a pFq with q = p-1: p upper and p-1 lower parameters.
struct HyperSpec {
    std::vector<EpsParam> upper;
    std::vector<EpsParam> lower;

    int p() const { return static_cast<int>(upper.size()); }

    /// Throws Error(domain) unless length(upper) = length(lower)+1, p >= 1 and
    /// no lower parameter is a nonpositive integer with zero slope.
    void validate() const;

    /// Same parameter set with eps substituted: fixed parts absorb slope*eps,
    /// slopes become zero.
    HyperSpec at(const Rational& eps) const;

    bool deformed() const;

    friend bool operator==(const HyperSpec& a, const HyperSpec& b) {
        return a.upper == b.upper && a.lower == b.lower;
    }

    std::string to_string() const;
};

/// The engine's base form  pF_{p-1}(a1 eps,...,a_{p-1} eps, A + c eps;
/// 1 + b1 eps,..., 1 + b_{p-2} eps, B + f eps; z).
struct BaseSpec {
    int p = 2;
    std::vector<Rational> a_slopes;  // length p-1
    Rational A{0};
    Rational c{0};
    std::vector<Rational> b_slopes;  // length p-2
    Rational B{1};
    Rational f{0};

    void validate() const;
    HyperSpec to_hyper_spec() const;
    std::string to_string() const;
};

/// Recognizes a HyperSpec already in base form (at most one upper with nonzero
/// fixed part, lower fixed parts all 1 except at most one). Returns nullopt
/// otherwise.
std::optional<BaseSpec> to_base_spec(const HyperSpec& spec);

}  // namespace hyperexp
