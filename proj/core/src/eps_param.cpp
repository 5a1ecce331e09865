#include "hyperexp/eps_param.hpp"

#include <sstream>

#include "hyperexp/error.hpp"

namespace hyperexp {

std::string EpsParam::to_string() const {
    std::string s = hyperexp::to_string(fixed);
    if (slope != 0) {
        if (slope > 0) s += "+" + hyperexp::to_string(slope) + "e";
        else s += "-" + hyperexp::to_string(Rational(-slope)) + "e";
    }
    return s;
}

void HyperSpec::validate() const {
    if (upper.empty()) throw_domain("hypergeometric spec needs at least one upper parameter");
    if (upper.size() != lower.size() + 1)
        throw_domain("hypergeometric spec needs exactly one more upper than lower parameter");
    for (const auto& b : lower)
        if (!b.deformed() && is_nonpositive_integer(b.fixed))
            throw_domain("lower parameter " + b.to_string() + " is a nonpositive integer");
}

HyperSpec HyperSpec::at(const Rational& eps) const {
    HyperSpec out;
    out.upper.reserve(upper.size());
    out.lower.reserve(lower.size());
    for (const auto& u : upper) out.upper.emplace_back(u.at(eps), Rational(0));
    for (const auto& l : lower) out.lower.emplace_back(l.at(eps), Rational(0));
    return out;
}

bool HyperSpec::deformed() const {
    for (const auto& u : upper)
        if (u.deformed()) return true;
    for (const auto& l : lower)
        if (l.deformed()) return true;
    return false;
}

std::string HyperSpec::to_string() const {
    std::ostringstream os;
    os << p() << "F" << (p() - 1) << "(";
    for (std::size_t i = 0; i < upper.size(); ++i) os << (i ? "," : "") << upper[i].to_string();
    os << ";";
    for (std::size_t i = 0; i < lower.size(); ++i) os << (i ? "," : "") << lower[i].to_string();
    os << ")";
    return os.str();
}

void BaseSpec::validate() const {
    if (p < 2) throw_domain("base spec needs p >= 2");
    if (a_slopes.size() != static_cast<std::size_t>(p - 1) ||
        b_slopes.size() != static_cast<std::size_t>(p - 2))
        throw_domain("base spec slope lists have wrong length");
    if (is_nonpositive_integer(B)) throw_domain("base spec B must not be a nonpositive integer");
}

HyperSpec BaseSpec::to_hyper_spec() const {
    HyperSpec s;
    for (const auto& a : a_slopes) s.upper.emplace_back(Rational(0), a);
    s.upper.emplace_back(A, c);
    for (const auto& b : b_slopes) s.lower.emplace_back(Rational(1), b);
    s.lower.emplace_back(B, f);
    return s;
}

std::string BaseSpec::to_string() const { return to_hyper_spec().to_string(); }

std::optional<BaseSpec> to_base_spec(const HyperSpec& spec) {
    spec.validate();
    if (spec.p() < 2) return std::nullopt;
    BaseSpec base;
    base.p = spec.p();

    int a_fixed_slot = -1;
    for (std::size_t i = 0; i < spec.upper.size(); ++i) {
        if (spec.upper[i].fixed != 0) {
            if (a_fixed_slot >= 0) return std::nullopt;  // two non-eps upper parameters
            a_fixed_slot = static_cast<int>(i);
        }
    }
    if (a_fixed_slot < 0) a_fixed_slot = spec.p() - 1;  // pure-eps uppers: A = 0
    base.A = spec.upper[static_cast<std::size_t>(a_fixed_slot)].fixed;
    base.c = spec.upper[static_cast<std::size_t>(a_fixed_slot)].slope;
    for (std::size_t i = 0; i < spec.upper.size(); ++i)
        if (static_cast<int>(i) != a_fixed_slot) base.a_slopes.push_back(spec.upper[i].slope);

    int b_slot = -1;
    for (std::size_t i = 0; i < spec.lower.size(); ++i) {
        if (spec.lower[i].fixed != 1) {
            if (b_slot >= 0) return std::nullopt;
            b_slot = static_cast<int>(i);
        }
    }
    if (b_slot < 0) b_slot = spec.p() - 2;  // all lower fixed parts 1
    base.B = spec.lower[static_cast<std::size_t>(b_slot)].fixed;
    base.f = spec.lower[static_cast<std::size_t>(b_slot)].slope;
    for (std::size_t i = 0; i < spec.lower.size(); ++i)
        if (static_cast<int>(i) != b_slot) base.b_slopes.push_back(spec.lower[i].slope);

    if (is_nonpositive_integer(base.B)) return std::nullopt;
    return base;
}

}  // namespace hyperexp
