#include "hyperexp/companion.hpp"

#include "hyperexp/elem_sym.hpp"
#include "hyperexp/error.hpp"

namespace hyperexp {

CompanionMatrix::CompanionMatrix(const HyperSpec& spec, const Rational& eps)
    : p_(spec.p()), eps_(eps) {
    spec.validate();
    if (p_ < 1) throw_domain("companion matrix needs p >= 1");

    // annihilator: z prod_i (theta + U_i) - theta prod_k (theta + L_k - 1);
    // coefficient of theta^p is (z - 1)
    std::vector<Rational> U, Lm1;
    for (const auto& u : spec.upper) U.push_back(u.at(eps));
    for (const auto& l : spec.lower) Lm1.push_back(l.at(eps) - 1);
    const auto eu = elem_sym_all(U);    // P_0..P_p
    const auto el = elem_sym_all(Lm1);  // P_0..P_{p-1}

    const Polynomial z = Polynomial::variable();
    const Polynomial one_minus_z({Rational(1), Rational(-1)});
    top_.reserve(static_cast<std::size_t>(p_));
    for (int j = 0; j < p_; ++j) {
        Polynomial num = z * Polynomial(eu[static_cast<std::size_t>(p_ - j)]);
        if (j >= 1) num -= Polynomial(el[static_cast<std::size_t>(p_ - j)]);
        top_.push_back(RationalFunction(num, one_minus_z));
    }
}

const RationalFunction& CompanionMatrix::theta_top(int j) const {
    if (j < 0 || j >= p_) throw_domain("theta_top index out of range");
    return top_[static_cast<std::size_t>(j)];
}

RationalFunction CompanionMatrix::entry(int row, int col) const {
    if (row < 1 || row > p_ || col < 1 || col > p_) throw_domain("companion index out of range");
    if (row < p_) return RationalFunction(Rational(col == row + 1 ? 1 : 0));
    return top_[static_cast<std::size_t>(col - 1)];
}

std::vector<RationalFunction> CompanionMatrix::apply_theta(
    const std::vector<RationalFunction>& v) const {
    if (static_cast<int>(v.size()) != p_) throw_internal("coefficient vector has wrong length");
    const RationalFunction z = RationalFunction::variable();
    std::vector<RationalFunction> out(v.size());
    for (int j = 0; j < p_; ++j) {
        out[static_cast<std::size_t>(j)] = z * v[static_cast<std::size_t>(j)].derivative();
        if (j >= 1) out[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(j - 1)];
        out[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(p_ - 1)] * top_[static_cast<std::size_t>(j)];
    }
    return out;
}

std::vector<RationalFunction> CompanionMatrix::apply_theta_plus(
    const std::vector<RationalFunction>& v, const Rational& u) const {
    auto out = apply_theta(v);
    for (std::size_t j = 0; j < v.size(); ++j) out[j] += v[j] * RationalFunction(u);
    return out;
}

CompanionMatrix companion(const HyperSpec& spec, const Rational& at_eps) {
    return CompanionMatrix(spec, at_eps);
}

}  // namespace hyperexp
