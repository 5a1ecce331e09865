#include "hyperexp/eps_poly.hpp"

#include <sstream>

#include "hyperexp/error.hpp"

namespace hyperexp {

namespace {
const Rational kZero(0);
}

EpsPoly::EpsPoly(int order) : order_(order) {
    if (order < 0) throw_domain("negative truncation order");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

EpsPoly::EpsPoly(int order, const Rational& constant) : EpsPoly(order) { c_[0] = constant; }

EpsPoly EpsPoly::linear(int order, const Rational& fixed, const Rational& slope) {
    EpsPoly p(order, fixed);
    if (order >= 1) p.c_[1] = slope;
    return p;
}

const Rational& EpsPoly::coeff(int m) const {
    if (m < 0 || m > order_) return kZero;
    return c_[static_cast<std::size_t>(m)];
}

void EpsPoly::set_coeff(int m, const Rational& v) {
    if (m < 0 || m > order_) throw_domain("eps coefficient index out of range");
    c_[static_cast<std::size_t>(m)] = v;
}

bool EpsPoly::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

EpsPoly EpsPoly::operator-() const {
    EpsPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& o) {
    if (o.order_ != order_) throw_internal("mixed truncation orders");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& o) {
    if (o.order_ != order_) throw_internal("mixed truncation orders");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

EpsPoly& EpsPoly::operator*=(const EpsPoly& o) {
    if (o.order_ != order_) throw_internal("mixed truncation orders");
    std::vector<Rational> out(c_.size(), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            out[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(out);
    return *this;
}

EpsPoly& EpsPoly::operator*=(const Rational& k) {
    for (auto& x : c_) x *= k;
    return *this;
}

std::string EpsPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int m = 0; m <= order_; ++m) {
        if (coeff(m) == 0) continue;
        if (!first) os << " + ";
        os << hyperexp::to_string(coeff(m));
        if (m >= 1) os << "*eps" << (m > 1 ? "^" + std::to_string(m) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

EpsPoly eps_inverse(const EpsPoly& p) {
    if (p.coeff(0) == 0)
        throw_domain("non-invertible truncated series: zero constant term "
                     "(lower parameter hits a nonpositive integer)");
    const int n = p.order();
    EpsPoly inv(n);
    Rational a0 = p.coeff(0);
    inv.set_coeff(0, Rational(1) / a0);
    for (int m = 1; m <= n; ++m) {
        Rational s(0);
        for (int i = 1; i <= m; ++i) s += p.coeff(i) * inv.coeff(m - i);
        inv.set_coeff(m, -s / a0);
    }
    return inv;
}

}  // namespace hyperexp
