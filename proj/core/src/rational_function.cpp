#include "hyperexp/rational_function.hpp"

#include "hyperexp/error.hpp"

namespace hyperexp {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw_domain("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_exact_div(num_, g);
        den_ = poly_exact_div(den_, g);
    }
    Rational lc = den_.leading();
    if (lc != 1) {
        num_ /= lc;
        den_ /= lc;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    if (den_.is_zero()) throw_internal("zero denominator after add");
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw_domain("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::derivative() const {
    // (n/d)' = (n'd - nd')/d^2
    Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
    return RationalFunction(n, den_ * den_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e == 0) return RationalFunction(Rational(1));
    if (e < 0) {
        if (is_zero()) throw_domain("0^negative rational function power");
        return RationalFunction(den_, num_).pow(-e);
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

std::optional<Rational> RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) return std::nullopt;
    return num_.eval(x) / d;
}

double RationalFunction::eval(double x) const { return num_.eval(x) / den_.eval(x); }

RationalFunction RationalFunction::compose_affine(const Rational& a, const Rational& b) const {
    return RationalFunction(num_.compose_affine(a, b), den_.compose_affine(a, b));
}

RationalFunction RationalFunction::compose(const RationalFunction& g) const {
    RationalFunction n = num_.eval(g);
    RationalFunction d = den_.eval(g);
    return n / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_ == Polynomial(Rational(1))) return num_.to_string(var);
    std::string n = num_.is_constant() || num_.coeffs().size() == 1 ? num_.to_string(var)
                                                                    : "(" + num_.to_string(var) + ")";
    return n + "/(" + den_.to_string(var) + ")";
}

}  // namespace hyperexp
