#pragma once

#include <optional>
#include <string>

#include "hyperexp/polynomial.hpp"

namespace hyperexp {

/// Ratio of polynomials in one variable, kept canonical: gcd(num, den) = 1 and
/// den monic. The zero function is 0/1.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}   // NOLINT
    RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction derivative() const;
    RationalFunction pow(int e) const;

    /// Exact evaluation; nullopt at a pole.
    std::optional<Rational> eval(const Rational& x) const;
    double eval(double x) const;

    /// f(a x + b)
    RationalFunction compose_affine(const Rational& a, const Rational& b) const;
    /// f(g(x)) for rational g.
    RationalFunction compose(const RationalFunction& g) const;

    std::string to_string(const std::string& var = "z") const;

  private:
    void normalize();
    Polynomial num_, den_;
};

}  // namespace hyperexp
