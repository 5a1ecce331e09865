#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hyperexp/rational.hpp"

namespace hyperexp {

/// Dense univariate polynomial with exact rational coefficients,
/// coefficients[i] multiplying x^i. The top coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list).
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor): constants embed naturally
    Polynomial(long c) : Polynomial(Rational(c)) {}
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial variable();                                  // x
    static Polynomial monomial(const Rational& c, int degree);     // c x^degree
    static Polynomial from_roots(const std::vector<Rational>& r);  // prod (x - r_i)

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const Rational& coeff(int i) const;  // 0 outside the stored range
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator/=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division: *this = q * d + r with deg r < deg d. d nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

    Polynomial derivative() const;
    Polynomial pow(unsigned e) const;
    /// p(a x + b)
    Polynomial compose_affine(const Rational& a, const Rational& b) const;
    /// Leading coefficient scaled to 1.
    Polynomial monic() const;

    /// Horner evaluation over any ring constructible from Rational.
    template <class T>
    T eval(const T& x) const {
        if (coeffs_.empty()) return T(Rational(0));
        T acc(coeffs_.back());
        for (int i = degree() - 1; i >= 0; --i) acc = acc * x + T(coeffs_[static_cast<std::size_t>(i)]);
        return acc;
    }
    Rational eval(const Rational& x) const;
    double eval(double x) const;

    std::string to_string(const std::string& var = "z") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd via the Euclidean algorithm over Q (gcd(0,0) = 0).
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// q with a = q*b exactly; throws Error(internal) when the division leaves a
/// remainder.
Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b);

}  // namespace hyperexp
