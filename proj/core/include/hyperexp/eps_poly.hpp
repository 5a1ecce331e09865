#pragma once

#include <string>
#include <vector>

#include "hyperexp/rational.hpp"

namespace hyperexp {

/// Polynomial in the expansion parameter, truncated at a fixed order N: all
/// arithmetic drops terms beyond eps^N exactly. Coefficients are exact
/// rationals.
class EpsPoly {
  public:
    explicit EpsPoly(int order);                       // zero at the given truncation order
    EpsPoly(int order, const Rational& constant);      // constant term only
    static EpsPoly linear(int order, const Rational& fixed, const Rational& slope);  // fixed + slope*eps

    int order() const { return order_; }
    const Rational& coeff(int m) const;  // 0 outside 0..N
    void set_coeff(int m, const Rational& v);
    bool is_zero() const;

    EpsPoly operator-() const;
    EpsPoly& operator+=(const EpsPoly& o);
    EpsPoly& operator-=(const EpsPoly& o);
    EpsPoly& operator*=(const EpsPoly& o);
    EpsPoly& operator*=(const Rational& c);

    friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
    friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
    friend EpsPoly operator*(EpsPoly a, const EpsPoly& b) { return a *= b; }
    friend EpsPoly operator*(EpsPoly a, const Rational& c) { return a *= c; }
    friend EpsPoly operator*(const Rational& c, EpsPoly a) { return a *= c; }
    friend bool operator==(const EpsPoly& a, const EpsPoly& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    std::string to_string() const;

  private:
    int order_ = 0;
    std::vector<Rational> c_;  // size order_+1
};

/// Multiplicative inverse modulo eps^{N+1}: p * eps_inverse(p) = 1 + O(eps^{N+1})
/// exactly. Throws Error(domain) when the constant term vanishes (a lower
/// parameter hit a nonpositive integer).
EpsPoly eps_inverse(const EpsPoly& p);

}  // namespace hyperexp
