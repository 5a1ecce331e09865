#include "hyperexp/polynomial.hpp"

#include <sstream>

#include "hyperexp/error.hpp"

namespace hyperexp {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
    Polynomial p(Rational(1));
    for (const auto& r : roots) p *= Polynomial({-r, Rational(1)});
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
    if (c == 0) throw_domain("polynomial division by zero constant");
    for (auto& a : coeffs_) a /= c;
    return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw_domain("polynomial division by zero");
    Polynomial r = *this;
    Polynomial q;
    q.coeffs_.assign(r.coeffs_.size(), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rational c = r.leading() / d.leading();
        q.coeffs_[static_cast<std::size_t>(k)] = c;
        for (int i = 0; i <= d.degree(); ++i)
            r.coeffs_[static_cast<std::size_t>(i + k)] -= c * d.coeffs_[static_cast<std::size_t>(i)];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(Rational(1));
    Polynomial b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
    // Horner in (a x + b)
    Polynomial x{b, a};
    Polynomial acc;
    for (int i = degree(); i >= 0; --i) {
        acc *= x;
        acc += Polynomial(coeffs_[static_cast<std::size_t>(i)]);
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Polynomial r = *this;
    r /= leading();
    return r;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[static_cast<std::size_t>(i)];
    return acc;
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[static_cast<std::size_t>(i)].get_d();
    return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c == 0) continue;
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && i > 0;
        if (!unit) os << hyperexp::to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw_internal("inexact polynomial division");
    return q;
}

}  // namespace hyperexp
