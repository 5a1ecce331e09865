#pragma once

#include <vector>

#include "hyperexp/error.hpp"
#include "hyperexp/rational.hpp"

namespace hyperexp {

/// All elementary symmetric polynomials (P_0 .. P_p) of the given roots,
/// P_0 = one. Works over any commutative ring T given its unit element; these
/// are the coefficients of prod_k (x + r_k) read from x^p down to x^0.
template <class T>
std::vector<T> elem_sym_all(const std::vector<T>& roots, const T& one) {
    std::vector<T> e;
    e.reserve(roots.size() + 1);
    e.push_back(one);
    for (const T& r : roots) {
        e.push_back(e.back() * r);
        for (std::size_t j = e.size() - 2; j >= 1; --j) e[j] += r * e[j - 1];
    }
    return e;
}

inline std::vector<Rational> elem_sym_all(const std::vector<Rational>& roots) {
    std::vector<Rational> e(roots.size() + 1, Rational(0));
    e[0] = 1;
    std::size_t used = 0;
    for (const Rational& r : roots) {
        ++used;
        for (std::size_t j = used; j >= 1; --j) e[j] += r * e[j - 1];
    }
    return e;
}

/// The j-th elementary symmetric polynomial; j must lie in 0..roots.size().
inline Rational elem_sym(int j, const std::vector<Rational>& roots) {
    if (j < 0 || static_cast<std::size_t>(j) > roots.size())
        throw_domain("elementary symmetric index out of range");
    return elem_sym_all(roots)[static_cast<std::size_t>(j)];
}

/// Checks the merge identity for elementary symmetric polynomials,
///   P_{p+k-j}(r, q) = sum_n P_{p+k-j-n}(r) * P_n(q),  j = 1..p,
/// together with its single-append specialization, computing every value
/// independently through elem_sym. Indices outside a list's range contribute 0.
inline bool merge_check(const std::vector<Rational>& roots_r, const std::vector<Rational>& roots_q) {
    const int p = static_cast<int>(roots_r.size());
    const int k = static_cast<int>(roots_q.size());
    std::vector<Rational> merged = roots_r;
    merged.insert(merged.end(), roots_q.begin(), roots_q.end());
    const auto em = elem_sym_all(merged);
    const auto er = elem_sym_all(roots_r);
    const auto eq = elem_sym_all(roots_q);
    auto at = [](const std::vector<Rational>& e, int i) -> Rational {
        if (i < 0 || static_cast<std::size_t>(i) >= e.size()) return Rational(0);
        return e[static_cast<std::size_t>(i)];
    };
    for (int j = 1; j <= p; ++j) {
        Rational rhs(0);
        for (int n = 0; n <= k; ++n) rhs += at(er, p + k - j - n) * at(eq, n);
        if (at(em, p + k - j) != rhs) return false;
    }
    // single-append form: P^{(p+1)}_{p+1-j}(r, f) = P^{(p)}_{p+1-j}(r) + f P^{(p)}_{p-j}(r)
    for (const Rational& f : roots_q) {
        std::vector<Rational> one = roots_r;
        one.push_back(f);
        const auto e1 = elem_sym_all(one);
        for (int j = 1; j <= p; ++j)
            if (at(e1, p + 1 - j) != at(er, p + 1 - j) + f * at(er, p - j)) return false;
    }
    return true;
}

}  // namespace hyperexp
