#include "hyperexp/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperexp/error.hpp"
#include "hyperexp/oracle.hpp"

namespace hyperexp {

ThetaRep ThetaRep::identity(const HyperSpec& base, const Rational& eps) {
    base.validate();
    ThetaRep rep;
    rep.base = base;
    rep.target = base;
    rep.eps = eps;
    rep.coeffs.assign(static_cast<std::size_t>(base.p()), RationalFunction());
    rep.coeffs[0] = RationalFunction(Rational(1));
    rep.normalizer = RationalFunction(Rational(1));
    return rep;
}

std::vector<RationalFunction> ThetaRep::x() const {
    std::vector<RationalFunction> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c / normalizer);
    return out;
}

void ThetaRep::normalize() {
    // D = monic lcm of all denominators; then strip the common polynomial factor
    Polynomial D(Rational(1));
    auto lcm_with = [&D](const Polynomial& q) {
        Polynomial g = poly_gcd(D, q);
        D = poly_exact_div(D * q, g).monic();
    };
    lcm_with(normalizer.den());
    for (const auto& c : coeffs) lcm_with(c.den());

    std::vector<Polynomial> R;
    R.reserve(coeffs.size() + 1);
    for (const auto& c : coeffs) R.push_back(c.num() * poly_exact_div(D, c.den()));
    Polynomial Dn = normalizer.num() * poly_exact_div(D, normalizer.den());

    Polynomial g = Dn;
    for (const auto& r : R) g = poly_gcd(g, r);
    if (g.degree() > 0) {
        Dn = poly_exact_div(Dn, g);
        for (auto& r : R) r = poly_exact_div(r, g);
    }
    // monic normalizer fixes the overall scale
    Rational lc = Dn.leading();
    if (lc == 0) throw_internal("vanishing normalizer");
    Dn /= lc;
    for (auto& r : R) r /= lc;

    normalizer = RationalFunction(Dn);
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = RationalFunction(R[k]);
}

std::string ThetaRep::to_string() const {
    std::ostringstream os;
    os << "normalizer: " << normalizer.to_string() << "\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        os << "R_" << (k + 1) << ": " << coeffs[k].to_string() << "\n";
    return os.str();
}

namespace {

ThetaRep make_rep(const ThetaRep& prev, HyperSpec target, std::vector<RationalFunction> x) {
    ThetaRep rep;
    rep.base = prev.base;
    rep.target = std::move(target);
    rep.eps = prev.eps;
    rep.coeffs = std::move(x);
    rep.normalizer = RationalFunction(Rational(1));
    rep.normalize();
    return rep;
}

// ----- undetermined-coefficients solve of (theta + u) Y = X ----------------

struct Ansatz {
    int alpha, beta, deg;
};

// exact Gaussian elimination; returns false when the system is inconsistent
bool solve_linear(std::vector<std::vector<Rational>>& M, std::vector<Rational>& rhs,
                  std::vector<Rational>& sol, std::size_t ncols) {
    const std::size_t nrows = M.size();
    std::vector<long> pivot_col_of_row(nrows, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t piv = row;
        while (piv < nrows && M[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(M[piv], M[row]);
        std::swap(rhs[piv], rhs[row]);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || M[r][col] == 0) continue;
            Rational q = M[r][col] / M[row][col];
            for (std::size_t cc = col; cc < ncols; ++cc) M[r][cc] -= q * M[row][cc];
            rhs[r] -= q * rhs[row];
        }
        pivot_col_of_row[row] = static_cast<long>(col);
        ++row;
    }
    for (std::size_t r = row; r < nrows; ++r)
        if (rhs[r] != 0) return false;  // inconsistent
    sol.assign(ncols, Rational(0));
    for (std::size_t r = 0; r < row; ++r) {
        long col = pivot_col_of_row[r];
        sol[static_cast<std::size_t>(col)] = rhs[r] / M[r][static_cast<std::size_t>(col)];
    }
    return true;
}

// Solve (theta + u) (Y . basis) = (X . basis) for a rational-function vector Y
// with ansatz Y_k = poly_k(z) / (z^alpha (1-z)^beta), escalating the ansatz as
// the spec's design allows. Returns empty on failure.
std::vector<RationalFunction> invert_theta_plus(const CompanionMatrix& M, const Rational& u,
                                                const std::vector<RationalFunction>& X) {
    const int p = M.p();
    const std::vector<Ansatz> ladder = {{1, 1, p}, {2, 2, p + 2}, {3, 3, 2 * p + 2}};
    const Polynomial z = Polynomial::variable();
    const Polynomial one_minus_z({Rational(1), Rational(-1)});

    for (const Ansatz& an : ladder) {
        // common clearing denominator: z^{alpha+1} (1-z)^{beta+2} covers the
        // derivative and the companion row
        Polynomial D = z.pow(static_cast<unsigned>(an.alpha + 1)) *
                       one_minus_z.pow(static_cast<unsigned>(an.beta + 2));
        RationalFunction den(Polynomial(Rational(1)),
                             z.pow(static_cast<unsigned>(an.alpha)) *
                                 one_minus_z.pow(static_cast<unsigned>(an.beta)));

        // cleared right side must be polynomial for this ansatz
        std::vector<Polynomial> rhs_poly(static_cast<std::size_t>(p));
        bool rhs_ok = true;
        int max_deg = 0;
        for (int j = 0; j < p && rhs_ok; ++j) {
            RationalFunction r = X[static_cast<std::size_t>(j)] * RationalFunction(D);
            if (r.den().degree() != 0) rhs_ok = false;
            else {
                rhs_poly[static_cast<std::size_t>(j)] = r.num() / r.den().coeff(0);
                max_deg = std::max(max_deg, rhs_poly[static_cast<std::size_t>(j)].degree());
            }
        }
        if (!rhs_ok) continue;

        // columns: unknown coefficient i of poly_k
        const int ncols_k = an.deg + 1;
        const std::size_t ncols = static_cast<std::size_t>(p * ncols_k);
        std::vector<std::vector<Polynomial>> col_poly(ncols,
                                                      std::vector<Polynomial>(static_cast<std::size_t>(p)));
        for (int k = 0; k < p; ++k) {
            for (int i = 0; i <= an.deg; ++i) {
                std::vector<RationalFunction> e(static_cast<std::size_t>(p));
                e[static_cast<std::size_t>(k)] = RationalFunction(z.pow(static_cast<unsigned>(i))) * den;
                auto img = M.apply_theta_plus(e, u);
                for (int j = 0; j < p; ++j) {
                    RationalFunction r = img[static_cast<std::size_t>(j)] * RationalFunction(D);
                    if (r.den().degree() != 0) throw_internal("ansatz denominator did not clear");
                    col_poly[static_cast<std::size_t>(k * ncols_k + i)][static_cast<std::size_t>(j)] =
                        r.num() / r.den().coeff(0);
                    max_deg = std::max(max_deg, r.num().degree());
                }
            }
        }

        // one equation per (component j, power t)
        const std::size_t nrows = static_cast<std::size_t>(p) * static_cast<std::size_t>(max_deg + 1);
        std::vector<std::vector<Rational>> A(nrows, std::vector<Rational>(ncols, Rational(0)));
        std::vector<Rational> b(nrows, Rational(0));
        for (int j = 0; j < p; ++j)
            for (int t = 0; t <= max_deg; ++t) {
                std::size_t r = static_cast<std::size_t>(j) * static_cast<std::size_t>(max_deg + 1) +
                                static_cast<std::size_t>(t);
                for (std::size_t cidx = 0; cidx < ncols; ++cidx)
                    A[r][cidx] = col_poly[cidx][static_cast<std::size_t>(j)].coeff(t);
                b[r] = rhs_poly[static_cast<std::size_t>(j)].coeff(t);
            }

        std::vector<Rational> sol;
        if (!solve_linear(A, b, sol, ncols)) continue;

        std::vector<RationalFunction> Y(static_cast<std::size_t>(p));
        for (int k = 0; k < p; ++k) {
            std::vector<Rational> pc(static_cast<std::size_t>(an.deg) + 1);
            for (int i = 0; i <= an.deg; ++i)
                pc[static_cast<std::size_t>(i)] = sol[static_cast<std::size_t>(k * ncols_k + i)];
            Y[static_cast<std::size_t>(k)] = RationalFunction(Polynomial(std::move(pc))) * den;
        }
        // exact verification of the solve
        auto check = M.apply_theta_plus(Y, u);
        bool ok = true;
        for (int j = 0; j < p; ++j)
            if (!(check[static_cast<std::size_t>(j)] == X[static_cast<std::size_t>(j)])) ok = false;
        if (ok) return Y;
    }
    return {};
}

}  // namespace

ThetaRep step(const ThetaRep& rep, ParamSide side, int index, int direction) {
    if (direction != 1 && direction != -1) throw_domain("step direction must be +1 or -1");
    const auto& params = (side == ParamSide::upper) ? rep.target.upper : rep.target.lower;
    if (index < 0 || index >= static_cast<int>(params.size()))
        throw_domain("parameter index out of range");

    const CompanionMatrix M(rep.base, rep.eps);
    const EpsParam par = params[static_cast<std::size_t>(index)];
    const Rational val = par.at(rep.eps);
    const auto xv = rep.x();

    HyperSpec new_target = rep.target;
    auto& new_params = (side == ParamSide::upper) ? new_target.upper : new_target.lower;
    new_params[static_cast<std::size_t>(index)].fixed += direction;

    if (side == ParamSide::upper && direction == +1) {
        // (theta + U) F(U) = U F(U+1)
        if (val == 0)
            throw_domain("contiguous operator singular: upper parameter vanishes at this eps");
        auto y = M.apply_theta_plus(xv, val);
        for (auto& c : y) c /= RationalFunction(val);
        return make_rep(rep, std::move(new_target), std::move(y));
    }
    if (side == ParamSide::lower && direction == -1) {
        // (theta + L - 1) F(L) = (L-1) F(L-1)
        if (val == 1)
            throw_domain("contiguous operator singular: lower parameter equals 1 at this eps");
        auto y = M.apply_theta_plus(xv, val - 1);
        for (auto& c : y) c /= RationalFunction(val - 1);
        return make_rep(rep, std::move(new_target), std::move(y));
    }
    if (side == ParamSide::upper && direction == -1) {
        // F(U-1) = (U-1) (theta + U - 1)^{-1} F(U)
        const Rational u = val - 1;
        if (u == 0)
            throw_domain("contiguous operator singular: shifted upper parameter vanishes at this eps");
        auto y = invert_theta_plus(M, u, xv);
        if (y.empty())
            throw_tolerance("undetermined-coefficients solve failed for lowering an upper "
                            "parameter (ansatz ladder exhausted)");
        for (auto& c : y) c *= RationalFunction(u);
        return make_rep(rep, std::move(new_target), std::move(y));
    }
    // lower side, direction +1: F(L+1) = L (theta + L)^{-1} F(L)
    if (val == 0)
        throw_domain("contiguous operator singular: lower parameter vanishes at this eps");
    auto y = invert_theta_plus(M, val, xv);
    if (y.empty())
        throw_tolerance("undetermined-coefficients solve failed for raising a lower parameter "
                        "(ansatz ladder exhausted)");
    for (auto& c : y) c *= RationalFunction(val);
    return make_rep(rep, std::move(new_target), std::move(y));
}

ThetaRep reduce(const HyperSpec& target, const HyperSpec& base, const Rational& eps) {
    target.validate();
    base.validate();
    if (target.p() != base.p()) throw_domain("target and base must share p");

    auto integer_shift = [](const EpsParam& t, const EpsParam& b) {
        if (t.slope != b.slope) throw_domain("target and base must share slopes");
        Rational d = t.fixed - b.fixed;
        if (!is_integer(d)) throw_domain("parameters must differ by integers");
        return to_long(d);
    };
    std::vector<long> du, dl;
    for (std::size_t i = 0; i < base.upper.size(); ++i)
        du.push_back(integer_shift(target.upper[i], base.upper[i]));
    for (std::size_t i = 0; i < base.lower.size(); ++i)
        dl.push_back(integer_shift(target.lower[i], base.lower[i]));

    ThetaRep rep = ThetaRep::identity(base, eps);
    // raises first (uppers then lowers, left to right), then lowers
    for (std::size_t i = 0; i < du.size(); ++i)
        for (long s = 0; s < du[static_cast<std::size_t>(i)]; ++s)
            rep = step(rep, ParamSide::upper, static_cast<int>(i), +1);
    for (std::size_t i = 0; i < dl.size(); ++i)
        for (long s = 0; s < dl[static_cast<std::size_t>(i)]; ++s)
            rep = step(rep, ParamSide::lower, static_cast<int>(i), +1);
    for (std::size_t i = 0; i < du.size(); ++i)
        for (long s = 0; s > du[static_cast<std::size_t>(i)]; --s)
            rep = step(rep, ParamSide::upper, static_cast<int>(i), -1);
    for (std::size_t i = 0; i < dl.size(); ++i)
        for (long s = 0; s > dl[static_cast<std::size_t>(i)]; --s)
            rep = step(rep, ParamSide::lower, static_cast<int>(i), -1);
    return rep;
}

double verify_rep(const ThetaRep& rep, const HyperSpec& target, double z, const Rational& eps,
                  int N) {
    if (!(std::abs(z) < 1.0)) throw_domain("verify_rep needs |z| < 1");
    const HyperSpec target_eval = target.at(eps);
    const HyperSpec base_eval = rep.base.at(eps);
    const int p = rep.p();

    const auto lhs = hyper_eps_coeffs(target_eval, z, N);
    std::vector<std::vector<double>> theta_base;
    theta_base.reserve(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) theta_base.push_back(theta_hyper_eps_coeffs(base_eval, k, z, N));

    const auto xv = rep.x();
    double worst = 0.0;
    for (int m = 0; m <= N; ++m) {
        double rhs = 0.0;
        for (int k = 0; k < p; ++k)
            rhs += xv[static_cast<std::size_t>(k)].eval(z) * theta_base[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
        worst = std::max(worst, std::abs(lhs[static_cast<std::size_t>(m)] - rhs));
    }
    return worst;
}

bool poles_within_singular_locus(const ThetaRep& rep) {
    const Polynomial z = Polynomial::variable();
    const Polynomial zm1({Rational(-1), Rational(1)});
    auto check = [&](const RationalFunction& f) {
        Polynomial d = f.den();
        auto strip = [&d](const Polynomial& fac) {
            while (d.degree() > 0) {
                auto [q, r] = d.divmod(fac);
                if (!r.is_zero()) break;
                d = q;
            }
        };
        strip(z);
        strip(zm1);
        return d.degree() == 0;
    };
    for (const auto& xk : rep.x())
        if (!check(xk)) return false;
    return true;
}

}  // namespace hyperexp
