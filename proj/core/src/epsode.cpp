#include "hyperexp/epsode.hpp"

#include <algorithm>
#include <cmath>

#include "hyperexp/elem_sym.hpp"
#include "hyperexp/eps_poly.hpp"
#include "hyperexp/error.hpp"

namespace hyperexp {

double h_factor(const Rational& A, const Rational& B, double z) {
    if (!(z > 0.0 && z < 1.0)) throw_domain("h factor defined on 0 < z < 1");
    return std::pow(z, 1.0 - to_double(B)) * std::pow(1.0 - z, to_double(B) - to_double(A) - 1.0);
}

FirstOrder first_order(const BaseSpec& spec) {
    spec.validate();
    FirstOrder fo;
    fo.m0 = (spec.A == 0) ? spec.p : spec.p - 1;
    Rational prod(1);
    for (const auto& a : spec.a_slopes) prod *= a;
    fo.source = (spec.A + ((spec.A == 0) ? spec.c : Rational(0))) * prod;
    return fo;
}

SpecCoeffs spec_coeffs(const BaseSpec& spec) {
    spec.validate();
    const int p = spec.p;
    const int N = p;  // eps degree of the elementary symmetric polynomials

    std::vector<EpsPoly> upper;
    for (const auto& a : spec.a_slopes) upper.push_back(EpsPoly::linear(N, Rational(0), a));
    upper.push_back(EpsPoly::linear(N, spec.A, spec.c));

    std::vector<EpsPoly> lower;  // the operator carries theta * prod(theta + L_k - 1)
    for (const auto& b : spec.b_slopes) lower.push_back(EpsPoly::linear(N, Rational(0), b));
    lower.push_back(EpsPoly::linear(N, spec.B - 1, spec.f));

    const EpsPoly one(N, Rational(1));
    const auto eu = elem_sym_all(upper, one);  // P_0 .. P_p of the upper list
    const auto el = elem_sym_all(lower, one);  // P_0 .. P_{p-1} of the shifted lower list

    SpecCoeffs sc;
    sc.up.assign(static_cast<std::size_t>(p) + 1, std::vector<Rational>(static_cast<std::size_t>(p) + 1, Rational(0)));
    sc.lo.assign(static_cast<std::size_t>(p), std::vector<Rational>(static_cast<std::size_t>(p) + 1, Rational(0)));
    for (int i = 0; i <= p; ++i)
        for (int n = 0; n <= p; ++n) sc.up[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = eu[static_cast<std::size_t>(p - i)].coeff(n);
    for (int i = 0; i <= p - 1; ++i)
        for (int n = 0; n <= p; ++n) sc.lo[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = el[static_cast<std::size_t>(p - 1 - i)].coeff(n);
    return sc;
}

// ---------------------------------------------------------------------------
// OrderState

OrderState::OrderState(const BaseSpec& spec, double zmax) : spec_(spec), zmax_(zmax) {
    spec_.validate();
    if (!(zmax > 0.0 && zmax < 1.0)) throw_domain("state domain must lie inside (0,1)");
    std::vector<Stored> order0(static_cast<std::size_t>(spec.p));
    order0[0].kind = Stored::Kind::one;
    funcs_.push_back(std::move(order0));
}

void OrderState::push_order(std::vector<Stored> funcs) { funcs_.push_back(std::move(funcs)); }

const OrderState::Stored& OrderState::at(int order, int theta_power) const {
    if (order < 0 || order > max_order() || theta_power < 0 || theta_power >= spec_.p)
        throw_internal("order state index out of range");
    return funcs_[static_cast<std::size_t>(order)][static_cast<std::size_t>(theta_power)];
}

double OrderState::value(int order, int theta_power, double z) const {
    const Stored& s = at(order, theta_power);
    switch (s.kind) {
        case Stored::Kind::zero: return 0.0;
        case Stored::Kind::one: return 1.0;
        case Stored::Kind::panel: return s.f(z);
        case Stored::Kind::t_times_panel: return z * s.f(z);
    }
    return 0.0;
}

double OrderState::value_over_z(int order, int theta_power, double z) const {
    const Stored& s = at(order, theta_power);
    switch (s.kind) {
        case Stored::Kind::zero: return 0.0;
        case Stored::Kind::one: return 1.0 / z;
        case Stored::Kind::panel: return s.f(z) / z;
        case Stored::Kind::t_times_panel: return s.f(z);
    }
    return 0.0;
}

bool OrderState::is_identically_zero(int order, int theta_power) const {
    return at(order, theta_power).kind == Stored::Kind::zero;
}

// ---------------------------------------------------------------------------

std::function<double(double)> build_rhs(const BaseSpec& spec, int m, const OrderState& state) {
    if (m < 1) throw_domain("order must be at least 1");
    if (state.max_order() < m - 1) throw_internal("state incomplete below requested order");
    const int p = spec.p;
    const SpecCoeffs sc = spec_coeffs(spec);

    // collect the surviving terms once, as doubles
    struct Term {
        double coeff;
        int order, theta_power;
        bool over_z;
    };
    std::vector<Term> terms;
    double constant = 0.0;  // the w_0 contribution (theta^0 only)
    for (int n = 1; n <= std::min(m, p); ++n) {
        int j = m - n;
        for (int k = 0; k <= p - 1; ++k) {
            const Rational& cu = sc.up[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
            if (cu != 0) {
                if (j == 0) {
                    if (k == 0) constant += to_double(cu);  // theta^k w_0 = 0 for k >= 1
                } else if (!state.is_identically_zero(j, k)) {
                    terms.push_back({to_double(cu), j, k, false});
                }
            }
            if (k >= 1) {
                const Rational& cl = sc.lo[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n)];
                if (cl != 0 && j > 0 && !state.is_identically_zero(j, k))
                    terms.push_back({-to_double(cl), j, k, true});
            }
        }
    }

    return [&state, terms, constant](double z) {
        double s = constant;
        for (const auto& t : terms)
            s += t.coeff * (t.over_z ? state.value_over_z(t.order, t.theta_power, z)
                                     : state.value(t.order, t.theta_power, z));
        return s;
    };
}

namespace {

bool rhs_vanishes(const BaseSpec& spec, int m, const OrderState& state, const SpecCoeffs& sc) {
    const int p = spec.p;
    for (int n = 1; n <= std::min(m, p); ++n) {
        int j = m - n;
        for (int k = 0; k <= p - 1; ++k) {
            const Rational& cu = sc.up[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
            if (cu != 0 && ((j == 0 && k == 0) || (j > 0 && !state.is_identically_zero(j, k))))
                return false;
            if (k >= 1) {
                const Rational& cl = sc.lo[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n)];
                if (cl != 0 && j > 0 && !state.is_identically_zero(j, k)) return false;
            }
        }
    }
    return true;
}

}  // namespace

void solve_order(const BaseSpec& spec, int m, OrderState& state, const QuadConfig& quad) {
    if (state.max_order() != m - 1)
        throw_internal("orders must be solved consecutively");
    const int p = spec.p;
    const double zmax = state.zmax();
    const SpecCoeffs sc = spec_coeffs(spec);

    if (rhs_vanishes(spec, m, state, sc)) {
        state.push_order(std::vector<OrderState::Stored>(static_cast<std::size_t>(p)));
        return;
    }

    const double Bd = to_double(spec.B);
    const double Ad = to_double(spec.A);
    if (!(Bd > 0.0))
        throw_domain("non-integrable endpoint at t = 0: the engine requires B > 0 "
                     "(B = " + to_string(spec.B) + ")");

    auto rhs = build_rhs(spec, m, state);
    // psi(t) = RHS(t) (1-t)^{A-B} is analytic on [0, zmax]; the full
    // integrand of the variation-of-parameters formula is t^{B-1} psi(t).
    auto psi = [rhs, Ad, Bd](double t) { return rhs(t) * std::pow(1.0 - t, Ad - Bd); };

    const int nj = 24;
    const JacobiRule rule = gauss_jacobi01(nj, Bd - 1.0);
    const double delta = std::min(quad.delta, 0.5 * zmax);
    auto smooth_core = [&rule, &psi](double z) {
        // integral_0^z t^{B-1} psi dt = z^B * result
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            s += rule.weights[i] * psi(z * rule.nodes[i]);
        return s;
    };

    PanelFunc far_part;  // antiderivative of t^{B-1} psi(t) on [delta, zmax]
    double far_offset = 0.0;
    if (zmax > delta) {
        auto weighted = [&psi, Bd](double t) { return std::pow(t, Bd - 1.0) * psi(t); };
        far_part = PanelFunc::build(weighted, delta, zmax, quad).antiderivative();
        far_offset = std::pow(delta, Bd) * smooth_core(delta);
    }

    // ucore(z) = theta^{p-1} w_m (z) / z; the z^{1-B} of h and the z^B of the
    // endpoint integral cancel exactly, leaving an analytic function.
    auto ucore = [=, &far_part](double z) {
        double G = (z <= delta) ? smooth_core(z) : (far_offset + far_part(z)) / std::pow(z, Bd);
        return std::pow(1.0 - z, Bd - Ad - 1.0) * G;
    };

    std::vector<OrderState::Stored> row(static_cast<std::size_t>(p));
    PanelFunc ucore_pan = PanelFunc::build(ucore, 0.0, zmax, quad);
    row[static_cast<std::size_t>(p - 1)] = {OrderState::Stored::Kind::t_times_panel, ucore_pan};

    // theta^{-1}: each lower theta power is the running integral of the one
    // above divided by t; for the first step the division is already done.
    PanelFunc v = ucore_pan.antiderivative();
    row[static_cast<std::size_t>(p - 2)] = {OrderState::Stored::Kind::panel, v};
    for (int k = p - 3; k >= 0; --k) {
        auto q = [v](double t) { return v(t) / t; };
        v = PanelFunc::build(q, 0.0, zmax, quad).antiderivative();
        row[static_cast<std::size_t>(k)] = {OrderState::Stored::Kind::panel, v};
    }
    state.push_order(std::move(row));
}

EpsSeriesTable expand(const BaseSpec& spec, int N, const std::vector<double>& z_points,
                      const QuadConfig& quad) {
    spec.validate();
    if (N < 0) throw_domain("expansion order must be nonnegative");
    if (z_points.empty()) throw_domain("no z points requested");
    double zmax = 0.0;
    for (double z : z_points) {
        if (!(z > 0.0 && z < 1.0)) throw_domain("ode route requires z in (0,1)");
        zmax = std::max(zmax, z);
    }

    OrderState state(spec, zmax);
    for (int m = 1; m <= N; ++m) solve_order(spec, m, state, quad);

    EpsSeriesTable table;
    table.spec = spec.to_hyper_spec();
    table.orders = N;
    table.provenance = "ode";
    for (double z : z_points) {
        table.set(0, z, 1.0);
        for (int m = 1; m <= N; ++m) table.set(m, z, state.value(m, 0, z));
    }
    table.validate();
    return table;
}

}  // namespace hyperexp
