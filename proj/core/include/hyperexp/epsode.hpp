#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "hyperexp/eps_param.hpp"
#include "hyperexp/quadrature.hpp"
#include "hyperexp/rational.hpp"
#include "hyperexp/series_table.hpp"

namespace hyperexp {

/// Integrating factor of the first-order operator acting on theta^{p-1} w_m:
/// the real positive branch z^{1-B} (1-z)^{B-A-1} on 0 < z < 1. Constant
/// phases drop out of the variation-of-parameters formula, so the real branch
/// is used for all rational A, B.
double h_factor(const Rational& A, const Rational& B, double z);

struct FirstOrder {
    int m0;           ///< first order with a nonvanishing equation source
    Rational source;  ///< (A + c delta_{A,0}) * prod a_i; may be zero
};

/// m0 = p when A = 0 and p-1 otherwise, with the constant source of the
/// order-m0 equation.
FirstOrder first_order(const BaseSpec& spec);

/// eps-order coefficient tables of the theta-form ODE, derived mechanically
/// from the annihilating operator: up[i][n] multiplies theta^i w_{m-n} (with a
/// factor z) and lo[i][n] multiplies theta^{i+1} w_{m-n}. Collecting order
/// eps^m and isolating theta^p w_m yields the recursion the solver steps.
struct SpecCoeffs {
    std::vector<std::vector<Rational>> up;  // [i][n], i in 0..p, n in 0..p
    std::vector<std::vector<Rational>> lo;  // [i][n], i in 0..p-1
};
SpecCoeffs spec_coeffs(const BaseSpec& spec);

/// All computed expansion functions theta^k w_j, k = 0..p-1, j = 0..m. Order 0
/// is the exact constant (w_0 = 1, theta w_0 = 0); higher orders live on an
/// adaptive interpolation grid over [0, zmax] and vanish at z = 0 by
/// construction.
class OrderState {
  public:
    OrderState(const BaseSpec& spec, double zmax);

    const BaseSpec& spec() const { return spec_; }
    double zmax() const { return zmax_; }
    int max_order() const { return static_cast<int>(funcs_.size()) - 1; }

    /// theta^k w_j at z.
    double value(int order, int theta_power, double z) const;
    /// theta^k w_j (z) / z, exact for the stored theta^{p-1} level.
    double value_over_z(int order, int theta_power, double z) const;
    bool is_identically_zero(int order, int theta_power) const;

  private:
    friend void solve_order(const BaseSpec&, int, OrderState&, const QuadConfig&);

    struct Stored {
        enum class Kind { zero, one, panel, t_times_panel } kind = Kind::zero;
        PanelFunc f;
    };
    void push_order(std::vector<Stored> funcs);
    const Stored& at(int order, int theta_power) const;

    BaseSpec spec_;
    double zmax_;
    std::vector<std::vector<Stored>> funcs_;  // [order][theta_power]
};

/// The full right side of the order-m equation as an evaluable function of z;
/// state must hold all orders below m.
std::function<double(double)> build_rhs(const BaseSpec& spec, int m, const OrderState& state);

/// Solves order m by variation of parameters,
///   theta^{p-1} w_m (z) = h(z) * integral_0^z RHS_m(t) / ((1-t) h(t)) dt,
/// (integration constants vanish with the boundary conditions) followed by
/// repeated theta^{-1} integrations, and appends every theta power of order m
/// to the state. The endpoint factor t^{B-1} is handled by a Gauss-Jacobi rule,
/// so B must be positive.
void solve_order(const BaseSpec& spec, int m, OrderState& state, const QuadConfig& quad);

/// Runs the recursion to order N and tabulates w_m at the requested z points
/// (all strictly inside (0,1)). Provenance tag "ode".
EpsSeriesTable expand(const BaseSpec& spec, int N, const std::vector<double>& z_points,
                      const QuadConfig& quad = {});

}  // namespace hyperexp
