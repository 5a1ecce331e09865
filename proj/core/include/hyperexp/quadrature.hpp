#pragma once

#include <functional>
#include <vector>

namespace hyperexp {

/// Quadrature / function-storage knobs used throughout the ODE engine.
struct QuadConfig {
    double tol = 1e-12;   ///< local interpolation and tail tolerance
    double delta = 1e-2;  ///< endpoint-panel width for weighted integrals at 0
    int max_depth = 28;   ///< adaptive bisection depth limit
    int grid_size = 24;   ///< Chebyshev points per panel
};

/// Piecewise Chebyshev interpolant on [lo, hi], built adaptively (bisect until
/// the coefficient tail is below tolerance). Samples are Chebyshev points of
/// the first kind, so the endpoints themselves are never evaluated. Nested
/// integrals consume the interpolant through antiderivative(), which
/// integrates each panel's series exactly.
class PanelFunc {
  public:
    PanelFunc() = default;

    static PanelFunc build(const std::function<double(double)>& f, double lo, double hi,
                           const QuadConfig& cfg);
    /// A constant function (no sampling).
    static PanelFunc constant(double value, double lo, double hi);

    double operator()(double x) const;
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool empty() const { return panels_.empty(); }

    /// F with F(x) = integral of this from lo to x; same panel structure.
    PanelFunc antiderivative() const;
    /// Integral over the whole domain.
    double integral() const;

    /// Largest coefficient-tail left by the adaptive build (0 when fully
    /// converged); an a-posteriori accuracy indicator.
    double residual_tail() const { return worst_tail_; }
    std::size_t panel_count() const { return panels_.size(); }

  private:
    struct Panel {
        double lo, hi;
        std::vector<double> c;  // Chebyshev coefficients on the panel
    };
    double eval_panel(const Panel& p, double x) const;
    std::vector<Panel> panels_;
    double lo_ = 0.0, hi_ = 0.0;
    double worst_tail_ = 0.0;
};

/// Nodes and weights for integrals over (0,1) with an algebraic endpoint
/// weight:  integral_0^1 s^beta g(s) ds  ==  sum_i w_i g(s_i),  beta > -1,
/// exact for polynomial g up to degree 2n-1. The weight s^beta is folded into
/// the w_i.
struct JacobiRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
JacobiRule gauss_jacobi01(int n, double beta);

}  // namespace hyperexp
