#include "hyperexp/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "hyperexp/error.hpp"

namespace hyperexp {

namespace {

// Chebyshev coefficients from samples at first-kind points
// x_i = cos(pi (2i+1) / (2n)), i = 0..n-1.
std::vector<double> cheb_coeffs(const std::vector<double>& fx) {
    const std::size_t n = fx.size();
    std::vector<double> c(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            s += fx[i] * std::cos(M_PI * k * (2.0 * i + 1.0) / (2.0 * n));
        c[k] = 2.0 * s / static_cast<double>(n);
    }
    c[0] *= 0.5;
    return c;
}

double clenshaw(const std::vector<double>& c, double t) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) {
        double b0 = 2.0 * t * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + c[0];
}

}  // namespace

PanelFunc PanelFunc::build(const std::function<double(double)>& f, double lo, double hi,
                           const QuadConfig& cfg) {
    if (!(hi > lo)) throw_domain("interpolation domain must have positive length");
    const int n = std::max(8, cfg.grid_size);
    PanelFunc out;
    out.lo_ = lo;
    out.hi_ = hi;

    struct Item {
        double a, b;
        int depth;
    };
    std::vector<Item> stack{{lo, hi, 0}};
    std::vector<double> fx(static_cast<std::size_t>(n));
    std::vector<Panel> accepted;

    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (it.a + it.b), h = 0.5 * (it.b - it.a);
        double fmax = 0.0;
        for (int i = 0; i < n; ++i) {
            double x = mid + h * std::cos(M_PI * (2.0 * i + 1.0) / (2.0 * n));
            fx[static_cast<std::size_t>(i)] = f(x);
            fmax = std::max(fmax, std::abs(fx[static_cast<std::size_t>(i)]));
        }
        auto c = cheb_coeffs(fx);
        double tail = std::max(std::abs(c[static_cast<std::size_t>(n - 1)]),
                               std::abs(c[static_cast<std::size_t>(n - 2)]));
        double thresh = cfg.tol * std::max(1.0, fmax);
        if (tail <= thresh || it.depth >= cfg.max_depth) {
            if (tail > thresh) out.worst_tail_ = std::max(out.worst_tail_, tail);
            accepted.push_back({it.a, it.b, std::move(c)});
        } else {
            stack.push_back({mid, it.b, it.depth + 1});
            stack.push_back({it.a, mid, it.depth + 1});
        }
    }
    std::sort(accepted.begin(), accepted.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    out.panels_ = std::move(accepted);
    return out;
}

PanelFunc PanelFunc::constant(double value, double lo, double hi) {
    PanelFunc out;
    out.lo_ = lo;
    out.hi_ = hi;
    out.panels_.push_back({lo, hi, {value}});
    return out;
}

double PanelFunc::eval_panel(const Panel& p, double x) const {
    double t = (2.0 * x - p.lo - p.hi) / (p.hi - p.lo);
    t = std::clamp(t, -1.0, 1.0);
    return clenshaw(p.c, t);
}

double PanelFunc::operator()(double x) const {
    if (panels_.empty()) throw_internal("evaluating empty interpolant");
    if (x <= panels_.front().lo) return eval_panel(panels_.front(), x);
    auto it = std::upper_bound(panels_.begin(), panels_.end(), x,
                               [](double v, const Panel& p) { return v < p.hi; });
    if (it == panels_.end()) --it;
    return eval_panel(*it, x);
}

PanelFunc PanelFunc::antiderivative() const {
    PanelFunc out;
    out.lo_ = lo_;
    out.hi_ = hi_;
    out.worst_tail_ = worst_tail_;
    double running = 0.0;
    for (const Panel& p : panels_) {
        const double h = 0.5 * (p.hi - p.lo);
        const std::size_t n = p.c.size();
        std::vector<double> C(n + 1, 0.0);
        auto cc = [&](std::size_t j) { return j < n ? p.c[j] : 0.0; };
        for (std::size_t j = 1; j <= n; ++j)
            C[j] = h * (cc(j - 1) - cc(j + 1)) / (2.0 * static_cast<double>(j));
        if (n >= 2) C[1] = h * (2.0 * cc(0) - cc(2)) / 2.0;  // c_0 carries the halved convention
        // fix the constant so the antiderivative is `running` at the left edge
        double at_left = 0.0;
        for (std::size_t j = 1; j <= n; ++j) at_left += C[j] * ((j % 2) ? -1.0 : 1.0);
        C[0] = running - at_left;
        // value at the right edge becomes the next panel's offset
        running = 0.0;
        for (std::size_t j = 0; j <= n; ++j) running += C[j];
        out.panels_.push_back({p.lo, p.hi, std::move(C)});
    }
    return out;
}

double PanelFunc::integral() const {
    double s = 0.0;
    for (const Panel& p : panels_) {
        const double h = 0.5 * (p.hi - p.lo);
        // integral of T_k over [-1,1]: 2/(1-k^2) for even k, 0 for odd
        double acc = 2.0 * (p.c.empty() ? 0.0 : p.c[0]);
        for (std::size_t k = 2; k < p.c.size(); k += 2)
            acc += p.c[k] * 2.0 / (1.0 - static_cast<double>(k * k));
        s += acc * h;
    }
    return s;
}

JacobiRule gauss_jacobi01(int n, double beta) {
    if (beta <= -1.0) throw_domain("Jacobi weight exponent must exceed -1");
    if (n < 1) throw_domain("quadrature rule needs at least one node");
    // Golub-Welsch for Jacobi(alpha=0, beta) on [-1,1] with weight (1+x)^beta
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        double ab = beta;  // alpha + beta
        double a = (k == 0) ? beta / (beta + 2.0)
                            : beta * beta / ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
        J(k, k) = a;
        if (k >= 1) {
            double num = 4.0 * k * k * (k + beta) * (k + beta);
            double den = (2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0);
            double b = std::sqrt(num / den);
            J(k, k - 1) = b;
            J(k - 1, k) = b;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    const double mu0 = std::pow(2.0, beta + 1.0) / (beta + 1.0);
    JacobiRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 + x);
        // map [-1,1] -> [0,1]: the 2^{beta+1} from (1+x)^beta = (2s)^beta and dx = 2 ds cancels mu0's
        rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0 / std::pow(2.0, beta + 1.0);
    }
    return rule;
}

}  // namespace hyperexp
