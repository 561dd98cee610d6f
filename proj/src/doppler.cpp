#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "mor/doppler.hpp"

namespace mor {

namespace {

struct HermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;  // for weight function e^{-t^2}
};

// Golub-Welsch on the Hermite Jacobi matrix (subdiagonal sqrt(k/2)).
const HermiteRule& hermite_rule(int n) {
    static std::map<int, HermiteRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    HermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = sqrt_pi * v0 * v0;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

Complex gauss_hermite_average(const std::function<Complex(double)>& s_fn, double delta,
                              double omega_d, int n) {
    const HermiteRule& rule = hermite_rule(n);
    Complex acc = 0.0;
    for (int i = 0; i < n; ++i)
        acc += rule.weights[i] * s_fn(delta + std::numbers::sqrt2 * omega_d * rule.nodes[i]);
    return acc / std::sqrt(std::numbers::pi);
}

// Gauss-Kronrod 7-15 on [-1,1].
constexpr double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                            0.741531185599394, 0.586087235467691, 0.405845151377397,
                            0.207784955007898, 0.0};
constexpr double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                            0.140653259715525, 0.169004726639267, 0.190350578064785,
                            0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct PanelResult {
    Complex integral;
    double error;
};

PanelResult gk15(const std::function<Complex(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    Complex kron = kWgk[7] * f(mid);
    Complex gauss = kWg[3] * f(mid);
    for (int j = 0; j < 7; ++j) {
        const Complex lo = f(mid - half * kXgk[j]);
        const Complex hi = f(mid + half * kXgk[j]);
        kron += kWgk[j] * (lo + hi);
        if (j % 2 == 1) gauss += kWg[j / 2] * (lo + hi);
    }
    kron *= half;
    gauss *= half;
    return {kron, std::abs(kron - gauss)};
}

Complex adaptive_average(const std::function<Complex(double)>& s_fn, double delta, double omega_d,
                         const QuadratureSettings& st) {
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * omega_d * omega_d);
    auto integrand = [&](double dv) {
        const double u = (dv - delta) / omega_d;
        return s_fn(dv) * (norm * std::exp(-0.5 * u * u));
    };
    struct Interval {
        double a, b;
        PanelResult r;
    };
    std::vector<Interval> heap;
    const double lo = delta - st.half_range * omega_d;
    const double hi = delta + st.half_range * omega_d;
    // Seed with enough panels that a centered narrow feature cannot hide
    // inside a single first-pass error estimate.
    const int seed = 16;
    for (int i = 0; i < seed; ++i) {
        const double a = lo + (hi - lo) * i / seed;
        const double b = lo + (hi - lo) * (i + 1) / seed;
        heap.push_back({a, b, gk15(integrand, a, b)});
    }
    double err_sum = 0.0;
    for (const auto& iv : heap) err_sum += iv.r.error;
    int splits = 0;
    while (err_sum > st.adaptive_tol) {
        if (++splits > st.max_intervals)
            throw NonConvergenceError(
                "avg_quadrature: adaptive refinement budget exhausted (feature narrower than "
                "resolution)");
        auto worst = heap.begin();
        for (auto it = heap.begin(); it != heap.end(); ++it)
            if (it->r.error > worst->r.error) worst = it;
        const double a = worst->a, b = worst->b, m = 0.5 * (a + b);
        err_sum -= worst->r.error;
        *worst = {a, m, gk15(integrand, a, m)};
        heap.push_back({m, b, gk15(integrand, m, b)});
        err_sum += worst->r.error + heap.back().r.error;
    }
    Complex acc = 0.0;
    for (const auto& iv : heap) acc += iv.r.integral;
    return acc;
}

}  // namespace

Complex avg_quadrature(const std::function<Complex(double)>& s_fn, double delta, double omega_d,
                       const QuadratureSettings& settings) {
    detail::require_width(omega_d);
    Complex prev = gauss_hermite_average(s_fn, delta, omega_d, settings.initial_nodes);
    for (int n = 2 * settings.initial_nodes; n <= settings.max_nodes; n *= 2) {
        const Complex cur = gauss_hermite_average(s_fn, delta, omega_d, n);
        if (std::abs(cur - prev) < settings.tol) return cur;
        prev = cur;
    }
    return adaptive_average(s_fn, delta, omega_d, settings);
}

}  // namespace mor
