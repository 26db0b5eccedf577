#pragma once

// Brute-force reference computations used to check the library. Each one is written
// from the governing equations directly and shares no code with the solvers.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

inline double rad(double deg) { return deg * std::numbers::pi / 180.0; }

struct Aero {
    double cl_slope, cl0, cd_slope, cd0;
    double cl(double a) const { return cl_slope * a + cl0; }
    double cd(double a) const { return cd_slope * a + cd0; }
};

struct Craft {
    double mass, gravity, rho, area;
};

/// Thrust-free balance residual: (mg - L) sin(theta) - D cos(theta).
inline double balance(const Aero& aero, const Craft& c, double v, double alpha, double theta_deg) {
    const double q = 0.5 * c.rho * v * v * c.area;
    const double th = rad(theta_deg);
    return (c.mass * c.gravity - q * aero.cl(alpha)) * std::sin(th) - q * aero.cd(alpha) * std::cos(th);
}

/// Airspeed where the balance residual changes sign, located by stepping V at `step`
/// from just above zero and returning the midpoint of the bracketing step.
inline std::optional<double> scan_airspeed(const Aero& aero, const Craft& c, double gamma, double alpha,
                                           double v_max = 60.0, double step = 1e-4) {
    const double theta = gamma - alpha;
    double prev = balance(aero, c, step, alpha, theta);
    for (long k = 2; k * step <= v_max; ++k) {
        const double v = static_cast<double>(k) * step;
        const double r = balance(aero, c, v, alpha, theta);
        if ((prev > 0) != (r > 0)) return v - 0.5 * step;
        prev = r;
    }
    return std::nullopt;
}

/// Pitch (deg) at which a wing mounted at gamma balances at speed v, scanned in `step`.
inline std::optional<double> scan_pitch(const Aero& aero, const Craft& c, double gamma, double v,
                                        double alpha_lo, double alpha_hi, double step = 1e-4) {
    const double lo = std::max(gamma - alpha_hi, 0.0);
    const double hi = std::min(gamma - alpha_lo, gamma);
    double prev_theta = lo;
    double prev = balance(aero, c, v, gamma - lo, lo);
    const long n = static_cast<long>(std::ceil((hi - lo) / step));
    for (long k = 1; k <= n; ++k) {
        const double theta = std::min(lo + static_cast<double>(k) * step, hi);
        const double r = balance(aero, c, v, gamma - theta, theta);
        if ((prev > 0) != (r > 0)) return 0.5 * (prev_theta + theta);
        prev = r;
        prev_theta = theta;
    }
    return std::nullopt;
}

/// Bivariate polynomial sum, terms visited in the order given.
struct Term {
    int i, j;
    double c;
};
inline double poly(const std::vector<Term>& terms, double vp, double n) {
    double s = 0.0;
    for (const auto& t : terms) s += t.c * std::pow(vp, t.i) * std::pow(n, t.j);
    return s;
}

/// Lowest N in [lo, hi] where f crosses `target` going upward, by a coarse scan then
/// bisection to machine precision.
template <typename F>
std::optional<double> bisect_rising(F f, double target, double lo, double hi, int segments = 4000) {
    const double h = (hi - lo) / segments;
    for (int k = 0; k < segments; ++k) {
        double a = lo + k * h, b = (k + 1 == segments) ? hi : a + h;
        double fa = f(a) - target, fb = f(b) - target;
        if (fa <= 0.0 && fb >= 0.0 && fb > fa) {
            for (int it = 0; it < 200 && b - a > 0.0; ++it) {
                const double m = 0.5 * (a + b);
                if (m <= a || m >= b) break;
                if (f(m) - target < 0.0) a = m;
                else b = m;
            }
            return 0.5 * (a + b);
        }
    }
    return std::nullopt;
}

/// Least squares through the normal equations X'X c = X'y, Gaussian elimination with
/// partial pivoting in long double.
inline std::vector<double> normal_equations(const std::vector<std::vector<double>>& x,
                                            const std::vector<double>& y) {
    const std::size_t p = x.front().size();
    std::vector<std::vector<long double>> a(p, std::vector<long double>(p + 1, 0.0L));
    for (std::size_t r = 0; r < x.size(); ++r)
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < p; ++j) a[i][j] += static_cast<long double>(x[r][i]) * x[r][j];
            a[i][p] += static_cast<long double>(x[r][i]) * y[r];
        }
    for (std::size_t c = 0; c < p; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < p; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
        std::swap(a[c], a[piv]);
        if (a[c][c] == 0.0L) throw std::runtime_error("singular normal equations");
        for (std::size_t r = 0; r < p; ++r) {
            if (r == c) continue;
            const long double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= p; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<double> out(p);
    for (std::size_t i = 0; i < p; ++i) out[i] = static_cast<double>(a[i][p] / a[i][i]);
    return out;
}

} // namespace oracle
