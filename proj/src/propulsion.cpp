#include "liftwing/propulsion.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "liftwing/error.hpp"

namespace liftwing {

namespace {

double ipow(double base, int exp) noexcept {
    double result = 1.0;
    for (int i = 0; i < exp; ++i) result *= base;
    return result;
}

bool valid_interval(Interval iv) {
    return std::isfinite(iv.lo) && std::isfinite(iv.hi) && iv.lo < iv.hi;
}

double eval_poly(const std::vector<double>& coeffs, double x) noexcept {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double eval_poly_derivative(const std::vector<double>& coeffs, double x) noexcept {
    double acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 1;) acc = acc * x + static_cast<double>(j) * coeffs[j];
    return acc;
}

[[noreturn]] void rpm_infeasible(double thrust_required, double vp) {
    std::ostringstream os;
    os << "no rotor speed on the rising thrust branch delivers " << thrust_required
       << " N at inflow " << vp << " m/s";
    throw Error(ErrorKind::RpmInfeasible, os.str());
}

// Root of a quadratic (or linear) in N with positive slope at the root.
std::optional<double> rising_root_closed_form(const std::vector<double>& a) {
    const double c = a.size() > 0 ? a[0] : 0.0;
    const double b = a.size() > 1 ? a[1] : 0.0;
    const double q = a.size() > 2 ? a[2] : 0.0;
    if (q == 0.0) {
        if (b <= 0.0) return std::nullopt;
        return -c / b;
    }
    const double disc = b * b - 4.0 * q * c;
    if (!(disc > 0.0)) return std::nullopt; // none, or tangent
    const double sq = std::sqrt(disc);
    // The rising root satisfies 2qN + b = +sqrt(disc). Pick the form without cancellation.
    if (b <= 0.0) return (-b + sq) / (2.0 * q);
    return (2.0 * c) / (-b - sq);
}

// First rising sign change of p over [lo, hi], refined by bisection to full precision.
std::optional<double> rising_root_bracketed(const std::vector<double>& p, double lo, double hi) {
    constexpr int kSegments = 512;
    double x0 = lo;
    double f0 = eval_poly(p, x0);
    for (int k = 1; k <= kSegments; ++k) {
        const double x1 = (k == kSegments) ? hi : lo + (hi - lo) * k / kSegments;
        const double f1 = eval_poly(p, x1);
        if (f0 == 0.0 && eval_poly_derivative(p, x0) > 0.0) return x0;
        if (f0 < 0.0 && f1 >= 0.0) {
            double a = x0;
            double b = x1;
            while (true) {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b) break;
                if (eval_poly(p, mid) < 0.0) a = mid;
                else b = mid;
            }
            const double root = std::abs(eval_poly(p, a)) < std::abs(eval_poly(p, b)) ? a : b;
            if (eval_poly_derivative(p, root) > 0.0) return root;
        }
        x0 = x1;
        f0 = f1;
    }
    return std::nullopt;
}

} // namespace

std::string_view to_string(OutputUnit unit) noexcept {
    return unit == OutputUnit::Newton ? "N" : "N*m";
}

OutputUnit output_unit_from_string(std::string_view text) {
    if (text == "N") return OutputUnit::Newton;
    if (text == "N*m" || text == "N.m" || text == "Nm") return OutputUnit::NewtonMetre;
    throw Error(ErrorKind::UnknownUnit, "unknown surrogate output unit '" + std::string(text) + "'");
}

PolySurrogate::PolySurrogate(std::vector<PolyTerm> terms, Interval vp_domain,
                             Interval rpm_domain, OutputUnit unit)
    : terms_(std::move(terms)), vp_domain_(vp_domain), rpm_domain_(rpm_domain), unit_(unit) {
    if (terms_.empty()) throw Error(ErrorKind::InvalidModel, "surrogate needs at least one term");
    for (const auto& t : terms_) {
        if (t.vp_exp < 0 || t.rpm_exp < 0)
            throw Error(ErrorKind::InvalidModel, "surrogate exponents must be non-negative");
        if (!std::isfinite(t.coefficient))
            throw Error(ErrorKind::InvalidModel, "surrogate coefficients must be finite");
    }
    std::sort(terms_.begin(), terms_.end(), [](const PolyTerm& a, const PolyTerm& b) {
        return a.vp_exp != b.vp_exp ? a.vp_exp < b.vp_exp : a.rpm_exp < b.rpm_exp;
    });
    const auto dup = std::adjacent_find(terms_.begin(), terms_.end(),
                                        [](const PolyTerm& a, const PolyTerm& b) {
                                            return a.vp_exp == b.vp_exp && a.rpm_exp == b.rpm_exp;
                                        });
    if (dup != terms_.end()) {
        std::ostringstream os;
        os << "duplicate surrogate term Vp^" << dup->vp_exp << " N^" << dup->rpm_exp;
        throw Error(ErrorKind::InvalidModel, os.str());
    }
    if (!valid_interval(vp_domain_) || !valid_interval(rpm_domain_))
        throw Error(ErrorKind::InvalidModel, "surrogate domains must be non-degenerate");
}

void PolySurrogate::check_domain(double rpm, double vp) const {
    if (!vp_domain_.contains(vp) || !rpm_domain_.contains(rpm)) {
        std::ostringstream os;
        os << "(Vp=" << vp << " m/s, N=" << rpm << " RPM) outside surrogate domain Vp["
           << vp_domain_.lo << ", " << vp_domain_.hi << "] N[" << rpm_domain_.lo << ", "
           << rpm_domain_.hi << "]";
        throw Error(ErrorKind::OutOfSurrogateDomain, os.str());
    }
}

double PolySurrogate::evaluate(double rpm, double vp) const {
    check_domain(rpm, vp);
    return evaluate_unchecked(rpm, vp);
}

double PolySurrogate::evaluate_unchecked(double rpm, double vp) const noexcept {
    double sum = 0.0;
    for (const auto& t : terms_) sum += t.coefficient * ipow(vp, t.vp_exp) * ipow(rpm, t.rpm_exp);
    return sum;
}

double PolySurrogate::rpm_derivative(double rpm, double vp) const noexcept {
    double sum = 0.0;
    for (const auto& t : terms_) {
        if (t.rpm_exp == 0) continue;
        sum += t.coefficient * t.rpm_exp * ipow(vp, t.vp_exp) * ipow(rpm, t.rpm_exp - 1);
    }
    return sum;
}

std::vector<double> PolySurrogate::rpm_polynomial(double vp) const {
    std::vector<double> a(static_cast<std::size_t>(rpm_degree()) + 1, 0.0);
    for (const auto& t : terms_) a[static_cast<std::size_t>(t.rpm_exp)] += t.coefficient * ipow(vp, t.vp_exp);
    return a;
}

int PolySurrogate::rpm_degree() const noexcept {
    int degree = 0;
    for (const auto& t : terms_) degree = std::max(degree, t.rpm_exp);
    return degree;
}

EscCurrentModel::EscCurrentModel(double quad, double lin, double constant, Interval torque_domain)
    : quad_(quad), lin_(lin), constant_(constant), torque_domain_(torque_domain) {
    if (!std::isfinite(quad) || !std::isfinite(lin) || !std::isfinite(constant))
        throw Error(ErrorKind::InvalidModel, "ESC coefficients must be finite");
    if (!valid_interval(torque_domain))
        throw Error(ErrorKind::InvalidModel, "ESC torque domain must be non-degenerate");
    // dI/dM is affine in M, so positivity at both ends means monotone on the domain.
    if (!(2.0 * quad * torque_domain.lo + lin > 0.0 && 2.0 * quad * torque_domain.hi + lin > 0.0))
        throw Error(ErrorKind::InvalidModel, "ESC current must increase with torque on its domain");
}

double axial_inflow(double airspeed, double pitch_deg) noexcept {
    return airspeed * std::sin(deg_to_rad(pitch_deg));
}

double thrust(const PolySurrogate& surrogate, double rpm, double vp) {
    return surrogate.evaluate(rpm, vp);
}

double torque(const PolySurrogate& surrogate, double rpm, double vp) {
    return surrogate.evaluate(rpm, vp);
}

double thrust_from_coefficients(double ct, const Environment& env, double rpm, double diameter) {
    const double d2 = diameter * diameter;
    return ct * env.air_density * rpm * rpm * d2 * d2 / 16.0;
}

double torque_from_coefficients(double cm, const Environment& env, double rpm, double diameter) {
    const double d2 = diameter * diameter;
    return cm * env.air_density * rpm * rpm * d2 * d2 * diameter / 32.0;
}

NondimPoint coefficients_from_loads(double thrust_n, double torque_nm, const Environment& env,
                                    double rpm, double diameter) {
    if (!(rpm > 0.0) || !(diameter > 0.0))
        throw Error(ErrorKind::InvalidModel, "coefficients need positive speed and diameter");
    return {thrust_n / thrust_from_coefficients(1.0, env, rpm, diameter),
            torque_nm / torque_from_coefficients(1.0, env, rpm, diameter)};
}

double esc_current(const EscCurrentModel& model, double torque_nm) {
    if (!model.torque_domain().contains(torque_nm)) {
        std::ostringstream os;
        os << "torque " << torque_nm << " N*m outside ESC model domain [" << model.torque_domain().lo
           << ", " << model.torque_domain().hi << "]";
        throw Error(ErrorKind::OutOfEscDomain, os.str());
    }
    return (model.quad() * torque_nm + model.lin()) * torque_nm + model.constant();
}

double required_rpm(const PolySurrogate& surrogate, double thrust_required, double vp) {
    if (!surrogate.vp_domain().contains(vp)) {
        std::ostringstream os;
        os << "inflow " << vp << " m/s outside surrogate domain";
        throw Error(ErrorKind::OutOfSurrogateDomain, os.str());
    }
    if (!(thrust_required > 0.0)) rpm_infeasible(thrust_required, vp);

    std::vector<double> p = surrogate.rpm_polynomial(vp);
    p[0] -= thrust_required;
    const Interval domain = surrogate.rpm_domain();

    std::optional<double> root;
    if (p.size() <= 3) {
        root = rising_root_closed_form(p);
        if (root) {
            // One Newton step removes the last few ulps of cancellation in the constant.
            const double slope = eval_poly_derivative(p, *root);
            if (slope > 0.0) *root -= eval_poly(p, *root) / slope;
        }
    } else {
        root = rising_root_bracketed(p, domain.lo, domain.hi);
    }
    if (!root || !std::isfinite(*root) || !domain.contains(*root)) rpm_infeasible(thrust_required, vp);
    return *root;
}

} // namespace liftwing
