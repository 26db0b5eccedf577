#pragma once

#include <string_view>
#include <vector>

#include "liftwing/aero.hpp"

namespace liftwing {

/// Closed interval [lo, hi] with lo < hi.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const noexcept { return x >= lo && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// One monomial c * Vp^vp_exp * N^rpm_exp of a propeller surrogate.
struct PolyTerm {
    int vp_exp = 0;
    int rpm_exp = 0;
    double coefficient = 0.0;

    friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

enum class OutputUnit { Newton, NewtonMetre };

std::string_view to_string(OutputUnit unit) noexcept;
OutputUnit output_unit_from_string(std::string_view text);

/// Bivariate polynomial f(Vp, N) over axial inflow (m/s) and rotor speed (RPM).
///
/// Terms are kept sorted by (vp_exp, rpm_exp) so evaluation order, and therefore the
/// rounding of every result, does not depend on how the term list was written.
class PolySurrogate {
public:
    PolySurrogate(std::vector<PolyTerm> terms, Interval vp_domain, Interval rpm_domain,
                  OutputUnit unit);

    const std::vector<PolyTerm>& terms() const noexcept { return terms_; }
    Interval vp_domain() const noexcept { return vp_domain_; }
    Interval rpm_domain() const noexcept { return rpm_domain_; }
    OutputUnit output_unit() const noexcept { return unit_; }

    /// Throws OutOfSurrogateDomain when (vp, rpm) lies outside the fit region.
    double evaluate(double rpm, double vp) const;
    double evaluate_unchecked(double rpm, double vp) const noexcept;
    double rpm_derivative(double rpm, double vp) const noexcept;

    /// Coefficients a_j of f(vp, N) = sum_j a_j N^j at a fixed inflow.
    std::vector<double> rpm_polynomial(double vp) const;
    int rpm_degree() const noexcept;

    void check_domain(double rpm, double vp) const;

    friend bool operator==(const PolySurrogate&, const PolySurrogate&) = default;

private:
    std::vector<PolyTerm> terms_;
    Interval vp_domain_;
    Interval rpm_domain_;
    OutputUnit unit_;
};

/// ESC input current as a quadratic in shaft torque: I = quad M^2 + lin M + constant.
class EscCurrentModel {
public:
    EscCurrentModel(double quad, double lin, double constant, Interval torque_domain);

    double quad() const noexcept { return quad_; }
    double lin() const noexcept { return lin_; }
    double constant() const noexcept { return constant_; }
    Interval torque_domain() const noexcept { return torque_domain_; }

    friend bool operator==(const EscCurrentModel&, const EscCurrentModel&) = default;

private:
    double quad_;
    double lin_;
    double constant_;
    Interval torque_domain_;
};

struct NondimPoint {
    double thrust_coefficient = 0.0;
    double torque_coefficient = 0.0;
};

/// Inflow normal to the rotor disk, V sin(theta). Expects airspeed >= 0.
double axial_inflow(double airspeed, double pitch_deg) noexcept;

double thrust(const PolySurrogate& surrogate, double rpm, double vp);
double torque(const PolySurrogate& surrogate, double rpm, double vp);

// Coefficient form T = C_T rho N^2 D^4 / 16 and M = C_M rho N^2 D^5 / 32, applied as
// written: N carries whatever rotational unit the coefficient table was built with.
double thrust_from_coefficients(double ct, const Environment& env, double rpm, double diameter);
double torque_from_coefficients(double cm, const Environment& env, double rpm, double diameter);
NondimPoint coefficients_from_loads(double thrust, double torque, const Environment& env,
                                    double rpm, double diameter);

/// Raw fitted current; throws OutOfEscDomain outside the model's torque window.
double esc_current(const EscCurrentModel& model, double torque);

/// Rotor speed producing `thrust_required` at inflow `vp`, on the branch where thrust
/// rises with speed. Throws RpmInfeasible when no such root lies in the RPM domain and
/// OutOfSurrogateDomain when vp is outside the fit region.
double required_rpm(const PolySurrogate& surrogate, double thrust_required, double vp);

} // namespace liftwing
