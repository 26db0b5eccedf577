#pragma once

#include "liftwing/aero.hpp"
#include "liftwing/propulsion.hpp"

namespace liftwing {

struct Battery {
    double capacity = 18000.0; // A*s (5000 mAh)

    void validate() const;
    friend bool operator==(const Battery&, const Battery&) = default;
};

/// Everything a trim solve needs. Immutable once built; share freely across threads.
struct ModelBundle {
    Airframe airframe;
    Environment env;
    LinearAeroModel aero;
    PolySurrogate thrust;
    PolySurrogate torque;
    EscCurrentModel esc;
    Battery battery;
    bool apply_tilt_loss = false;

    void validate() const;
    /// Fraction of rotor thrust acting in the body plane: cos(rotor_tilt) or 1.
    double thrust_efficiency() const noexcept;
    friend bool operator==(const ModelBundle&, const ModelBundle&) = default;
};

enum class Regime { Cruise, Hover };

/// A steady-flight equilibrium with its propulsion and battery consequences.
/// Angles in degrees; per-rotor quantities assume an even thrust split.
struct TrimPoint {
    Regime regime = Regime::Cruise;
    double gamma = 0.0;
    double alpha = 0.0;
    double theta = 0.0;
    double airspeed = 0.0;
    double axial_inflow = 0.0;
    double lift = 0.0;
    double drag = 0.0;
    double thrust_per_rotor = 0.0;
    double rpm = 0.0;
    double torque_per_rotor = 0.0;
    double current_per_esc = 0.0;
    double total_current = 0.0;
    double endurance = 0.0; // s
    double range = 0.0;     // m

    friend bool operator==(const TrimPoint&, const TrimPoint&) = default;
};

struct TrimResiduals {
    double vertical;   // n T cos(theta) + L - m g
    double horizontal; // n T sin(theta) - D
};

/// Force-balance residuals of a trim point, recomputed from its own fields.
TrimResiduals force_residuals(const ModelBundle& bundle, const TrimPoint& point);

/// Fuselage pitch for a wing mounted at gamma flying at attack angle alpha.
constexpr double pitch_from_mounting(double gamma_deg, double alpha_deg) noexcept {
    return gamma_deg - alpha_deg;
}

/// Cruise airspeed at which the wing and rotors balance weight and drag.
///
/// Eliminating thrust from the vertical and horizontal balance gives
///   V^2 = m g tan(theta) / (q_unit S (C_D + C_L tan(theta))),  q_unit = rho / 2.
/// Throws HoverDegenerate when theta == 0, AeroInfeasible when theta < 0 or the
/// denominator is not positive, OutOfAeroDomain for alpha outside the fit.
double trim_airspeed(const Airframe& airframe, const Environment& env,
                     const LinearAeroModel& aero, double gamma_deg, double alpha_deg);

/// Full equilibrium at (gamma, alpha). gamma == alpha returns a hover point (V = 0).
TrimPoint solve_trim(const ModelBundle& bundle, double gamma_deg, double alpha_deg);

/// Equilibrium at a prescribed airspeed for a wing fixed at gamma.
TrimPoint trim_at_speed(const ModelBundle& bundle, double gamma_deg, double airspeed);

/// Same airframe without the wing: body drag 1/2 rho V^2 f, no lift.
/// Reported with alpha = 0 and gamma = theta.
TrimPoint wingless_trim_at_speed(const ModelBundle& bundle, double airspeed);

/// Static hover with the weight shared evenly by the rotors (no wing involvement).
TrimPoint hover_trim(const ModelBundle& bundle);

} // namespace liftwing
