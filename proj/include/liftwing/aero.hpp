#pragma once

#include <numbers>

namespace liftwing {

/// Angles are carried in degrees end to end; the fitted slopes below are per degree.
inline double deg_to_rad(double deg) noexcept { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) noexcept { return rad * 180.0 / std::numbers::pi; }

/// Wing lift/drag coefficients, affine in angle of attack over a validity window.
///
/// Outside [alpha_min, alpha_max] every query throws OutOfAeroDomain; the fit is
/// not extrapolated past stall.
class LinearAeroModel {
public:
    LinearAeroModel(double lift_slope, double lift_intercept, double drag_slope,
                    double drag_intercept, double alpha_min, double alpha_max);

    double lift_slope() const noexcept { return lift_slope_; }
    double lift_intercept() const noexcept { return lift_intercept_; }
    double drag_slope() const noexcept { return drag_slope_; }
    double drag_intercept() const noexcept { return drag_intercept_; }
    double alpha_min() const noexcept { return alpha_min_; }
    double alpha_max() const noexcept { return alpha_max_; }

    bool in_domain(double alpha_deg) const noexcept {
        return alpha_deg >= alpha_min_ && alpha_deg <= alpha_max_;
    }

    friend bool operator==(const LinearAeroModel&, const LinearAeroModel&) = default;

private:
    double lift_slope_;
    double lift_intercept_;
    double drag_slope_;
    double drag_intercept_;
    double alpha_min_;
    double alpha_max_;
};

struct Environment {
    double air_density = 1.225; // kg/m^3
    double gravity = 9.81;      // m/s^2

    void validate() const;
    friend bool operator==(const Environment&, const Environment&) = default;
};

struct Airframe {
    double mass = 2.0;            // kg
    double reference_area = 0.20; // m^2, calibrated (see README)
    int rotor_count = 4;
    double prop_diameter = 0.254; // m
    double rotor_tilt = 10.0;     // deg, only used when the tilt loss flag is on
    double stall_alpha = 18.0;    // deg
    double safety_margin = 8.0;   // deg
    double mounting_angle = 35.0; // deg, the built wing incidence used by `compare`
    double parasite_drag_area = 0.02; // m^2, wingless comparison body only

    double weight(const Environment& env) const noexcept { return mass * env.gravity; }
    double alpha_cap() const noexcept { return stall_alpha - safety_margin; }

    void validate() const;
    friend bool operator==(const Airframe&, const Airframe&) = default;
};

struct AeroForce {
    double lift; // N
    double drag; // N
};

double lift_coefficient(const LinearAeroModel& model, double alpha_deg);
double drag_coefficient(const LinearAeroModel& model, double alpha_deg);

double dynamic_pressure(const Environment& env, double airspeed) noexcept;

AeroForce aero_force(const Environment& env, const Airframe& airframe,
                     const LinearAeroModel& model, double airspeed, double alpha_deg);

} // namespace liftwing
