#include "liftwing/trim.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "liftwing/error.hpp"

namespace liftwing {

void Battery::validate() const {
    if (!(capacity > 0.0) || !std::isfinite(capacity))
        throw Error(ErrorKind::InvalidModel, "battery capacity must be positive");
}

void ModelBundle::validate() const {
    airframe.validate();
    env.validate();
    battery.validate();
}

double ModelBundle::thrust_efficiency() const noexcept {
    return apply_tilt_loss ? std::cos(deg_to_rad(airframe.rotor_tilt)) : 1.0;
}

TrimResiduals force_residuals(const ModelBundle& bundle, const TrimPoint& point) {
    const double th = deg_to_rad(point.theta);
    const double total = bundle.airframe.rotor_count * bundle.thrust_efficiency() * point.thrust_per_rotor;
    return {total * std::cos(th) + point.lift - bundle.airframe.weight(bundle.env),
            total * std::sin(th) - point.drag};
}

namespace {

// Shared tail of every solver path: per-rotor thrust to RPM, torque, current, battery.
TrimPoint complete_trim(const ModelBundle& bundle, TrimPoint p) {
    const double n = bundle.airframe.rotor_count;
    const double th = deg_to_rad(p.theta);
    p.thrust_per_rotor = (bundle.airframe.weight(bundle.env) - p.lift) /
                         (n * bundle.thrust_efficiency() * std::cos(th));
    p.axial_inflow = axial_inflow(p.airspeed, p.theta);
    p.rpm = required_rpm(bundle.thrust, p.thrust_per_rotor, p.axial_inflow);
    p.torque_per_rotor = torque(bundle.torque, p.rpm, p.axial_inflow);
    p.current_per_esc = esc_current(bundle.esc, p.torque_per_rotor);
    if (!(p.current_per_esc > 0.0)) {
        std::ostringstream os;
        os << "ESC model gives non-positive current " << p.current_per_esc << " A at torque "
           << p.torque_per_rotor << " N*m";
        throw Error(ErrorKind::OutOfEscDomain, os.str());
    }
    p.total_current = n * p.current_per_esc;
    p.endurance = bundle.battery.capacity / p.total_current;
    p.range = p.airspeed * p.endurance;
    return p;
}

TrimPoint hover_point(const ModelBundle& bundle, double gamma_deg, double alpha_deg) {
    TrimPoint p;
    p.regime = Regime::Hover;
    p.gamma = gamma_deg;
    p.alpha = alpha_deg;
    p.theta = 0.0;
    return complete_trim(bundle, p);
}

} // namespace

double trim_airspeed(const Airframe& airframe, const Environment& env,
                     const LinearAeroModel& aero, double gamma_deg, double alpha_deg) {
    const double cl = lift_coefficient(aero, alpha_deg);
    const double cd = drag_coefficient(aero, alpha_deg);
    const double theta = pitch_from_mounting(gamma_deg, alpha_deg);
    if (theta == 0.0)
        throw Error(ErrorKind::HoverDegenerate, "zero pitch: no drag to balance, V = 0");
    if (theta < 0.0 || theta >= 90.0) {
        std::ostringstream os;
        os << "pitch " << theta << " deg cannot produce forward trim";
        throw Error(ErrorKind::AeroInfeasible, os.str());
    }
    const double tan_theta = std::tan(deg_to_rad(theta));
    const double denom = cd + cl * tan_theta;
    if (!(denom > 0.0) || !(airframe.reference_area > 0.0)) {
        std::ostringstream os;
        os << "no positive trim speed at gamma=" << gamma_deg << " alpha=" << alpha_deg
           << " (C_D + C_L tan(theta) = " << denom << ")";
        throw Error(ErrorKind::AeroInfeasible, os.str());
    }
    const double v2 = airframe.weight(env) * tan_theta /
                      (0.5 * env.air_density * airframe.reference_area * denom);
    return std::sqrt(v2);
}

TrimPoint solve_trim(const ModelBundle& bundle, double gamma_deg, double alpha_deg) {
    const double theta = pitch_from_mounting(gamma_deg, alpha_deg);
    if (theta == 0.0) {
        // Still reject an attack angle the wing model cannot represent.
        lift_coefficient(bundle.aero, alpha_deg);
        return hover_point(bundle, gamma_deg, alpha_deg);
    }
    TrimPoint p;
    p.gamma = gamma_deg;
    p.alpha = alpha_deg;
    p.theta = theta;
    p.airspeed = trim_airspeed(bundle.airframe, bundle.env, bundle.aero, gamma_deg, alpha_deg);
    const AeroForce f = aero_force(bundle.env, bundle.airframe, bundle.aero, p.airspeed, alpha_deg);
    p.lift = f.lift;
    p.drag = f.drag;
    p = complete_trim(bundle, p);

    const double th = deg_to_rad(theta);
    const double from_drag = p.drag / (bundle.airframe.rotor_count * bundle.thrust_efficiency() * std::sin(th));
    if (std::abs(from_drag - p.thrust_per_rotor) > 1e-9 * std::abs(p.thrust_per_rotor))
        throw std::logic_error("trim thrust disagrees between vertical and horizontal balance");
    return p;
}

TrimPoint trim_at_speed(const ModelBundle& bundle, double gamma_deg, double airspeed) {
    if (!(airspeed > 0.0))
        throw Error(ErrorKind::NoTrimAtSpeed, "trim at speed needs a positive airspeed");
    const double weight = bundle.airframe.weight(bundle.env);

    TrimPoint p;
    p.gamma = gamma_deg;
    p.airspeed = airspeed;

    if (bundle.airframe.reference_area == 0.0) {
        // No wing: nothing to balance but weight, whatever the incidence.
        p.theta = 0.0;
        p.alpha = gamma_deg;
        return complete_trim(bundle, p);
    }

    const double qs = dynamic_pressure(bundle.env, airspeed) * bundle.airframe.reference_area;
    const LinearAeroModel& aero = bundle.aero;
    // tan(theta) (mg - L) - D; increasing in theta wherever mg > L, so the root is unique.
    auto imbalance = [&](double theta) {
        const double alpha = gamma_deg - theta;
        const double lift = qs * lift_coefficient(aero, alpha);
        const double drag = qs * drag_coefficient(aero, alpha);
        return std::tan(deg_to_rad(theta)) * (weight - lift) - drag;
    };

    double lo = std::max(gamma_deg - aero.alpha_max(), 0.0);
    double hi = std::min(gamma_deg, gamma_deg - aero.alpha_min());
    hi = std::min(hi, 89.999);
    auto no_trim = [&] {
        std::ostringstream os;
        os << "no pitch in (0, " << gamma_deg << "] deg trims at " << airspeed << " m/s";
        return Error(ErrorKind::NoTrimAtSpeed, os.str());
    };
    if (!(lo < hi)) throw no_trim();
    double f_lo = imbalance(lo);
    const double f_hi = imbalance(hi);
    if (f_lo == 0.0 && lo > 0.0) {
        hi = lo;
    } else {
        if (!(f_lo < 0.0 && f_hi >= 0.0)) throw no_trim();
        while (true) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double f_mid = imbalance(mid);
            if (f_mid < 0.0) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
    }
    p.theta = hi;
    p.alpha = gamma_deg - p.theta;
    const AeroForce f = aero_force(bundle.env, bundle.airframe, aero, airspeed, p.alpha);
    p.lift = f.lift;
    p.drag = f.drag;
    return complete_trim(bundle, p);
}

TrimPoint wingless_trim_at_speed(const ModelBundle& bundle, double airspeed) {
    if (!(airspeed >= 0.0))
        throw Error(ErrorKind::InvalidModel, "airspeed must be non-negative");
    const double f = bundle.airframe.parasite_drag_area;
    if (!(f >= 0.0)) throw Error(ErrorKind::InvalidModel, "parasite drag area must be non-negative");
    TrimPoint p;
    p.regime = airspeed == 0.0 ? Regime::Hover : Regime::Cruise;
    p.airspeed = airspeed;
    p.drag = dynamic_pressure(bundle.env, airspeed) * f;
    p.theta = rad_to_deg(std::atan(p.drag / bundle.airframe.weight(bundle.env)));
    p.gamma = p.theta;
    p.alpha = 0.0;
    return complete_trim(bundle, p);
}

TrimPoint hover_trim(const ModelBundle& bundle) {
    const double mount = bundle.airframe.mounting_angle;
    return hover_point(bundle, mount, mount);
}

} // namespace liftwing
