#include "liftwing/aero.hpp"

#include <cmath>
#include <sstream>

#include "liftwing/error.hpp"

namespace liftwing {

namespace {

void require(bool condition, const char* message) {
    if (!condition) throw Error(ErrorKind::InvalidModel, message);
}

void check_alpha(const LinearAeroModel& model, double alpha_deg) {
    if (!model.in_domain(alpha_deg)) {
        std::ostringstream os;
        os << "angle of attack " << alpha_deg << " deg outside aero domain [" << model.alpha_min()
           << ", " << model.alpha_max() << "]";
        throw Error(ErrorKind::OutOfAeroDomain, os.str());
    }
}

} // namespace

LinearAeroModel::LinearAeroModel(double lift_slope, double lift_intercept, double drag_slope,
                                 double drag_intercept, double alpha_min, double alpha_max)
    : lift_slope_(lift_slope), lift_intercept_(lift_intercept), drag_slope_(drag_slope),
      drag_intercept_(drag_intercept), alpha_min_(alpha_min), alpha_max_(alpha_max) {
    require(std::isfinite(lift_slope) && std::isfinite(lift_intercept) &&
                std::isfinite(drag_slope) && std::isfinite(drag_intercept),
            "aero coefficients must be finite");
    require(std::isfinite(alpha_min) && std::isfinite(alpha_max) && alpha_min < alpha_max,
            "aero domain requires alpha_min < alpha_max");
    // Drag is affine, so positivity at both ends covers the whole window.
    require(drag_slope * alpha_min + drag_intercept > 0.0 &&
                drag_slope * alpha_max + drag_intercept > 0.0,
            "drag coefficient must be positive over the aero domain");
}

void Environment::validate() const {
    require(air_density > 0.0 && std::isfinite(air_density), "air density must be positive");
    require(gravity > 0.0 && std::isfinite(gravity), "gravity must be positive");
}

void Airframe::validate() const {
    require(mass > 0.0 && std::isfinite(mass), "mass must be positive");
    require(reference_area >= 0.0 && std::isfinite(reference_area),
            "reference area must be non-negative");
    require(rotor_count >= 1, "rotor count must be at least 1");
    require(prop_diameter > 0.0, "propeller diameter must be positive");
    require(safety_margin >= 0.0 && safety_margin < stall_alpha,
            "safety margin must satisfy 0 <= margin < stall angle");
    require(parasite_drag_area >= 0.0, "parasite drag area must be non-negative");
    require(std::isfinite(rotor_tilt) && std::isfinite(mounting_angle),
            "angles must be finite");
}

double lift_coefficient(const LinearAeroModel& model, double alpha_deg) {
    check_alpha(model, alpha_deg);
    return model.lift_slope() * alpha_deg + model.lift_intercept();
}

double drag_coefficient(const LinearAeroModel& model, double alpha_deg) {
    check_alpha(model, alpha_deg);
    return model.drag_slope() * alpha_deg + model.drag_intercept();
}

double dynamic_pressure(const Environment& env, double airspeed) noexcept {
    return 0.5 * env.air_density * airspeed * airspeed;
}

AeroForce aero_force(const Environment& env, const Airframe& airframe,
                     const LinearAeroModel& model, double airspeed, double alpha_deg) {
    if (!(airspeed >= 0.0)) throw Error(ErrorKind::InvalidModel, "airspeed must be non-negative");
    const double qs = dynamic_pressure(env, airspeed) * airframe.reference_area;
    return {qs * lift_coefficient(model, alpha_deg), qs * drag_coefficient(model, alpha_deg)};
}

} // namespace liftwing
