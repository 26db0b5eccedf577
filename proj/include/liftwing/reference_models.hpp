#pragma once

#include <vector>

#include "liftwing/aero.hpp"
#include "liftwing/fitting.hpp"
#include "liftwing/propulsion.hpp"

/// Reference coefficient sets for the lifting-wing quadrotor airframe and its propulsion chain.
namespace liftwing::reference {

/// C_L = 0.08 a - 0.24, C_D = 0.01587 a + 0.14, a in [-8, 18] deg.
LinearAeroModel aero();

/// Thrust [N] over (Vp [m/s], N [RPM]). The listed second term 1.652e-3 carries no
/// variable; it is read as the Vp coefficient, completing the quadratic basis.
std::vector<PolyTerm> thrust_terms();
PolySurrogate thrust_surrogate();

/// Torque terms exactly as listed in the source fit, duplicate N^2 entry included. Not loadable into a
/// PolySurrogate as-is (duplicate exponents) and wildly off in magnitude at operating
/// RPM; kept for reference only.
std::vector<PolyTerm> torque_terms_as_printed();

/// Full cubic in (Vp, N): the smallest complete basis containing every listed
/// torque monomial. Used to refit torque from propeller data.
Basis torque_basis();

/// Quadratic in (Vp, N) matching the thrust surrogate's terms.
Basis thrust_basis();

/// Default torque surrogate: torque_basis() fitted to data/prop_10x7_synthetic.dat.
PolySurrogate torque_surrogate();

/// I = 73.05 M^2 + 12.15 M - 0.511 on M in [0.05, 0.6] N*m.
EscCurrentModel esc();

Interval default_vp_domain();
Interval default_rpm_domain();

} // namespace liftwing::reference
