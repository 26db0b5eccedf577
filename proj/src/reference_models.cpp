#include "liftwing/reference_models.hpp"

namespace liftwing::reference {

LinearAeroModel aero() { return LinearAeroModel(0.08, -0.24, 0.01587, 0.14, -8.0, 18.0); }

Interval default_vp_domain() { return {0.0, 20.0}; }
Interval default_rpm_domain() { return {2000.0, 10000.0}; }

std::vector<PolyTerm> thrust_terms() {
    return {
        {0, 0, 9.397e-2},  {1, 0, 1.652e-3},   {0, 1, -4.175e-5},
        {2, 0, -7.915e-4}, {1, 1, -1.159e-5}, {0, 2, 1.498e-7},
    };
}

PolySurrogate thrust_surrogate() {
    return PolySurrogate(thrust_terms(), default_vp_domain(), default_rpm_domain(), OutputUnit::Newton);
}

std::vector<PolyTerm> torque_terms_as_printed() {
    return {
        {0, 0, 7.57e-2},   {1, 0, 1.984e-2},  {0, 1, -2.466e-5},
        {0, 2, -1.986e-3}, {1, 1, -5.308e-6}, {0, 2, 1.275e-7},
        {0, 3, -1.146e-5}, {2, 1, 1.562e-7},  {1, 2, 1.227e-10},
    };
}

Basis thrust_basis() { return {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}; }

Basis torque_basis() {
    return {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}};
}

PolySurrogate torque_surrogate() {
    // Produced by `liftwing fit prop --target torque` on data/prop_10x7_synthetic.dat
    // (R^2 = 0.99996); a unit test refits the fixture and compares.
    std::vector<PolyTerm> terms = {
        {0, 0, 0.0018354267447008225},  {1, 0, -0.00037440094228661066},
        {0, 1, 2.0512677075990496e-07}, {2, 0, -8.809288442063622e-05},
        {1, 1, 1.300509311388152e-06},  {0, 2, 2.9433588757909167e-09},
        {3, 0, -6.710798841662211e-06}, {2, 1, 3.5187067737270144e-08},
        {1, 2, -6.042651550157799e-11}, {0, 3, 3.818322480819518e-14},
    };
    return PolySurrogate(std::move(terms), default_vp_domain(), default_rpm_domain(),
                         OutputUnit::NewtonMetre);
}

EscCurrentModel esc() { return EscCurrentModel(73.05, 12.15, -0.511, {0.05, 0.6}); }

} // namespace liftwing::reference
