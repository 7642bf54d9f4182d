#include "actionq/coulomb.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace actionq {

namespace {

void validate(const CoulombParams& cp) {
    if (!(cp.alpha > 0) || !(cp.mass > 0) || !(cp.hbar > 0))
        throw std::invalid_argument("Coulomb parameters must all be > 0");
}

void validate(const SeparationConstants& sc) {
    if (sc.pTheta < std::fabs(sc.pPhi))
        throw std::invalid_argument("separation constants require P_theta >= |P_phi|");
    if (!(sc.energy < 0))
        throw std::invalid_argument("bound Coulomb motion requires E < 0");
}

}  // namespace

AngularActions angularActions(const SeparationConstants& sc) {
    validate(sc);
    return {2.0 * M_PI * sc.pPhi, 2.0 * M_PI * (sc.pTheta - sc.pPhi)};
}

double radialActionClosed(const CoulombParams& cp, const SeparationConstants& sc) {
    validate(cp);
    validate(sc);
    const double jr =
        -2.0 * M_PI * sc.pTheta + M_PI * cp.alpha * std::sqrt(-2.0 * cp.mass / sc.energy);
    if (jr < 0)
        throw std::invalid_argument("no radial libration at these constants (J_r < 0)");
    return jr;
}

double energyFromActions(const CoulombParams& cp, const ActionTriple& actions) {
    validate(cp);
    const double sum = actions.jR + actions.jTheta + actions.jPhi;
    if (!(sum > 0))
        throw std::domain_error("energyFromActions requires a positive action sum");
    return -2.0 * M_PI * M_PI * cp.alpha * cp.alpha * cp.mass / (sum * sum);
}

double coulombSpectrum(const CoulombParams& cp, const QuantumNumbers& qn) {
    validate(cp);
    if (qn.nR < 0 || qn.nTheta < 0 || qn.nPhi < 0)
        throw std::invalid_argument("quantum numbers must be >= 0");

    // Half-integer rule for the two librations, integer rule for the rotation.
    const double twoPiHbar = 2.0 * M_PI * cp.hbar;
    ActionTriple actions;
    actions.jR = twoPiHbar * (qn.nR + 0.5);
    actions.jTheta = twoPiHbar * (qn.nTheta + 0.5);
    actions.jPhi = twoPiHbar * qn.nPhi;
    const double inserted = energyFromActions(cp, actions);

    const double n = qn.principal();
    const double closed = -cp.alpha * cp.alpha * cp.mass / (2.0 * n * n * cp.hbar * cp.hbar);
    if (std::fabs(inserted - closed) > 1e-12 * std::fabs(closed))
        throw std::logic_error("quantized action insertion disagrees with the closed form");
    return inserted;
}

double circularOrbitEnergy(const CoulombParams& cp, double pTheta) {
    validate(cp);
    if (!(pTheta > 0))
        throw std::invalid_argument("circular orbit requires P_theta > 0");
    return -0.5 * cp.mass * cp.alpha * cp.alpha / (pTheta * pTheta);
}

}  // namespace actionq
