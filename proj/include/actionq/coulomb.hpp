#pragma once

#include "actionq/units.hpp"

namespace actionq {

/// Closed-form action-angle treatment of the attractive Coulomb problem
/// V(r) = -alpha/r, bound case E < 0, separated in spherical coordinates.

struct CoulombParams {
    double alpha = 1.0;
    double mass = 1.0;
    double hbar = 1.0;
};

/// Separation constants of the polar and azimuthal motion plus the energy.
struct SeparationConstants {
    double pTheta = 0;  ///< >= |pPhi|
    double pPhi = 0;
    double energy = 0;  ///< < 0
};

struct ActionTriple {
    double jR = 0;
    double jTheta = 0;
    double jPhi = 0;
};

/// Quantum labels; l = nTheta + nPhi and the principal number n = nR + l + 1.
struct QuantumNumbers {
    int nR = 0;
    int nTheta = 0;
    int nPhi = 0;

    int l() const { return nTheta + nPhi; }
    int principal() const { return nR + l() + 1; }
};

struct AngularActions {
    double jPhi = 0;
    double jTheta = 0;
};

/// J_phi = 2 pi P_phi and J_theta = 2 pi (P_theta - P_phi), the closed forms
/// of the azimuthal and polar loop integrals. Throws std::invalid_argument
/// when P_theta < |P_phi| (no polar libration).
AngularActions angularActions(const SeparationConstants& sc);

/// Closed form of the radial loop integral,
/// J_r = -2 pi P_theta + pi alpha sqrt(-2m/E). Throws std::invalid_argument
/// for E >= 0 or when the result is negative (no radial libration).
double radialActionClosed(const CoulombParams& cp, const SeparationConstants& sc);

/// E = -2 pi^2 alpha^2 m / (J_r + J_theta + J_phi)^2.
double energyFromActions(const CoulombParams& cp, const ActionTriple& actions);

/// Bound-state energy -alpha^2 m / (2 (n_r + l + 1)^2 hbar^2), computed by
/// inserting the quantized actions (half-integer rule for the r and theta
/// librations, integer rule for the phi rotation) into energyFromActions.
double coulombSpectrum(const CoulombParams& cp, const QuantumNumbers& qn);

/// Circular-orbit energy at a given P_theta, the floor of the radial motion:
/// -m alpha^2 / (2 P_theta^2).
double circularOrbitEnergy(const CoulombParams& cp, double pTheta);

}  // namespace actionq
