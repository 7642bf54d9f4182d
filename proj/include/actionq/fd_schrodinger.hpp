#pragma once

#include <vector>

#include "actionq/potential.hpp"
#include "actionq/units.hpp"

namespace actionq {

/// Uniform grid for the finite-difference reference solver.
struct FdGrid {
    double qMin = 0;
    double qMax = 0;
    int points = 0;  ///< >= 3, including both Dirichlet endpoints

    double spacing() const { return (qMax - qMin) / (points - 1); }
};

/// The `count` lowest eigenvalues of the central-difference discretization of
///   -(hbar^2/2m) psi'' + V psi = E psi
/// with Dirichlet boundaries, each located by Sturm-sequence bisection on the
/// symmetric tridiagonal matrix to relative tolerance 1e-12.
///
/// For the effective Coulomb family the quantum centrifugal term
/// hbar^2 l(l+1) / (2 m r^2) replaces the classical Ptheta^2 / (2 m r^2), so
/// the spec must carry an integer l (std::invalid_argument otherwise). An
/// eigenfunction carrying mass > 1e-8 within 2h of a boundary throws
/// GridError ("grid too small"); the check is skipped for the hard-wall
/// ConstantMomentumWell, whose boundaries are exact.
std::vector<double> fdEigenvalues(const PotentialSpec& spec, const UnitSystem& units,
                                  const FdGrid& grid, int count);

}  // namespace actionq
