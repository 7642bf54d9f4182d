#pragma once

#include <optional>
#include <vector>

#include "actionq/action_integral.hpp"
#include "actionq/potential.hpp"
#include "actionq/units.hpp"

namespace actionq {

/// Target of the quantization condition J = 2 pi hbar (N + mu/4); for the
/// two-turning-point case mu = 2 this is the half-integer rule
/// 2 pi hbar (n + 1/2).
struct QuantizationTarget {
    int totalNodes = 0;
    int mu = 2;
    double targetAction = 0;
};

QuantizationTarget quantizationTarget(int totalNodes, int mu, const UnitSystem& units);

/// A converged bound level.
struct EnergyLevel {
    int n = 0;            ///< total node count N
    double energy = 0;
    double residual = 0;  ///< |J(E) - target| at the returned energy
    double bracketLo = 0;
    double bracketHi = 0;
};

struct SolveOptions {
    /// Tolerance on |J - target|; <= 0 selects the default 1e-9 * hbar.
    double tol = -1.0;
    /// Quadrature tolerance passed to the action integrals.
    double quadTol = 1e-10;
    /// Override for the cut-search interval (e.g. one well of a double well).
    std::optional<Interval> search;
    /// Bracket seed: an energy already known to lie below the level.
    std::optional<double> seedLo;
};

/// Solves J(E) = 2 pi hbar (N + mu(E)/4) for the level with N total nodes.
/// mu is re-evaluated at every trial energy. Brackets by geometric expansion
/// up from the potential floor (families with a dissociation limit expand
/// toward it by halving the gap), then bisection and a secant polish.
/// Throws SolverError: "unbounded search" when no bracket exists below the
/// dissociation/expansion cap, "level straddles topology change" when the
/// turning-point count flips inside the final bracket (barrier-top energy).
EnergyLevel solveLevel(const PotentialSpec& spec, const UnitSystem& units, int totalNodes,
                       const SolveOptions& options = {});

/// Levels N = 0..nMax, strictly increasing in energy; each level's energy
/// seeds the next bracket. Errors are annotated with the failing N.
std::vector<EnergyLevel> spectrum(const PotentialSpec& spec, const UnitSystem& units,
                                  int nMax, const SolveOptions& options = {});

/// Quantized action of a rotation (cyclic coordinate, constant momentum):
/// J = 2 pi hbar n and P = J / (2 pi) = hbar n.
struct RotationAction {
    double action = 0;
    double momentum = 0;
};
RotationAction rotationAction(int n, const UnitSystem& units);

}  // namespace actionq
