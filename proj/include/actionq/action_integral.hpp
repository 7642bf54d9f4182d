#pragma once

#include <optional>

#include "actionq/potential.hpp"
#include "actionq/turning_points.hpp"
#include "actionq/units.hpp"

namespace actionq {

/// Phase-space integrals at a trial energy.
struct ActionValue {
    double oneWay = 0;       ///< sum over cuts of the one-way integral of p dq
    double fullPeriod = 0;   ///< J = 2 * oneWay (libration)
    int mu = 0;              ///< turning-point count of the underlying CutSet
    double estimatedError = 0;
};

enum class PhaseKind { OscillatoryPhase, DecayExponent };

/// Phase accumulated from a reference turning point, always >= 0.
struct PhaseValue {
    double phi = 0;
    PhaseKind kind = PhaseKind::OscillatoryPhase;
};

/// One-way integral of sqrt(2m(E-V)) over a single cut produced by findCuts
/// at this energy. The integrand's square-root turning-point behaviour is
/// absorbed by the sine substitution; convergence to
/// |error| <= tol * max(1, |I|) or QuadratureError.
ActionValue actionOverCut(const PotentialSpec& spec, const UnitSystem& units,
                          double energy, const Cut& cut, double tol = 1e-10);

/// Full-period action over all cuts at this energy, J = 2 sum of one-way
/// integrals, with mu taken from the CutSet. Propagates findCuts errors.
ActionValue totalAction(const PotentialSpec& spec, const UnitSystem& units,
                        double energy, double tol = 1e-10,
                        const std::optional<Interval>& search = std::nullopt);

/// Phase (1/hbar) integral of |p| between a turning point of this energy and
/// q. OscillatoryPhase when the path lies in the allowed region,
/// DecayExponent in the forbidden one; a path spanning both kinds throws
/// std::invalid_argument ("mixed-region phase").
PhaseValue phaseAt(const PotentialSpec& spec, const UnitSystem& units, double energy,
                   double referenceTp, double q, double tol = 1e-10);

}  // namespace actionq
