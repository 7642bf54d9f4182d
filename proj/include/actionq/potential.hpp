#pragma once

#include <optional>
#include <string>
#include <variant>

#include "actionq/units.hpp"

namespace actionq {

/// A coordinate interval; lo/hi may be -+infinity for half- or full-line domains.
struct Interval {
    double lo;
    double hi;
};

enum class Region { Allowed, Forbidden, TurningPoint };

/// |p| together with the classical classification of the evaluation point.
struct MomentumValue {
    double magnitude = 0;  ///< >= 0
    Region region = Region::Allowed;
};

// --- potential families ------------------------------------------------

/// V = m omega^2 q^2 / 2
struct Harmonic {
    double omega = 1.0;
};

/// V = D (1 - exp(-a (q - q0)))^2 - D; dissociation limit at V = 0.
struct Morse {
    double depth = 1.0;
    double width = 1.0;
    double center = 0.0;
};

/// V = c4 q^4
struct QuarticWell {
    double c4 = 1.0;
};

/// V = scale (q^2 - a^2)^2; barrier of height scale a^4 at q = 0.
struct DoubleWellQuartic {
    double a = 1.0;
    double scale = 1.0;
};

/// Effective radial potential V = -alpha/r + Ptheta^2 / (2 m r^2) on r > 0.
/// The angular constant is either a literal Ptheta or an integer l, in which
/// case Ptheta = hbar (l + 1/2). The integer form is the one the
/// finite-difference reference solver can handle (it needs l(l+1)).
struct CoulombRadialEffective {
    double alpha = 1.0;
    std::optional<int> l;
    double pThetaExplicit = 0.0;

    double pTheta(const UnitSystem& units) const;
};

/// Free motion between impenetrable walls at q1 < q2. Carries no V; the
/// momentum magnitude is sqrt(2 m E) everywhere and the walls separate the
/// allowed interval from the decaying tails.
struct ConstantMomentumWell {
    double q1 = 0.0;
    double q2 = 1.0;
};

using PotentialFamily = std::variant<Harmonic, Morse, QuarticWell, DoubleWellQuartic,
                                     CoulombRadialEffective, ConstantMomentumWell>;

/// Declarative description of a potential model.
struct PotentialSpec {
    PotentialFamily family;
};

/// Throws std::invalid_argument on parameter violations (non-positive
/// omega/D/a/c4/alpha/scale, q2 <= q1, negative l).
void validate(const PotentialSpec& spec);

/// V(q). Throws std::domain_error when q lies outside the family domain.
double evalV(const PotentialSpec& spec, const UnitSystem& units, double q);

/// Classical momentum magnitude at energy E: sqrt(2m(E-V)) in the allowed
/// region, sqrt(2m(V-E)) in the forbidden one. Points with
/// |E - V| <= 1e-12 max(1, |E|) classify as TurningPoint with magnitude 0.
MomentumValue classicalMomentum(const PotentialSpec& spec, const UnitSystem& units,
                                double energy, double q);

/// Maximal interval on which evalV is defined.
Interval domainOf(const PotentialSpec& spec);

/// Global minimum of the potential and its location. For the effective
/// Coulomb potential with Ptheta = 0 the value is -infinity.
struct PotentialFloor {
    double value;
    double at;
};
PotentialFloor potentialFloor(const PotentialSpec& spec, const UnitSystem& units);

/// Parses the CLI mini-grammar "family:key=value,...", case-insensitively.
/// Families: harmonic (omega), morse (d, a, q0), quartic (c4),
/// doublewell (a, scale), coulomb (alpha, l | ptheta), cmwell (q1, q2).
/// Unknown keys, malformed numbers and parameter violations throw
/// std::invalid_argument.
PotentialSpec parsePotential(const std::string& text);

}  // namespace actionq
