#include "actionq/action_integral.hpp"

#include <cmath>
#include <stdexcept>

#include "actionq/errors.hpp"
#include "actionq/quadrature.hpp"

namespace actionq {

namespace {

/// sqrt(2m(E-V)) clipped at zero; exact for the hard-wall family.
double allowedMagnitude(const PotentialSpec& spec, const UnitSystem& units, double energy,
                        double q) {
    if (std::holds_alternative<ConstantMomentumWell>(spec.family))
        return std::sqrt(2.0 * units.mass * energy);
    const double gap = energy - evalV(spec, units, q);
    return gap > 0 ? std::sqrt(2.0 * units.mass * gap) : 0.0;
}

double forbiddenMagnitude(const PotentialSpec& spec, const UnitSystem& units, double energy,
                          double q) {
    if (std::holds_alternative<ConstantMomentumWell>(spec.family))
        return std::sqrt(2.0 * units.mass * energy);
    const double gap = evalV(spec, units, q) - energy;
    return gap > 0 ? std::sqrt(2.0 * units.mass * gap) : 0.0;
}

}  // namespace

ActionValue actionOverCut(const PotentialSpec& spec, const UnitSystem& units, double energy,
                          const Cut& cut, double tol) {
    if (!(cut.qRight >= cut.qLeft))
        throw std::invalid_argument("actionOverCut: cut must be ordered");
    const QuadratureResult r = integrateSqrtEndpoints(
        [&](double q) { return allowedMagnitude(spec, units, energy, q); }, cut.qLeft,
        cut.qRight, tol);
    ActionValue a;
    a.oneWay = r.value;
    a.fullPeriod = 2.0 * r.value;
    a.mu = 2;
    a.estimatedError = r.errorEstimate;
    return a;
}

ActionValue totalAction(const PotentialSpec& spec, const UnitSystem& units, double energy,
                        double tol, const std::optional<Interval>& search) {
    const CutSet cs = search ? findCuts(spec, units, energy, *search)
                             : findCuts(spec, units, energy);
    ActionValue total;
    total.mu = cs.mu;
    for (const Cut& cut : cs.cuts) {
        const ActionValue part = actionOverCut(spec, units, energy, cut, tol);
        total.oneWay += part.oneWay;
        total.estimatedError += part.estimatedError;
    }
    total.fullPeriod = 2.0 * total.oneWay;
    return total;
}

PhaseValue phaseAt(const PotentialSpec& spec, const UnitSystem& units, double energy,
                   double referenceTp, double q, double tol) {
    validate(units);
    const Interval dom = domainOf(spec);
    if (q < dom.lo || q > dom.hi || referenceTp < dom.lo || referenceTp > dom.hi)
        throw std::domain_error("phaseAt: coordinate outside the potential domain");

    // The reference must sit on a turning point of this energy (a wall for
    // the hard-wall family). Checked loosely: refined turning points pass,
    // arbitrary interior points do not.
    if (const auto* w = std::get_if<ConstantMomentumWell>(&spec.family)) {
        const double scale = std::fmax(1.0, std::fmax(std::fabs(w->q1), std::fabs(w->q2)));
        if (std::fmin(std::fabs(referenceTp - w->q1), std::fabs(referenceTp - w->q2)) >
            1e-9 * scale)
            throw std::invalid_argument("phaseAt: reference must be a wall of the well");
    } else {
        const double v = evalV(spec, units, referenceTp);
        if (std::fabs(energy - v) > 1e-6 * std::fmax(1.0, std::fabs(energy)))
            throw std::invalid_argument("phaseAt: reference is not a turning point of this energy");
    }

    const double lo = std::fmin(referenceTp, q);
    const double hi = std::fmax(referenceTp, q);
    if (hi - lo <= 1e-15 * std::fmax(1.0, std::fabs(hi)))
        return {0.0, PhaseKind::OscillatoryPhase};

    // Classify the open interior; a path through both kinds has no single
    // phase of either type.
    int nAllowed = 0, nForbidden = 0;
    const int probes = 64;
    for (int i = 1; i <= probes; ++i) {
        const double x = lo + (hi - lo) * i / (probes + 1.0);
        switch (classicalMomentum(spec, units, energy, x).region) {
            case Region::Allowed: ++nAllowed; break;
            case Region::Forbidden: ++nForbidden; break;
            case Region::TurningPoint: break;
        }
    }
    if (nAllowed > 0 && nForbidden > 0)
        throw std::invalid_argument(
            "phaseAt: mixed-region phase (path crosses another turning point)");

    const bool oscillatory = nAllowed >= nForbidden;
    const QuadratureResult r = integrateSqrtEndpoints(
        [&](double x) {
            return oscillatory ? allowedMagnitude(spec, units, energy, x)
                               : forbiddenMagnitude(spec, units, energy, x);
        },
        lo, hi, tol);
    return {r.value / units.hbar,
            oscillatory ? PhaseKind::OscillatoryPhase : PhaseKind::DecayExponent};
}

}  // namespace actionq
