#include "actionq/turning_points.hpp"

#include <cmath>
#include <string>

#include "actionq/errors.hpp"

namespace actionq {

namespace {

constexpr int SCAN_BASE = 4096;
constexpr int SCAN_MAX = 1 << 16;
constexpr int MIN_FEATURE_SAMPLES = 8;

struct Crossing {
    double lo, hi;  // bracketing interval of a sign change of E - V
    bool rising;    // forbidden -> allowed when moving right
};

double refineCrossing(const PotentialSpec& spec, const UnitSystem& units, double energy,
                      double lo, double hi) {
    // g = E - V changes sign on [lo, hi]; bisect to relative tolerance 1e-12.
    double glo = energy - evalV(spec, units, lo);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-12 * std::fmax(1.0, std::fabs(mid)))
            break;
        const double gmid = energy - evalV(spec, units, mid);
        if ((glo > 0) == (gmid > 0)) {
            lo = mid;
            glo = gmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Interval defaultSearchInterval(const PotentialSpec& spec, const UnitSystem& units,
                               double energy) {
    if (const auto* c = std::get_if<CoulombRadialEffective>(&spec.family)) {
        if (!(energy < 0))
            throw SolverError("Coulomb cut search requires E < 0 (bound case)");
        return {1e-6, 1e3 * c->alpha / std::fabs(energy)};
    }
    if (const auto* w = std::get_if<ConstantMomentumWell>(&spec.family))
        return {w->q1, w->q2};

    // Full-line families: centre +- 50, scaled by the classical amplitude
    // estimate where the family has a closed form for it. The scaling also
    // shrinks the window at low energies, keeping razor-thin cuts near the
    // potential floor resolvable by the fixed-count scan.
    double center = 0.0, halfWidth = 50.0;
    if (const auto* h = std::get_if<Harmonic>(&spec.family)) {
        if (energy > 0)
            halfWidth *= std::sqrt(2.0 * energy / (units.mass * h->omega * h->omega));
    } else if (const auto* q4 = std::get_if<QuarticWell>(&spec.family)) {
        if (energy > 0)
            halfWidth *= std::pow(energy / q4->c4, 0.25);
    } else if (const auto* dw = std::get_if<DoubleWellQuartic>(&spec.family)) {
        if (energy > 0)
            halfWidth *= dw->a + std::pow(energy / dw->scale, 0.25);
    } else if (const auto* m = std::get_if<Morse>(&spec.family)) {
        center = m->center;
    }
    return {center - halfWidth, center + halfWidth};
}

CutSet findCuts(const PotentialSpec& spec, const UnitSystem& units, double energy) {
    return findCuts(spec, units, energy, defaultSearchInterval(spec, units, energy));
}

CutSet findCuts(const PotentialSpec& spec, const UnitSystem& units, double energy,
                const Interval& search) {
    validate(spec);
    validate(units);
    if (!(search.lo < search.hi) || !std::isfinite(search.lo) || !std::isfinite(search.hi))
        throw std::invalid_argument("findCuts: search interval must be finite and ordered");

    if (const auto* w = std::get_if<ConstantMomentumWell>(&spec.family)) {
        if (!(energy > 0))
            throw CutError(CutError::Kind::BelowFloor,
                           "energy below potential floor (well requires E > 0)");
        CutSet cs;
        cs.cuts = {{w->q1, w->q2}};
        cs.nu = 1;
        cs.mu = 4;  // each impenetrable wall reflects twice per period
        return cs;
    }

    const auto* coulomb = std::get_if<CoulombRadialEffective>(&spec.family);
    const bool clampLeftAllowed = coulomb && coulomb->pTheta(units) == 0.0;

    int nScan = SCAN_BASE;
    std::vector<Crossing> crossings;
    bool leftOpen = false;
    double spacing = 0;

    for (;;) {
        crossings.clear();
        spacing = (search.hi - search.lo) / nScan;
        double qPrev = search.lo;
        bool allowedPrev = energy - evalV(spec, units, qPrev) > 0;
        leftOpen = allowedPrev;
        if (leftOpen && !clampLeftAllowed)
            throw CutError(CutError::Kind::ReachesBoundary,
                           "allowed region reaches the search boundary (state unbound "
                           "below this search interval)");
        for (int i = 1; i <= nScan; ++i) {
            const double q = search.lo + i * spacing;
            const bool allowed = energy - evalV(spec, units, q) > 0;
            if (allowed != allowedPrev)
                crossings.push_back({qPrev, q, allowed});
            qPrev = q;
            allowedPrev = allowed;
        }
        if (allowedPrev)
            throw CutError(CutError::Kind::ReachesBoundary,
                           "allowed region reaches the search boundary (state unbound "
                           "at this energy)");

        if (crossings.empty() && !leftOpen)
            throw CutError(CutError::Kind::BelowFloor, "energy below potential floor");

        // Require every cut and inter-cut gap to span at least a few samples,
        // doubling the scan density until they do. Features are the spans
        // between consecutive crossings (plus the clamped boundary, if any).
        double minFeature = search.hi - search.lo;
        double prevEdge = leftOpen ? search.lo : crossings.front().hi;
        for (std::size_t i = leftOpen ? 0 : 1; i < crossings.size(); ++i) {
            minFeature = std::fmin(minFeature, crossings[i].lo - prevEdge);
            prevEdge = crossings[i].hi;
        }
        if (minFeature >= MIN_FEATURE_SAMPLES * spacing || nScan >= SCAN_MAX)
            break;
        nScan *= 2;
    }

    // Pair the crossings into cuts, refining each to a turning point.
    CutSet cs;
    std::size_t i = 0;
    if (leftOpen) {
        // Coulomb with Ptheta = 0: the inner turning point clamps to r = 0.
        if (crossings.empty() || crossings.front().rising)
            throw CutError(CutError::Kind::Degenerate,
                           "degenerate turning points: unpaired boundary crossing");
        const double right = refineCrossing(spec, units, energy, crossings[0].lo, crossings[0].hi);
        cs.cuts.push_back({0.0, right});
        i = 1;
    }
    for (; i < crossings.size(); i += 2) {
        if (!crossings[i].rising || i + 1 >= crossings.size() || crossings[i + 1].rising)
            throw CutError(CutError::Kind::Degenerate,
                           "degenerate turning points: unpaired crossing near a barrier top");
        const double left = refineCrossing(spec, units, energy, crossings[i].lo, crossings[i].hi);
        const double right =
            refineCrossing(spec, units, energy, crossings[i + 1].lo, crossings[i + 1].hi);
        cs.cuts.push_back({left, right});
    }

    // A cut or gap still narrower than the finest scan can resolve means a
    // barrier-top (or floor-touching) energy.
    double minFeature = search.hi - search.lo;
    for (const Cut& cut : cs.cuts)
        minFeature = std::fmin(minFeature, cut.qRight - cut.qLeft);
    for (std::size_t k = 0; k + 1 < cs.cuts.size(); ++k)
        minFeature = std::fmin(minFeature, cs.cuts[k + 1].qLeft - cs.cuts[k].qRight);
    if (minFeature < MIN_FEATURE_SAMPLES * spacing)
        throw CutError(CutError::Kind::Degenerate,
                       "degenerate turning points: separation " + std::to_string(minFeature) +
                           " below scan resolution");

    cs.nu = static_cast<int>(cs.cuts.size());
    cs.mu = 2 * cs.nu;  // two soft turning points per cut (the r = 0 clamp counts as one)
    return cs;
}

}  // namespace actionq
