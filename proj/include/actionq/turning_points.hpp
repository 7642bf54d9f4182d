#pragma once

#include <vector>

#include "actionq/potential.hpp"
#include "actionq/units.hpp"

namespace actionq {

/// One maximal classically allowed interval at a trial energy.
struct Cut {
    double qLeft;
    double qRight;
};

/// The allowed intervals found at a trial energy, with the turning-point
/// count mu. Soft turning points contribute 1 each; the impenetrable walls
/// of ConstantMomentumWell contribute 2 each, so the two-wall case carries
/// mu = 4 and the combined quantization condition becomes integer-plus-one.
struct CutSet {
    std::vector<Cut> cuts;
    int mu = 0;
    int nu = 0;  ///< number of cuts
};

/// Default bracket for the cut scan: full-line families use the potential
/// centre +- 50, widened by the classical amplitude estimate where one is
/// available; the effective Coulomb potential uses [1e-6, 1e3 alpha/|E|].
Interval defaultSearchInterval(const PotentialSpec& spec, const UnitSystem& units,
                               double energy);

/// Locates all maximal subintervals of `search` where E > V. Endpoints are
/// refined by bisection to relative tolerance 1e-12. The sign scan starts at
/// 4096 uniform samples and doubles (up to 2^16) while any cut or inter-cut
/// gap spans fewer than 8 samples. Throws CutError:
///   BelowFloor      - no allowed interval anywhere in `search`
///   Degenerate      - a cut or gap narrower than the finest scan resolution
///   ReachesBoundary - E > V at a search endpoint (state unbound there);
///                     exempt: the r -> 0 end of the Coulomb potential with
///                     Ptheta = 0, where the inner endpoint clamps to 0.
CutSet findCuts(const PotentialSpec& spec, const UnitSystem& units, double energy,
                const Interval& search);

/// Same with the default search interval.
CutSet findCuts(const PotentialSpec& spec, const UnitSystem& units, double energy);

}  // namespace actionq
