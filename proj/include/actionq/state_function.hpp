#pragma once

#include <complex>
#include <iosfwd>
#include <utility>
#include <vector>

#include "actionq/potential.hpp"
#include "actionq/quantizer.hpp"
#include "actionq/units.hpp"

namespace actionq {

/// Oscillatory amplitudes (A, B) matched to exponential amplitudes (C, D)
/// across a turning point:
///   A = (C e^{i pi/4} + D e^{-i pi/4}) / sqrt(2)
///   B = (C e^{-i pi/4} + D e^{i pi/4}) / sqrt(2)
/// The pair satisfies A + B = C + D and i(A - B) = D - C identically.
std::pair<std::complex<double>, std::complex<double>> connect(std::complex<double> c,
                                                              std::complex<double> d);

enum class RegionTag { LeftTail, Oscillatory, RightTail };

struct GridSpec {
    int samplesPerHalfWave = 64;  ///< oscillatory-region density; < 16 is an error
    double decayCutoff = 20.0;    ///< tails truncated where the decay exponent reaches this
};

/// Sampled piecewise state function of a two-turning-point level:
///   left tail   (1/sqrt2)      e^{-Phi(q)}
///   interior    cos(phi(q) - pi/4)           (phi measured from the left TP)
///   right tail  ((-1)^n/sqrt2) e^{-Phi(q)}   (Phi measured from the right TP)
/// rescaled so that the trapezoid integral of psi^2 equals 1.
struct StateFunctionTable {
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<RegionTag> regions;
    int nodeCount = 0;
    double norm = 0;       ///< trapezoid integral of psi^2 after rescaling
    double amplitude = 0;  ///< numeric amplitude applied to the unit form above
};

/// Builds the table for a level with a single classically allowed interval.
/// Multi-cut configurations throw std::invalid_argument; so does a grid
/// request below 16 samples per half-wave.
StateFunctionTable buildStateFunction(const PotentialSpec& spec, const UnitSystem& units,
                                      const EnergyLevel& level, const GridSpec& grid = {});

/// Strict sign changes across the sampled values.
int countNodes(const StateFunctionTable& table);

/// The commonly quoted closed-form normalization amplitude for the
/// constant-momentum well, sqrt( 2 P / ((pi (n + 1/2) + 1) hbar) ). Exposed
/// for comparison against the numeric normalization; it is never used as the
/// normalizer (see README for the measured discrepancy in the denominator).
struct ClosedFormNormConstant {
    double value = 0;
};
ClosedFormNormConstant closedFormNormConstant(double momentum, int n, const UnitSystem& units);

/// CSV serialization: header "q,psi,region", 15-significant-digit numbers.
void writeCsv(const StateFunctionTable& table, std::ostream& out);

}  // namespace actionq
