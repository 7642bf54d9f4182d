#include "actionq/state_function.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "actionq/errors.hpp"
#include "actionq/format.hpp"
#include "actionq/quadrature.hpp"
#include "actionq/turning_points.hpp"

namespace actionq {

std::pair<std::complex<double>, std::complex<double>> connect(std::complex<double> c,
                                                              std::complex<double> d) {
    const std::complex<double> ePlus = std::polar(1.0, 0.25 * M_PI);
    const std::complex<double> eMinus = std::conj(ePlus);
    const double invSqrt2 = 1.0 / std::sqrt(2.0);
    return {(c * ePlus + d * eMinus) * invSqrt2, (c * eMinus + d * ePlus) * invSqrt2};
}

namespace {

constexpr std::size_t TAIL_STEP_CAP = 2'000'000;

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    double sum = 0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        sum += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
    return sum;
}

struct TailPoint {
    double q;
    double phi;  // decay exponent accumulated from the turning point
};

}  // namespace

StateFunctionTable buildStateFunction(const PotentialSpec& spec, const UnitSystem& units,
                                      const EnergyLevel& level, const GridSpec& grid) {
    validate(spec);
    validate(units);
    if (grid.samplesPerHalfWave < 16)
        throw std::invalid_argument(
            "state function grid too coarse: fewer than 16 samples per half-wave");
    if (!(grid.decayCutoff > 0))
        throw std::invalid_argument("decay cutoff must be > 0");

    const double energy = level.energy;
    const CutSet cs = findCuts(spec, units, energy);
    if (cs.nu != 1)
        throw std::invalid_argument(
            "state function requires a single classically allowed interval");
    const double q1 = cs.cuts[0].qLeft;
    const double q2 = cs.cuts[0].qRight;
    const double hbar = units.hbar;

    auto magnitude = [&](double q) { return classicalMomentum(spec, units, energy, q).magnitude; };
    auto segmentPhase = [&](double a, double b) {
        return integrateSqrtEndpoints(magnitude, a, b, 1e-12).value / hbar;
    };

    // Shortest local half-wave inside the cut sets the oscillatory sampling.
    double pMax = 0;
    for (int i = 1; i < 1024; ++i)
        pMax = std::fmax(pMax, magnitude(q1 + (q2 - q1) * i / 1024.0));
    if (!(pMax > 0))
        throw SolverError("state function: vanishing momentum across the cut");

    const double length = q2 - q1;
    const std::size_t nOsc = std::max<std::size_t>(
        65, static_cast<std::size_t>(
                std::ceil(length * pMax / (M_PI * hbar) * grid.samplesPerHalfWave)) +
                1);

    std::vector<double> oscQ(nOsc), oscPhi(nOsc);
    for (std::size_t i = 0; i < nOsc; ++i)
        oscQ[i] = q1 + length * i / (nOsc - 1);
    oscQ.back() = q2;
    for (std::size_t i = 1; i < nOsc; ++i)
        oscPhi[i] = oscPhi[i - 1] + segmentPhase(oscQ[i - 1], oscQ[i]);

    // Exponential tails marched outward until the decay exponent reaches the
    // cutoff; the r -> 0 side of the radial domain approaches geometrically
    // and truncates at a negligible radius instead.
    const bool radial = std::holds_alternative<CoulombRadialEffective>(spec.family);
    const double stepBase = length / (nOsc - 1);
    auto buildTail = [&](double tp, int dir) {
        std::vector<TailPoint> points;
        double q = tp, phi = 0;
        while (points.size() < TAIL_STEP_CAP) {
            double step = stepBase;
            if (radial && dir < 0) {
                if (q <= 1e-12 * tp)
                    break;
                step = std::fmin(step, 0.5 * q);
            }
            const double qn = q + dir * step;
            phi += segmentPhase(std::fmin(q, qn), std::fmax(q, qn));
            points.push_back({qn, phi});
            q = qn;
            if (phi >= grid.decayCutoff)
                break;
        }
        if (points.size() >= TAIL_STEP_CAP)
            throw SolverError("state function: tail construction exceeded step cap");
        return points;
    };
    const std::vector<TailPoint> leftTail = buildTail(q1, -1);
    const std::vector<TailPoint> rightTail = buildTail(q2, +1);

    StateFunctionTable table;
    const std::size_t total = leftTail.size() + nOsc + rightTail.size();
    table.grid.reserve(total);
    table.values.reserve(total);
    table.regions.reserve(total);

    const double invSqrt2 = 1.0 / std::sqrt(2.0);
    const double paritySign = level.n % 2 == 0 ? 1.0 : -1.0;
    for (auto it = leftTail.rbegin(); it != leftTail.rend(); ++it) {
        table.grid.push_back(it->q);
        table.values.push_back(invSqrt2 * std::exp(-it->phi));
        table.regions.push_back(RegionTag::LeftTail);
    }
    for (std::size_t i = 0; i < nOsc; ++i) {
        table.grid.push_back(oscQ[i]);
        table.values.push_back(std::cos(oscPhi[i] - 0.25 * M_PI));
        table.regions.push_back(RegionTag::Oscillatory);
    }
    for (const TailPoint& p : rightTail) {
        table.grid.push_back(p.q);
        table.values.push_back(paritySign * invSqrt2 * std::exp(-p.phi));
        table.regions.push_back(RegionTag::RightTail);
    }

    std::vector<double> density(table.values.size());
    for (std::size_t i = 0; i < table.values.size(); ++i)
        density[i] = table.values[i] * table.values[i];
    const double rawNorm = trapezoid(table.grid, density);
    if (!(rawNorm > 0))
        throw SolverError("state function: vanishing norm integral");
    table.amplitude = 1.0 / std::sqrt(rawNorm);
    for (double& v : table.values)
        v *= table.amplitude;
    for (std::size_t i = 0; i < table.values.size(); ++i)
        density[i] = table.values[i] * table.values[i];
    table.norm = trapezoid(table.grid, density);
    table.nodeCount = countNodes(table);
    return table;
}

int countNodes(const StateFunctionTable& table) {
    int nodes = 0;
    for (std::size_t i = 0; i + 1 < table.values.size(); ++i)
        if (table.values[i] * table.values[i + 1] < 0)
            ++nodes;
    return nodes;
}

ClosedFormNormConstant closedFormNormConstant(double momentum, int n, const UnitSystem& units) {
    validate(units);
    if (!(momentum > 0))
        throw std::invalid_argument("closedFormNormConstant requires P > 0");
    if (n < 0)
        throw std::invalid_argument("closedFormNormConstant requires n >= 0");
    return {std::sqrt(2.0 * momentum / ((M_PI * (n + 0.5) + 1.0) * units.hbar))};
}

void writeCsv(const StateFunctionTable& table, std::ostream& out) {
    out << "q,psi,region\n";
    for (std::size_t i = 0; i < table.grid.size(); ++i) {
        const char* tag = "oscillatory";
        if (table.regions[i] == RegionTag::LeftTail)
            tag = "left_tail";
        else if (table.regions[i] == RegionTag::RightTail)
            tag = "right_tail";
        out << formatG15(table.grid[i]) << ',' << formatG15(table.values[i]) << ',' << tag
            << '\n';
    }
}

}  // namespace actionq
