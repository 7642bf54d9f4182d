#include "actionq/potential.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace actionq {

namespace {

constexpr double INF = std::numeric_limits<double>::infinity();

/// |E - V| below this (scaled by the local energy magnitude) classifies as a
/// turning point; scale-free and well below the quadrature tolerances.
constexpr double TP_TOL = 1e-12;

double requirePositive(double x, const char* name) {
    if (!(x > 0) || !std::isfinite(x))
        throw std::invalid_argument(std::string(name) + " must be finite and > 0");
    return x;
}

bool insideDomain(const Interval& dom, double q) { return q >= dom.lo && q <= dom.hi; }

}  // namespace

void validate(const UnitSystem& units) {
    requirePositive(units.hbar, "hbar");
    requirePositive(units.mass, "mass");
}

double CoulombRadialEffective::pTheta(const UnitSystem& units) const {
    return l ? units.hbar * (*l + 0.5) : pThetaExplicit;
}

void validate(const PotentialSpec& spec) {
    std::visit(
        [](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Harmonic>) {
                requirePositive(fam.omega, "omega");
            } else if constexpr (std::is_same_v<T, Morse>) {
                requirePositive(fam.depth, "D");
                requirePositive(fam.width, "a");
            } else if constexpr (std::is_same_v<T, QuarticWell>) {
                requirePositive(fam.c4, "c4");
            } else if constexpr (std::is_same_v<T, DoubleWellQuartic>) {
                requirePositive(fam.a, "a");
                requirePositive(fam.scale, "scale");
            } else if constexpr (std::is_same_v<T, CoulombRadialEffective>) {
                requirePositive(fam.alpha, "alpha");
                if (fam.l && *fam.l < 0)
                    throw std::invalid_argument("l must be >= 0");
                if (!fam.l && fam.pThetaExplicit < 0)
                    throw std::invalid_argument("ptheta must be >= 0");
            } else if constexpr (std::is_same_v<T, ConstantMomentumWell>) {
                if (!(fam.q2 > fam.q1))
                    throw std::invalid_argument("cmwell requires q2 > q1");
            }
        },
        spec.family);
}

Interval domainOf(const PotentialSpec& spec) {
    if (std::holds_alternative<CoulombRadialEffective>(spec.family))
        return {0.0, INF};  // open at 0: evalV rejects q <= 0
    return {-INF, INF};
}

double evalV(const PotentialSpec& spec, const UnitSystem& units, double q) {
    return std::visit(
        [&](const auto& fam) -> double {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Harmonic>) {
                const double w = fam.omega;
                return 0.5 * units.mass * w * w * q * q;
            } else if constexpr (std::is_same_v<T, Morse>) {
                const double u = 1.0 - std::exp(-fam.width * (q - fam.center));
                return fam.depth * (u * u - 1.0);
            } else if constexpr (std::is_same_v<T, QuarticWell>) {
                return fam.c4 * q * q * q * q;
            } else if constexpr (std::is_same_v<T, DoubleWellQuartic>) {
                const double u = q * q - fam.a * fam.a;
                return fam.scale * u * u;
            } else if constexpr (std::is_same_v<T, CoulombRadialEffective>) {
                if (!(q > 0))
                    throw std::domain_error("effective Coulomb potential requires r > 0");
                const double p = fam.pTheta(units);
                return -fam.alpha / q + 0.5 * p * p / (units.mass * q * q);
            } else {
                return 0.0;  // ConstantMomentumWell carries no V
            }
        },
        spec.family);
}

MomentumValue classicalMomentum(const PotentialSpec& spec, const UnitSystem& units,
                                double energy, double q) {
    if (!insideDomain(domainOf(spec), q))
        throw std::domain_error("coordinate outside the potential domain");

    if (const auto* well = std::get_if<ConstantMomentumWell>(&spec.family)) {
        if (!(energy > 0))
            throw std::invalid_argument("constant-momentum well requires E > 0");
        const double p = std::sqrt(2.0 * units.mass * energy);
        const Region region =
            (q >= well->q1 && q <= well->q2) ? Region::Allowed : Region::Forbidden;
        return {p, region};
    }

    const double v = evalV(spec, units, q);
    const double gap = energy - v;
    if (std::fabs(gap) <= TP_TOL * std::fmax(1.0, std::fabs(energy)))
        return {0.0, Region::TurningPoint};
    if (gap > 0)
        return {std::sqrt(2.0 * units.mass * gap), Region::Allowed};
    return {std::sqrt(-2.0 * units.mass * gap), Region::Forbidden};
}

PotentialFloor potentialFloor(const PotentialSpec& spec, const UnitSystem& units) {
    return std::visit(
        [&](const auto& fam) -> PotentialFloor {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Harmonic>) {
                return {0.0, 0.0};
            } else if constexpr (std::is_same_v<T, Morse>) {
                return {-fam.depth, fam.center};
            } else if constexpr (std::is_same_v<T, QuarticWell>) {
                return {0.0, 0.0};
            } else if constexpr (std::is_same_v<T, DoubleWellQuartic>) {
                return {0.0, fam.a};
            } else if constexpr (std::is_same_v<T, CoulombRadialEffective>) {
                const double p = fam.pTheta(units);
                if (p == 0.0)
                    return {-INF, 0.0};
                const double rMin = p * p / (units.mass * fam.alpha);
                const double vMin =
                    -0.5 * units.mass * fam.alpha * fam.alpha / (p * p);
                return {vMin, rMin};
            } else {
                return {0.0, 0.5 * (fam.q1 + fam.q2)};
            }
        },
        spec.family);
}

// --- mini-grammar parser -------------------------------------------------

namespace {

std::string toLower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return std::char_traits<char>::to_char_type(std::tolower(ch)); });
    return s;
}

double parseNumber(const std::string& text, const std::string& key) {
    std::size_t consumed = 0;
    double value = 0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("potential: bad number for key '" + key + "': " + text);
    }
    if (consumed != text.size() || !std::isfinite(value))
        throw std::invalid_argument("potential: bad number for key '" + key + "': " + text);
    return value;
}

using KeyMap = std::map<std::string, double>;

KeyMap parseKeys(const std::string& body) {
    KeyMap keys;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("potential: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        keys[key] = parseNumber(item.substr(eq + 1), key);
    }
    return keys;
}

double take(KeyMap& keys, const std::string& key) {
    auto it = keys.find(key);
    if (it == keys.end())
        throw std::invalid_argument("potential: missing required key '" + key + "'");
    const double value = it->second;
    keys.erase(it);
    return value;
}

double takeOr(KeyMap& keys, const std::string& key, double fallback) {
    auto it = keys.find(key);
    if (it == keys.end())
        return fallback;
    const double value = it->second;
    keys.erase(it);
    return value;
}

void rejectLeftovers(const KeyMap& keys, const std::string& family) {
    if (!keys.empty())
        throw std::invalid_argument("potential: unknown key '" + keys.begin()->first +
                                    "' for family '" + family + "'");
}

int asNonNegativeInt(double value, const std::string& key) {
    const int n = static_cast<int>(std::lround(value));
    if (n < 0 || std::fabs(value - n) > 0)
        throw std::invalid_argument("potential: key '" + key + "' must be a non-negative integer");
    return n;
}

}  // namespace

PotentialSpec parsePotential(const std::string& text) {
    const std::string lowered = toLower(text);
    const std::size_t colon = lowered.find(':');
    const std::string family = lowered.substr(0, colon);
    KeyMap keys = colon == std::string::npos ? KeyMap{} : parseKeys(lowered.substr(colon + 1));

    PotentialSpec spec;
    if (family == "harmonic") {
        spec.family = Harmonic{take(keys, "omega")};
    } else if (family == "morse") {
        Morse m;
        m.depth = take(keys, "d");
        m.width = take(keys, "a");
        m.center = takeOr(keys, "q0", 0.0);
        spec.family = m;
    } else if (family == "quartic") {
        spec.family = QuarticWell{take(keys, "c4")};
    } else if (family == "doublewell") {
        DoubleWellQuartic dw;
        dw.a = take(keys, "a");
        dw.scale = take(keys, "scale");
        spec.family = dw;
    } else if (family == "coulomb") {
        CoulombRadialEffective c;
        c.alpha = take(keys, "alpha");
        const bool hasL = keys.count("l") > 0;
        const bool hasP = keys.count("ptheta") > 0;
        if (hasL && hasP)
            throw std::invalid_argument("potential: coulomb takes l or ptheta, not both");
        if (hasP)
            c.pThetaExplicit = take(keys, "ptheta");
        else
            c.l = asNonNegativeInt(takeOr(keys, "l", 0.0), "l");
        spec.family = c;
    } else if (family == "cmwell") {
        ConstantMomentumWell w;
        w.q1 = take(keys, "q1");
        w.q2 = take(keys, "q2");
        spec.family = w;
    } else {
        throw std::invalid_argument("potential: unknown family '" + family + "'");
    }
    rejectLeftovers(keys, family);
    validate(spec);
    return spec;
}

}  // namespace actionq
