#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "actionq/errors.hpp"
#include "actionq/turning_points.hpp"

using namespace actionq;

namespace {
const UnitSystem kUnits{};

bool cutCovers(const CutSet& cs, double q) {
    for (const Cut& c : cs.cuts)
        if (q > c.qLeft && q < c.qRight)
            return true;
    return false;
}
}  // namespace

TEST_CASE("harmonic cut at E = 1/2 is (-1, 1) with mu = 2") {
    const CutSet cs = findCuts({Harmonic{1.0}}, kUnits, 0.5);
    REQUIRE(cs.nu == 1);
    CHECK(cs.mu == 2);
    CHECK(cs.cuts[0].qLeft == doctest::Approx(-1.0).epsilon(1e-11));
    CHECK(cs.cuts[0].qRight == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("double well at E = 1/2: cuts at the closed-form quartic roots") {
    // (q^2 - 1)^2 = 1/2  =>  q^2 = 1 -+ sqrt(1/2)
    const double inner = std::sqrt(1.0 - std::sqrt(0.5));
    const double outer = std::sqrt(1.0 + std::sqrt(0.5));
    const CutSet cs = findCuts({DoubleWellQuartic{1.0, 1.0}}, kUnits, 0.5);
    REQUIRE(cs.nu == 2);
    CHECK(cs.mu == 4);
    CHECK(cs.cuts[0].qLeft == doctest::Approx(-outer).epsilon(1e-10));
    CHECK(cs.cuts[0].qRight == doctest::Approx(-inner).epsilon(1e-10));
    CHECK(cs.cuts[1].qLeft == doctest::Approx(inner).epsilon(1e-10));
    CHECK(cs.cuts[1].qRight == doctest::Approx(outer).epsilon(1e-10));
}

TEST_CASE("quartic well at E = 1 spans (-1, 1)") {
    const CutSet cs = findCuts({QuarticWell{1.0}}, kUnits, 1.0);
    REQUIRE(cs.nu == 1);
    CHECK(cs.mu == 2);
    CHECK(cs.cuts[0].qLeft == doctest::Approx(-1.0).epsilon(1e-11));
    CHECK(cs.cuts[0].qRight == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("constant-momentum well: walls are the cut, each counting twice") {
    const CutSet cs = findCuts({ConstantMomentumWell{0.0, M_PI}}, kUnits, 2.0);
    REQUIRE(cs.nu == 1);
    CHECK(cs.mu == 4);
    CHECK(cs.cuts[0].qLeft == 0.0);
    CHECK(cs.cuts[0].qRight == M_PI);
    CHECK_THROWS_AS(findCuts({ConstantMomentumWell{0.0, M_PI}}, kUnits, -1.0), CutError);
}

TEST_CASE("cuts agree with dense sampling of E - V > 0") {
    const PotentialSpec spec{DoubleWellQuartic{1.5, 0.7}};
    const double energy = 1.1;
    const CutSet cs = findCuts(spec, kUnits, energy);
    for (int i = 0; i <= 20000; ++i) {
        const double q = -4.0 + 8.0 * i / 20000.0;
        const bool allowed = energy - evalV(spec, kUnits, q) > 0;
        const bool nearTp = [&] {
            for (const Cut& c : cs.cuts)
                if (std::fabs(q - c.qLeft) < 2e-4 || std::fabs(q - c.qRight) < 2e-4)
                    return true;
            return false;
        }();
        if (!nearTp)
            CHECK(allowed == cutCovers(cs, q));
    }
}

TEST_CASE("cuts grow monotonically with energy") {
    const PotentialSpec spec{DoubleWellQuartic{1.0, 1.0}};
    const CutSet low = findCuts(spec, kUnits, 0.3);
    const CutSet high = findCuts(spec, kUnits, 0.9);
    REQUIRE(low.nu == 2);
    REQUIRE(high.nu == 2);
    for (int k = 0; k < 2; ++k) {
        CHECK(high.cuts[k].qLeft < low.cuts[k].qLeft);
        CHECK(high.cuts[k].qRight > low.cuts[k].qRight);
    }
    // above the barrier the wells merge into one cut containing both
    const CutSet merged = findCuts(spec, kUnits, 1.5);
    REQUIRE(merged.nu == 1);
    CHECK(merged.mu == 2);
    CHECK(merged.cuts[0].qLeft < low.cuts[0].qLeft);
    CHECK(merged.cuts[0].qRight > low.cuts[1].qRight);
}

TEST_CASE("mu = 2 nu for the smooth families") {
    CHECK(findCuts({Harmonic{1.0}}, kUnits, 3.0).mu == 2);
    CHECK(findCuts({Morse{10.0, 1.0, 0.0}}, kUnits, -5.0).mu == 2);
    CHECK(findCuts({DoubleWellQuartic{1.0, 1.0}}, kUnits, 0.25).mu == 4);
    const CutSet coulomb = findCuts({CoulombRadialEffective{1.0, 1}}, kUnits, -0.1);
    CHECK(coulomb.mu == 2 * coulomb.nu);
}

TEST_CASE("narrow coulomb cuts trigger the densified scan") {
    // l = 1 at n = 2: cut (1.354, 6.646) inside a search reaching r = 8000;
    // the base 4096-sample scan sees < 8 samples across the cut.
    const PotentialSpec spec{CoulombRadialEffective{1.0, 1}};
    const CutSet cs = findCuts(spec, kUnits, -0.125);
    REQUIRE(cs.nu == 1);
    const double disc = std::sqrt(4.0 - 8.0 * 0.125 * 2.25);  // roots of 2mE r^2 + 2m a r - P^2
    const double r1 = (2.0 - disc) / 0.5;
    const double r2 = (2.0 + disc) / 0.5;
    CHECK(cs.cuts[0].qLeft == doctest::Approx(r1).epsilon(1e-9));
    CHECK(cs.cuts[0].qRight == doctest::Approx(r2).epsilon(1e-9));
}

TEST_CASE("coulomb with Ptheta = 0 clamps the inner endpoint to r = 0") {
    const PotentialSpec spec{CoulombRadialEffective{1.0, std::nullopt, 0.0}};
    const CutSet cs = findCuts(spec, kUnits, -0.5);
    REQUIRE(cs.nu == 1);
    CHECK(cs.mu == 2);
    CHECK(cs.cuts[0].qLeft == 0.0);
    CHECK(cs.cuts[0].qRight == doctest::Approx(2.0).epsilon(1e-10));  // r2 = alpha/|E|
}

TEST_CASE("energy below the floor reports BelowFloor") {
    try {
        findCuts({Harmonic{1.0}}, kUnits, -1.0, Interval{-10.0, 10.0});
        FAIL("expected CutError");
    } catch (const CutError& e) {
        CHECK(e.kind() == CutError::Kind::BelowFloor);
    }
}

TEST_CASE("barrier-top energy reports degenerate turning points") {
    // exactly at the barrier top the two cuts touch at q = 0
    try {
        findCuts({DoubleWellQuartic{1.0, 1.0}}, kUnits, 1.0, Interval{-4.0, 4.0});
        FAIL("expected CutError");
    } catch (const CutError& e) {
        CHECK(e.kind() == CutError::Kind::Degenerate);
    }
}

TEST_CASE("unbound energies report a boundary-reaching allowed region") {
    try {
        findCuts({Morse{10.0, 1.0, 0.0}}, kUnits, 0.5);  // above dissociation
        FAIL("expected CutError");
    } catch (const CutError& e) {
        CHECK(e.kind() == CutError::Kind::ReachesBoundary);
    }
}
