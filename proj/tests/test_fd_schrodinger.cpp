#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>
#include <cmath>
#include <vector>

#include "actionq/errors.hpp"
#include "actionq/fd_schrodinger.hpp"

using namespace actionq;

namespace {
const UnitSystem kUnits{};

// Dense Jacobi rotation eigensolver, independent of the Sturm path.
std::vector<double> jacobiEigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += a[p][q] * a[p][q];
        if (off < 1e-24)
            break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300)
                    continue;
                const double phi = 0.5 * std::atan2(2.0 * a[p][q], a[q][q] - a[p][p]);
                const double c = std::cos(phi), s = std::sin(phi);
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> lambda(n);
    for (std::size_t i = 0; i < n; ++i)
        lambda[i] = a[i][i];
    std::sort(lambda.begin(), lambda.end());
    return lambda;
}
}  // namespace

TEST_CASE("harmonic eigenvalues on a dense grid approach hbar omega (n + 1/2)") {
    const FdGrid grid{-12.0, 12.0, 4001};
    const std::vector<double> e = fdEigenvalues({Harmonic{1.0}}, kUnits, grid, 3);
    REQUIRE(e.size() == 3);
    CHECK(std::fabs(e[0] - 0.5) < 5e-4);
    CHECK(std::fabs(e[1] - 1.5) < 5e-4);
    CHECK(std::fabs(e[2] - 2.5) < 5e-4);
    CHECK(std::is_sorted(e.begin(), e.end()));
}

TEST_CASE("hard-wall box matches the discrete closed form to the bisection tolerance") {
    // eigenvalues of the Dirichlet second-difference operator are known
    // exactly: E_k = hbar^2/(m h^2) (1 - cos(k pi / (points-1)))
    const PotentialSpec spec{ConstantMomentumWell{0.0, M_PI}};
    const FdGrid grid{0.0, M_PI, 2001};
    const std::vector<double> e = fdEigenvalues(spec, kUnits, grid, 4);
    const double h = grid.spacing();
    // accuracy floor: bisection width 1e-12 relative plus the backward-error
    // fuzz of the Sturm count, a few eps times the matrix norm ~ 2 hbar^2/(m h^2)
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * 2.0 / (h * h);
    for (int k = 1; k <= 4; ++k) {
        const double s = std::sin(0.5 * k * M_PI / (grid.points - 1));
        const double exact = 2.0 * s * s / (h * h);
        CHECK(std::fabs(e[k - 1] - exact) <= 1e-11 * std::fabs(exact) + floor);
    }
    // and the continuum box spectrum n^2 pi^2 hbar^2 / (2 m L^2) = n^2 / 2
    CHECK(e[0] == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(e[1] == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("discretization error shrinks as h^2") {
    std::vector<double> hs, errs;
    for (int points : {501, 1001, 2001}) {
        const FdGrid grid{-12.0, 12.0, points};
        const double e0 = fdEigenvalues({Harmonic{1.0}}, kUnits, grid, 1)[0];
        hs.push_back(grid.spacing());
        errs.push_back(std::fabs(e0 - 0.5));
    }
    const double slope = std::log(errs.front() / errs.back()) /
                         std::log(hs.front() / hs.back());
    CHECK(slope > 1.8);
    CHECK(slope < 2.2);
}

TEST_CASE("sturm bisection agrees with dense jacobi diagonalization") {
    const FdGrid grid{-8.0, 8.0, 120};
    const PotentialSpec spec{Harmonic{1.0}};
    const std::vector<double> sturm = fdEigenvalues(spec, kUnits, grid, 5);

    const int n = grid.points - 2;
    const double h = grid.spacing();
    const double kinetic = 1.0 / (h * h);
    std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        const double q = grid.qMin + (i + 1) * h;
        dense[i][i] = kinetic + 0.5 * q * q;
        if (i + 1 < n)
            dense[i][i + 1] = dense[i + 1][i] = -0.5 * kinetic;
    }
    const std::vector<double> jacobi = jacobiEigenvalues(dense);
    for (int k = 0; k < 5; ++k)
        CHECK(std::fabs(sturm[k] - jacobi[k]) < 1e-10);
}

TEST_CASE("radial oracle uses the quantum centrifugal term") {
    const PotentialSpec spec{CoulombRadialEffective{1.0, 0}};
    const FdGrid grid{1e-4, 200.0, 40001};
    const std::vector<double> e = fdEigenvalues(spec, kUnits, grid, 2);
    CHECK(std::fabs(e[0] + 0.5) < 1e-3);
    CHECK(std::fabs(e[1] + 0.125) < 1e-3);

    const PotentialSpec pwave{CoulombRadialEffective{1.0, 1}};
    const std::vector<double> p = fdEigenvalues(pwave, kUnits, grid, 1);
    CHECK(std::fabs(p[0] + 0.125) < 1e-3);  // lowest l=1 level is n=2

    // explicit-Ptheta specs carry no l for the quantum term
    const PotentialSpec noL{CoulombRadialEffective{1.0, std::nullopt, 0.5}};
    CHECK_THROWS_AS(fdEigenvalues(noL, kUnits, grid, 1), std::invalid_argument);
    CHECK_THROWS_AS(fdEigenvalues(spec, kUnits, FdGrid{-1.0, 10.0, 101}, 1), GridError);
}

TEST_CASE("clipped eigenfunctions are detected as a too-small grid") {
    const FdGrid grid{-3.0, 3.0, 801};  // turning point of N = 4 sits at q = 3
    CHECK_THROWS_AS(fdEigenvalues({Harmonic{1.0}}, kUnits, grid, 5), GridError);
}

TEST_CASE("argument validation") {
    const FdGrid grid{-5.0, 5.0, 101};
    CHECK_THROWS_AS(fdEigenvalues({Harmonic{1.0}}, kUnits, grid, 0), std::invalid_argument);
    CHECK_THROWS_AS(fdEigenvalues({Harmonic{1.0}}, kUnits, grid, 99), std::invalid_argument);
    CHECK_THROWS_AS(fdEigenvalues({Harmonic{1.0}}, kUnits, FdGrid{5.0, -5.0, 101}, 1),
                    GridError);
    CHECK_THROWS_AS(fdEigenvalues({Harmonic{1.0}}, kUnits, FdGrid{-5.0, 5.0, 2}, 1),
                    GridError);
}
