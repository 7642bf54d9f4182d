#include "actionq/fd_schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "actionq/errors.hpp"

namespace actionq {

namespace {

/// Potential as seen by the quantum reference solver. The effective Coulomb
/// family swaps the classical angular constant for the quantum centrifugal
/// term hbar^2 l(l+1) / (2 m r^2); everything else evaluates as-is.
double quantumPotential(const PotentialSpec& spec, const UnitSystem& units, double q) {
    if (const auto* c = std::get_if<CoulombRadialEffective>(&spec.family)) {
        if (!c->l)
            throw std::invalid_argument(
                "finite-difference oracle requires an integer angular momentum l");
        const double l = *c->l;
        return -c->alpha / q +
               0.5 * units.hbar * units.hbar * l * (l + 1.0) / (units.mass * q * q);
    }
    return evalV(spec, units, q);
}

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below x
/// (Sturm sequence count).
int sturmCount(const std::vector<double>& diag, double off, double x) {
    const double off2 = off * off;
    int count = 0;
    double d = diag[0] - x;
    if (d < 0)
        ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (d == 0.0)
            d = std::numeric_limits<double>::min();
        d = diag[i] - x - off2 / d;
        if (d < 0)
            ++count;
    }
    return count;
}

/// k-th (0-based) eigenvalue via bisection on the Sturm count.
double sturmEigenvalue(const std::vector<double>& diag, double off, int k, double lo,
                       double hi) {
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-12 * std::fmax(std::fabs(lo), std::fabs(hi)) ||
            hi - lo <= 1e-300)
            break;
        if (sturmCount(diag, off, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

/// Eigenvector by inverse iteration with partial-pivoting tridiagonal solves.
std::vector<double> inverseIteration(const std::vector<double>& diag, double off,
                                     double lambda, double shiftScale) {
    const std::size_t n = diag.size();
    const double shifted = lambda + 1e-12 * shiftScale;

    // LU factors of (T - shifted I) with partial pivoting; bandwidth 2.
    std::vector<double> du(n, 0), du2(n, 0), dl(n, 0), dd(n);
    std::vector<int> swapped(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        dd[i] = diag[i] - shifted;
        if (i + 1 < n) {
            dl[i] = off;
            du[i] = off;
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::fabs(dd[i]) < std::fabs(dl[i])) {
            std::swap(dd[i], dl[i]);
            std::swap(du[i], dd[i + 1]);
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = 0;
            }
            swapped[i] = 1;
        }
        if (dd[i] == 0.0)
            dd[i] = std::numeric_limits<double>::min();
        const double m = dl[i] / dd[i];
        dl[i] = m;  // store the multiplier
        dd[i + 1] -= m * du[i];
        if (i + 2 < n)
            du[i + 1] -= m * du2[i];
    }
    if (dd[n - 1] == 0.0)
        dd[n - 1] = std::numeric_limits<double>::min();

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int pass = 0; pass < 3; ++pass) {
        // forward substitution with the recorded pivoting
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swapped[i])
                std::swap(v[i], v[i + 1]);
            v[i + 1] -= dl[i] * v[i];
        }
        // back substitution
        v[n - 1] /= dd[n - 1];
        if (n >= 2)
            v[n - 2] = (v[n - 2] - du[n - 2] * v[n - 1]) / dd[n - 2];
        for (std::size_t ri = n; ri >= 3; --ri) {
            const std::size_t i = ri - 3;
            v[i] = (v[i] - du[i] * v[i + 1] - du2[i] * v[i + 2]) / dd[i];
        }
        double norm = 0;
        for (double x : v)
            norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v)
            x /= norm;
    }
    return v;
}

}  // namespace

std::vector<double> fdEigenvalues(const PotentialSpec& spec, const UnitSystem& units,
                                  const FdGrid& grid, int count) {
    validate(spec);
    validate(units);
    if (grid.points < 3)
        throw GridError("finite-difference grid needs at least 3 points");
    if (!(grid.qMax > grid.qMin))
        throw GridError("finite-difference grid must be ordered");
    if (std::holds_alternative<CoulombRadialEffective>(spec.family) && !(grid.qMin > 0))
        throw GridError("radial grid requires qMin > 0");
    if (count < 1)
        throw std::invalid_argument("fdEigenvalues requires count >= 1");
    if (count >= grid.points - 2)
        throw std::invalid_argument("fdEigenvalues: count must be below points - 2");

    const int n = grid.points - 2;  // interior points carry the unknowns
    const double h = grid.spacing();
    const double kinetic = units.hbar * units.hbar / (units.mass * h * h);
    const double off = -0.5 * kinetic;

    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i)
        diag[i] = kinetic + quantumPotential(spec, units, grid.qMin + (i + 1) * h);

    // Gershgorin bounds bracket the whole spectrum.
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int i = 0; i < n; ++i) {
        const double radius = (i == 0 || i == n - 1) ? std::fabs(off) : 2.0 * std::fabs(off);
        lo = std::fmin(lo, diag[i] - radius);
        hi = std::fmax(hi, diag[i] + radius);
    }

    std::vector<double> eigenvalues(count);
    for (int k = 0; k < count; ++k)
        eigenvalues[k] = sturmEigenvalue(diag, off, k, lo, hi);

    // Eigenfunction mass hugging a truncation boundary means the box clipped
    // the state. The hard-wall family has exact boundaries, nothing to check;
    // the inner boundary of the radial problem is likewise exact (u(0) = 0),
    // so only its outer edge is a truncation.
    if (!std::holds_alternative<ConstantMomentumWell>(spec.family)) {
        const bool radial = std::holds_alternative<CoulombRadialEffective>(spec.family);
        const double shiftScale = std::fmax(std::fabs(lo), std::fabs(hi));
        for (int k = 0; k < count; ++k) {
            const std::vector<double> v = inverseIteration(diag, off, eigenvalues[k], shiftScale);
            // interior indices 0,1 sit within 2h of qMin; n-2, n-1 of qMax
            double leak = v[n - 2] * v[n - 2] + v[n - 1] * v[n - 1];
            if (!radial)
                leak += v[0] * v[0] + v[1] * v[1];
            if (leak > 1e-8)
                throw GridError("grid too small: eigenfunction " + std::to_string(k) +
                                " carries mass " + std::to_string(leak) +
                                " within 2h of a boundary");
        }
    }
    return eigenvalues;
}

}  // namespace actionq
