#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "actionq/coulomb.hpp"
#include "actionq/errors.hpp"
#include "actionq/fd_schrodinger.hpp"
#include "actionq/format.hpp"
#include "actionq/potential.hpp"
#include "actionq/quantizer.hpp"
#include "actionq/state_function.hpp"
#include "actionq/turning_points.hpp"

namespace {

// Exit codes: 0 success, 2 argument/parse, 3 solver, 4 reference solver,
// 5 unsupported mode.
constexpr int EXIT_PARSE = 2;
constexpr int EXIT_SOLVER = 3;
constexpr int EXIT_ORACLE = 4;
constexpr int EXIT_UNSUPPORTED = 5;

using actionq::formatG15;

struct CommonFlags {
    std::string potential;
    double hbar = 1.0;
    double mass = 1.0;
    double tol = -1.0;
};

actionq::FdGrid parseGrid(const std::string& text) {
    std::stringstream ss(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ','))
        parts.push_back(part);
    if (parts.size() != 3)
        throw std::invalid_argument("--grid expects qmin,qmax,points");
    actionq::FdGrid grid;
    std::size_t used = 0;
    grid.qMin = std::stod(parts[0], &used);
    if (used != parts[0].size())
        throw std::invalid_argument("--grid: bad qmin");
    grid.qMax = std::stod(parts[1], &used);
    if (used != parts[1].size())
        throw std::invalid_argument("--grid: bad qmax");
    grid.points = std::stoi(parts[2], &used);
    if (used != parts[2].size() || grid.points < 3)
        throw std::invalid_argument("--grid: bad point count");
    return grid;
}

int runSpectrum(const CommonFlags& flags, int nMax) {
    actionq::PotentialSpec spec;
    try {
        spec = actionq::parsePotential(flags.potential);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_PARSE;
    }
    const actionq::UnitSystem units{flags.hbar, flags.mass};
    actionq::SolveOptions opts;
    opts.tol = flags.tol;
    std::vector<actionq::EnergyLevel> levels;
    try {
        levels = actionq::spectrum(spec, units, nMax, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_SOLVER;
    }
    std::cout << "N,E,J_residual\n";
    for (const auto& level : levels)
        std::cout << level.n << ',' << formatG15(level.energy) << ','
                  << formatG15(level.residual) << '\n';
    return 0;
}

int runCompare(const CommonFlags& flags, int nMax, const actionq::FdGrid& grid) {
    actionq::PotentialSpec spec;
    try {
        spec = actionq::parsePotential(flags.potential);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_PARSE;
    }
    const actionq::UnitSystem units{flags.hbar, flags.mass};
    actionq::SolveOptions opts;
    opts.tol = flags.tol;
    std::vector<actionq::EnergyLevel> levels;
    try {
        levels = actionq::spectrum(spec, units, nMax, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_SOLVER;
    }
    std::vector<double> reference;
    try {
        reference = actionq::fdEigenvalues(spec, units, grid, nMax + 1);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_ORACLE;
    }
    std::cout << "N,E_semiclassical,E_fd,abs_error\n";
    for (int n = 0; n <= nMax; ++n)
        std::cout << n << ',' << formatG15(levels[n].energy) << ','
                  << formatG15(reference[n]) << ','
                  << formatG15(std::fabs(levels[n].energy - reference[n])) << '\n';
    return 0;
}

int runStateFn(const CommonFlags& flags, int level, int samples) {
    actionq::PotentialSpec spec;
    try {
        spec = actionq::parsePotential(flags.potential);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_PARSE;
    }
    const actionq::UnitSystem units{flags.hbar, flags.mass};
    actionq::SolveOptions opts;
    opts.tol = flags.tol;
    actionq::EnergyLevel solved;
    try {
        solved = actionq::solveLevel(spec, units, level, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: level N=" << level << ": " << e.what() << '\n';
        return EXIT_SOLVER;
    }
    try {
        if (actionq::findCuts(spec, units, solved.energy).mu != 2) {
            std::cerr << "error: statefn supports two-turning-point levels\n";
            return EXIT_UNSUPPORTED;
        }
        actionq::GridSpec gridSpec;
        gridSpec.samplesPerHalfWave = samples;
        const actionq::StateFunctionTable table =
            actionq::buildStateFunction(spec, units, solved, gridSpec);
        actionq::writeCsv(table, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_SOLVER;
    }
    return 0;
}

int runCoulomb(double alpha, int nMax, const CommonFlags& flags) {
    const actionq::CoulombParams cp{alpha, flags.mass, flags.hbar};
    std::cout << "n_r,n_theta,n_phi,n,E\n";
    try {
        for (int n = 1; n <= nMax; ++n)
            for (int nR = n - 1; nR >= 0; --nR)
                for (int nTheta = n - 1 - nR; nTheta >= 0; --nTheta) {
                    const actionq::QuantumNumbers qn{nR, nTheta, n - 1 - nR - nTheta};
                    std::cout << qn.nR << ',' << qn.nTheta << ',' << qn.nPhi << ',' << n
                              << ',' << formatG15(actionq::coulombSpectrum(cp, qn)) << '\n';
                }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_SOLVER;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound-state energies from quantization of the classical action"};
    app.require_subcommand(1);

    CommonFlags flags;
    int nMax = 0;
    int level = 0;
    int samples = 64;
    std::string gridText;
    double alpha = 1.0;

    auto addCommon = [&](CLI::App* cmd, bool needsPotential) {
        if (needsPotential)
            cmd->add_option("--potential", flags.potential, "family:key=value,...")->required();
        cmd->add_option("--hbar", flags.hbar, "reduced quantum of action (default 1)");
        cmd->add_option("--mass", flags.mass, "particle mass (default 1)");
        cmd->add_option("--tol", flags.tol, "action-residual tolerance (default 1e-9*hbar)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* cmdSpectrum = app.add_subcommand("spectrum", "levels N = 0..nmax as CSV");
    addCommon(cmdSpectrum, true);
    cmdSpectrum->add_option("--nmax", nMax, "highest node count N")->required();

    CLI::App* cmdCompare =
        app.add_subcommand("compare", "levels against the finite-difference reference");
    addCommon(cmdCompare, true);
    cmdCompare->add_option("--nmax", nMax, "highest node count N")->required();
    cmdCompare->add_option("--grid", gridText, "qmin,qmax,points")->required();

    CLI::App* cmdStateFn =
        app.add_subcommand("statefn", "sampled state function of one level as CSV");
    addCommon(cmdStateFn, true);
    cmdStateFn->add_option("--level", level, "node count N of the level")->required();
    cmdStateFn->add_option("--samples", samples, "samples per half-wave (default 64)");

    CLI::App* cmdCoulomb =
        app.add_subcommand("coulomb", "closed-form Coulomb level table as CSV");
    addCommon(cmdCoulomb, false);
    cmdCoulomb->add_option("--alpha", alpha, "Coulomb coupling (default 1)");
    cmdCoulomb->add_option("--nmax", nMax, "highest principal quantum number")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : EXIT_PARSE;
    }

    if (!(flags.hbar > 0) || !(flags.mass > 0)) {
        std::cerr << "error: --hbar and --mass must be > 0\n";
        return EXIT_PARSE;
    }

    if (cmdSpectrum->parsed()) {
        if (nMax < 0) {
            std::cerr << "error: --nmax must be >= 0\n";
            return EXIT_PARSE;
        }
        return runSpectrum(flags, nMax);
    }
    if (cmdCompare->parsed()) {
        if (nMax < 0) {
            std::cerr << "error: --nmax must be >= 0\n";
            return EXIT_PARSE;
        }
        actionq::FdGrid grid;
        try {
            grid = parseGrid(gridText);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return EXIT_PARSE;
        }
        return runCompare(flags, nMax, grid);
    }
    if (cmdStateFn->parsed()) {
        if (level < 0) {
            std::cerr << "error: --level must be >= 0\n";
            return EXIT_PARSE;
        }
        if (samples < 16) {
            std::cerr << "error: --samples must be >= 16\n";
            return EXIT_PARSE;
        }
        return runStateFn(flags, level, samples);
    }
    if (nMax < 1) {
        std::cerr << "error: --nmax must be >= 1\n";
        return EXIT_PARSE;
    }
    if (!(alpha > 0)) {
        std::cerr << "error: --alpha must be > 0\n";
        return EXIT_PARSE;
    }
    return runCoulomb(alpha, nMax, flags);
}
