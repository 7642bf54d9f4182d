#pragma once

#include <stdexcept>
#include <string>

namespace actionq {

/// Failure while locating or separating classically allowed intervals,
/// or while driving the level search built on top of them.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Cut location failed for a specific, recoverable reason.
class CutError : public SolverError {
public:
    enum class Kind {
        BelowFloor,       ///< no classically allowed interval at this energy
        Degenerate,       ///< turning points closer than the scan resolution
        ReachesBoundary,  ///< allowed region extends to the search boundary
    };
    CutError(Kind kind, const std::string& what) : SolverError(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Adaptive quadrature exhausted its node budget.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achievedError() const { return achieved_; }

private:
    double achieved_;
};

/// Finite-difference grid unsuitable for the requested eigenvalues.
class GridError : public std::runtime_error {
public:
    explicit GridError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace actionq
