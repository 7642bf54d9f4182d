#pragma once

#include <functional>
#include <vector>

namespace actionq {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule for the given order; computed once per order, safe to call
/// from multiple threads. Order must be one of 16, 32, ..., 4096.
const GaussLegendreRule& gaussLegendre(int order);

struct QuadratureResult {
    double value = 0;
    double errorEstimate = 0;  ///< |last - previous| of the doubling sequence
    int order = 0;             ///< node count of the accepted rule
};

/// Integrates f over [a, b] after the substitution q = c + w sin(t) with
/// c, w the interval midpoint and half-width. The mapping absorbs
/// inverse-square-root behaviour at either endpoint, so integrands of the
/// form g(q) / sqrt((q - a)(b - q)) or sqrt((q - a)(b - q)) g(q) with smooth
/// g are handled at full order. Order doubles 16 -> 32 -> ... -> 4096 until
/// successive values differ by less than tol * max(1, |I|); throws
/// QuadratureError (with the achieved error) if the cap is reached.
QuadratureResult integrateSqrtEndpoints(const std::function<double(double)>& f,
                                        double a, double b, double tol);

}  // namespace actionq
