#include "actionq/quadrature.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "actionq/errors.hpp"

namespace actionq {

namespace {

constexpr int MIN_ORDER = 16;
constexpr int MAX_ORDER = 4096;
constexpr int NUM_ORDERS = 9;  // 16, 32, ..., 4096

int orderIndex(int order) {
    int idx = 0, n = MIN_ORDER;
    while (n < order && idx < NUM_ORDERS - 1) {
        n *= 2;
        ++idx;
    }
    if (n != order)
        throw std::invalid_argument("gaussLegendre: order must be 16 * 2^k, k <= 8");
    return idx;
}

// Roots of the Legendre polynomial by Newton iteration on the recurrence.
GaussLegendreRule buildRule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double dz = -p1 / pp;
            z += dz;
            if (std::fabs(dz) < 1e-15)
                break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& gaussLegendre(int order) {
    static std::array<GaussLegendreRule, NUM_ORDERS> rules;
    static std::array<std::once_flag, NUM_ORDERS> flags;
    const int idx = orderIndex(order);
    std::call_once(flags[idx], [&] { rules[idx] = buildRule(order); });
    return rules[idx];
}

QuadratureResult integrateSqrtEndpoints(const std::function<double(double)>& f,
                                        double a, double b, double tol) {
    if (!(b >= a))
        throw std::invalid_argument("integrateSqrtEndpoints: requires a <= b");
    if (a == b)
        return {0.0, 0.0, 0};

    const double c = 0.5 * (a + b);
    const double w = 0.5 * (b - a);

    auto evaluate = [&](int order) {
        const GaussLegendreRule& rule = gaussLegendre(order);
        double sum = 0;
        for (int i = 0; i < order; ++i) {
            const double t = 0.5 * M_PI * rule.nodes[i];
            const double q = c + w * std::sin(t);
            sum += rule.weights[i] * std::cos(t) * f(q);
        }
        return 0.5 * M_PI * w * sum;
    };

    double prev = evaluate(MIN_ORDER);
    double lastDiff = std::fabs(prev);
    for (int order = 2 * MIN_ORDER; order <= MAX_ORDER; order *= 2) {
        const double cur = evaluate(order);
        lastDiff = std::fabs(cur - prev);
        if (lastDiff <= tol * std::fmax(1.0, std::fabs(cur)))
            return {cur, lastDiff, order};
        prev = cur;
    }
    throw QuadratureError("quadrature failed to converge at 4096 nodes", lastDiff);
}

}  // namespace actionq
