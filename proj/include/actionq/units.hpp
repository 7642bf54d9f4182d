#pragma once

namespace actionq {

/// The only dimensional constants in play: the reduced quantum of action
/// and the particle mass. Defaults are the atomic-style hbar = m = 1.
struct UnitSystem {
    double hbar = 1.0;
    double mass = 1.0;
};

/// Throws std::invalid_argument unless both constants are finite and > 0.
void validate(const UnitSystem& units);

}  // namespace actionq
