#pragma once

#include <string>

namespace actionq {

/// Fixed 15-significant-digit formatting ("%.15g"): deterministic across
/// runs, round-trips doubles to well under any tolerance used here.
std::string formatG15(double x);

}  // namespace actionq
