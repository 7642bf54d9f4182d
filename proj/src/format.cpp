#include "actionq/format.hpp"

#include <cstdio>

namespace actionq {

std::string formatG15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

}  // namespace actionq
