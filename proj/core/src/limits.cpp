#include "grpi/limits.hpp"

namespace grpi {

namespace {
Limits g_limits;
}

const Limits& limits() { return g_limits; }

void set_limits(const Limits& l) { g_limits = l; }

}  // namespace grpi
