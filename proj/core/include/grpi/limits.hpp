#pragma once

#include <cstdint>

namespace grpi {

/// Size limits applied by the enumeration-heavy operations. Exceeding one is
/// reported as ErrorCode::cap_exceeded, never silently truncated.
struct Limits {
  std::uint64_t degree_cap = 64;                // applies to ingested groups
  std::uint64_t enumeration_cap = 1'000'000;    // max |G| for elements()
  std::uint64_t normal_lattice_cap = 2000;      // max |G| for the normal lattice
  std::uint64_t subgroup_lattice_cap = 384;     // max |G| for the full lattice
  std::uint64_t family_cap = 2'000'000;         // M_d(P) families streamed
};

/// Process-wide limits. Set them before starting worker threads; reads are
/// unsynchronized.
const Limits& limits();
void set_limits(const Limits& l);

}  // namespace grpi
