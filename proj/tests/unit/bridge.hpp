#pragma once

// Moves groups and subgroups between the engine and the brute-force oracle.

#include <string>
#include <vector>

#include "grpi/harness/corpus.hpp"
#include "grpi/subgroup.hpp"
#include "oracle/brute.hpp"

namespace bridge {

grpi::GroupHandle make(const grpi::harness::GroupFile& f);
grpi::GroupHandle group(std::size_t degree, const std::vector<std::string>& cycles);
grpi::Subgroup sub(const grpi::GroupHandle& g, const std::vector<std::string>& cycles);
oracle::Table table_of(const grpi::GroupHandle& g);
oracle::Set set_of(const oracle::Table& t, const grpi::GroupHandle& h);
inline oracle::Set set_of(const oracle::Table& t, const grpi::Subgroup& h) { return set_of(t, h.group()); }
grpi::Subgroup subgroup_of(const grpi::GroupHandle& g, const oracle::Table& t, const oracle::Set& s);

/// Corpus groups up to the given order, built in memory.
std::vector<grpi::GroupHandle> corpus(std::uint64_t max_order);

}  // namespace bridge
