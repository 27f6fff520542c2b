#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "grpi/harness/group_file.hpp"

namespace grpi::harness {

GroupFile cyclic_group(std::uint64_t n);        // disjoint prime-power cycles
GroupFile dihedral_group(std::uint64_t n);      // order 2n, n >= 3, on n points
GroupFile symmetric_group(std::size_t n);
GroupFile alternating_group(std::size_t n);     // n >= 3
GroupFile elementary_abelian_group(std::uint64_t p, unsigned rank);
GroupFile quaternion_group();                   // Q8, regular action
/// Factors act on disjoint point sets; degree is the sum.
GroupFile direct_product(const GroupFile& a, const GroupFile& b, std::string name);

/// The bundled corpus in a fixed order: cyclic, dihedral, symmetric,
/// alternating, elementary abelian, Q8, direct products of small bases, and
/// the acceptance fixtures (always present, whatever their order). Entries
/// above max_order or the degree cap are dropped, except fixtures.
std::vector<GroupFile> corpus_groups(std::uint64_t max_order);

struct ManifestEntry {
  std::string file;
  std::string name;
  std::size_t degree = 0;
  std::uint64_t order = 0;
  std::vector<std::string> tags;
};

/// Writes one group file per corpus group plus manifest.json. Throws
/// GroupError(io_error) when the directory cannot be written.
std::vector<ManifestEntry> build_corpus(std::uint64_t max_order, const std::filesystem::path& out_dir);

struct CorpusGroup {
  std::string file;
  std::vector<std::string> tags;
  GroupHandle group;  // label = name

  const std::string& name() const noexcept { return group.label(); }
  bool has_tag(std::string_view tag) const;
};

/// Loads every group listed in dir/manifest.json, sorted by file name.
/// Throws GroupError(io_error) on a missing file or an order mismatch.
std::vector<CorpusGroup> load_corpus(const std::filesystem::path& dir);

}  // namespace grpi::harness
