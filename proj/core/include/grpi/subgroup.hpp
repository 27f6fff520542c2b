#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grpi/group.hpp"

namespace grpi {

/// A subgroup together with the ambient group it was taken in.
///
/// Both handles act on the same points. Construction checks that every
/// generator of `group` lies in `ambient`.
class Subgroup {
 public:
  Subgroup(GroupHandle ambient, GroupHandle group);

  static Subgroup trivial(const GroupHandle& ambient);
  static Subgroup whole(const GroupHandle& ambient);
  static Subgroup generated(const GroupHandle& ambient,
                            std::vector<Permutation> generators);

  const GroupHandle& ambient() const noexcept { return ambient_; }
  const GroupHandle& group() const noexcept { return group_; }
  std::uint64_t order() const noexcept { return group_.order(); }
  std::size_t degree() const noexcept { return group_.degree(); }
  const std::vector<Permutation>& generators() const noexcept {
    return group_.generators();
  }
  bool contains(const Permutation& p) const { return group_.contains(p); }
  bool is_trivial() const noexcept { return group_.is_trivial(); }

  /// Re-home this subgroup in `ambient` (which must contain it).
  Subgroup in(const GroupHandle& ambient) const { return Subgroup(ambient, group_); }

 private:
  struct Unchecked {};
  Subgroup(GroupHandle ambient, GroupHandle group, Unchecked)
      : ambient_(std::move(ambient)), group_(std::move(group)) {}
  friend Subgroup make_subgroup_unchecked(GroupHandle, GroupHandle);

  GroupHandle ambient_;
  GroupHandle group_;
};

/// For results that are subgroups by construction.
Subgroup make_subgroup_unchecked(GroupHandle ambient, GroupHandle group);

// ---- identity -------------------------------------------------------------

/// Canonical identity of a subgroup: its order and its sorted element list.
/// Two subgroups are equal iff their keys are equal.
struct CanonicalKey {
  std::uint64_t order = 0;
  std::vector<Permutation> elements;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    if (auto c = a.order <=> b.order; c != 0) return c;
    return a.elements <=> b.elements;
  }
};

CanonicalKey canonical_key(const GroupHandle& h);
inline CanonicalKey canonical_key(const Subgroup& h) { return canonical_key(h.group()); }

/// Order-independent 64-bit digest of the element set.
std::uint64_t element_set_hash(const GroupHandle& h);

/// Short stable text identity, "o<order>-<16 hex digits>".
std::string fingerprint(const GroupHandle& h);
inline std::string fingerprint(const Subgroup& h) { return fingerprint(h.group()); }

/// Greedy generating sequence over the sorted element list: an element is
/// kept when it is not in the span of those kept before it.
std::vector<Permutation> canonical_generators(const GroupHandle& h);

bool is_subset(const GroupHandle& a, const GroupHandle& b);  // a <= b
inline bool is_subset(const Subgroup& a, const Subgroup& b) {
  return is_subset(a.group(), b.group());
}
bool same_subgroup(const GroupHandle& a, const GroupHandle& b);
inline bool same_subgroup(const Subgroup& a, const Subgroup& b) {
  return same_subgroup(a.group(), b.group());
}

/// Sorts by canonical key and removes duplicates.
void sort_canonical(std::vector<Subgroup>& subgroups);

/// Deduplicating container; keeps first-insertion order.
class SubgroupSet {
 public:
  /// Returns the index of `h`, inserting it when new.
  std::pair<std::size_t, bool> insert(const Subgroup& h);
  std::optional<std::size_t> find(const GroupHandle& h) const;

  const std::vector<Subgroup>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  const Subgroup& operator[](std::size_t i) const { return items_[i]; }

 private:
  std::vector<Subgroup> items_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::vector<std::size_t>> buckets_;  // open hashing by digest
  std::size_t bucket_of(std::uint64_t digest) const {
    return static_cast<std::size_t>(digest % buckets_.size());
  }
  void rehash();
};

// ---- constructions --------------------------------------------------------

/// True when h^g = h.
bool normalizes(const Permutation& g, const GroupHandle& h);
bool is_normal(const GroupHandle& g, const GroupHandle& h);
inline bool is_normal(const GroupHandle& g, const Subgroup& h) {
  return is_normal(g, h.group());
}

Subgroup conjugate(const Subgroup& h, const Permutation& g);

Subgroup normalizer(const GroupHandle& g, const Subgroup& h);
Subgroup centralizer(const GroupHandle& g, const Subgroup& h);
Subgroup center(const GroupHandle& g);
Subgroup normal_closure(const GroupHandle& g, const Subgroup& s);
Subgroup core(const GroupHandle& g, const Subgroup& h);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const GroupHandle& g);
bool is_soluble(const GroupHandle& g);

/// |AB| = |A||B| / |A n B|, the size of the set product.
std::uint64_t product_order(const Subgroup& a, const Subgroup& b);
bool product_is_subgroup(const Subgroup& a, const Subgroup& b);

/// All normal subgroups, sorted by canonical key. Throws cap_exceeded past
/// the normal-lattice cap.
std::vector<Subgroup> enumerate_normal_subgroups(const GroupHandle& g);

/// All subgroups (or one per conjugacy class, the canonically least), sorted
/// by canonical key. Throws cap_exceeded past the subgroup-lattice cap.
std::vector<Subgroup> enumerate_subgroups(const GroupHandle& g, bool up_to_conjugacy);

/// One representative per conjugacy class out of an already enumerated
/// lattice (sorted input gives canonically least representatives).
std::vector<Subgroup> conjugacy_class_representatives(const GroupHandle& g,
                                                      const std::vector<Subgroup>& lattice);

/// Some H with HN = G and H n N = 1, first in canonical order; nullopt when
/// no complement exists. Throws not_normal when N is not normal.
std::optional<Subgroup> find_complement(const GroupHandle& g, const Subgroup& n);
/// Same search over a precomputed lattice of `g`.
std::optional<Subgroup> find_complement(const GroupHandle& g, const Subgroup& n,
                                        const std::vector<Subgroup>& lattice);

bool is_subnormal(const GroupHandle& g, const Subgroup& h);

}  // namespace grpi
