#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "grpi/subgroup.hpp"

namespace grpi {

/// G/K realized as a permutation group on the cosets of K.
///
/// Cosets are numbered in breadth-first order from the kernel itself
/// (coset 0), multiplying representatives by the generators of G in order.
/// Coset i is mapped by x to the coset containing rep_i * x, which makes the
/// quotient the regular representation of G/K.
class QuotientContext {
 public:
  QuotientContext(GroupHandle parent, Subgroup kernel);

  const GroupHandle& parent() const noexcept { return parent_; }
  const Subgroup& kernel() const noexcept { return kernel_; }
  const GroupHandle& quotient() const noexcept { return quotient_; }
  const std::vector<Permutation>& coset_reps() const noexcept { return reps_; }
  std::size_t index() const noexcept { return reps_.size(); }

  /// Index of the coset containing x.
  std::size_t coset_of(const Permutation& x) const;

  /// Image of an element of the parent in the quotient.
  Permutation project(const Permutation& x) const;

  /// A preimage (the coset representative) of a quotient element.
  const Permutation& lift(const Permutation& image) const;

 private:
  GroupHandle parent_;
  Subgroup kernel_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::uint32_t> coset_index_;
  GroupHandle quotient_;
};

/// Throws not_normal when K is not normal in G.
QuotientContext build_quotient(const GroupHandle& g, const Subgroup& k);

/// HK/K as a subgroup of the quotient.
Subgroup project_subgroup(const QuotientContext& ctx, const Subgroup& h);

/// Full preimage of a subgroup of the quotient; always contains the kernel.
Subgroup preimage_subgroup(const QuotientContext& ctx, const Subgroup& x);

}  // namespace grpi
