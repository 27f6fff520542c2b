#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "grpi/quotient.hpp"
#include "grpi/structure.hpp"

namespace grpi {

/// Outcome of the Pi-property test at one chief factor L/K.
struct PiTrailEntry {
  ChiefFactor chief_factor;
  std::uint64_t intersection_order = 1;  // |HK/K n L/K|
  std::uint64_t normalizer_index = 1;    // |G/K : N_{G/K}(HK/K n L/K)|
  PrimeSet pi_set;                       // primes of intersection_order
  bool factor_pass = true;
};

struct PiReport {
  Subgroup subject;
  bool verdict = true;  // conjunction of factor_pass
  std::vector<PiTrailEntry> trail;  // one entry per chief factor, lattice order
};

/// Evaluates the Pi-property for many subgroups of one group, sharing the
/// normal lattice, the quotients G/K and the images L/K. Not thread-safe;
/// use one checker per worker.
class PiChecker {
 public:
  explicit PiChecker(const GroupHandle& g);
  explicit PiChecker(std::shared_ptr<const NormalLattice> lattice);

  const GroupHandle& group() const noexcept { return lattice_->group(); }
  const NormalLattice& lattice() const noexcept { return *lattice_; }
  std::shared_ptr<const NormalLattice> shared_lattice() const { return lattice_; }

  /// Full trail over every chief factor.
  PiReport report(const Subgroup& h);

  /// Verdict only; stops at the first failing factor and memoizes per
  /// subgroup.
  bool verdict(const Subgroup& h);

  /// Number of distinct subgroups whose verdict has been memoized.
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  PiTrailEntry check_factor(std::size_t factor, const Subgroup& h);
  const QuotientContext& quotient_for(std::size_t lattice_index);

  std::shared_ptr<const NormalLattice> lattice_;
  std::vector<std::unique_ptr<QuotientContext>> quotients_;  // by lower index
  std::vector<std::optional<Subgroup>> upper_images_;        // by factor
  SubgroupSet memo_;
  std::vector<bool> memo_verdicts_;
};

/// H satisfies the Pi-property in G: for every chief factor L/K, the index
/// of N_{G/K}(HK/K n L/K) in G/K is a pi(HK/K n L/K)-number.
PiReport satisfies_pi_property(const GroupHandle& g, const Subgroup& h);

/// d maximal subgroups of a p-group P meeting in Phi(P), with d the rank.
struct MdFamily {
  std::vector<Subgroup> members;
  unsigned d = 0;
};

/// Streams every M_d(P) family: the d-subsets of the maximal subgroups (in
/// canonical order, subsets in lexicographic order of indices) whose
/// functionals are linearly independent. `visit` gets the member indices
/// into `fq.maximals` and returns false to stop. Throws cap_exceeded when
/// more than Limits::family_cap subsets would have to be examined.
void for_each_md_family(const FrattiniQuotient& fq,
                        const std::function<bool(const std::vector<std::size_t>&)>& visit);

std::vector<MdFamily> md_families(const GroupHandle& p_group, std::uint64_t p);

/// Every member meets N in a subgroup with the Pi-property in G.
bool family_hypothesis_holds(const GroupHandle& g, const Subgroup& n, const MdFamily& fam);
bool family_hypothesis_holds(PiChecker& checker, const Subgroup& n, const MdFamily& fam);

/// First family (stream order) of the Sylow p-subgroup of G satisfying the
/// hypothesis; nullopt when P is trivial or no family qualifies.
std::optional<MdFamily> exists_family_with_hypothesis(const GroupHandle& g, std::uint64_t p,
                                                      const Subgroup& n);

}  // namespace grpi
