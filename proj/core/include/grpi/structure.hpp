#pragma once

#include <cstdint>
#include <utility>
#include <map>
#include <vector>

#include "grpi/subgroup.hpp"

namespace grpi {

// ---- arithmetic -------------------------------------------------------------

bool is_prime(std::uint64_t n);

/// Sorted, duplicate-free set of primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Sorts and deduplicates; throws std::invalid_argument on a non-prime.
  explicit PrimeSet(std::vector<std::uint64_t> primes);

  const std::vector<std::uint64_t>& primes() const& noexcept { return primes_; }
  std::vector<std::uint64_t> primes() && noexcept { return std::move(primes_); }
  bool empty() const noexcept { return primes_.empty(); }
  bool contains(std::uint64_t p) const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

/// Prime divisors of n; pi_of(1) is empty.
PrimeSet pi_of(std::uint64_t n);

/// All prime divisors of n lie in pi. 1 is a pi-number for every pi.
bool is_pi_number(std::uint64_t n, const PrimeSet& pi);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_p_power(std::uint64_t n, std::uint64_t p);  // includes p^0 = 1

// ---- p-groups -------------------------------------------------------------

/// Sylow p-subgroup by normalizer ascent from the identity: each step adds
/// the first element (in the normalizer's element order) that lies outside
/// the current subgroup and whose p-th power lies inside it.
Subgroup sylow_subgroup(const GroupHandle& g, std::uint64_t p);

/// Phi(P) as the normal closure of generator commutators and p-th powers.
/// Throws not_p_group.
Subgroup frattini_of_p_group(const GroupHandle& p_group, std::uint64_t p);

/// d with p^d = |P : Phi(P)|. Throws not_p_group or trivial_group.
unsigned generator_rank(const GroupHandle& p_group, std::uint64_t p);

/// A maximal subgroup of a p-group together with the linear functional on
/// P/Phi(P) whose kernel it is (coordinates w.r.t. FrattiniQuotient::basis,
/// first nonzero entry 1).
struct MaximalSubgroup {
  Subgroup subgroup;
  std::vector<unsigned> functional;
};

/// P/Phi(P) as an F_p vector space, with all its hyperplanes.
struct FrattiniQuotient {
  std::uint64_t p = 0;
  Subgroup frattini;
  unsigned rank = 0;
  std::vector<Permutation> basis;          // elements of P, images form a basis
  std::vector<MaximalSubgroup> maximals;   // canonical order
};

FrattiniQuotient analyze_p_group(const GroupHandle& p_group, std::uint64_t p);

/// All (p^d - 1)/(p - 1) maximal subgroups, canonical order.
std::vector<Subgroup> maximal_subgroups_of_p_group(const GroupHandle& p_group,
                                                   std::uint64_t p);

// ---- normal structure -------------------------------------------------------

struct ChiefFactor {
  Subgroup lower;
  Subgroup upper;
  std::uint64_t factor_order = 1;
  std::map<std::uint64_t, bool> is_p_factor_for;  // primes dividing |G|
  std::size_t lower_index = 0;                    // positions in the lattice
  std::size_t upper_index = 0;

  bool is_p_factor(std::uint64_t p) const { return is_p_power(factor_order, p); }
};

/// The normal-subgroup lattice with its covering relation. Every covering
/// pair is a chief factor and every chief factor is a covering pair.
class NormalLattice {
 public:
  explicit NormalLattice(const GroupHandle& g);

  const GroupHandle& group() const noexcept { return group_; }
  const std::vector<Subgroup>& subgroups() const noexcept { return normals_; }
  const std::vector<ChiefFactor>& chief_factors() const noexcept { return factors_; }
  /// normals[i] <= normals[j]
  bool below(std::size_t i, std::size_t j) const { return below_[i][j]; }
  std::size_t index_of(const GroupHandle& h) const;
  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return normals_.size() - 1; }

 private:
  GroupHandle group_;
  std::vector<Subgroup> normals_;
  std::vector<std::vector<bool>> below_;
  std::vector<ChiefFactor> factors_;
};

std::vector<ChiefFactor> chief_factors(const GroupHandle& g);

/// 1 = G_0 < ... < G_r = G, always extending by the canonically least
/// cover of the current term.
std::vector<Subgroup> chief_series(const GroupHandle& g);
std::vector<Subgroup> chief_series(const NormalLattice& lattice);

Subgroup o_p(const GroupHandle& g, std::uint64_t p);
Subgroup o_p(const NormalLattice& lattice, std::uint64_t p);
Subgroup o_p_prime(const GroupHandle& g, std::uint64_t p);
Subgroup o_p_prime(const NormalLattice& lattice, std::uint64_t p);

/// O^p(G): the normal closure of the Sylow q-subgroups for q != p.
Subgroup o_upper_p(const GroupHandle& g, std::uint64_t p);

Subgroup u_hypercenter(const GroupHandle& g);
Subgroup u_hypercenter(const NormalLattice& lattice);

bool is_p_soluble(const GroupHandle& g, std::uint64_t p);
bool is_p_soluble(const NormalLattice& lattice, std::uint64_t p);
bool is_p_supersoluble(const GroupHandle& g, std::uint64_t p);
bool is_p_supersoluble(const NormalLattice& lattice, std::uint64_t p);

/// |O^p(G)| equals the p'-part of |G|, i.e. O^p(G) is a normal p-complement.
/// Needs no lattice.
bool is_p_nilpotent(const GroupHandle& g, std::uint64_t p);

}  // namespace grpi
