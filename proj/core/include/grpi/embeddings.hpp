#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "grpi/pi_property.hpp"

namespace grpi {

/// Shared lattices and caches for the embedding-property checkers of one
/// ambient group. Every existential check scans its witnesses exhaustively
/// in canonical order. Not thread-safe.
class EmbeddingContext {
 public:
  explicit EmbeddingContext(const GroupHandle& g);
  EmbeddingContext(const GroupHandle& g, std::shared_ptr<const NormalLattice> lattice);

  const GroupHandle& group() const noexcept { return group_; }

  /// Full subgroup lattice; throws cap_exceeded past the subgroup cap.
  const std::vector<Subgroup>& subgroups();
  const std::vector<Subgroup>& subnormal_subgroups();
  const NormalLattice& normal_lattice();
  PiChecker& pi_checker();
  /// Every Sylow p-subgroup of the ambient group.
  const std::vector<Subgroup>& sylow_subgroups(std::uint64_t p);

  bool is_permutable(const Subgroup& h);
  bool is_s_permutable(const Subgroup& h);
  bool is_s_semipermutable(const Subgroup& h);
  bool is_ss_quasinormal(const Subgroup& h);
  bool is_cap_subgroup(const Subgroup& h);
  bool is_c_normal(const Subgroup& h);
  bool is_c_sharp_normal(const Subgroup& h);
  bool is_uc_normal(const Subgroup& h);
  bool is_pi_normal(const Subgroup& h);
  /// H/H_G <= Z_U(G/H_G).
  bool is_u_hypercentral_mod_core(const Subgroup& h);

 private:
  const std::vector<Subgroup>& sylow_sets_of_lattice_member(std::size_t index);
  bool permutes_with_all(const Subgroup& h, const std::vector<Subgroup>& others);
  struct CoreQuotient {
    QuotientContext quotient;
    Subgroup u_hypercenter;  // of the quotient
  };
  const CoreQuotient& core_quotient(const Subgroup& h);

  GroupHandle group_;
  std::shared_ptr<const NormalLattice> lattice_;
  std::optional<std::vector<Subgroup>> subgroups_;
  std::optional<std::vector<Subgroup>> subnormal_;
  std::unique_ptr<PiChecker> pi_;
  std::map<std::uint64_t, std::vector<Subgroup>> sylows_;
  std::map<std::size_t, std::vector<Subgroup>> lattice_sylows_;
  SubgroupSet cores_;
  std::vector<std::unique_ptr<CoreQuotient>> core_quotients_;  // by index in cores_
};

/// All conjugates of h under the ambient group g, canonical order.
std::vector<Subgroup> conjugacy_class(const GroupHandle& g, const Subgroup& h);

bool is_permutable(const GroupHandle& g, const Subgroup& h);
bool is_s_permutable(const GroupHandle& g, const Subgroup& h);
bool is_s_semipermutable(const GroupHandle& g, const Subgroup& h);
bool is_ss_quasinormal(const GroupHandle& g, const Subgroup& h);
bool is_cap_subgroup(const GroupHandle& g, const Subgroup& h);
bool is_c_normal(const GroupHandle& g, const Subgroup& h);
bool is_c_sharp_normal(const GroupHandle& g, const Subgroup& h);
bool is_uc_normal(const GroupHandle& g, const Subgroup& h);
bool is_pi_normal(const GroupHandle& g, const Subgroup& h);

}  // namespace grpi
