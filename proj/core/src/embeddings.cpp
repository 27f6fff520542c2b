#include "grpi/embeddings.hpp"

#include "grpi/quotient.hpp"

namespace grpi {

std::vector<Subgroup> conjugacy_class(const GroupHandle& g, const Subgroup& h) {
  SubgroupSet seen;
  seen.insert(h.in(g));
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (const auto& s : g.generators()) seen.insert(conjugate(seen[i], s));
  }
  std::vector<Subgroup> out = seen.items();
  sort_canonical(out);
  return out;
}

EmbeddingContext::EmbeddingContext(const GroupHandle& g) : group_(g) {}

EmbeddingContext::EmbeddingContext(const GroupHandle& g,
                                   std::shared_ptr<const NormalLattice> lattice)
    : group_(g), lattice_(std::move(lattice)) {}

const std::vector<Subgroup>& EmbeddingContext::subgroups() {
  if (!subgroups_) subgroups_ = enumerate_subgroups(group_, false);
  return *subgroups_;
}

const std::vector<Subgroup>& EmbeddingContext::subnormal_subgroups() {
  if (!subnormal_) {
    subnormal_.emplace();
    for (const auto& t : subgroups()) {
      if (is_subnormal(group_, t)) subnormal_->push_back(t);
    }
  }
  return *subnormal_;
}

const NormalLattice& EmbeddingContext::normal_lattice() {
  if (!lattice_) lattice_ = std::make_shared<const NormalLattice>(group_);
  return *lattice_;
}

PiChecker& EmbeddingContext::pi_checker() {
  if (!pi_) {
    normal_lattice();
    pi_ = std::make_unique<PiChecker>(lattice_);
  }
  return *pi_;
}

const std::vector<Subgroup>& EmbeddingContext::sylow_subgroups(std::uint64_t p) {
  auto it = sylows_.find(p);
  if (it == sylows_.end()) {
    it = sylows_.emplace(p, conjugacy_class(group_, sylow_subgroup(group_, p))).first;
  }
  return it->second;
}

const std::vector<Subgroup>& EmbeddingContext::sylow_sets_of_lattice_member(std::size_t index) {
  auto it = lattice_sylows_.find(index);
  if (it != lattice_sylows_.end()) return it->second;
  const GroupHandle& b = subgroups()[index].group();
  std::vector<Subgroup> all;
  for (auto q : pi_of(b.order()).primes()) {
    for (const auto& s : conjugacy_class(b, sylow_subgroup(b, q))) all.push_back(s.in(group_));
  }
  return lattice_sylows_.emplace(index, std::move(all)).first->second;
}

bool EmbeddingContext::permutes_with_all(const Subgroup& h, const std::vector<Subgroup>& others) {
  for (const auto& k : others) {
    if (!product_is_subgroup(h, k)) return false;
  }
  return true;
}

bool EmbeddingContext::is_permutable(const Subgroup& h) {
  const Subgroup hh = h.in(group_);
  if (is_normal(group_, hh)) return true;
  // Sylow subgroups are among the subgroups: a cheap necessary condition.
  if (!is_s_permutable(hh)) return false;
  return permutes_with_all(hh, subgroups());
}

bool EmbeddingContext::is_s_permutable(const Subgroup& h) {
  const Subgroup hh = h.in(group_);
  for (auto q : pi_of(group_.order()).primes()) {
    if (!permutes_with_all(hh, sylow_subgroups(q))) return false;
  }
  return true;
}

bool EmbeddingContext::is_s_semipermutable(const Subgroup& h) {
  const Subgroup hh = h.in(group_);
  for (auto q : pi_of(group_.order()).primes()) {
    if (hh.order() % q == 0) continue;
    if (!permutes_with_all(hh, sylow_subgroups(q))) return false;
  }
  return true;
}

bool EmbeddingContext::is_ss_quasinormal(const Subgroup& h) {
  const Subgroup hh = h.in(group_);
  const auto& lattice = subgroups();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (product_order(hh, lattice[i]) != group_.order()) continue;
    if (permutes_with_all(hh, sylow_sets_of_lattice_member(i))) return true;
  }
  return false;
}

bool EmbeddingContext::is_cap_subgroup(const Subgroup& h) {
  const Subgroup hh = h.in(group_);
  for (const auto& cf : normal_lattice().chief_factors()) {
    const std::uint64_t meet_upper = intersection(hh, cf.upper).order();
    const std::uint64_t meet_lower = intersection(hh, cf.lower).order();
    if (meet_upper == meet_lower) continue;  // avoids
    // |HL| = |HK| means the set products coincide: covers.
    if (hh.order() / meet_upper * cf.upper.order() ==
        hh.order() / meet_lower * cf.lower.order()) {
      continue;
    }
    return false;
  }
  return true;
}

bool EmbeddingContext::is_c_normal(const Subgroup& h) {
  const Subgroup hh = h.in(group_);
  const Subgroup hcore = core(group_, hh);
  for (const auto& t : normal_lattice().subgroups()) {
    if (product_order(hh, t) != group_.order()) continue;
    if (is_subset(intersection(t, hh).group(), hcore.group())) return true;
  }
  return false;
}

bool EmbeddingContext::is_c_sharp_normal(const Subgroup& h) {
  const Subgroup hh = h.in(group_);
  for (const auto& t : normal_lattice().subgroups()) {
    if (product_order(hh, t) != group_.order()) continue;
    if (is_cap_subgroup(intersection(hh, t))) return true;
  }
  return false;
}

const EmbeddingContext::CoreQuotient& EmbeddingContext::core_quotient(const Subgroup& h) {
  const auto [index, inserted] = cores_.insert(core(group_, h));
  if (inserted) {
    QuotientContext ctx = build_quotient(group_, cores_[index]);
    Subgroup z = u_hypercenter(ctx.quotient());
    core_quotients_.push_back(std::make_unique<CoreQuotient>(CoreQuotient{std::move(ctx), std::move(z)}));
  }
  return *core_quotients_[index];
}

bool EmbeddingContext::is_u_hypercentral_mod_core(const Subgroup& h) {
  const Subgroup hh = h.in(group_);
  const CoreQuotient& cq = core_quotient(hh);
  return is_subset(project_subgroup(cq.quotient, hh).group(), cq.u_hypercenter.group());
}

bool EmbeddingContext::is_uc_normal(const Subgroup& h) {
  const Subgroup hh = h.in(group_);
  const CoreQuotient& cq = core_quotient(hh);
  for (const auto& t : subnormal_subgroups()) {
    if (product_order(hh, t) != group_.order()) continue;
    const Subgroup image = project_subgroup(cq.quotient, intersection(hh, t));
    if (is_subset(image.group(), cq.u_hypercenter.group())) return true;
  }
  return false;
}

bool EmbeddingContext::is_pi_normal(const Subgroup& h) {
  const Subgroup hh = h.in(group_);
  PiChecker& pi = pi_checker();
  if (pi.verdict(hh)) return true;  // T = G, I = H
  for (const auto& t : subnormal_subgroups()) {
    if (product_order(hh, t) != group_.order()) continue;
    const Subgroup meet = intersection(hh, t);
    for (const auto& i : subgroups()) {
      if (i.order() % meet.order() != 0 || hh.order() % i.order() != 0) continue;
      if (!is_subset(meet.group(), i.group()) || !is_subset(i.group(), hh.group())) continue;
      if (pi.verdict(i)) return true;
    }
  }
  return false;
}

bool is_permutable(const GroupHandle& g, const Subgroup& h) {
  return EmbeddingContext(g).is_permutable(h);
}
bool is_s_permutable(const GroupHandle& g, const Subgroup& h) {
  return EmbeddingContext(g).is_s_permutable(h);
}
bool is_s_semipermutable(const GroupHandle& g, const Subgroup& h) {
  return EmbeddingContext(g).is_s_semipermutable(h);
}
bool is_ss_quasinormal(const GroupHandle& g, const Subgroup& h) {
  return EmbeddingContext(g).is_ss_quasinormal(h);
}
bool is_cap_subgroup(const GroupHandle& g, const Subgroup& h) {
  return EmbeddingContext(g).is_cap_subgroup(h);
}
bool is_c_normal(const GroupHandle& g, const Subgroup& h) {
  return EmbeddingContext(g).is_c_normal(h);
}
bool is_c_sharp_normal(const GroupHandle& g, const Subgroup& h) {
  return EmbeddingContext(g).is_c_sharp_normal(h);
}
bool is_uc_normal(const GroupHandle& g, const Subgroup& h) {
  return EmbeddingContext(g).is_uc_normal(h);
}
bool is_pi_normal(const GroupHandle& g, const Subgroup& h) {
  return EmbeddingContext(g).is_pi_normal(h);
}

}  // namespace grpi
