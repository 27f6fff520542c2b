#include "grpi/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "grpi/errors.hpp"
#include "grpi/limits.hpp"
#include "grpi/quotient.hpp"

namespace grpi {

// ---- arithmetic -------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (auto p : primes_) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet pi_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return PrimeSet(std::move(out));
}

bool is_pi_number(std::uint64_t n, const PrimeSet& pi) {
  for (auto p : pi_of(n).primes()) {
    if (!pi.contains(p)) return false;
  }
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) { return p_part(n, p) == n; }

namespace {

void require_p_group(const GroupHandle& g, std::uint64_t p) {
  if (!is_prime(p)) {
    throw GroupError(ErrorCode::not_p_group, std::to_string(p) + " is not prime");
  }
  if (!is_p_power(g.order(), p)) {
    throw GroupError(ErrorCode::not_p_group,
                     "order " + std::to_string(g.order()) + " is not a power of " +
                         std::to_string(p));
  }
}

}  // namespace

// ---- p-groups -------------------------------------------------------------

Subgroup sylow_subgroup(const GroupHandle& g, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(g.order(), p);
  Subgroup current = Subgroup::trivial(g);
  while (current.order() < target) {
    Subgroup n = normalizer(g, current);
    std::optional<Permutation> step;
    for_each_element(n.group(), [&](const Permutation& x) {
      if (current.contains(x) || !current.contains(x.pow(static_cast<long long>(p)))) {
        return true;
      }
      step = x;
      return false;
    });
    if (!step) {
      throw std::logic_error("Sylow ascent stalled; p divides |N(P) : P| by Sylow's theorem");
    }
    std::vector<Permutation> gens = current.generators();
    gens.push_back(*step);
    current = make_subgroup_unchecked(g, GroupHandle(g.degree(), std::move(gens)));
  }
  return current;
}

Subgroup frattini_of_p_group(const GroupHandle& pg, std::uint64_t p) {
  require_p_group(pg, p);
  std::vector<Permutation> gens;
  const auto& s = pg.generators();
  for (std::size_t i = 0; i < s.size(); ++i) {
    Permutation power = s[i].pow(static_cast<long long>(p));
    if (!power.is_identity()) gens.push_back(std::move(power));
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Permutation c = commutator(s[i], s[j]);
      if (!c.is_identity()) gens.push_back(std::move(c));
    }
  }
  return normal_closure(pg, make_subgroup_unchecked(pg, GroupHandle(pg.degree(), std::move(gens))));
}

unsigned generator_rank(const GroupHandle& pg, std::uint64_t p) {
  require_p_group(pg, p);
  if (pg.is_trivial()) throw GroupError(ErrorCode::trivial_group, "rank of the trivial group");
  std::uint64_t index = pg.order() / frattini_of_p_group(pg, p).order();
  unsigned d = 0;
  while (index > 1) {
    index /= p;
    ++d;
  }
  return d;
}

FrattiniQuotient analyze_p_group(const GroupHandle& pg, std::uint64_t p) {
  require_p_group(pg, p);
  if (pg.is_trivial()) throw GroupError(ErrorCode::trivial_group, "maximal subgroups of 1");
  FrattiniQuotient out{p, frattini_of_p_group(pg, p), 0, {}, {}};
  QuotientContext ctx = build_quotient(pg, out.frattini);

  // Greedy basis among the generators of P.
  GroupHandle span(ctx.quotient().degree(), {});
  std::vector<Permutation> span_gens;
  for (const auto& s : pg.generators()) {
    Permutation img = ctx.project(s);
    if (span.contains(img)) continue;
    out.basis.push_back(s);
    span_gens.push_back(img);
    span = GroupHandle(ctx.quotient().degree(), span_gens);
  }
  out.rank = static_cast<unsigned>(out.basis.size());
  const unsigned d = out.rank;

  // One hyperplane per functional with leading coefficient 1.
  std::vector<unsigned> f(d, 0);
  for (unsigned lead = 0; lead < d; ++lead) {
    std::fill(f.begin(), f.end(), 0u);
    f[lead] = 1;
    const std::size_t free = d - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < free; ++k) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t k = d; k-- > lead + 1;) {
        f[k] = static_cast<unsigned>(c % p);
        c /= p;
      }
      std::vector<Permutation> gens = out.frattini.generators();
      for (unsigned j = 0; j < d; ++j) {
        if (j == lead) continue;
        long long shift = static_cast<long long>((p - f[j]) % p);
        gens.push_back(out.basis[j] * out.basis[lead].pow(shift));
      }
      Subgroup m = make_subgroup_unchecked(pg, GroupHandle(pg.degree(), std::move(gens)));
      if (m.order() * p != pg.order()) {
        throw std::logic_error("hyperplane preimage does not have index p");
      }
      out.maximals.push_back({std::move(m), f});
    }
  }

  std::vector<std::pair<CanonicalKey, std::size_t>> keyed;
  for (std::size_t i = 0; i < out.maximals.size(); ++i) {
    keyed.emplace_back(canonical_key(out.maximals[i].subgroup), i);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MaximalSubgroup> sorted;
  for (const auto& [key, i] : keyed) sorted.push_back(out.maximals[i]);
  out.maximals = std::move(sorted);
  return out;
}

std::vector<Subgroup> maximal_subgroups_of_p_group(const GroupHandle& pg, std::uint64_t p) {
  std::vector<Subgroup> out;
  for (auto& m : analyze_p_group(pg, p).maximals) out.push_back(std::move(m.subgroup));
  return out;
}

// ---- normal structure -------------------------------------------------------

NormalLattice::NormalLattice(const GroupHandle& g)
    : group_(g), normals_(enumerate_normal_subgroups(g)) {
  const std::size_t n = normals_.size();
  below_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      below_[i][j] = i == j || (normals_[i].order() < normals_[j].order() &&
                                is_subset(normals_[i].group(), normals_[j].group()));
    }
  }
  const PrimeSet primes = pi_of(g.order());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !below_[i][j]) continue;
      bool covering = true;
      for (std::size_t m = 0; m < n && covering; ++m) {
        if (m != i && m != j && below_[i][m] && below_[m][j]) covering = false;
      }
      if (!covering) continue;
      ChiefFactor cf{normals_[i], normals_[j], normals_[j].order() / normals_[i].order(),
                     {}, i, j};
      for (auto p : primes.primes()) cf.is_p_factor_for[p] = is_p_power(cf.factor_order, p);
      factors_.push_back(std::move(cf));
    }
  }
}

std::size_t NormalLattice::index_of(const GroupHandle& h) const {
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    if (same_subgroup(normals_[i].group(), h)) return i;
  }
  throw GroupError(ErrorCode::not_normal, "subgroup is not in the normal lattice");
}

std::vector<ChiefFactor> chief_factors(const GroupHandle& g) {
  return NormalLattice(g).chief_factors();
}

std::vector<Subgroup> chief_series(const NormalLattice& lattice) {
  std::vector<Subgroup> out{lattice.subgroups()[lattice.trivial_index()]};
  std::size_t current = lattice.trivial_index();
  while (current != lattice.whole_index()) {
    std::size_t next = lattice.subgroups().size();
    for (const auto& cf : lattice.chief_factors()) {
      if (cf.lower_index == current) next = std::min(next, cf.upper_index);
    }
    current = next;
    out.push_back(lattice.subgroups()[current]);
  }
  return out;
}

std::vector<Subgroup> chief_series(const GroupHandle& g) {
  return chief_series(NormalLattice(g));
}

Subgroup o_p(const NormalLattice& lattice, std::uint64_t p) {
  Subgroup out = Subgroup::trivial(lattice.group());
  for (const auto& n : lattice.subgroups()) {
    if (is_p_power(n.order(), p)) out = join(out, n);
  }
  return out;
}

Subgroup o_p(const GroupHandle& g, std::uint64_t p) { return o_p(NormalLattice(g), p); }

Subgroup o_p_prime(const NormalLattice& lattice, std::uint64_t p) {
  Subgroup out = Subgroup::trivial(lattice.group());
  for (const auto& n : lattice.subgroups()) {
    if (n.order() % p != 0) out = join(out, n);
  }
  return out;
}

Subgroup o_p_prime(const GroupHandle& g, std::uint64_t p) {
  return o_p_prime(NormalLattice(g), p);
}

Subgroup o_upper_p(const GroupHandle& g, std::uint64_t p) {
  std::vector<Permutation> gens;
  for (auto q : pi_of(g.order()).primes()) {
    if (q == p) continue;
    const Subgroup sylow = sylow_subgroup(g, q);
    for (const auto& x : sylow.generators()) gens.push_back(x);
  }
  return normal_closure(g, make_subgroup_unchecked(g, GroupHandle(g.degree(), std::move(gens))));
}

Subgroup u_hypercenter(const NormalLattice& lattice) {
  Subgroup out = Subgroup::trivial(lattice.group());
  const auto& normals = lattice.subgroups();
  for (std::size_t h = 0; h < normals.size(); ++h) {
    bool qualifies = true;
    for (const auto& cf : lattice.chief_factors()) {
      if (lattice.below(cf.upper_index, h) && !is_prime(cf.factor_order)) {
        qualifies = false;
        break;
      }
    }
    if (qualifies) out = join(out, normals[h]);
  }
  return out;
}

Subgroup u_hypercenter(const GroupHandle& g) { return u_hypercenter(NormalLattice(g)); }

bool is_p_soluble(const NormalLattice& lattice, std::uint64_t p) {
  for (const auto& cf : lattice.chief_factors()) {
    if (!is_p_power(cf.factor_order, p) && cf.factor_order % p == 0) return false;
  }
  return true;
}

bool is_p_soluble(const GroupHandle& g, std::uint64_t p) {
  return is_p_soluble(NormalLattice(g), p);
}

bool is_p_supersoluble(const NormalLattice& lattice, std::uint64_t p) {
  if (!is_p_soluble(lattice, p)) return false;
  for (const auto& cf : lattice.chief_factors()) {
    if (cf.factor_order % p == 0 && cf.factor_order != p) return false;
  }
  return true;
}

bool is_p_supersoluble(const GroupHandle& g, std::uint64_t p) {
  return is_p_supersoluble(NormalLattice(g), p);
}

bool is_p_nilpotent(const GroupHandle& g, std::uint64_t p) {
  return o_upper_p(g, p).order() == g.order() / p_part(g.order(), p);
}

}  // namespace grpi
