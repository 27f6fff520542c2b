#include "grpi/subgroup.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_set>

#include "grpi/errors.hpp"
#include "grpi/limits.hpp"

namespace grpi {

namespace {

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

GroupHandle extend(const GroupHandle& h, const Permutation& x) {
  std::vector<Permutation> gens = h.generators();
  gens.push_back(x);
  return GroupHandle(h.degree(), std::move(gens));
}

void require_same_degree(const GroupHandle& a, const GroupHandle& b, const char* op) {
  if (a.degree() != b.degree()) {
    throw GroupError(ErrorCode::degree_mismatch,
                     std::string(op) + ": degrees " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()));
  }
}

// Length of the orbit containing each point.
std::vector<std::size_t> orbit_lengths(const GroupHandle& h) {
  const std::size_t n = h.degree();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : h.generators()) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t a = find(i), b = find(g(static_cast<Point>(i)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> size(n, 0);
  for (std::size_t i = 0; i < n; ++i) ++size[find(i)];
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = size[find(i)];
  return out;
}

std::uint64_t normal_lattice_guard(const GroupHandle& g) {
  if (g.order() > limits().normal_lattice_cap) {
    throw GroupError(ErrorCode::cap_exceeded,
                     "order " + std::to_string(g.order()) +
                         " exceeds the normal-lattice cap " +
                         std::to_string(limits().normal_lattice_cap));
  }
  return g.order();
}

}  // namespace

// ---- Subgroup -------------------------------------------------------------

Subgroup::Subgroup(GroupHandle ambient, GroupHandle group)
    : ambient_(std::move(ambient)), group_(std::move(group)) {
  require_same_degree(ambient_, group_, "subgroup");
  for (const auto& g : group_.generators()) {
    if (!ambient_.contains(g)) {
      throw GroupError(ErrorCode::not_a_subgroup,
                       "generator " + g.to_cycles() + " is not in the ambient group");
    }
  }
}

Subgroup make_subgroup_unchecked(GroupHandle ambient, GroupHandle group) {
  return Subgroup(std::move(ambient), std::move(group), Subgroup::Unchecked{});
}

Subgroup Subgroup::trivial(const GroupHandle& ambient) {
  return Subgroup(ambient, GroupHandle(ambient.degree(), {}), Unchecked{});
}

Subgroup Subgroup::whole(const GroupHandle& ambient) {
  return Subgroup(ambient, ambient, Unchecked{});
}

Subgroup Subgroup::generated(const GroupHandle& ambient,
                             std::vector<Permutation> generators) {
  return Subgroup(ambient, GroupHandle(ambient.degree(), std::move(generators)));
}

// ---- identity -------------------------------------------------------------

CanonicalKey canonical_key(const GroupHandle& h) {
  CanonicalKey key;
  key.order = h.order();
  key.elements = elements(h);
  std::sort(key.elements.begin(), key.elements.end());
  return key;
}

std::uint64_t element_set_hash(const GroupHandle& h) {
  std::uint64_t acc = mix(h.order());
  for_each_element(h, [&](const Permutation& p) {
    acc += mix(p.hash());
    return true;
  });
  return acc;
}

std::string fingerprint(const GroupHandle& h) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(element_set_hash(h)));
  return "o" + std::to_string(h.order()) + "-" + buf;
}

std::vector<Permutation> canonical_generators(const GroupHandle& h) {
  CanonicalKey key = canonical_key(h);
  GroupHandle span(h.degree(), {});
  std::vector<Permutation> out;
  for (const auto& x : key.elements) {
    if (span.order() == h.order()) break;
    if (span.contains(x)) continue;
    out.push_back(x);
    span = GroupHandle(h.degree(), out);
  }
  return out;
}

bool is_subset(const GroupHandle& a, const GroupHandle& b) {
  require_same_degree(a, b, "is_subset");
  if (b.order() % a.order() != 0) return false;
  for (const auto& g : a.generators()) {
    if (!b.contains(g)) return false;
  }
  return true;
}

bool same_subgroup(const GroupHandle& a, const GroupHandle& b) {
  return a.order() == b.order() && is_subset(a, b);
}

void sort_canonical(std::vector<Subgroup>& subgroups) {
  std::vector<std::pair<CanonicalKey, std::size_t>> keyed;
  keyed.reserve(subgroups.size());
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    keyed.emplace_back(canonical_key(subgroups[i]), i);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Subgroup> out;
  out.reserve(subgroups.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    out.push_back(subgroups[keyed[i].second]);
  }
  subgroups = std::move(out);
}

std::pair<std::size_t, bool> SubgroupSet::insert(const Subgroup& h) {
  if (buckets_.empty()) buckets_.resize(64);
  std::uint64_t digest = element_set_hash(h.group());
  for (std::size_t idx : buckets_[bucket_of(digest)]) {
    if (hashes_[idx] == digest && same_subgroup(items_[idx].group(), h.group())) {
      return {idx, false};
    }
  }
  items_.push_back(h);
  hashes_.push_back(digest);
  buckets_[bucket_of(digest)].push_back(items_.size() - 1);
  if (items_.size() > 2 * buckets_.size()) rehash();
  return {items_.size() - 1, true};
}

std::optional<std::size_t> SubgroupSet::find(const GroupHandle& h) const {
  if (buckets_.empty()) return std::nullopt;
  std::uint64_t digest = element_set_hash(h);
  for (std::size_t idx : buckets_[bucket_of(digest)]) {
    if (hashes_[idx] == digest && same_subgroup(items_[idx].group(), h)) return idx;
  }
  return std::nullopt;
}

void SubgroupSet::rehash() {
  buckets_.assign(buckets_.size() * 4, {});
  for (std::size_t i = 0; i < items_.size(); ++i) {
    buckets_[bucket_of(hashes_[i])].push_back(i);
  }
}

// ---- constructions --------------------------------------------------------

bool normalizes(const Permutation& g, const GroupHandle& h) {
  for (const auto& x : h.generators()) {
    if (!h.contains(x.conjugate_by(g))) return false;
  }
  return true;
}

bool is_normal(const GroupHandle& g, const GroupHandle& h) {
  require_same_degree(g, h, "is_normal");
  for (const auto& x : g.generators()) {
    if (!normalizes(x, h)) return false;
  }
  return true;
}

Subgroup conjugate(const Subgroup& h, const Permutation& g) {
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const auto& x : h.generators()) gens.push_back(x.conjugate_by(g));
  return make_subgroup_unchecked(h.ambient(), GroupHandle(h.degree(), std::move(gens)));
}

Subgroup normalizer(const GroupHandle& g, const Subgroup& h) {
  require_same_degree(g, h.group(), "normalizer");
  if (is_normal(g, h.group())) return Subgroup::whole(g);

  const auto base = g.chain().base();
  const auto lengths = orbit_lengths(h.group());
  GroupHandle found = is_subset(h.group(), g) ? h.group() : GroupHandle(g.degree(), {});

  // An element normalizing H maps H-orbits onto H-orbits of the same length.
  auto prune = [&](std::size_t depth, const Permutation& partial) {
    return lengths[base[depth]] == lengths[partial(base[depth])];
  };
  auto visit = [&](const Permutation& x) {
    if (found.contains(x)) return true;
    if (normalizes(x, h.group())) found = extend(found, x);
    return found.order() != g.order();
  };
  backtrack_elements(g, prune, visit);
  return make_subgroup_unchecked(g, found);
}

Subgroup centralizer(const GroupHandle& g, const Subgroup& h) {
  require_same_degree(g, h.group(), "centralizer");
  const auto base = g.chain().base();
  const auto lengths = orbit_lengths(h.group());
  const auto& hgens = h.generators();

  // For each generator s and base position l, the base positions j <= l with
  // s(b_j) = b_l or s(b_l) = b_j. A centralizing x satisfies
  // x(s(b)) = s(x(b)), which is decidable once both base images are fixed.
  std::vector<std::int64_t> base_index(g.degree(), -1);
  for (std::size_t i = 0; i < base.size(); ++i) base_index[base[i]] = static_cast<std::int64_t>(i);
  struct Constraint {
    std::size_t gen, from, to;  // s(b_from) = b_to
  };
  std::vector<std::vector<Constraint>> constraints(base.size());
  for (std::size_t si = 0; si < hgens.size(); ++si) {
    for (std::size_t j = 0; j < base.size(); ++j) {
      std::int64_t k = base_index[hgens[si](base[j])];
      if (k < 0) continue;
      std::size_t deepest = std::max(j, static_cast<std::size_t>(k));
      constraints[deepest].push_back({si, j, static_cast<std::size_t>(k)});
    }
  }

  auto prune = [&](std::size_t depth, const Permutation& partial) {
    if (lengths[base[depth]] != lengths[partial(base[depth])]) return false;
    for (const auto& c : constraints[depth]) {
      if (partial(base[c.to]) != hgens[c.gen](partial(base[c.from]))) return false;
    }
    return true;
  };
  GroupHandle found(g.degree(), {});
  auto visit = [&](const Permutation& x) {
    for (const auto& s : hgens) {
      if (s * x != x * s) return true;
    }
    if (!found.contains(x)) found = extend(found, x);
    return found.order() != g.order();
  };
  backtrack_elements(g, prune, visit);
  return make_subgroup_unchecked(g, found);
}

Subgroup center(const GroupHandle& g) { return centralizer(g, Subgroup::whole(g)); }

Subgroup normal_closure(const GroupHandle& g, const Subgroup& s) {
  require_same_degree(g, s.group(), "normal_closure");
  std::vector<Permutation> gens = s.generators();
  GroupHandle closure(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& x : g.generators()) {
      Permutation c = gens[i].conjugate_by(x);
      if (closure.contains(c)) continue;
      gens.push_back(std::move(c));
      closure = GroupHandle(g.degree(), gens);
    }
  }
  return make_subgroup_unchecked(g, closure);
}

Subgroup core(const GroupHandle& g, const Subgroup& h) {
  require_same_degree(g, h.group(), "core");
  Subgroup current = make_subgroup_unchecked(g, h.group());
  bool shrunk = true;
  while (shrunk && !current.is_trivial()) {
    shrunk = false;
    for (const auto& x : g.generators()) {
      if (normalizes(x, current.group())) continue;
      current = intersection(current, conjugate(current, x));
      shrunk = true;
    }
  }
  return current;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_degree(a.group(), b.group(), "intersection");
  if (is_subset(a.group(), b.group())) return make_subgroup_unchecked(a.ambient(), a.group());
  if (is_subset(b.group(), a.group())) return make_subgroup_unchecked(a.ambient(), b.group());
  const Subgroup& small = a.order() <= b.order() ? a : b;
  const Subgroup& large = a.order() <= b.order() ? b : a;
  const std::uint64_t bound = std::gcd(a.order(), b.order());
  GroupHandle found(a.degree(), {});
  for_each_element(small.group(), [&](const Permutation& x) {
    if (!large.contains(x) || found.contains(x)) return true;
    found = extend(found, x);
    // |A n B| divides gcd(|A|, |B|) and A, B are not nested.
    return found.order() < bound;
  });
  return make_subgroup_unchecked(a.ambient(), found);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_degree(a.group(), b.group(), "join");
  if (is_subset(b.group(), a.group())) return make_subgroup_unchecked(a.ambient(), a.group());
  if (is_subset(a.group(), b.group())) return make_subgroup_unchecked(a.ambient(), b.group());
  std::vector<Permutation> gens = a.generators();
  for (const auto& x : b.generators()) gens.push_back(x);
  return make_subgroup_unchecked(a.ambient(), GroupHandle(a.degree(), std::move(gens)));
}

Subgroup derived_subgroup(const GroupHandle& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return normal_closure(g, make_subgroup_unchecked(g, GroupHandle(g.degree(), std::move(comms))));
}

bool is_soluble(const GroupHandle& g) {
  GroupHandle current = g;
  while (!current.is_trivial()) {
    Subgroup d = derived_subgroup(current);
    if (d.order() == current.order()) return false;
    current = d.group();
  }
  return true;
}

std::uint64_t product_order(const Subgroup& a, const Subgroup& b) {
  return a.order() / intersection(a, b).order() * b.order();
}

bool product_is_subgroup(const Subgroup& a, const Subgroup& b) {
  require_same_degree(a.group(), b.group(), "product_is_subgroup");
  if (is_subset(a.group(), b.group()) || is_subset(b.group(), a.group())) return true;
  bool a_normalizes_b = true;
  for (const auto& x : a.generators()) {
    if (!normalizes(x, b.group())) {
      a_normalizes_b = false;
      break;
    }
  }
  if (a_normalizes_b) return true;
  bool b_normalizes_a = true;
  for (const auto& x : b.generators()) {
    if (!normalizes(x, a.group())) {
      b_normalizes_a = false;
      break;
    }
  }
  if (b_normalizes_a) return true;
  return product_order(a, b) == join(a, b).order();
}

std::vector<Subgroup> enumerate_normal_subgroups(const GroupHandle& g) {
  normal_lattice_guard(g);

  // Representatives of the conjugacy classes, in element order.
  std::vector<Permutation> reps;
  {
    std::unordered_set<Permutation> seen;
    for (const auto& x : elements(g)) {
      if (seen.count(x)) continue;
      reps.push_back(x);
      std::vector<Permutation> queue{x};
      seen.insert(x);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& s : g.generators()) {
          Permutation y = queue[i].conjugate_by(s);
          if (seen.insert(y).second) queue.push_back(std::move(y));
        }
      }
    }
  }

  SubgroupSet closures;
  for (const auto& x : reps) {
    if (x.is_identity()) continue;
    closures.insert(normal_closure(g, make_subgroup_unchecked(g, GroupHandle(g.degree(), {x}))));
  }

  SubgroupSet lattice;
  lattice.insert(Subgroup::trivial(g));
  for (const auto& c : closures.items()) lattice.insert(c);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (const auto& c : closures.items()) {
      const Subgroup current = lattice[i];
      if (is_subset(c.group(), current.group())) continue;
      lattice.insert(join(current, c));
    }
  }
  std::vector<Subgroup> out = lattice.items();
  sort_canonical(out);
  return out;
}

std::vector<Subgroup> conjugacy_class_representatives(const GroupHandle& g,
                                                      const std::vector<Subgroup>& lattice) {
  SubgroupSet index;
  for (const auto& h : lattice) index.insert(h);
  std::vector<bool> marked(index.size(), false);
  std::vector<Subgroup> reps;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    std::size_t start = *index.find(lattice[i].group());
    if (marked[start]) continue;
    reps.push_back(lattice[i]);
    std::vector<std::size_t> queue{start};
    marked[start] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& s : g.generators()) {
        Subgroup c = conjugate(index[queue[q]], s);
        auto found = index.find(c.group());
        if (!found) {
          throw GroupError(ErrorCode::not_a_subgroup,
                           "lattice is not closed under conjugation");
        }
        if (!marked[*found]) {
          marked[*found] = true;
          queue.push_back(*found);
        }
      }
    }
  }
  return reps;
}

std::vector<Subgroup> enumerate_subgroups(const GroupHandle& g, bool up_to_conjugacy) {
  if (g.order() > limits().subgroup_lattice_cap) {
    throw GroupError(ErrorCode::cap_exceeded,
                     "order " + std::to_string(g.order()) +
                         " exceeds the subgroup-lattice cap " +
                         std::to_string(limits().subgroup_lattice_cap));
  }

  // Cyclic subgroups generated by elements of prime-power order.
  std::vector<Permutation> cyclic_gens;
  {
    SubgroupSet cyclic;
    for (const auto& x : elements(g)) {
      std::uint64_t ord = x.order();
      if (ord == 1) continue;
      std::uint64_t p = 2;
      while (ord % p != 0) ++p;
      while (ord % p == 0) ord /= p;
      if (ord != 1) continue;
      if (cyclic.insert(make_subgroup_unchecked(g, GroupHandle(g.degree(), {x}))).second) {
        cyclic_gens.push_back(x);
      }
    }
  }

  // Cyclic extension: in a soluble group every subgroup H > 1 is <M, x> for
  // some M of prime index in H and a prime-power element x normalizing M.
  // Otherwise fall back to arbitrary joins, which is complete because every
  // subgroup is generated by its prime-power elements.
  const bool soluble = is_soluble(g);
  SubgroupSet lattice;
  lattice.insert(Subgroup::trivial(g));
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (const auto& x : cyclic_gens) {
      const Subgroup current = lattice[i];
      if (current.contains(x)) continue;
      if (soluble && !normalizes(x, current.group())) continue;
      lattice.insert(make_subgroup_unchecked(g, extend(current.group(), x)));
    }
  }
  std::vector<Subgroup> out = lattice.items();
  sort_canonical(out);
  if (up_to_conjugacy) return conjugacy_class_representatives(g, out);
  return out;
}

std::optional<Subgroup> find_complement(const GroupHandle& g, const Subgroup& n,
                                        const std::vector<Subgroup>& lattice) {
  if (!is_normal(g, n.group())) {
    throw GroupError(ErrorCode::not_normal, "find_complement: N is not normal in G");
  }
  if (n.order() == g.order()) return Subgroup::trivial(g);
  const std::uint64_t target = g.order() / n.order();
  for (const auto& h : lattice) {
    if (h.order() != target) continue;
    if (!is_subset(h.group(), g)) continue;
    if (intersection(h, n).is_trivial()) return h.in(g);
  }
  return std::nullopt;
}

std::optional<Subgroup> find_complement(const GroupHandle& g, const Subgroup& n) {
  return find_complement(g, n, enumerate_subgroups(g, false));
}

bool is_subnormal(const GroupHandle& g, const Subgroup& h) {
  GroupHandle current = g;
  while (true) {
    if (!is_subset(h.group(), current)) return false;
    Subgroup next = normal_closure(current, make_subgroup_unchecked(current, h.group()));
    if (next.order() == h.order()) return true;
    if (next.order() == current.order()) return false;
    current = next.group();
  }
}

}  // namespace grpi
