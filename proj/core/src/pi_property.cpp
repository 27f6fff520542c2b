#include "grpi/pi_property.hpp"

#include <stdexcept>

#include "grpi/errors.hpp"
#include "grpi/limits.hpp"

namespace grpi {

namespace {

std::size_t rank_mod_p(std::vector<std::vector<unsigned>> rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  auto inverse = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t scale = inverse(rows[rank][c]);
    for (auto& v : rows[rank]) v = static_cast<unsigned>(v * scale % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = static_cast<unsigned>((rows[r][k] + (p - f) * rows[rank][k]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1ULL << 62)) return r;
  }
  return r;
}

}  // namespace

// ---- PiChecker ----------------------------------------------------------------

PiChecker::PiChecker(const GroupHandle& g)
    : PiChecker(std::make_shared<const NormalLattice>(g)) {}

PiChecker::PiChecker(std::shared_ptr<const NormalLattice> lattice)
    : lattice_(std::move(lattice)),
      quotients_(lattice_->subgroups().size()),
      upper_images_(lattice_->chief_factors().size()) {}

const QuotientContext& PiChecker::quotient_for(std::size_t lattice_index) {
  auto& slot = quotients_[lattice_index];
  if (!slot) {
    slot = std::make_unique<QuotientContext>(
        build_quotient(group(), lattice_->subgroups()[lattice_index]));
  }
  return *slot;
}

PiTrailEntry PiChecker::check_factor(std::size_t factor, const Subgroup& h) {
  const ChiefFactor& cf = lattice_->chief_factors()[factor];
  PiTrailEntry entry{cf, 1, 1, PrimeSet{}, true};

  const QuotientContext& q = quotient_for(cf.lower_index);
  auto& upper = upper_images_[factor];
  if (!upper) upper = project_subgroup(q, cf.upper);

  const Subgroup image = project_subgroup(q, h);
  const Subgroup x = intersection(image, *upper);
  entry.intersection_order = x.order();
  entry.pi_set = pi_of(x.order());
  if (x.is_trivial() || x.order() == upper->order()) {
    // X = 1 or X = L/K; both are normal in G/K.
    entry.normalizer_index = 1;
  } else {
    entry.normalizer_index = q.quotient().order() / normalizer(q.quotient(), x).order();
  }
  entry.factor_pass = is_pi_number(entry.normalizer_index, entry.pi_set);
  return entry;
}

PiReport PiChecker::report(const Subgroup& h) {
  PiReport out{h, true, {}};
  for (std::size_t i = 0; i < lattice_->chief_factors().size(); ++i) {
    out.trail.push_back(check_factor(i, h));
    out.verdict = out.verdict && out.trail.back().factor_pass;
  }
  return out;
}

bool PiChecker::verdict(const Subgroup& h) {
  if (auto idx = memo_.find(h.group())) return memo_verdicts_[*idx];
  bool result = true;
  if (!h.is_trivial()) {
    for (std::size_t i = 0; i < lattice_->chief_factors().size() && result; ++i) {
      result = check_factor(i, h).factor_pass;
    }
  }
  memo_.insert(h);
  memo_verdicts_.push_back(result);
  return result;
}

PiReport satisfies_pi_property(const GroupHandle& g, const Subgroup& h) {
  PiChecker checker(g);
  return checker.report(h.in(g));
}

// ---- M_d(P) -----------------------------------------------------------------

void for_each_md_family(const FrattiniQuotient& fq,
                        const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t m = fq.maximals.size();
  const std::size_t d = fq.rank;
  if (d == 0 || m < d) return;
  if (binomial(m, d) > limits().family_cap) {
    throw GroupError(ErrorCode::cap_exceeded,
                     "M_d(P) scan over C(" + std::to_string(m) + ", " + std::to_string(d) +
                         ") subsets exceeds the family cap");
  }
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  std::vector<std::vector<unsigned>> rows(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) rows[i] = fq.maximals[idx[i]].functional;
    if (rank_mod_p(rows, fq.p) == d && !visit(idx)) return;
    // Next combination in lexicographic order.
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == m - d + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<MdFamily> md_families(const GroupHandle& p_group, std::uint64_t p) {
  const FrattiniQuotient fq = analyze_p_group(p_group, p);
  std::vector<MdFamily> out;
  for_each_md_family(fq, [&](const std::vector<std::size_t>& idx) {
    MdFamily fam{{}, fq.rank};
    for (auto i : idx) fam.members.push_back(fq.maximals[i].subgroup);
    out.push_back(std::move(fam));
    return true;
  });
  return out;
}

bool family_hypothesis_holds(PiChecker& checker, const Subgroup& n, const MdFamily& fam) {
  for (const auto& member : fam.members) {
    Subgroup meet = intersection(member.in(checker.group()), n.in(checker.group()));
    if (!checker.verdict(meet)) return false;
  }
  return true;
}

bool family_hypothesis_holds(const GroupHandle& g, const Subgroup& n, const MdFamily& fam) {
  PiChecker checker(g);
  return family_hypothesis_holds(checker, n, fam);
}

std::optional<MdFamily> exists_family_with_hypothesis(const GroupHandle& g, std::uint64_t p,
                                                      const Subgroup& n) {
  const Subgroup sylow = sylow_subgroup(g, p);
  if (sylow.is_trivial()) return std::nullopt;
  const FrattiniQuotient fq = analyze_p_group(sylow.group(), p);
  PiChecker checker(g);
  std::vector<std::optional<bool>> member_ok(fq.maximals.size());
  auto ok = [&](std::size_t i) {
    if (!member_ok[i]) {
      member_ok[i] = checker.verdict(intersection(fq.maximals[i].subgroup.in(g), n.in(g)));
    }
    return *member_ok[i];
  };
  std::optional<MdFamily> found;
  for_each_md_family(fq, [&](const std::vector<std::size_t>& idx) {
    for (auto i : idx) {
      if (!ok(i)) return true;
    }
    MdFamily fam{{}, fq.rank};
    for (auto i : idx) fam.members.push_back(fq.maximals[i].subgroup.in(g));
    found = std::move(fam);
    return false;
  });
  return found;
}

}  // namespace grpi
