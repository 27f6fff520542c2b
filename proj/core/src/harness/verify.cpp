#include "grpi/harness/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <map>
#include <numeric>
#include <thread>

#include "grpi/embeddings.hpp"
#include "grpi/errors.hpp"

namespace grpi::harness {

namespace {

using nlohmann::json;

json subgroup_json(const Subgroup& h) {
  json gens = json::array();
  for (const auto& x : canonical_generators(h.group())) gens.push_back(x.to_cycles());
  return {{"fingerprint", fingerprint(h)}, {"order", h.order()}, {"generators", std::move(gens)}};
}

bool is_abelian(const Subgroup& h) {
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

/// G/N p-supersoluble, read off the chief factors of G above N.
bool quotient_is_p_supersoluble(const NormalLattice& lattice, std::size_t n_index, std::uint64_t p) {
  for (const auto& cf : lattice.chief_factors()) {
    if (!lattice.below(n_index, cf.lower_index)) continue;
    if (cf.factor_order % p == 0 && cf.factor_order != p) return false;
  }
  return true;
}

std::string cap_reason(const GroupError& e) { return "cap-exceeded: " + std::string(e.what()); }

// ---- theorem campaigns ------------------------------------------------------

struct FamilyScan {
  std::uint64_t examined = 0;
  std::optional<std::vector<std::size_t>> first_passing;
  std::optional<std::vector<std::size_t>> first_failing;
};

/// Per (G, p) state shared by all admissible N.
class FamilyScanner {
 public:
  FamilyScanner(PiChecker& checker, std::uint64_t p)
      : checker_(checker),
        sylow_(sylow_subgroup(checker.group(), p)),
        fq_(analyze_p_group(sylow_.group(), p)) {}

  const Subgroup& sylow() const noexcept { return sylow_; }

  /// Stops once both a passing and a failing family are known.
  FamilyScan scan(const Subgroup& n) {
    std::vector<std::optional<bool>> member_ok(fq_.maximals.size());
    auto ok = [&](std::size_t i) {
      if (!member_ok[i]) {
        member_ok[i] =
            checker_.verdict(intersection(fq_.maximals[i].subgroup.in(checker_.group()), n));
      }
      return *member_ok[i];
    };
    FamilyScan out;
    for_each_md_family(fq_, [&](const std::vector<std::size_t>& idx) {
      ++out.examined;
      const bool pass = std::all_of(idx.begin(), idx.end(), ok);
      auto& slot = pass ? out.first_passing : out.first_failing;
      if (!slot) slot = idx;
      return !(out.first_passing && out.first_failing);
    });
    return out;
  }

  json family_json(const std::vector<std::size_t>& idx) const {
    json members = json::array();
    for (auto i : idx) members.push_back(subgroup_json(fq_.maximals[i].subgroup));
    return members;
  }

 private:
  PiChecker& checker_;
  Subgroup sylow_;
  FrattiniQuotient fq_;
};

/// Builds the record for one admissible N. `extra` is an additional
/// hypothesis conjunct (N_G(P) p-nilpotent for B) that the necessity
/// direction must also deliver.
VerificationRecord family_record(std::string_view claim, const GroupHandle& g, std::uint64_t p,
                                 const Subgroup& n, bool extra, bool conclusion,
                                 const FamilyScan& scan, const FamilyScanner& scanner) {
  VerificationRecord r;
  r.claim_id = claim;
  r.group_name = g.label();
  r.prime = p;
  r.normal_subgroup_fingerprint = fingerprint(n);
  r.hypothesis_held = extra && scan.first_passing.has_value();
  r.conclusion_held = conclusion;
  const bool sufficiency_ok = !r.hypothesis_held || conclusion;
  const bool necessity_ok = !conclusion || (extra && !scan.first_failing);
  r.status = sufficiency_ok && necessity_ok ? Status::pass : Status::fail;
  r.witness = {{"families_examined", scan.examined},
               {"family", scan.first_passing ? scanner.family_json(*scan.first_passing) : json()}};
  if (!necessity_ok) {
    r.witness["necessity_violation"] =
        scan.first_failing ? scanner.family_json(*scan.first_failing) : json("extra hypothesis");
  }
  return r;
}

enum class Criterion { a, b, c };

std::vector<VerificationRecord> verify_theorem(Criterion which, const GroupHandle& g,
                                               std::uint64_t p) {
  const std::string_view claim =
      which == Criterion::a ? kTheoremA : which == Criterion::b ? kTheoremB : kTheoremC;
  if (!is_prime(p) || g.order() % p != 0) {
    return {skipped_record(std::string(claim), g.label(), p, "p does not divide |G|")};
  }
  if (which == Criterion::c) {
    const std::uint64_t d = std::gcd(g.order(), p - 1);
    if (d != 1) {
      return {skipped_record(std::string(claim), g.label(), p,
                             "gcd(|G|, p-1) = " + std::to_string(d))};
    }
  }
  try {
    auto lattice = std::make_shared<const NormalLattice>(g);
    if (which == Criterion::a && !is_p_soluble(*lattice, p)) {
      return {skipped_record(std::string(claim), g.label(), p, "not p-soluble")};
    }
    PiChecker checker(lattice);
    FamilyScanner scanner(checker, p);

    bool extra = true;
    bool conclusion = false;
    switch (which) {
      case Criterion::a:
        conclusion = is_p_supersoluble(*lattice, p);
        break;
      case Criterion::b:
        extra = is_p_nilpotent(normalizer(g, scanner.sylow()).group(), p);
        conclusion = is_p_nilpotent(g, p);
        break;
      case Criterion::c:
        conclusion = is_p_nilpotent(g, p);
        break;
    }

    std::vector<VerificationRecord> out;
    const auto& normals = lattice->subgroups();
    for (std::size_t i = 0; i < normals.size(); ++i) {
      const bool admissible =
          which == Criterion::c
              ? is_p_nilpotent(build_quotient(g, normals[i]).quotient(), p)
              : quotient_is_p_supersoluble(*lattice, i, p);
      if (!admissible) continue;
      const FamilyScan scan = scanner.scan(normals[i]);
      out.push_back(family_record(claim, g, p, normals[i], extra, conclusion, scan, scanner));
      if (which == Criterion::b) out.back().witness["normalizer_p_nilpotent"] = extra;
    }
    return out;
  } catch (const GroupError& e) {
    if (e.code() != ErrorCode::cap_exceeded) throw;
    return {skipped_record(std::string(claim), g.label(), p, cap_reason(e))};
  }
}

// ---- property suites --------------------------------------------------------

/// Aggregates implication tuples (hypothesis => conclusion) into one record.
struct Tally {
  std::uint64_t tuples = 0;
  std::uint64_t non_vacuous = 0;
  json counterexample;

  template <class Describe>
  void add(bool hypothesis, bool conclusion, Describe&& describe) {
    ++tuples;
    if (!hypothesis) return;
    ++non_vacuous;
    if (!conclusion && counterexample.is_null()) counterexample = describe();
  }

  VerificationRecord record(std::string_view claim, const GroupHandle& g, std::uint64_t p,
                            std::string fp) const {
    VerificationRecord r;
    r.claim_id = claim;
    r.group_name = g.label();
    r.prime = p;
    r.normal_subgroup_fingerprint = std::move(fp);
    r.hypothesis_held = non_vacuous > 0;
    r.conclusion_held = counterexample.is_null();
    r.witness = {{"tuples", tuples}, {"non_vacuous", non_vacuous}};
    if (!counterexample.is_null()) r.witness["counterexample"] = counterexample;
    r.status = !r.conclusion_held ? Status::fail
               : r.hypothesis_held ? Status::pass
                                   : Status::pass_vacuous;
    return r;
  }
};

/// The prime of a nontrivial p-group, else 0.
std::uint64_t prime_of_p_group(const Subgroup& h) {
  if (h.is_trivial()) return 0;
  const auto primes = pi_of(h.order()).primes();
  return primes.size() == 1 ? primes.front() : 0;
}

std::vector<VerificationRecord> skip_all(std::initializer_list<std::string_view> claims,
                                         const GroupHandle& g, const std::string& reason) {
  std::vector<VerificationRecord> out;
  for (auto c : claims) out.push_back(skipped_record(std::string(c), g.label(), 0, reason));
  return out;
}

template <class Work>
std::vector<VerificationRecord> parallel_over(std::span<const CorpusGroup> groups, unsigned jobs,
                                              Work&& work) {
  std::vector<std::vector<VerificationRecord>> parts(groups.size());
  std::vector<std::exception_ptr> errors(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < groups.size();) {
      try {
        parts[i] = work(groups[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(groups.size(), 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<VerificationRecord> out;
  for (auto& part : parts) {
    for (auto& r : part) out.push_back(std::move(r));
  }
  return out;
}

bool in_theorem_scope(const CorpusGroup& c, const VerifyOptions& o) {
  return o.max_order == 0 || c.group.order() <= o.max_order || c.has_tag("fixture");
}

}  // namespace

std::optional<Claim> parse_claim(std::string_view text) {
  for (Claim c : {Claim::theorem_a, Claim::theorem_b, Claim::theorem_c, Claim::lemmas,
                  Claim::propositions, Claim::example_1_2, Claim::all}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::theorem_a: return kTheoremA;
    case Claim::theorem_b: return kTheoremB;
    case Claim::theorem_c: return kTheoremC;
    case Claim::lemmas: return "lemmas";
    case Claim::propositions: return "propositions";
    case Claim::example_1_2: return kExample;
    case Claim::all: return "all";
  }
  return "unknown";
}

std::vector<VerificationRecord> verify_theorem_a(const GroupHandle& g, std::uint64_t p) {
  return verify_theorem(Criterion::a, g, p);
}

std::vector<VerificationRecord> verify_theorem_b(const GroupHandle& g, std::uint64_t p) {
  return verify_theorem(Criterion::b, g, p);
}

std::vector<VerificationRecord> verify_theorem_c(const GroupHandle& g, std::uint64_t p) {
  return verify_theorem(Criterion::c, g, p);
}

std::vector<VerificationRecord> verify_lemmas(const GroupHandle& g) {
  std::vector<VerificationRecord> out;
  try {
    EmbeddingContext ctx(g);
    const auto& subs = ctx.subgroups();
    const NormalLattice& lattice = ctx.normal_lattice();
    const auto& normals = lattice.subgroups();
    PiChecker& pi = ctx.pi_checker();
    const auto primes = pi_of(g.order()).primes();
    const std::string whole_fp = fingerprint(Subgroup::whole(g));

    std::vector<char> pi_ok(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) pi_ok[i] = pi.verdict(subs[i]);

    auto p_subgroups = [&](std::uint64_t p) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!subs[i].is_trivial() && is_p_power(subs[i].order(), p)) idx.push_back(i);
      }
      return idx;
    };

    // Pi-property passes to quotients.
    for (const auto& n : normals) {
      const QuotientContext q = build_quotient(g, n);
      PiChecker qpi(q.quotient());
      Tally t;
      for (std::size_t i = 0; i < subs.size(); ++i) {
        const bool hyp = pi_ok[i];
        t.add(hyp, hyp && qpi.verdict(project_subgroup(q, subs[i])),
              [&] { return json{{"subgroup", subgroup_json(subs[i])}}; });
      }
      out.push_back(t.record(kQuotientClosure, g, 0, fingerprint(n)));
    }

    // (P1 N/N) n (L N/N) = (P1 n L) N/N for normal p'-subgroups N.
    for (auto p : primes) {
      const auto ps = p_subgroups(p);
      for (const auto& n : normals) {
        if (n.order() % p == 0) continue;
        const QuotientContext q = build_quotient(g, n);
        std::vector<Subgroup> l_images;
        for (const auto& l : normals) l_images.push_back(project_subgroup(q, l));
        Tally t;
        for (auto i : ps) {
          const Subgroup p1_image = project_subgroup(q, subs[i]);
          for (std::size_t j = 0; j < normals.size(); ++j) {
            const Subgroup lhs = intersection(p1_image, l_images[j]);
            const Subgroup rhs = project_subgroup(q, intersection(subs[i], normals[j]));
            t.add(true, same_subgroup(lhs, rhs), [&] {
              return json{{"p1", subgroup_json(subs[i])}, {"l", subgroup_json(normals[j])}};
            });
          }
        }
        out.push_back(t.record(kPPrimeIntersection, g, p, fingerprint(n)));
      }
    }

    // Complements of abelian normal N lift from M to G when gcd(|N|, |G:M|) = 1.
    auto has_complement = [&](const Subgroup& m, const Subgroup& n) {
      const std::uint64_t want = m.order() / n.order();
      for (const auto& k : subs) {
        if (k.order() != want || !is_subset(k, m)) continue;
        if (product_order(k, n) == m.order()) return true;
      }
      return false;
    };
    for (const auto& n : normals) {
      if (n.is_trivial() || !is_abelian(n)) continue;
      const bool in_g = has_complement(Subgroup::whole(g), n);
      Tally t;
      for (const auto& m : subs) {
        if (!is_subset(n, m) || std::gcd(n.order(), g.order() / m.order()) != 1) continue;
        t.add(has_complement(m, n), in_g, [&] { return json{{"m", subgroup_json(m)}}; });
      }
      out.push_back(t.record(kComplementLifting, g, 0, fingerprint(n)));
    }

    // p-subgroups of p-supersoluble groups satisfy the Pi-property.
    for (auto p : primes) {
      const bool supersoluble = is_p_supersoluble(lattice, p);
      Tally t;
      for (auto i : p_subgroups(p)) {
        t.add(supersoluble, pi_ok[i], [&] { return json{{"subgroup", subgroup_json(subs[i])}}; });
      }
      out.push_back(t.record(kSupersolubleSource, g, p, whole_fp));
    }

    // Pi-property of a p-subgroup passes to its intersection with normal N.
    for (auto p : primes) {
      const auto ps = p_subgroups(p);
      for (const auto& n : normals) {
        Tally t;
        for (auto i : ps) {
          const bool hyp = pi_ok[i];
          t.add(hyp, hyp && pi.verdict(intersection(subs[i], n)),
                [&] { return json{{"subgroup", subgroup_json(subs[i])}}; });
        }
        out.push_back(t.record(kNormalIntersection, g, p, fingerprint(n)));
      }
    }
  } catch (const GroupError& e) {
    if (e.code() != ErrorCode::cap_exceeded) throw;
    return skip_all({kQuotientClosure, kPPrimeIntersection, kComplementLifting,
                     kSupersolubleSource, kNormalIntersection},
                    g, cap_reason(e));
  }
  return out;
}

std::vector<VerificationRecord> verify_propositions(const GroupHandle& g) {
  std::vector<VerificationRecord> out;
  try {
    EmbeddingContext ctx(g);
    const auto& subs = ctx.subgroups();
    PiChecker& pi = ctx.pi_checker();
    const std::string whole_fp = fingerprint(Subgroup::whole(g));

    Tally normal_t, permutable_t, s_permutable_t, cap_t, hyper_t;
    Tally chain1, chain2, chain3;
    std::map<std::uint64_t, std::array<Tally, 6>> by_prime;  // semi, ss, pi, c, uc, c#
    std::map<std::uint64_t, Subgroup> o_upper;

    for (const auto& h : subs) {
      const auto describe = [&] { return json{{"subgroup", subgroup_json(h)}}; };
      const bool pi_h = pi.verdict(h);
      const bool normal = is_normal(g, h);
      const bool permutable = ctx.is_permutable(h);
      const bool s_permutable = ctx.is_s_permutable(h);
      const bool s_semi = ctx.is_s_semipermutable(h);

      normal_t.add(normal, pi_h, describe);
      permutable_t.add(permutable, pi_h, describe);
      s_permutable_t.add(s_permutable, pi_h, describe);
      cap_t.add(ctx.is_cap_subgroup(h), pi_h, describe);
      hyper_t.add(ctx.is_u_hypercentral_mod_core(h), pi_h, describe);
      chain1.add(normal, permutable, describe);
      chain2.add(permutable, s_permutable, describe);
      chain3.add(s_permutable, s_semi, describe);

      const std::uint64_t p = prime_of_p_group(h);
      if (p == 0) continue;
      auto& t = by_prime[p];
      t[0].add(s_semi, pi_h, describe);
      t[1].add(ctx.is_ss_quasinormal(h), pi_h, describe);

      auto it = o_upper.find(p);
      if (it == o_upper.end()) it = o_upper.emplace(p, o_upper_p(g, p)).first;
      const bool target = pi.verdict(intersection(h, it->second));
      t[2].add(ctx.is_pi_normal(h), target, describe);
      t[3].add(ctx.is_c_normal(h), target, describe);
      t[4].add(ctx.is_uc_normal(h), target, describe);
      t[5].add(ctx.is_c_sharp_normal(h), target, describe);
    }

    out.push_back(normal_t.record(kPropNormal, g, 0, whole_fp));
    out.push_back(permutable_t.record(kPropPermutable, g, 0, whole_fp));
    out.push_back(s_permutable_t.record(kPropSPermutable, g, 0, whole_fp));
    out.push_back(cap_t.record(kPropCap, g, 0, whole_fp));
    out.push_back(hyper_t.record(kPropUHypercentral, g, 0, whole_fp));
    out.push_back(chain1.record(kChainNormalPermutable, g, 0, whole_fp));
    out.push_back(chain2.record(kChainPermutableS, g, 0, whole_fp));
    out.push_back(chain3.record(kChainSSemi, g, 0, whole_fp));
    constexpr std::array<std::string_view, 6> per_prime = {
        kPropSSemipermutable, kPropSSQuasinormal, kPropPiNormal,
        kPropCNormal,         kPropUcNormal,      kPropCSharpNormal};
    for (const auto& [p, tallies] : by_prime) {
      for (std::size_t k = 0; k < per_prime.size(); ++k) {
        out.push_back(tallies[k].record(per_prime[k], g, p, whole_fp));
      }
    }
  } catch (const GroupError& e) {
    if (e.code() != ErrorCode::cap_exceeded) throw;
    return skip_all({kPropNormal, kPropPermutable, kPropSPermutable, kPropCap, kPropUHypercentral,
                     kPropSSemipermutable, kPropSSQuasinormal, kPropPiNormal, kPropCNormal,
                     kPropUcNormal, kPropCSharpNormal, kChainNormalPermutable, kChainPermutableS,
                     kChainSSemi},
                    g, cap_reason(e));
  }
  return out;
}

VerificationRecord reproduce_example_1_2() {
  const GroupHandle g = to_group(direct_product(cyclic_group(5), alternating_group(5), "C5xA5"));
  auto perm = [&](std::string_view cycles) { return Permutation::from_cycles(cycles, g.degree()); };
  const Permutation a = perm("(0 1 2 3 4)");
  const Permutation b = perm("(5 6 7 8 9)");
  const Subgroup big_b = Subgroup::generated(g, {perm("(5 6 7)"), b});
  const Subgroup p_full = Subgroup::generated(g, {a, b});
  const Subgroup p1 = Subgroup::generated(g, {a});
  const Subgroup p2 = Subgroup::generated(g, {a * b});

  PiChecker checker(g);
  const Subgroup m1 = intersection(p1, big_b);
  const Subgroup m2 = intersection(p2, big_b);
  const bool pi1 = checker.verdict(m1);
  const bool pi2 = checker.verdict(m2);

  // {P1, P2}: two distinct maximal subgroups of P meeting in Phi(P), d = 2.
  const FrattiniQuotient fq = analyze_p_group(p_full.group(), 5);
  auto is_maximal = [&](const Subgroup& m) {
    return std::any_of(fq.maximals.begin(), fq.maximals.end(), [&](const MaximalSubgroup& x) {
      return same_subgroup(x.subgroup.group(), m.group());
    });
  };
  const bool family_ok = p_full.order() == 25 && fq.rank == 2 && is_maximal(p1) &&
                         is_maximal(p2) && !same_subgroup(p1, p2) &&
                         same_subgroup(intersection(p1, p2).group(), fq.frattini.group());

  const bool supersoluble = is_p_supersoluble(g, 5);
  const bool nilpotent = is_p_nilpotent(g, 5);

  VerificationRecord r;
  r.claim_id = kExample;
  r.group_name = g.label();
  r.prime = 5;
  r.normal_subgroup_fingerprint = fingerprint(big_b);
  r.hypothesis_held = pi1 && pi2 && family_ok;
  r.conclusion_held = !supersoluble && !nilpotent;
  r.status = r.hypothesis_held && r.conclusion_held ? Status::pass : Status::fail;
  r.witness = {{"p1", subgroup_json(p1)},
               {"p2", subgroup_json(p2)},
               {"p1_meet_b_order", m1.order()},
               {"p2_meet_b_order", m2.order()},
               {"p1_meet_b_pi_property", pi1},
               {"p2_meet_b_pi_property", pi2},
               {"family_valid", family_ok},
               {"p_supersoluble", supersoluble},
               {"p_nilpotent", nilpotent}};
  return r;
}

std::vector<VerificationRecord> verify_claim(Claim claim, std::span<const CorpusGroup> corpus,
                                             const VerifyOptions& options) {
  std::vector<VerificationRecord> out;
  auto append = [&](std::vector<VerificationRecord> part) {
    for (auto& r : part) out.push_back(std::move(r));
  };
  auto theorem = [&](auto&& fn) {
    append(parallel_over(corpus, options.jobs, [&](const CorpusGroup& c) {
      std::vector<VerificationRecord> recs;
      if (!in_theorem_scope(c, options)) return recs;
      for (auto p : pi_of(c.group.order()).primes()) {
        for (auto& r : fn(c.group, p)) recs.push_back(std::move(r));
      }
      return recs;
    }));
  };
  auto suite = [&](auto&& fn) {
    append(parallel_over(corpus, options.jobs, [&](const CorpusGroup& c) {
      return c.group.order() <= options.suite_max_order ? fn(c.group)
                                                       : std::vector<VerificationRecord>{};
    }));
  };

  const bool all = claim == Claim::all;
  if (all || claim == Claim::theorem_a) theorem(verify_theorem_a);
  if (all || claim == Claim::theorem_b) theorem(verify_theorem_b);
  if (all || claim == Claim::theorem_c) theorem(verify_theorem_c);
  if (all || claim == Claim::lemmas) suite([](const GroupHandle& g) { return verify_lemmas(g); });
  if (all || claim == Claim::propositions) {
    suite([](const GroupHandle& g) { return verify_propositions(g); });
  }
  if (all || claim == Claim::example_1_2) out.push_back(reproduce_example_1_2());
  sort_records(out);
  return out;
}

}  // namespace grpi::harness
