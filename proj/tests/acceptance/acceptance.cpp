// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   grpi_acceptance <path to grpi>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "bridge.hpp"
#include "grpi/harness/corpus.hpp"
#include "grpi/harness/verify.hpp"
#include "grpi/pi_property.hpp"

namespace fs = std::filesystem;
using namespace grpi::harness;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

int run(const std::string& command) {
  const int rc = std::system((command + " > /dev/null 2>&1").c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

struct Context {
  fs::path grpi;
  fs::path work;
  fs::path corpus_dir;
  std::vector<CorpusGroup> corpus;
};

std::size_t count_status(const std::vector<VerificationRecord>& rs, Status s) {
  return static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [&](const auto& r) { return r.status == s; }));
}

std::string status_summary(const std::vector<VerificationRecord>& rs) {
  std::ostringstream out;
  out << "pass=" << count_status(rs, Status::pass) << " vacuous=" << count_status(rs, Status::pass_vacuous)
      << " skipped=" << count_status(rs, Status::skipped) << " fail=" << count_status(rs, Status::fail);
  return out.str();
}

const CorpusGroup* find_group(const Context& ctx, const std::string& name) {
  for (const auto& c : ctx.corpus) {
    if (c.name() == name) return &c;
  }
  return nullptr;
}

Outcome example_via_cli(Context& ctx) {
  const fs::path out = ctx.work / "example.json";
  const auto start = std::chrono::steady_clock::now();
  const int rc = run(quoted(ctx.grpi) + " verify --claim example-1.2 --corpus " + quoted(ctx.corpus_dir) +
                     " --json " + quoted(out));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const json report = json::parse(slurp(out), nullptr, false);
  const bool ok = rc == 0 && report.is_array() && report.size() == 1 && report[0]["status"] == "pass" &&
                  report[0]["hypothesis_held"] == true && report[0]["conclusion_held"] == true;
  std::ostringstream d;
  d << "exit " << rc << ", " << seconds << " s";
  return {ok && seconds < 10.0, d.str()};
}

Outcome theorem_a(Context& ctx) {
  const auto rs = verify_claim(Claim::theorem_a, ctx.corpus, {200, 96, 0});
  bool skips_ok = true;
  for (const auto& r : rs) {
    if (r.status == Status::skipped && r.witness["reason"] != "not p-soluble" &&
        r.witness["reason"] != "p does not divide |G|") {
      skips_ok = false;
    }
  }
  return {!has_failures(rs) && count_status(rs, Status::pass) > 0 && skips_ok, status_summary(rs)};
}

Outcome theorem_b(Context& ctx) {
  const auto rs = verify_claim(Claim::theorem_b, ctx.corpus, {200, 96, 0});
  std::size_t fixture = 0;
  bool fixture_ok = true;
  for (const auto& r : rs) {
    if (r.group_name != "A4" || r.prime != 2) continue;
    ++fixture;
    fixture_ok = fixture_ok && !r.hypothesis_held && !r.conclusion_held && r.status == Status::pass;
  }
  return {!has_failures(rs) && fixture > 0 && fixture_ok,
          status_summary(rs) + "; A4 p=2 records " + std::to_string(fixture)};
}

Outcome theorem_c(Context& ctx) {
  const auto rs = verify_claim(Claim::theorem_c, ctx.corpus, {200, 96, 0});
  bool s3_skipped = false;
  for (const auto& r : rs) {
    if (r.group_name == "S3" && r.prime == 3) {
      s3_skipped = r.status == Status::skipped &&
                   r.witness["reason"].get<std::string>().find("gcd") != std::string::npos;
    }
  }
  return {!has_failures(rs) && s3_skipped, status_summary(rs) + (s3_skipped ? "; S3 p=3 skipped (gcd)" : "")};
}

/// Tuples of the p'-intersection identity counted and checked by brute force
/// over preimages: P1N n LN = (P1 n L)N.
std::pair<std::uint64_t, bool> brute_p_prime_intersection(const grpi::GroupHandle& g) {
  const auto t = bridge::table_of(g);
  const auto subs = oracle::all_subgroups(t);
  const auto normals = oracle::normal_subgroups(t, subs);
  std::uint64_t tuples = 0;
  bool holds = true;
  for (auto p : oracle::prime_divisors(t.order())) {
    for (const auto& p1 : subs) {
      const auto order = oracle::count(p1);
      if (order == 1 || !oracle::is_p_power(order, p)) continue;
      for (const auto& n : normals) {
        if (oracle::count(n) % p == 0) continue;
        for (const auto& l : normals) {
          ++tuples;
          const auto lhs = oracle::intersect(oracle::product_set(t, p1, n), oracle::product_set(t, l, n));
          const auto rhs = oracle::product_set(t, oracle::intersect(p1, l), n);
          holds = holds && lhs == rhs;
        }
      }
    }
  }
  return {tuples, holds};
}

Outcome lemma_suites(Context& ctx) {
  const auto rs = verify_claim(Claim::lemmas, ctx.corpus, {200, 96, 0});
  std::map<std::string, std::uint64_t> admissible;
  std::map<std::string, std::uint64_t> fails;
  for (const auto& r : rs) {
    if (r.status == Status::fail) ++fails[r.claim_id];
    if (r.witness.contains("non_vacuous")) admissible[r.claim_id] += r.witness["non_vacuous"].get<std::uint64_t>();
  }
  bool ok = count_status(rs, Status::skipped) == 0;
  std::ostringstream d;
  for (auto id : {kQuotientClosure, kPPrimeIntersection, kComplementLifting, kSupersolubleSource,
                  kNormalIntersection}) {
    const std::string key(id);
    ok = ok && admissible[key] >= 200 && fails[key] == 0;
    d << key << "=" << admissible[key] << "/" << fails[key] << " ";
  }
  for (const char* name : {"S4", "A4", "D8", "C6xS3"}) {
    const auto* c = find_group(ctx, name);
    if (!c) {
      ok = false;
      d << name << " missing ";
      continue;
    }
    std::uint64_t engine = 0;
    for (const auto& r : rs) {
      if (r.group_name == name && r.claim_id == kPPrimeIntersection) engine += r.witness["tuples"].get<std::uint64_t>();
    }
    const auto [expected, holds] = brute_p_prime_intersection(c->group);
    ok = ok && holds && engine == expected;
    d << name << ":" << engine << "/" << expected << " ";
  }
  return {ok, d.str() + "(admissible/fails, exhaustive engine/brute)"};
}

Outcome proposition_suites(Context& ctx) {
  const auto rs = verify_claim(Claim::propositions, ctx.corpus, {200, 96, 0});
  std::map<std::string, std::uint64_t> fired;
  std::map<std::string, std::uint64_t> fails;
  for (const auto& r : rs) {
    if (r.status == Status::fail) ++fails[r.claim_id];
    if (r.witness.contains("non_vacuous")) fired[r.claim_id] += r.witness["non_vacuous"].get<std::uint64_t>();
  }
  bool ok = count_status(rs, Status::skipped) == 0;
  std::uint64_t least = UINT64_MAX;
  std::string least_id;
  for (auto id : {kPropNormal, kPropPermutable, kPropSPermutable, kPropCap, kPropUHypercentral,
                  kPropSSemipermutable, kPropSSQuasinormal, kPropPiNormal, kPropCNormal, kPropUcNormal,
                  kPropCSharpNormal, kChainNormalPermutable, kChainPermutableS, kChainSSemi}) {
    const std::string key(id);
    ok = ok && fired[key] >= 5 && fails[key] == 0;
    if (fired[key] < least) {
      least = fired[key];
      least_id = key;
    }
  }
  return {ok, status_summary(rs) + "; least fired " + least_id + "=" + std::to_string(least)};
}

Outcome oracle_equivalence(Context& ctx) {
  std::size_t groups = 0, subgroups = 0, mismatches = 0;
  std::string first;
  auto mismatch = [&](const std::string& what) {
    if (mismatches++ == 0) first = what;
  };
  for (const auto& c : ctx.corpus) {
    const auto& g = c.group;
    if (g.order() > 48) continue;
    ++groups;
    const auto t = bridge::table_of(g);
    if (t.order() != g.order()) mismatch(c.name() + " order");
    const auto subs = oracle::all_subgroups(t);
    const auto normals = oracle::normal_subgroups(t, subs);
    const auto covers = oracle::chief_factors(t, normals);

    grpi::PiChecker checker(g);
    std::set<std::pair<oracle::Set, oracle::Set>> engine_covers;
    for (const auto& f : checker.lattice().chief_factors()) {
      engine_covers.insert({bridge::set_of(t, f.lower), bridge::set_of(t, f.upper)});
    }
    std::set<std::pair<oracle::Set, oracle::Set>> brute_covers;
    for (const auto& f : covers) brute_covers.insert({f.lower, f.upper});
    if (engine_covers != brute_covers) mismatch(c.name() + " chief factors");

    for (const auto& hs : subs) {
      ++subgroups;
      const auto h = bridge::subgroup_of(g, t, hs);
      if (bridge::set_of(t, grpi::normalizer(g, h)) != oracle::normalizer(t, hs)) mismatch(c.name() + " normalizer");
      if (bridge::set_of(t, grpi::centralizer(g, h)) != oracle::centralizer(t, hs)) mismatch(c.name() + " centralizer");
      if (bridge::set_of(t, grpi::core(g, h)) != oracle::core(t, hs)) mismatch(c.name() + " core");
      if (checker.verdict(h) != oracle::pi_verdict(t, hs, covers)) mismatch(c.name() + " Pi verdict");
    }
  }
  std::ostringstream d;
  d << groups << " groups, " << subgroups << " subgroups, " << mismatches << " mismatches";
  if (mismatches) d << " (first: " << first << ")";
  return {groups > 0 && mismatches == 0, d.str()};
}

Outcome determinism(Context& ctx) {
  const fs::path a = ctx.work / "all-1.json";
  const fs::path b = ctx.work / "all-2.json";
  const std::string base = quoted(ctx.grpi) + " verify --claim all --corpus " + quoted(ctx.corpus_dir) + " --json ";
  const int rc1 = run(base + quoted(a));
  const int rc2 = run(base + quoted(b));
  const std::string x = slurp(a);
  const std::string y = slurp(b);
  std::ostringstream d;
  d << "exit " << rc1 << "/" << rc2 << ", " << x.size() << " bytes";
  return {rc1 == 0 && rc2 == 0 && !x.empty() && x == y, d.str()};
}

Outcome negative_control(Context&) {
  const auto g = bridge::make(symmetric_group(4));
  const auto h = bridge::sub(g, {"(0 1 2 3)"});
  const auto report = grpi::satisfies_pi_property(g, h);
  std::vector<const grpi::PiTrailEntry*> failing;
  for (const auto& e : report.trail) {
    if (!e.factor_pass) failing.push_back(&e);
  }
  const bool ok = !report.verdict && failing.size() == 1 && failing[0]->chief_factor.upper.order() == 4 &&
                  failing[0]->chief_factor.lower.is_trivial() && failing[0]->normalizer_index == 3 &&
                  failing[0]->intersection_order == 2 && failing[0]->pi_set == grpi::PrimeSet({2});
  std::ostringstream d;
  if (!failing.empty()) {
    d << "fails at " << failing[0]->chief_factor.upper.order() << "/" << failing[0]->chief_factor.lower.order()
      << ", index " << failing[0]->normalizer_index << ", |X| " << failing[0]->intersection_order;
  } else {
    d << "no failing factor";
  }
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: grpi_acceptance <grpi executable>\n";
    return 2;
  }
  Context ctx;
  ctx.grpi = fs::absolute(argv[1]);
  ctx.work = fs::temp_directory_path() / "grpi-acceptance";
  fs::remove_all(ctx.work);
  fs::create_directories(ctx.work);
  ctx.corpus_dir = ctx.work / "corpus";
  if (run(quoted(ctx.grpi) + " corpus build --max-order 200 --out " + quoted(ctx.corpus_dir)) != 0) {
    std::cerr << "corpus build failed\n";
    return 2;
  }
  ctx.corpus = load_corpus(ctx.corpus_dir);
  std::cout << "corpus: " << ctx.corpus.size() << " groups\n";

  const std::vector<std::pair<std::string, std::function<Outcome(Context&)>>> criteria = {
      {"counterexample reproduces via CLI in under 10 s", example_via_cli},
      {"p-supersolubility criterion campaign, |G| <= 200", theorem_a},
      {"p-nilpotency criterion with normalizer condition; A4 p=2 fixture", theorem_b},
      {"p-nilpotency criterion under the gcd condition; S3 p=3 skipped", theorem_c},
      {"lemma suites, >= 200 admissible tuples each, exhaustive p' intersection", lemma_suites},
      {"proposition suites, each implication fires >= 5 times", proposition_suites},
      {"brute-force oracle equivalence, |G| <= 48", oracle_equivalence},
      {"verify --claim all is byte-identical across runs", determinism},
      {"<(0 1 2 3)> fails Pi in S4 at V4/1 with index 3", negative_control},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
              << " (" << static_cast<int>(seconds * 10) / 10.0 << " s)\n"
              << std::flush;
    failed += !o.pass;
  }
  fs::remove_all(ctx.work);
  return failed == 0 ? 0 : 1;
}
