// grpi: command-line front end for the Pi-property engine and its
// verification campaigns.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "grpi/errors.hpp"
#include "grpi/harness/corpus.hpp"
#include "grpi/harness/group_file.hpp"
#include "grpi/harness/verify.hpp"
#include "grpi/pi_property.hpp"

namespace {

using nlohmann::ordered_json;
using namespace grpi;

void write_json(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw GroupError(ErrorCode::io_error, "cannot write " + path);
}

ordered_json subgroup_json(const Subgroup& h) {
  ordered_json gens = ordered_json::array();
  for (const auto& x : canonical_generators(h.group())) gens.push_back(x.to_cycles());
  return {{"fingerprint", fingerprint(h)}, {"order", h.order()}, {"generators", gens}};
}

int run_corpus_build(std::uint64_t max_order, const std::string& out_dir) {
  const auto entries = harness::build_corpus(max_order, out_dir);
  std::cout << "wrote " << entries.size() << " groups to " << out_dir << "\n";
  return 0;
}

int run_analyze(const std::string& file, std::uint64_t p, const std::string& json_path) {
  const GroupHandle g = harness::load_group_file(file);
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const NormalLattice lattice(g);

  ordered_json j;
  j["group"] = g.label();
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["prime"] = p;
  j["p_soluble"] = is_p_soluble(lattice, p);
  j["p_supersoluble"] = is_p_supersoluble(lattice, p);
  j["p_nilpotent"] = is_p_nilpotent(g, p);
  j["o_p"] = subgroup_json(o_p(lattice, p));
  j["o_p_prime"] = subgroup_json(o_p_prime(lattice, p));
  j["o_upper_p"] = subgroup_json(o_upper_p(g, p));
  j["u_hypercenter"] = subgroup_json(u_hypercenter(lattice));

  const Subgroup sylow = sylow_subgroup(g, p);
  j["sylow"] = subgroup_json(sylow);
  if (!sylow.is_trivial()) {
    const FrattiniQuotient fq = analyze_p_group(sylow.group(), p);
    j["normalizer_of_sylow_p_nilpotent"] = is_p_nilpotent(normalizer(g, sylow).group(), p);
    j["frattini"] = subgroup_json(fq.frattini);
    j["rank"] = fq.rank;
    j["maximal_subgroups"] = fq.maximals.size();
    try {
      std::uint64_t families = 0;
      for_each_md_family(fq, [&](const std::vector<std::size_t>&) { return ++families, true; });
      j["md_families"] = families;
    } catch (const GroupError& e) {
      if (e.code() != ErrorCode::cap_exceeded) throw;
      j["md_families"] = nullptr;
    }
  }
  ordered_json factors = ordered_json::array();
  for (const auto& cf : lattice.chief_factors()) {
    factors.push_back({{"lower", fingerprint(cf.lower)},
                       {"upper", fingerprint(cf.upper)},
                       {"order", cf.factor_order}});
  }
  j["chief_factors"] = factors;

  std::cout << g.label() << ": order " << g.order() << ", degree " << g.degree() << "\n"
            << "  p = " << p << ": p-soluble " << j["p_soluble"] << ", p-supersoluble "
            << j["p_supersoluble"] << ", p-nilpotent " << j["p_nilpotent"] << "\n"
            << "  |P| = " << sylow.order();
  if (j.contains("rank")) std::cout << ", d = " << j["rank"] << ", |M(P)| = " << j["maximal_subgroups"];
  std::cout << "\n  chief factors:";
  for (const auto& cf : lattice.chief_factors()) std::cout << ' ' << cf.factor_order;
  std::cout << "\n";
  if (!json_path.empty()) write_json(json_path, j.dump(2) + "\n");
  return 0;
}

int run_check_pi(const std::string& file, const std::string& subgroup_text,
                 const std::string& json_path) {
  const GroupHandle g = harness::load_group_file(file);
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (start <= subgroup_text.size()) {
    const auto semi = subgroup_text.find(';', start);
    const std::string piece = subgroup_text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    if (piece.find_first_not_of(" \t") != std::string::npos) {
      gens.push_back(Permutation::from_cycles(piece, g.degree()));
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  const Subgroup h = Subgroup::generated(g, gens);
  const PiReport report = satisfies_pi_property(g, h);

  ordered_json trail = ordered_json::array();
  std::cout << "H = " << subgroup_json(h)["generators"].dump() << ", |H| = " << h.order() << "\n";
  for (const auto& e : report.trail) {
    ordered_json pi = e.pi_set.primes();
    trail.push_back({{"chief_factor", {{"lower", fingerprint(e.chief_factor.lower)},
                                       {"upper", fingerprint(e.chief_factor.upper)},
                                       {"order", e.chief_factor.factor_order}}},
                     {"intersection_order", e.intersection_order},
                     {"normalizer_index", e.normalizer_index},
                     {"pi_set", pi},
                     {"factor_pass", e.factor_pass}});
    std::cout << "  " << e.chief_factor.upper.order() << "/" << e.chief_factor.lower.order()
              << ": |X| = " << e.intersection_order << ", index " << e.normalizer_index
              << ", pi " << pi.dump() << (e.factor_pass ? "  ok" : "  FAIL") << "\n";
  }
  std::cout << "verdict: " << (report.verdict ? "satisfies" : "does not satisfy")
            << " the Pi-property\n";
  if (!json_path.empty()) {
    ordered_json j = {{"group", g.label()},
                      {"subject", subgroup_json(h)},
                      {"verdict", report.verdict},
                      {"trail", trail}};
    write_json(json_path, j.dump(2) + "\n");
  }
  return 0;
}

int run_verify(const std::string& claim_text, const std::string& corpus_dir,
               const harness::VerifyOptions& options, const std::string& json_path) {
  const auto claim = harness::parse_claim(claim_text);
  if (!claim) throw std::invalid_argument("unknown claim '" + claim_text + "'");
  const auto corpus = harness::load_corpus(corpus_dir);
  const auto records = harness::verify_claim(*claim, corpus, options);

  std::map<std::string, std::map<std::string, std::size_t>> summary;
  for (const auto& r : records) ++summary[r.claim_id][std::string(harness::to_string(r.status))];
  for (const auto& [claim_id, counts] : summary) {
    std::cout << claim_id << ":";
    for (const auto& [status, n] : counts) std::cout << ' ' << status << '=' << n;
    std::cout << "\n";
  }
  if (!json_path.empty()) write_json(json_path, harness::report_json(records));
  const bool failed = harness::has_failures(records);
  std::cout << (failed ? "FAILURES PRESENT" : "no failures") << " (" << records.size()
            << " records)\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pi-property engine and verification harness for finite permutation groups"};
  app.require_subcommand(1);

  auto* corpus = app.add_subcommand("corpus", "Corpus management");
  corpus->require_subcommand(1);
  auto* build = corpus->add_subcommand("build", "Write the bundled corpus and its manifest");
  std::uint64_t max_order = 0;
  std::string out_dir;
  build->add_option("--max-order", max_order, "Largest group order to include")->required();
  build->add_option("--out", out_dir, "Output directory")->required();

  auto* analyze = app.add_subcommand("analyze", "Structural summary of a group at a prime");
  std::string group_file, json_path, subgroup_text, claim_text, corpus_dir;
  std::uint64_t prime = 0;
  analyze->add_option("--group", group_file, "Group file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--prime", prime, "Prime")->required();
  analyze->add_option("--json", json_path, "Write a JSON summary here");

  auto* check = app.add_subcommand("check-pi", "Pi-property trail of a subgroup");
  check->add_option("--group", group_file, "Group file")->required()->check(CLI::ExistingFile);
  check->add_option("--subgroup", subgroup_text, "Generators in cycle notation, ';'-separated")
      ->required();
  check->add_option("--json", json_path, "Write the report here");

  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  harness::VerifyOptions options;
  verify->add_option("--claim", claim_text, "theorem-a|theorem-b|theorem-c|lemmas|propositions|example-1.2|all")
      ->required();
  verify->add_option("--corpus", corpus_dir, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  verify->add_option("--max-order", options.max_order, "Order limit for the theorem campaigns");
  verify->add_option("--json", json_path, "Write the JSON report here");
  verify->add_option("--jobs", options.jobs, "Worker threads (default: hardware concurrency)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return run_corpus_build(max_order, out_dir);
    if (analyze->parsed()) return run_analyze(group_file, prime, json_path);
    if (check->parsed()) return run_check_pi(group_file, subgroup_text, json_path);
    if (verify->parsed()) return run_verify(claim_text, corpus_dir, options, json_path);
  } catch (const ParseError& e) {
    std::cerr << "grpi: " << group_file << ": " << e.what() << " [" << to_string(e.code()) << "]\n";
    return 2;
  } catch (const GroupError& e) {
    std::cerr << "grpi: " << e.what() << " [" << to_string(e.code()) << "]\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "grpi: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
