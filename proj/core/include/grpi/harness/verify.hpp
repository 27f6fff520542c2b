#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "grpi/harness/corpus.hpp"
#include "grpi/harness/report.hpp"

namespace grpi::harness {

enum class Claim { theorem_a, theorem_b, theorem_c, lemmas, propositions, example_1_2, all };

/// Accepts the CLI spellings: theorem-a, theorem-b, theorem-c, lemmas,
/// propositions, example-1.2, all.
std::optional<Claim> parse_claim(std::string_view text);
std::string_view to_string(Claim c);

struct VerifyOptions {
  std::uint64_t max_order = 0;         // theorem campaigns; 0 = no limit. Fixtures are always kept.
  std::uint64_t suite_max_order = 96;  // lemma and proposition suites
  unsigned jobs = 0;                   // worker threads; 0 = hardware concurrency
};

// Claim ids used in records. The three criteria and the counterexample keep
// their CLI names; the property suites are named after what they check.
inline constexpr std::string_view kTheoremA = "theorem-a";
inline constexpr std::string_view kTheoremB = "theorem-b";
inline constexpr std::string_view kTheoremC = "theorem-c";
inline constexpr std::string_view kExample = "example-1.2";

inline constexpr std::string_view kQuotientClosure = "lemma-quotient-closure";
inline constexpr std::string_view kPPrimeIntersection = "lemma-p-prime-intersection";
inline constexpr std::string_view kComplementLifting = "lemma-complement-lifting";
inline constexpr std::string_view kSupersolubleSource = "lemma-p-supersoluble-source";
inline constexpr std::string_view kNormalIntersection = "lemma-normal-intersection";

inline constexpr std::string_view kPropNormal = "prop-normal";
inline constexpr std::string_view kPropPermutable = "prop-permutable";
inline constexpr std::string_view kPropSPermutable = "prop-s-permutable";
inline constexpr std::string_view kPropCap = "prop-cap-subgroup";
inline constexpr std::string_view kPropUHypercentral = "prop-u-hypercentral";
inline constexpr std::string_view kPropSSemipermutable = "prop-s-semipermutable";
inline constexpr std::string_view kPropSSQuasinormal = "prop-ss-quasinormal";
inline constexpr std::string_view kPropPiNormal = "prop-pi-normal";
inline constexpr std::string_view kPropCNormal = "prop-c-normal";
inline constexpr std::string_view kPropUcNormal = "prop-uc-normal";
inline constexpr std::string_view kPropCSharpNormal = "prop-c-sharp-normal";
inline constexpr std::string_view kChainNormalPermutable = "chain-normal-permutable";
inline constexpr std::string_view kChainPermutableS = "chain-permutable-s-permutable";
inline constexpr std::string_view kChainSSemi = "chain-s-permutable-s-semipermutable";

/// p-supersolubility criterion for p-soluble G. One record per normal N
/// with G/N p-supersoluble. Sufficiency needs some family to pass; when G is
/// p-supersoluble every family must pass.
std::vector<VerificationRecord> verify_theorem_a(const GroupHandle& g, std::uint64_t p);

/// p-nilpotency criterion with N_G(P) p-nilpotent; admissible N as in A.
std::vector<VerificationRecord> verify_theorem_b(const GroupHandle& g, std::uint64_t p);

/// p-nilpotency criterion under gcd(|G|, p-1) = 1; admissible N have G/N
/// p-nilpotent.
std::vector<VerificationRecord> verify_theorem_c(const GroupHandle& g, std::uint64_t p);

/// The five lemma suites on one group. Records aggregate tuples per
/// (claim, prime, normal subgroup); the witness holds the tuple counts and
/// the first counterexample, if any.
std::vector<VerificationRecord> verify_lemmas(const GroupHandle& g);

/// Embedding-property implication suites on one group, aggregated per
/// (claim, prime).
std::vector<VerificationRecord> verify_propositions(const GroupHandle& g);

/// C5 x A5 with P1 = <a>, P2 = <ab>: both P_i n B satisfy the Pi-property,
/// {P1, P2} is a valid family, yet G is neither 5-supersoluble nor
/// 5-nilpotent.
VerificationRecord reproduce_example_1_2();

/// Runs a campaign over the corpus in parallel; output is sorted and
/// independent of the worker count.
std::vector<VerificationRecord> verify_claim(Claim claim, std::span<const CorpusGroup> corpus,
                                             const VerifyOptions& options = {});

}  // namespace grpi::harness
