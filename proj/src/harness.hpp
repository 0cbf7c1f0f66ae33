#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cover.hpp"

namespace mtop {

// Largest |P(ground)| admitted by the exhaustive topology enumerator.
inline constexpr int kExhaustivePowerBudget = 12;

struct GenConfig {
  int max_domain = 2;   // domain size sampled in [1, max_domain]
  int max_w = 2;        // bound sampled in [1, max_w]
  std::uint64_t seed = 0;
  double density = 0.35;  // inclusion probability per candidate sub-M-set
  int trials = 500;
  std::uint64_t family_budget = kDefaultFamilyBudget;
};

// Deterministic in (cfg.seed, trial_index): samples a ground, seeds the
// family with ground, empty, and density-picked sub-M-sets, then closes
// under pairwise union/intersection. Always yields a valid M-topology.
MTopology generate_topology(const GenConfig& cfg, std::uint64_t trial_index);

// Every family over P(ground) that contains ground and empty and is closed
// under pairwise union and intersection, in canonical enumeration order.
std::vector<MTopology> enumerate_topologies(const MSet& ground,
                                            int power_budget = kExhaustivePowerBudget);

struct CorpusSpec {
  enum class Kind { Exhaustive, Random, Fixture, Sweep };
  Kind kind = Kind::Exhaustive;
  // Exhaustive: exact domain size and w. Random/Sweep: upper bounds.
  int domain_size = 2;
  int w = 1;
  int trials = 500;  // random trials (Random and the Sweep top-up)
  std::uint64_t seed = 0;
  double density = 0.35;
  std::uint64_t family_budget = kDefaultFamilyBudget;
  std::optional<MTopology> fixture;
};

const char* corpus_kind_name(CorpusSpec::Kind kind);
CorpusSpec::Kind corpus_kind_from_name(const std::string& name);

// Materializes the corpus in deterministic order. Exhaustive walks every
// non-empty ground of [X]^w; Sweep walks all (|X|, w) up to the bounds,
// keeping grounds within the exhaustive power budget, then appends random
// trials.
std::vector<MTopology> build_corpus(const CorpusSpec& spec);

// FNV-1a over the canonical serialization of every corpus member.
std::string corpus_fingerprint(const std::vector<MTopology>& corpus);

struct Counterexample {
  std::string claim;
  MTopology fixture;
  std::vector<MSet> offending;
  std::string description;
  std::string recheck;  // CLI invocation that reproduces the violation
};

struct AgreementTable {
  std::uint64_t both_true = 0;
  std::uint64_t left_only = 0;
  std::uint64_t right_only = 0;
  std::uint64_t both_false = 0;
  std::uint64_t disagreements() const { return left_only + right_only; }
};

struct TheoremReport {
  std::string claim;
  CorpusSpec corpus;
  std::uint64_t topologies = 0;
  std::uint64_t trials = 0;  // individual property instances checked
  std::vector<Counterexample> violations;
  std::string mode;  // "exhaustive", "sampled", or "mixed"
  std::string fingerprint;
  std::optional<AgreementTable> agreement;  // T4.11 / T4.12 / T4.15
  std::uint64_t elapsed_ms = 0;
};

// Claim ids: T3.6, T3.9, T3.10, T3.11, T3.12, SCM-intersection, T4.11,
// T4.12, T4.15.
const std::vector<std::string>& claim_catalogue();

TheoremReport verify_property(std::string_view claim, const CorpusSpec& corpus);

struct MineCells {
  std::uint64_t cond_and_topology = 0;
  std::uint64_t cond_not_topology = 0;   // surprise: condition holds, SOM family is not a topology
  std::uint64_t nocond_topology = 0;     // surprise: topology without the condition
  std::uint64_t nocond_not_topology = 0;
};

struct MineReport {
  std::string remark;  // "3.7", "3.8", or "3.13"
  bool found = false;
  std::optional<Counterexample> witness;
  std::uint64_t searched = 0;
  std::string fingerprint;
  // 3.8 bookkeeping: the iff cells, every surprise, and divergences
  // between the remark's two condition phrasings.
  std::optional<MineCells> cells;
  std::vector<Counterexample> surprises;
  std::uint64_t clause_divergences = 0;
  std::uint64_t elapsed_ms = 0;
};

const std::vector<std::string>& remark_catalogue();

MineReport mine(std::string_view remark, const CorpusSpec& corpus);

}  // namespace mtop
