#pragma once

#include <nlohmann/json.hpp>

#include "harness.hpp"

namespace mtop {

using json = nlohmann::json;

// M-sets serialize as {"sym": count, ...} with zero counts omitted; the
// empty M-set is {}. Loading accepts explicit zeros and normalizes.
json mset_to_json(const MSet& m);
MSet mset_from_json(const SpacePtr& space, const json& j);

// Topology file schema:
//   {"domain": ["a","b"], "w": 2, "M": {"a":1}, "tau": [{}, {"a":1}]}
struct LoadedTopology {
  SpacePtr space;
  MSet ground;
  std::vector<MSet> family;  // as listed in the file, before dedup
  ValidationReport report;
  std::optional<MTopology> topology;  // present when report.valid
};

LoadedTopology load_topology(const std::string& text);
// Loads and throws malformed_family when the family fails the axioms.
MTopology require_topology(const std::string& text);
json topology_to_json(const MTopology& top);

// Basis file schema: like a topology file with "basis" instead of "tau".
struct LoadedBasis {
  SpacePtr space;
  MSet ground;
  std::vector<MSet> basis;
};

LoadedBasis load_basis(const std::string& text);

json validation_report_to_json(const ValidationReport& report);
json basis_report_to_json(const BasisReport& report);
json subrel_to_json(const SubRelation& rel);
json checklist_to_json(const ConditionReport& report);
json verdict_to_json(const CompactnessVerdict& verdict);
json fip_report_to_json(const FipTheoremReport& report);
json subspace_report_to_json(const SubspaceCompactReport& report);

json corpus_to_json(const CorpusSpec& spec);
CorpusSpec corpus_from_json(const json& j);

json counterexample_to_json(const Counterexample& ce);
// include_timing controls elapsed_ms: reports are byte-stable across runs
// when it is off.
json theorem_report_to_json(const TheoremReport& report, bool include_timing = false);
json mine_report_to_json(const MineReport& report, bool include_timing = false);

}  // namespace mtop
