#include "json_io.hpp"

namespace mtop {

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::parse, std::string("invalid JSON: ") + e.what());
  }
}

const json& require_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    fail(Errc::parse, std::string("missing field '") + name + "'");
  return j.at(name);
}

SpacePtr space_from_json(const json& j) {
  const json& domain = require_field(j, "domain");
  const json& w = require_field(j, "w");
  if (!domain.is_array() || domain.empty())
    fail(Errc::parse, "'domain' must be a non-empty array of symbols");
  std::vector<std::string> symbols;
  for (const json& s : domain) {
    if (!s.is_string()) fail(Errc::parse, "'domain' entries must be strings");
    symbols.push_back(s.get<std::string>());
  }
  if (!w.is_number_integer() || w.get<int>() < 1)
    fail(Errc::parse, "'w' must be a positive integer");
  return make_space(std::move(symbols), w.get<int>());
}

}  // namespace

json mset_to_json(const MSet& m) {
  json j = json::object();
  for (int i = 0; i < m.dim(); ++i)
    if (m.count(i) > 0) j[m.space()->symbol(i)] = m.count(i);
  return j;
}

MSet mset_from_json(const SpacePtr& space, const json& j) {
  if (!j.is_object()) fail(Errc::parse, "an M-set must be a JSON object");
  std::vector<int> counts(static_cast<size_t>(space->size()), 0);
  for (const auto& [sym, value] : j.items()) {
    const auto idx = space->index_of(sym);
    if (!idx) fail(Errc::parse, "symbol '" + sym + "' is not in the domain");
    if (!value.is_number_integer() || value.get<int>() < 0)
      fail(Errc::parse, "count for '" + sym + "' must be a non-negative integer");
    const int c = value.get<int>();
    if (c > space->bound())
      fail(Errc::parse, "count " + std::to_string(c) + " for '" + sym +
                            "' exceeds bound w = " + std::to_string(space->bound()));
    counts[static_cast<size_t>(*idx)] = c;
  }
  return MSet(space, std::move(counts));
}

LoadedTopology load_topology(const std::string& text) {
  const json j = parse_text(text);
  SpacePtr space = space_from_json(j);
  MSet ground = mset_from_json(space, require_field(j, "M"));
  LoadedTopology loaded{std::move(space), std::move(ground), {}, {}, std::nullopt};

  const json& tau = require_field(j, "tau");
  if (!tau.is_array()) fail(Errc::parse, "'tau' must be an array of M-set objects");
  for (const json& member : tau)
    loaded.family.push_back(mset_from_json(loaded.space, member));

  loaded.report = validate_topology(loaded.ground, loaded.family);
  if (loaded.report.valid) {
    std::vector<MSet> family = loaded.family;
    canonicalize_family(family);
    loaded.topology = MTopology::unchecked(loaded.ground, std::move(family));
  }
  return loaded;
}

MTopology require_topology(const std::string& text) {
  LoadedTopology loaded = load_topology(text);
  if (!loaded.topology)
    fail(Errc::malformed_family,
         "family is not an M-topology: " + loaded.report.violations.front().detail);
  return *loaded.topology;
}

json topology_to_json(const MTopology& top) {
  json j;
  j["domain"] = top.space()->symbols();
  j["w"] = top.space()->bound();
  j["M"] = mset_to_json(top.ground());
  json tau = json::array();
  for (const MSet& open : top.opens()) tau.push_back(mset_to_json(open));
  j["tau"] = tau;
  return j;
}

LoadedBasis load_basis(const std::string& text) {
  const json j = parse_text(text);
  SpacePtr space = space_from_json(j);
  MSet ground = mset_from_json(space, require_field(j, "M"));
  LoadedBasis loaded{std::move(space), std::move(ground), {}};
  const json& basis = require_field(j, "basis");
  if (!basis.is_array()) fail(Errc::parse, "'basis' must be an array of M-set objects");
  for (const json& member : basis)
    loaded.basis.push_back(mset_from_json(loaded.space, member));
  return loaded;
}

namespace {

json mset_texts(const std::vector<MSet>& members) {
  json arr = json::array();
  for (const MSet& m : members) arr.push_back(to_text(m));
  return arr;
}

}  // namespace

json validation_report_to_json(const ValidationReport& report) {
  json j;
  j["valid"] = report.valid;
  j["duplicates_removed"] = report.duplicates_removed;
  json violations = json::array();
  for (const AxiomViolation& v : report.violations) {
    json entry;
    entry["axiom"] = v.axiom;
    entry["detail"] = v.detail;
    entry["witness"] = mset_texts(v.witness);
    violations.push_back(entry);
  }
  j["violations"] = violations;
  j["note"] = report.note;
  return j;
}

json basis_report_to_json(const BasisReport& report) {
  json j;
  j["valid"] = report.valid;
  json violations = json::array();
  for (const BasisViolation& v : report.violations) {
    json entry;
    entry["clause"] = v.clause;
    entry["point"] = v.point;
    entry["witness"] = mset_texts(v.witness);
    violations.push_back(entry);
  }
  j["violations"] = violations;
  return j;
}

json subrel_to_json(const SubRelation& rel) {
  return json{{"is_sub", rel.is_sub},
              {"is_whole", rel.is_whole},
              {"is_partial_whole", rel.is_partial_whole},
              {"is_full", rel.is_full}};
}

json checklist_to_json(const ConditionReport& report) {
  json j;
  j["som_conditions"] = json{{"open", report.som.open},
                             {"clopen", report.som.clopen},
                             {"closure_of_open", report.som.closure_of_open},
                             {"interior_of_some", report.som.interior_of_some},
                             {"criterion", report.som.criterion},
                             {"sandwich", report.som.sandwich}};
  j["is_semi_open"] = report.som_holds;
  j["scm_conditions"] = json{{"closed", report.scm.closed},
                             {"clopen", report.scm.clopen},
                             {"closure_of_some", report.scm.closure_of_some},
                             {"interior_of_closed", report.scm.interior_of_closed},
                             {"criterion", report.scm.criterion},
                             {"sandwich", report.scm.sandwich}};
  j["is_semi_closed"] = report.scm_holds;
  j["sound"] = report.sound;
  return j;
}

json verdict_to_json(const CompactnessVerdict& verdict) {
  json j;
  j["variant"] = variant_name(verdict.variant);
  j["holds"] = verdict.holds;
  if (verdict.witness) {
    j["witness"] = json{{"target", to_text(verdict.witness->target)},
                        {"members", mset_texts(verdict.witness->members)}};
  }
  if (verdict.certificate) {
    j["certificate"] = json{{"som_size", verdict.certificate->som_size},
                            {"covers_checked", verdict.certificate->covers_checked},
                            {"mode", verdict.certificate->mode}};
  }
  return j;
}

json fip_report_to_json(const FipTheoremReport& report) {
  json j;
  j["theorem"] = report.theorem;
  j["semi_compact"] = report.semi_compact;
  j["right_holds"] = report.right_holds;
  j["agree"] = report.agree;
  j["collections_checked"] = report.collections_checked;
  j["mode"] = report.mode;
  j["violating_collection"] = mset_texts(report.violating_collection);
  return j;
}

json subspace_report_to_json(const SubspaceCompactReport& report) {
  json j;
  j["tau_compact"] = report.tau_compact;
  j["subspace_compact"] = report.subspace_compact;
  j["agree"] = report.agree;
  j["covers_checked_tau"] = report.covers_checked_tau;
  j["covers_checked_sub"] = report.covers_checked_sub;
  j["mode"] = report.mode;
  return j;
}

json corpus_to_json(const CorpusSpec& spec) {
  json j;
  j["kind"] = corpus_kind_name(spec.kind);
  if (spec.kind == CorpusSpec::Kind::Fixture) {
    if (spec.fixture) j["topology"] = topology_to_json(*spec.fixture);
    return j;
  }
  j["domain"] = spec.domain_size;
  j["w"] = spec.w;
  if (spec.kind != CorpusSpec::Kind::Exhaustive) {
    j["trials"] = spec.trials;
    j["seed"] = spec.seed;
    j["density"] = spec.density;
  }
  return j;
}

CorpusSpec corpus_from_json(const json& j) {
  CorpusSpec spec;
  spec.kind = corpus_kind_from_name(require_field(j, "kind").get<std::string>());
  if (spec.kind == CorpusSpec::Kind::Fixture) {
    const json& top = require_field(j, "topology");
    spec.fixture = require_topology(top.dump());
    return spec;
  }
  spec.domain_size = require_field(j, "domain").get<int>();
  spec.w = require_field(j, "w").get<int>();
  if (j.contains("trials")) spec.trials = j.at("trials").get<int>();
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("density")) spec.density = j.at("density").get<double>();
  return spec;
}

json counterexample_to_json(const Counterexample& ce) {
  json j;
  j["claim"] = ce.claim;
  j["topology"] = topology_to_json(ce.fixture);
  j["offending"] = mset_texts(ce.offending);
  j["description"] = ce.description;
  j["recheck"] = ce.recheck;
  return j;
}

json theorem_report_to_json(const TheoremReport& report, bool include_timing) {
  json j;
  j["claim"] = report.claim;
  json corpus = corpus_to_json(report.corpus);
  corpus["fingerprint"] = report.fingerprint;
  j["corpus"] = corpus;
  j["topologies"] = report.topologies;
  j["trials"] = report.trials;
  j["mode"] = report.mode;
  json violations = json::array();
  for (const Counterexample& ce : report.violations)
    violations.push_back(counterexample_to_json(ce));
  j["violations"] = violations;
  if (report.agreement) {
    j["agreement"] = json{{"both_true", report.agreement->both_true},
                          {"left_only", report.agreement->left_only},
                          {"right_only", report.agreement->right_only},
                          {"both_false", report.agreement->both_false}};
  }
  if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

json mine_report_to_json(const MineReport& report, bool include_timing) {
  json j;
  j["remark"] = report.remark;
  j["found"] = report.found;
  if (report.witness) j["witness"] = counterexample_to_json(*report.witness);
  j["searched"] = report.searched;
  j["fingerprint"] = report.fingerprint;
  if (report.cells) {
    j["cells"] = json{{"cond_and_topology", report.cells->cond_and_topology},
                      {"cond_not_topology", report.cells->cond_not_topology},
                      {"nocond_topology", report.cells->nocond_topology},
                      {"nocond_not_topology", report.cells->nocond_not_topology}};
    json surprises = json::array();
    for (const Counterexample& ce : report.surprises)
      surprises.push_back(counterexample_to_json(ce));
    j["surprises"] = surprises;
    j["clause_divergences"] = report.clause_divergences;
  }
  if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

}  // namespace mtop
