// msettop CLI: batch front end over the C API in msettop.h.
//
// Exit codes: 0 = holds / valid / agrees / witness found where one is
// asserted; 1 = fails / invalid / violation found; 2 = enumeration budget
// exceeded; 65 = unusable input (parse errors, bad literals, bad files).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "msettop.h"

using json = nlohmann::json;

namespace {

constexpr int kExitInput = 65;

struct StringDeleter {
  void operator()(char* p) const { mst_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct TopologyDeleter {
  void operator()(mst_topology* p) const { mst_topology_free(p); }
};
using Topology = std::unique_ptr<mst_topology, TopologyDeleter>;

struct SemiDeleter {
  void operator()(mst_semi* p) const { mst_semi_free(p); }
};
using Semi = std::unique_ptr<mst_semi, SemiDeleter>;

struct MsetDeleter {
  void operator()(mst_mset* p) const { mst_mset_free(p); }
};
using Mset = std::unique_ptr<mst_mset, MsetDeleter>;

struct FamilyDeleter {
  void operator()(mst_family* p) const { mst_family_free(p); }
};
using Family = std::unique_ptr<mst_family, FamilyDeleter>;

struct Options {
  std::string output = "text";
  std::uint64_t budget = 0;  // 0 = engine default
  bool timing = false;

  bool json_mode() const { return output == "json"; }
};

[[noreturn]] void bail(mst_status status) {
  std::cerr << "error (" << mst_status_name(status) << "): " << mst_last_error() << "\n";
  std::exit(status == MST_ERR_BUDGET ? 2 : kExitInput);
}

void check(mst_status status) {
  if (status != MST_OK) bail(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(kExitInput);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Topology load_topology(const std::string& path) {
  mst_topology* top = nullptr;
  check(mst_topology_load(read_file(path).c_str(), &top));
  return Topology(top);
}

Mset parse_literal(const mst_topology* top, const std::string& text) {
  mst_mset* m = nullptr;
  check(mst_mset_parse(mst_topology_space(top), text.c_str(), &m));
  return Mset(m);
}

std::string format(const mst_mset* m) {
  char* text = nullptr;
  check(mst_mset_format(m, &text));
  OwnedString owned(text);
  return owned.get();
}

Semi make_semi(const mst_topology* top, std::uint64_t budget) {
  mst_semi* semi = nullptr;
  check(mst_semi_new(top, budget, &semi));
  return Semi(semi);
}

Family family_from_literals(const mst_topology* top, const std::vector<std::string>& texts) {
  mst_family* family = nullptr;
  check(mst_family_new(mst_topology_space(top), &family));
  Family owned(family);
  for (const std::string& text : texts) {
    const Mset m = parse_literal(top, text);
    check(mst_family_push(family, m.get()));
  }
  return owned;
}

std::vector<std::string> family_texts(const mst_family* family) {
  std::vector<std::string> out;
  for (size_t i = 0; i < mst_family_size(family); ++i) {
    const mst_mset* m = nullptr;
    check(mst_family_get(family, i, &m));
    out.push_back(format(m));
  }
  return out;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

void print_set_result(const Options& opt, const char* key, const std::string& text) {
  if (opt.json_mode())
    std::cout << json{{key, text}}.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

// --- subcommand handlers -----------------------------------------------

int cmd_validate(const Options& opt, const std::string& path) {
  char* report_text = nullptr;
  check(mst_validate_json(read_file(path).c_str(), &report_text));
  const OwnedString owned(report_text);
  const json report = json::parse(report_text);
  if (opt.json_mode()) {
    std::cout << report.dump(2) << "\n";
  } else if (report["valid"].get<bool>()) {
    std::cout << "valid M-topology (" << report["duplicates_removed"].get<int>()
              << " duplicates removed)\n";
  } else {
    std::cout << "invalid M-topology:\n";
    for (const json& v : report["violations"]) {
      std::cout << "  [" << v["axiom"].get<std::string>() << "] "
                << v["detail"].get<std::string>() << "\n";
    }
  }
  return report["valid"].get<bool>() ? 0 : 1;
}

int cmd_pointwise_op(const Options& opt, const std::string& path, const std::string& literal,
                     const std::string& op) {
  const Topology top = load_topology(path);
  const Mset a = parse_literal(top.get(), literal);
  mst_mset* result = nullptr;
  if (op == "interior") {
    check(mst_interior(top.get(), a.get(), &result));
  } else if (op == "closure") {
    check(mst_closure(top.get(), a.get(), &result));
  } else {
    const Semi semi = make_semi(top.get(), opt.budget);
    if (op == "sint")
      check(mst_semi_interior(semi.get(), a.get(), &result));
    else
      check(mst_semi_closure(semi.get(), a.get(), &result));
  }
  const Mset owned(result);
  print_set_result(opt, op.c_str(), format(result));
  return 0;
}

int cmd_subspace(const Options& opt, const std::string& path, const std::string& literal) {
  const Topology top = load_topology(path);
  const Mset n = parse_literal(top.get(), literal);
  mst_topology* sub = nullptr;
  check(mst_subspace(top.get(), n.get(), &sub));
  const Topology owned(sub);
  char* text = nullptr;
  check(mst_topology_to_json(sub, &text));
  const OwnedString owned_text(text);
  if (opt.json_mode()) {
    std::cout << text << "\n";
  } else {
    mst_family* opens = nullptr;
    check(mst_topology_opens(sub, &opens));
    const Family owned_opens(opens);
    std::cout << "subspace ground: " << literal << "\ntau_N:\n";
    for (const std::string& member : family_texts(opens))
      std::cout << "  " << member << "\n";
  }
  return 0;
}

int cmd_basis(const Options& opt, const std::string& path, bool generate) {
  const std::string text = read_file(path);
  char* report_text = nullptr;
  check(mst_basis_validate(text.c_str(), &report_text));
  const OwnedString owned(report_text);
  const json report = json::parse(report_text);

  if (!generate) {
    if (opt.json_mode()) {
      std::cout << report.dump(2) << "\n";
    } else if (report["valid"].get<bool>()) {
      std::cout << "valid M-basis\n";
    } else {
      std::cout << "invalid M-basis:\n";
      for (const json& v : report["violations"]) {
        std::cout << "  [" << v["clause"].get<std::string>() << "] point "
                  << v["point"].get<std::string>();
        if (!v["witness"].empty())
          std::cout << " in " << v["witness"].dump();
        std::cout << "\n";
      }
    }
    return report["valid"].get<bool>() ? 0 : 1;
  }

  mst_topology* top = nullptr;
  check(mst_topology_from_basis(text.c_str(), &top));
  const Topology owned_top(top);
  char* top_text = nullptr;
  check(mst_topology_to_json(top, &top_text));
  const OwnedString owned_top_text(top_text);
  std::cout << top_text << "\n";
  return 0;
}

int cmd_semi_list(const Options& opt, const std::string& path, bool som) {
  const Topology top = load_topology(path);
  const Semi semi = make_semi(top.get(), opt.budget);
  mst_family* family = nullptr;
  check(som ? mst_semi_som(semi.get(), &family) : mst_semi_scm(semi.get(), &family));
  const Family owned(family);
  const std::vector<std::string> texts = family_texts(family);
  if (opt.json_mode()) {
    std::cout << json{{som ? "som" : "scm", texts}, {"count", texts.size()}}.dump(2) << "\n";
  } else {
    for (const std::string& t : texts) std::cout << t << "\n";
  }
  return 0;
}

int cmd_semi_check(const Options& opt, const std::string& path, const std::string& literal,
                   const std::string& algorithm, bool som) {
  const Topology top = load_topology(path);
  const Mset s = parse_literal(top.get(), literal);
  mst_semi_alg alg = MST_ALG_CRITERION;
  if (algorithm == "witness") alg = MST_ALG_WITNESS;
  else if (algorithm == "both") alg = MST_ALG_BOTH;
  else if (algorithm != "criterion") {
    std::cerr << "error: unknown algorithm '" << algorithm << "'\n";
    return kExitInput;
  }

  int holds = 0;
  mst_mset* witness = nullptr;
  check(som ? mst_is_semi_open(top.get(), s.get(), alg, &holds, &witness)
            : mst_is_semi_closed(top.get(), s.get(), alg, &holds, &witness));
  const Mset owned(witness);

  json result{{som ? "semi_open" : "semi_closed", holds != 0}};
  if (witness) result["witness"] = format(witness);
  if (opt.json_mode()) {
    std::cout << result.dump(2) << "\n";
  } else {
    std::cout << (som ? "semi-open: " : "semi-closed: ") << yn(holds != 0);
    if (witness) std::cout << " (witness " << format(witness) << ")";
    std::cout << "\n";
  }
  return holds ? 0 : 1;
}

int cmd_checklist(const Options& opt, const std::string& path, const std::string& literal) {
  const Topology top = load_topology(path);
  const Semi semi = make_semi(top.get(), opt.budget);
  const Mset a = parse_literal(top.get(), literal);
  char* report_text = nullptr;
  check(mst_checklist(semi.get(), a.get(), &report_text));
  const OwnedString owned(report_text);
  if (opt.json_mode()) {
    std::cout << report_text << "\n";
    return 0;
  }
  const json report = json::parse(report_text);
  const auto print_side = [&](const char* label, const char* cond_key, const char* holds_key) {
    std::cout << label << ":";
    for (const auto& [name, value] : report[cond_key].items())
      std::cout << " " << name << "=" << yn(value.get<bool>());
    std::cout << "\n  -> " << holds_key << ": " << yn(report[holds_key].get<bool>()) << "\n";
  };
  print_side("SOM conditions", "som_conditions", "is_semi_open");
  print_side("SCM conditions", "scm_conditions", "is_semi_closed");
  std::cout << "sound: " << yn(report["sound"].get<bool>()) << "\n";
  return 0;
}

int cmd_cover_check(const Options& opt, const std::string& path,
                    const std::vector<std::string>& literals) {
  const Topology top = load_topology(path);
  const Semi semi = make_semi(top.get(), opt.budget);
  const Family family = family_from_literals(top.get(), literals);
  int is_cover = 0;
  check(mst_is_semi_open_cover(semi.get(), family.get(), &is_cover));
  if (opt.json_mode())
    std::cout << json{{"semi_open_cover", is_cover != 0}}.dump(2) << "\n";
  else
    std::cout << "semi-open cover: " << yn(is_cover != 0) << "\n";
  return is_cover ? 0 : 1;
}

int cmd_subcover(const Options& opt, const std::string& path, const std::string& filter_name,
                 const std::vector<std::string>& literals) {
  const Topology top = load_topology(path);
  const Semi semi = make_semi(top.get(), opt.budget);
  const Family family = family_from_literals(top.get(), literals);

  mst_filter filter = MST_FILTER_ANY;
  if (filter_name == "whole") filter = MST_FILTER_WHOLE;
  else if (filter_name == "partial_whole") filter = MST_FILTER_PARTIAL_WHOLE;
  else if (filter_name == "full") filter = MST_FILTER_FULL;
  else if (filter_name != "any") {
    std::cerr << "error: unknown filter '" << filter_name << "'\n";
    return kExitInput;
  }

  int found = 0;
  mst_family* sub = nullptr;
  check(mst_find_subcover(semi.get(), family.get(), filter, opt.budget, &found, &sub));
  const Family owned(sub);
  if (!found) {
    if (opt.json_mode())
      std::cout << json{{"found", false}}.dump(2) << "\n";
    else
      std::cout << "no qualifying subcover\n";
    return 1;
  }
  const std::vector<std::string> texts = family_texts(sub);
  if (opt.json_mode()) {
    std::cout << json{{"found", true}, {"subcover", texts}}.dump(2) << "\n";
  } else {
    std::cout << "minimal subcover (" << texts.size() << " members):\n";
    for (const std::string& t : texts) std::cout << "  " << t << "\n";
  }
  return 0;
}

int cmd_compact(const Options& opt, const std::string& path, const std::string& variant_name) {
  const Topology top = load_topology(path);
  const Semi semi = make_semi(top.get(), opt.budget);

  mst_variant variant = MST_COMPACT_SEMI;
  if (variant_name == "semi_whole") variant = MST_COMPACT_SEMI_WHOLE;
  else if (variant_name == "semi_partial_whole") variant = MST_COMPACT_SEMI_PARTIAL_WHOLE;
  else if (variant_name == "semi_full") variant = MST_COMPACT_SEMI_FULL;
  else if (variant_name != "semi") {
    std::cerr << "error: unknown variant '" << variant_name << "'\n";
    return kExitInput;
  }

  int holds = 0;
  char* verdict_text = nullptr;
  check(mst_decide_compactness(semi.get(), variant, opt.budget, &holds, &verdict_text));
  const OwnedString owned(verdict_text);
  if (opt.json_mode()) {
    std::cout << verdict_text << "\n";
  } else {
    const json verdict = json::parse(verdict_text);
    std::cout << "variant: " << verdict["variant"].get<std::string>() << "\nholds: "
              << yn(holds != 0) << "\n";
    if (verdict.contains("witness")) {
      std::cout << "witness cover:\n";
      for (const json& member : verdict["witness"]["members"])
        std::cout << "  " << member.get<std::string>() << "\n";
    }
    if (verdict.contains("certificate")) {
      const json& cert = verdict["certificate"];
      std::cout << "certificate: som_size=" << cert["som_size"]
                << " covers_checked=" << cert["covers_checked"] << " mode="
                << cert["mode"].get<std::string>() << "\n";
    }
  }
  return holds ? 0 : 1;
}

int cmd_fip(const Options& opt, const std::string& path,
            const std::vector<std::string>& literals) {
  const Topology top = load_topology(path);
  const Family family = family_from_literals(top.get(), literals);
  int fip = 0;
  check(mst_has_fip(family.get(), &fip));
  if (opt.json_mode())
    std::cout << json{{"fip", fip != 0}}.dump(2) << "\n";
  else
    std::cout << "FIP: " << yn(fip != 0) << "\n";
  return fip ? 0 : 1;
}

struct CorpusFlags {
  std::string kind = "exhaustive";
  int domain = 2;
  int w = 1;
  int trials = 500;
  std::uint64_t seed = 0;
  double density = 0.35;
  std::string fixture_path;

  json to_json() const {
    if (!fixture_path.empty())
      return json{{"kind", "fixture"}, {"topology", json::parse(read_file(fixture_path))}};
    json corpus{{"kind", kind}, {"domain", domain}, {"w", w}};
    if (kind != "exhaustive") {
      corpus["trials"] = trials;
      corpus["seed"] = seed;
      corpus["density"] = density;
    }
    return corpus;
  }
};

void add_corpus_flags(CLI::App* cmd, CorpusFlags& flags) {
  cmd->add_option("--corpus", flags.kind, "corpus kind: exhaustive|random|sweep|fixture");
  cmd->add_option("--domain", flags.domain, "domain size (exact for exhaustive, bound otherwise)");
  cmd->add_option("--w", flags.w, "multiplicity bound (exact for exhaustive, bound otherwise)");
  cmd->add_option("--trials", flags.trials, "random trial count");
  cmd->add_option("--seed", flags.seed, "corpus seed");
  cmd->add_option("--density", flags.density, "generator family density");
  cmd->add_option("--fixture", flags.fixture_path, "topology file to use as the corpus");
}

int cmd_verify(const Options& opt, const std::string& claim, const CorpusFlags& flags) {
  int ok = 0;
  char* report_text = nullptr;
  check(mst_verify(claim.c_str(), flags.to_json().dump().c_str(), opt.timing ? 1 : 0, &ok,
                   &report_text));
  const OwnedString owned(report_text);
  if (opt.json_mode()) {
    std::cout << report_text << "\n";
  } else {
    const json report = json::parse(report_text);
    std::cout << "claim: " << report["claim"].get<std::string>() << "\n"
              << "corpus: " << report["corpus"].dump() << "\n"
              << "topologies: " << report["topologies"] << ", trials: " << report["trials"]
              << ", mode: " << report["mode"].get<std::string>() << "\n"
              << "violations: " << report["violations"].size() << "\n";
    if (report.contains("agreement"))
      std::cout << "agreement: " << report["agreement"].dump() << "\n";
    for (const json& v : report["violations"])
      std::cout << "  violation: " << v["description"].get<std::string>() << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_mine(const Options& opt, const std::string& remark, const CorpusFlags& flags,
             const std::string& save_fixture) {
  int found = 0;
  char* report_text = nullptr;
  check(mst_mine(remark.c_str(), flags.to_json().dump().c_str(), opt.timing ? 1 : 0, &found,
                 &report_text));
  const OwnedString owned(report_text);
  const json report = json::parse(report_text);

  if (!save_fixture.empty() && report.contains("witness")) {
    std::ofstream out(save_fixture);
    out << report["witness"]["topology"].dump(2) << "\n";
  }

  if (opt.json_mode()) {
    std::cout << report_text << "\n";
  } else {
    std::cout << "remark: " << remark << "\nfound: " << yn(found != 0) << "\n";
    if (report.contains("witness")) {
      std::cout << "witness: " << report["witness"]["description"].get<std::string>() << "\n";
      for (const json& m : report["witness"]["offending"])
        std::cout << "  " << m.get<std::string>() << "\n";
    }
    if (report.contains("cells")) {
      std::cout << "cells: " << report["cells"].dump() << "\n"
                << "surprises: " << report["surprises"].size() << "\n"
                << "clause divergences: " << report["clause_divergences"] << "\n";
    }
    std::cout << "searched: " << report["searched"] << "\n";
  }

  // 3.7/3.13 assert a witness exists: finding one agrees with the text.
  // 3.8 is an iff: a surprise cell is a violation of it.
  if (remark == "3.8") return found ? 1 : 0;
  return found ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"msettop: finite multiset topology engine"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--output", opt.output, "output mode: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", opt.budget, "enumeration budget (0 = default)");
  app.add_flag("--timing", opt.timing, "include elapsed_ms in verify/mine reports");

  std::string file, literal, algorithm = "criterion";
  std::vector<std::string> literals;

  auto* validate = app.add_subcommand("validate", "check the M-topology axioms of a file");
  validate->add_option("file", file)->required();

  auto* interior_cmd = app.add_subcommand("interior", "largest open M-set inside A");
  interior_cmd->add_option("file", file)->required();
  interior_cmd->add_option("mset", literal)->required();

  auto* closure_cmd = app.add_subcommand("closure", "smallest closed M-set containing A");
  closure_cmd->add_option("file", file)->required();
  closure_cmd->add_option("mset", literal)->required();

  auto* subspace_cmd = app.add_subcommand("subspace", "subspace M-topology on N");
  subspace_cmd->add_option("file", file)->required();
  subspace_cmd->add_option("mset", literal)->required();

  bool basis_generate = false;
  auto* basis_cmd = app.add_subcommand("basis", "validate an M-basis file; optionally generate");
  basis_cmd->add_option("file", file)->required();
  basis_cmd->add_flag("--generate", basis_generate, "emit the generated M-topology");

  auto* som_cmd = app.add_subcommand("som", "semi-open M-set queries");
  som_cmd->require_subcommand(1);
  auto* som_list = som_cmd->add_subcommand("list", "list every SOM-set");
  som_list->add_option("file", file)->required();
  auto* som_check = som_cmd->add_subcommand("check", "test one M-set");
  som_check->add_option("file", file)->required();
  som_check->add_option("mset", literal)->required();
  som_check->add_option("--algorithm", algorithm, "criterion|witness|both");

  auto* scm_cmd = app.add_subcommand("scm", "semi-closed M-set queries");
  scm_cmd->require_subcommand(1);
  auto* scm_list = scm_cmd->add_subcommand("list", "list every SCM-set");
  scm_list->add_option("file", file)->required();
  auto* scm_check = scm_cmd->add_subcommand("check", "test one M-set");
  scm_check->add_option("file", file)->required();
  scm_check->add_option("mset", literal)->required();
  scm_check->add_option("--algorithm", algorithm, "criterion|witness|both");

  auto* sint_cmd = app.add_subcommand("sint", "semi interior of A");
  sint_cmd->add_option("file", file)->required();
  sint_cmd->add_option("mset", literal)->required();

  auto* scl_cmd = app.add_subcommand("scl", "semi closure of A");
  scl_cmd->add_option("file", file)->required();
  scl_cmd->add_option("mset", literal)->required();

  auto* checklist_cmd = app.add_subcommand("checklist", "sufficient-condition checklist for A");
  checklist_cmd->add_option("file", file)->required();
  checklist_cmd->add_option("mset", literal)->required();

  auto* cover_cmd = app.add_subcommand("cover", "cover queries");
  cover_cmd->require_subcommand(1);
  auto* cover_check = cover_cmd->add_subcommand("check", "is the family a semi-open cover");
  cover_check->add_option("file", file)->required();
  cover_check->add_option("msets", literals)->required()->expected(-1);

  std::string filter_name = "any";
  auto* subcover_cmd = app.add_subcommand("subcover", "minimal filtered subcover");
  subcover_cmd->add_option("file", file)->required();
  subcover_cmd->add_option("--filter", filter_name, "any|whole|partial_whole|full");
  subcover_cmd->add_option("msets", literals)->required()->expected(-1);

  std::string variant_name = "semi";
  auto* compact_cmd = app.add_subcommand("compact", "decide a semi compactness variant");
  compact_cmd->add_option("file", file)->required();
  compact_cmd->add_option("--variant", variant_name, "semi|semi_whole|semi_partial_whole|semi_full");

  auto* fip_cmd = app.add_subcommand("fip", "finite intersection property of a family");
  fip_cmd->add_option("file", file)->required();
  fip_cmd->add_option("msets", literals)->required()->expected(-1);

  std::string claim, remark, save_fixture;
  CorpusFlags verify_flags, mine_flags;
  auto* verify_cmd = app.add_subcommand("verify", "run a theorem property over a corpus");
  verify_cmd->add_option("--claim", claim, "claim id (see 'claims')")->required();
  add_corpus_flags(verify_cmd, verify_flags);

  mine_flags.kind = "sweep";
  mine_flags.domain = 3;
  mine_flags.w = 5;
  mine_flags.trials = 100;
  auto* mine_cmd = app.add_subcommand("mine", "search for a remark's counterexample");
  mine_cmd->add_option("--remark", remark, "remark id: 3.7|3.8|3.13")->required();
  mine_cmd->add_option("--save-fixture", save_fixture, "write the witness topology to a file");
  add_corpus_flags(mine_cmd, mine_flags);

  auto* claims_cmd = app.add_subcommand("claims", "list the claim and remark catalogue");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(opt, file);
    if (interior_cmd->parsed()) return cmd_pointwise_op(opt, file, literal, "interior");
    if (closure_cmd->parsed()) return cmd_pointwise_op(opt, file, literal, "closure");
    if (sint_cmd->parsed()) return cmd_pointwise_op(opt, file, literal, "sint");
    if (scl_cmd->parsed()) return cmd_pointwise_op(opt, file, literal, "scl");
    if (subspace_cmd->parsed()) return cmd_subspace(opt, file, literal);
    if (basis_cmd->parsed()) return cmd_basis(opt, file, basis_generate);
    if (som_cmd->parsed()) {
      if (som_list->parsed()) return cmd_semi_list(opt, file, true);
      return cmd_semi_check(opt, file, literal, algorithm, true);
    }
    if (scm_cmd->parsed()) {
      if (scm_list->parsed()) return cmd_semi_list(opt, file, false);
      return cmd_semi_check(opt, file, literal, algorithm, false);
    }
    if (checklist_cmd->parsed()) return cmd_checklist(opt, file, literal);
    if (cover_cmd->parsed()) return cmd_cover_check(opt, file, literals);
    if (subcover_cmd->parsed()) return cmd_subcover(opt, file, filter_name, literals);
    if (compact_cmd->parsed()) return cmd_compact(opt, file, variant_name);
    if (fip_cmd->parsed()) return cmd_fip(opt, file, literals);
    if (verify_cmd->parsed()) return cmd_verify(opt, claim, verify_flags);
    if (mine_cmd->parsed()) return cmd_mine(opt, remark, mine_flags, save_fixture);
    if (claims_cmd->parsed()) {
      char* claims_text = nullptr;
      check(mst_claim_list(&claims_text));
      const OwnedString owned_claims(claims_text);
      char* remarks_text = nullptr;
      check(mst_remark_list(&remarks_text));
      const OwnedString owned_remarks(remarks_text);
      std::cout << json{{"claims", json::parse(claims_text)},
                        {"remarks", json::parse(remarks_text)}}
                       .dump(2)
                << "\n";
      return 0;
    }
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
