#include "msettop.h"

#include <cstring>
#include <deque>
#include <memory>
#include <string>

#include "json_io.hpp"

struct mst_space {
  mtop::SpacePtr ptr;
};

struct mst_mset {
  mtop::MSet value;
};

// deque keeps element addresses stable across push, so borrowed pointers
// from mst_family_get survive later insertions.
struct mst_family {
  mtop::SpacePtr space;
  std::deque<mst_mset> items;

  std::vector<mtop::MSet> to_vector() const {
    std::vector<mtop::MSet> out;
    out.reserve(items.size());
    for (const mst_mset& m : items) out.push_back(m.value);
    return out;
  }
};

struct mst_topology {
  mtop::MTopology value;
  mst_mset ground;
  mst_space space;
};

struct mst_semi {
  mtop::SemiFamily value;
};

namespace {

thread_local std::string g_last_error;

mst_status map_code(mtop::Errc code) {
  switch (code) {
    case mtop::Errc::invalid_argument: return MST_ERR_INVALID_ARGUMENT;
    case mtop::Errc::parse: return MST_ERR_PARSE;
    case mtop::Errc::space_mismatch: return MST_ERR_SPACE_MISMATCH;
    case mtop::Errc::not_a_subset: return MST_ERR_NOT_A_SUBSET;
    case mtop::Errc::malformed_family: return MST_ERR_MALFORMED_FAMILY;
    case mtop::Errc::budget_exceeded: return MST_ERR_BUDGET;
    case mtop::Errc::algorithm_divergence: return MST_ERR_DIVERGENCE;
    case mtop::Errc::chain_of_subsets: return MST_ERR_CHAIN;
    case mtop::Errc::unknown_claim: return MST_ERR_UNKNOWN_CLAIM;
    case mtop::Errc::generation_failed: return MST_ERR_GENERATION;
  }
  return MST_ERR_INTERNAL;
}

template <typename Fn>
mst_status guarded(Fn&& fn) {
  try {
    fn();
    return MST_OK;
  } catch (const mtop::MtopError& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MST_ERR_INTERNAL;
  }
}

mst_status require(bool ok, const char* what) {
  if (ok) return MST_OK;
  g_last_error = what;
  return MST_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

mst_topology* wrap_topology(mtop::MTopology top) {
  mst_mset ground{top.ground()};
  mst_space space{top.space()};
  return new mst_topology{std::move(top), std::move(ground), std::move(space)};
}

std::uint64_t or_default(std::uint64_t value, std::uint64_t fallback) {
  return value == 0 ? fallback : value;
}

mtop::SemiAlg to_alg(mst_semi_alg alg) {
  switch (alg) {
    case MST_ALG_WITNESS: return mtop::SemiAlg::Witness;
    case MST_ALG_CRITERION: return mtop::SemiAlg::Criterion;
    case MST_ALG_BOTH: return mtop::SemiAlg::Both;
  }
  mtop::fail(mtop::Errc::invalid_argument, "unknown semi algorithm code");
}

mtop::SubFilter to_filter(mst_filter filter) {
  switch (filter) {
    case MST_FILTER_ANY: return mtop::SubFilter::Any;
    case MST_FILTER_WHOLE: return mtop::SubFilter::Whole;
    case MST_FILTER_PARTIAL_WHOLE: return mtop::SubFilter::PartialWhole;
    case MST_FILTER_FULL: return mtop::SubFilter::Full;
  }
  mtop::fail(mtop::Errc::invalid_argument, "unknown subcover filter code");
}

mtop::CompactVariant to_variant(mst_variant variant) {
  switch (variant) {
    case MST_COMPACT_SEMI: return mtop::CompactVariant::Semi;
    case MST_COMPACT_SEMI_WHOLE: return mtop::CompactVariant::SemiWhole;
    case MST_COMPACT_SEMI_PARTIAL_WHOLE: return mtop::CompactVariant::SemiPartialWhole;
    case MST_COMPACT_SEMI_FULL: return mtop::CompactVariant::SemiFull;
  }
  mtop::fail(mtop::Errc::invalid_argument, "unknown compactness variant code");
}

mst_status family_out(const std::vector<mtop::MSet>& members, const mtop::SpacePtr& space,
                      mst_family** out) {
  auto family = std::make_unique<mst_family>();
  family->space = space;
  for (const mtop::MSet& m : members) family->items.push_back(mst_mset{m});
  *out = family.release();
  return MST_OK;
}

mtop::CorpusSpec parse_corpus(const char* corpus_json) {
  mtop::json parsed;
  try {
    parsed = mtop::json::parse(corpus_json);
  } catch (const mtop::json::parse_error& e) {
    mtop::fail(mtop::Errc::parse, std::string("corpus: ") + e.what());
  }
  return mtop::corpus_from_json(parsed);
}

}  // namespace

extern "C" {

int mst_abi_version(void) { return 1; }

const char* mst_status_name(mst_status status) {
  switch (status) {
    case MST_OK: return "ok";
    case MST_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case MST_ERR_PARSE: return "parse-error";
    case MST_ERR_SPACE_MISMATCH: return "space-mismatch";
    case MST_ERR_NOT_A_SUBSET: return "not-a-subset";
    case MST_ERR_MALFORMED_FAMILY: return "malformed-family";
    case MST_ERR_BUDGET: return "enumeration-budget";
    case MST_ERR_DIVERGENCE: return "equivalence-violation";
    case MST_ERR_CHAIN: return "chain-of-subsets";
    case MST_ERR_UNKNOWN_CLAIM: return "unknown-claim";
    case MST_ERR_GENERATION: return "basis-generation";
    case MST_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* mst_last_error(void) { return g_last_error.c_str(); }

void mst_string_free(char* text) { delete[] text; }

mst_status mst_space_new(const char* const* symbols, size_t count, unsigned bound,
                         mst_space** out) {
  if (mst_status s = require(symbols && out, "mst_space_new: null argument")) return s;
  return guarded([&] {
    std::vector<std::string> syms(symbols, symbols + count);
    *out = new mst_space{mtop::make_space(std::move(syms), static_cast<int>(bound))};
  });
}

void mst_space_free(mst_space* space) { delete space; }

size_t mst_space_size(const mst_space* space) {
  return space ? static_cast<size_t>(space->ptr->size()) : 0;
}

unsigned mst_space_bound(const mst_space* space) {
  return space ? static_cast<unsigned>(space->ptr->bound()) : 0;
}

const char* mst_space_symbol(const mst_space* space, size_t index) {
  if (!space || index >= static_cast<size_t>(space->ptr->size())) return nullptr;
  return space->ptr->symbol(static_cast<int>(index)).c_str();
}

mst_status mst_mset_parse(const mst_space* space, const char* text, mst_mset** out) {
  if (mst_status s = require(space && text && out, "mst_mset_parse: null argument")) return s;
  return guarded([&] { *out = new mst_mset{mtop::parse_mset(space->ptr, text)}; });
}

mst_status mst_mset_from_counts(const mst_space* space, const unsigned* counts,
                                size_t count, mst_mset** out) {
  if (mst_status s = require(space && counts && out, "mst_mset_from_counts: null argument"))
    return s;
  return guarded([&] {
    std::vector<int> c(counts, counts + count);
    *out = new mst_mset{mtop::MSet(space->ptr, std::move(c))};
  });
}

mst_status mst_mset_format(const mst_mset* mset, char** out) {
  if (mst_status s = require(mset && out, "mst_mset_format: null argument")) return s;
  return guarded([&] { *out = dup_string(mtop::to_text(mset->value)); });
}

mst_status mst_mset_count(const mst_mset* mset, size_t index, unsigned* out) {
  if (mst_status s = require(mset && out, "mst_mset_count: null argument")) return s;
  if (mst_status s = require(index < static_cast<size_t>(mset->value.dim()),
                             "mst_mset_count: index out of range"))
    return s;
  *out = static_cast<unsigned>(mset->value.count(static_cast<int>(index)));
  return MST_OK;
}

mst_status mst_mset_equal(const mst_mset* a, const mst_mset* b, int* out) {
  if (mst_status s = require(a && b && out, "mst_mset_equal: null argument")) return s;
  *out = a->value == b->value ? 1 : 0;
  return MST_OK;
}

mst_status mst_mset_subset(const mst_mset* a, const mst_mset* b, int* out) {
  if (mst_status s = require(a && b && out, "mst_mset_subset: null argument")) return s;
  return guarded([&] { *out = mtop::subset_leq(a->value, b->value) ? 1 : 0; });
}

void mst_mset_free(mst_mset* mset) { delete mset; }

mst_status mst_combine(mst_combine_op op, const mst_mset* a, const mst_mset* b,
                       mst_mset** out) {
  if (mst_status s = require(a && b && out, "mst_combine: null argument")) return s;
  return guarded([&] {
    mtop::CombineOp cpp_op;
    switch (op) {
      case MST_OP_UNION: cpp_op = mtop::CombineOp::Union; break;
      case MST_OP_INTERSECT: cpp_op = mtop::CombineOp::Intersect; break;
      case MST_OP_ADD: cpp_op = mtop::CombineOp::Add; break;
      case MST_OP_SUBTRACT: cpp_op = mtop::CombineOp::Subtract; break;
      default: mtop::fail(mtop::Errc::invalid_argument, "unknown combine op code");
    }
    *out = new mst_mset{mtop::combine(cpp_op, a->value, b->value)};
  });
}

mst_status mst_classify_sub(const mst_mset* n, const mst_mset* m, mst_subrel* out) {
  if (mst_status s = require(n && m && out, "mst_classify_sub: null argument")) return s;
  return guarded([&] {
    const mtop::SubRelation rel = mtop::classify_sub(n->value, m->value);
    out->is_sub = rel.is_sub;
    out->is_whole = rel.is_whole;
    out->is_partial_whole = rel.is_partial_whole;
    out->is_full = rel.is_full;
  });
}

mst_status mst_complement_in(const mst_mset* n, const mst_mset* m, mst_mset** out) {
  if (mst_status s = require(n && m && out, "mst_complement_in: null argument")) return s;
  return guarded([&] { *out = new mst_mset{mtop::complement_in(n->value, m->value)}; });
}

mst_status mst_power_family(const mst_mset* m, mst_power_kind kind, uint64_t budget,
                            mst_family** out) {
  if (mst_status s = require(m && out, "mst_power_family: null argument")) return s;
  return guarded([&] {
    mtop::PowerKind cpp_kind;
    switch (kind) {
      case MST_POWER_ALL: cpp_kind = mtop::PowerKind::All; break;
      case MST_POWER_WHOLE: cpp_kind = mtop::PowerKind::Whole; break;
      case MST_POWER_FULL: cpp_kind = mtop::PowerKind::Full; break;
      default: mtop::fail(mtop::Errc::invalid_argument, "unknown power kind code");
    }
    family_out(
        mtop::power_family(m->value, cpp_kind, or_default(budget, mtop::kDefaultFamilyBudget)),
        m->value.space(), out);
  });
}

mst_status mst_family_new(const mst_space* space, mst_family** out) {
  if (mst_status s = require(space && out, "mst_family_new: null argument")) return s;
  *out = new mst_family{space->ptr, {}};
  return MST_OK;
}

mst_status mst_family_push(mst_family* family, const mst_mset* member) {
  if (mst_status s = require(family && member, "mst_family_push: null argument")) return s;
  return guarded([&] {
    mtop::ensure_same_space(member->value, mtop::MSet::empty(family->space));
    family->items.push_back(mst_mset{member->value});
  });
}

size_t mst_family_size(const mst_family* family) {
  return family ? family->items.size() : 0;
}

mst_status mst_family_get(const mst_family* family, size_t index, const mst_mset** out) {
  if (mst_status s = require(family && out, "mst_family_get: null argument")) return s;
  if (mst_status s = require(index < family->items.size(), "mst_family_get: index out of range"))
    return s;
  *out = &family->items[index];
  return MST_OK;
}

void mst_family_free(mst_family* family) { delete family; }

mst_status mst_topology_load(const char* json_text, mst_topology** out) {
  if (mst_status s = require(json_text && out, "mst_topology_load: null argument")) return s;
  return guarded([&] { *out = wrap_topology(mtop::require_topology(json_text)); });
}

mst_status mst_validate_json(const char* json_text, char** report_json) {
  if (mst_status s = require(json_text && report_json, "mst_validate_json: null argument"))
    return s;
  return guarded([&] {
    const mtop::LoadedTopology loaded = mtop::load_topology(json_text);
    *report_json = dup_string(mtop::validation_report_to_json(loaded.report).dump(2));
  });
}

mst_status mst_topology_to_json(const mst_topology* top, char** out) {
  if (mst_status s = require(top && out, "mst_topology_to_json: null argument")) return s;
  return guarded([&] { *out = dup_string(mtop::topology_to_json(top->value).dump(2)); });
}

mst_status mst_topology_ground(const mst_topology* top, const mst_mset** out) {
  if (mst_status s = require(top && out, "mst_topology_ground: null argument")) return s;
  *out = &top->ground;
  return MST_OK;
}

const mst_space* mst_topology_space(const mst_topology* top) {
  return top ? &top->space : nullptr;
}

mst_status mst_topology_opens(const mst_topology* top, mst_family** out) {
  if (mst_status s = require(top && out, "mst_topology_opens: null argument")) return s;
  return family_out(top->value.opens(), top->value.space(), out);
}

void mst_topology_free(mst_topology* top) { delete top; }

mst_status mst_interior(const mst_topology* top, const mst_mset* a, mst_mset** out) {
  if (mst_status s = require(top && a && out, "mst_interior: null argument")) return s;
  return guarded([&] { *out = new mst_mset{mtop::interior(top->value, a->value)}; });
}

mst_status mst_closure(const mst_topology* top, const mst_mset* a, mst_mset** out) {
  if (mst_status s = require(top && a && out, "mst_closure: null argument")) return s;
  return guarded([&] { *out = new mst_mset{mtop::closure(top->value, a->value)}; });
}

mst_status mst_subspace(const mst_topology* top, const mst_mset* n, mst_topology** out) {
  if (mst_status s = require(top && n && out, "mst_subspace: null argument")) return s;
  return guarded([&] { *out = wrap_topology(mtop::subspace(top->value, n->value)); });
}

mst_status mst_basis_validate(const char* json_text, char** report_json) {
  if (mst_status s = require(json_text && report_json, "mst_basis_validate: null argument"))
    return s;
  return guarded([&] {
    const mtop::LoadedBasis loaded = mtop::load_basis(json_text);
    const mtop::BasisReport report = mtop::validate_basis(loaded.ground, loaded.basis);
    *report_json = dup_string(mtop::basis_report_to_json(report).dump(2));
  });
}

mst_status mst_topology_from_basis(const char* json_text, mst_topology** out) {
  if (mst_status s = require(json_text && out, "mst_topology_from_basis: null argument"))
    return s;
  return guarded([&] {
    const mtop::LoadedBasis loaded = mtop::load_basis(json_text);
    *out = wrap_topology(mtop::topology_from_basis(loaded.ground, loaded.basis));
  });
}

mst_status mst_is_semi_open(const mst_topology* top, const mst_mset* s, mst_semi_alg alg,
                            int* holds, mst_mset** witness_out) {
  if (mst_status st = require(top && s && holds, "mst_is_semi_open: null argument")) return st;
  return guarded([&] {
    const mtop::SemiCheck check = mtop::is_semi_open(top->value, s->value, to_alg(alg));
    *holds = check.holds ? 1 : 0;
    if (witness_out)
      *witness_out = check.witness ? new mst_mset{*check.witness} : nullptr;
  });
}

mst_status mst_is_semi_closed(const mst_topology* top, const mst_mset* s, mst_semi_alg alg,
                              int* holds, mst_mset** witness_out) {
  if (mst_status st = require(top && s && holds, "mst_is_semi_closed: null argument")) return st;
  return guarded([&] {
    const mtop::SemiCheck check = mtop::is_semi_closed(top->value, s->value, to_alg(alg));
    *holds = check.holds ? 1 : 0;
    if (witness_out)
      *witness_out = check.witness ? new mst_mset{*check.witness} : nullptr;
  });
}

mst_status mst_semi_new(const mst_topology* top, uint64_t budget, mst_semi** out) {
  if (mst_status s = require(top && out, "mst_semi_new: null argument")) return s;
  return guarded([&] {
    *out = new mst_semi{mtop::SemiFamily::enumerate(
        top->value, or_default(budget, mtop::kDefaultFamilyBudget))};
  });
}

mst_status mst_semi_som(const mst_semi* semi, mst_family** out) {
  if (mst_status s = require(semi && out, "mst_semi_som: null argument")) return s;
  return family_out(semi->value.som(), semi->value.topology().space(), out);
}

mst_status mst_semi_scm(const mst_semi* semi, mst_family** out) {
  if (mst_status s = require(semi && out, "mst_semi_scm: null argument")) return s;
  return family_out(semi->value.scm(), semi->value.topology().space(), out);
}

mst_status mst_semi_interior(const mst_semi* semi, const mst_mset* a, mst_mset** out) {
  if (mst_status s = require(semi && a && out, "mst_semi_interior: null argument")) return s;
  return guarded([&] { *out = new mst_mset{mtop::semi_interior(semi->value, a->value)}; });
}

mst_status mst_semi_closure(const mst_semi* semi, const mst_mset* a, mst_mset** out) {
  if (mst_status s = require(semi && a && out, "mst_semi_closure: null argument")) return s;
  return guarded([&] { *out = new mst_mset{mtop::semi_closure(semi->value, a->value)}; });
}

mst_status mst_checklist(const mst_semi* semi, const mst_mset* a, char** report_json) {
  if (mst_status s = require(semi && a && report_json, "mst_checklist: null argument")) return s;
  return guarded([&] {
    const mtop::ConditionReport report = mtop::condition_checklist(semi->value, a->value);
    *report_json = dup_string(mtop::checklist_to_json(report).dump(2));
  });
}

void mst_semi_free(mst_semi* semi) { delete semi; }

mst_status mst_is_semi_open_cover(const mst_semi* semi, const mst_family* members, int* out) {
  if (mst_status s = require(semi && members && out, "mst_is_semi_open_cover: null argument"))
    return s;
  return guarded([&] {
    *out = mtop::is_semi_open_cover(semi->value, members->to_vector()) ? 1 : 0;
  });
}

mst_status mst_find_subcover(const mst_semi* semi, const mst_family* cover, mst_filter filter,
                             uint64_t budget, int* found, mst_family** out) {
  if (mst_status s = require(semi && cover && found, "mst_find_subcover: null argument"))
    return s;
  return guarded([&] {
    const mtop::Cover c =
        mtop::make_cover(semi->value.topology().ground(), cover->to_vector());
    const auto result = mtop::find_subcover(
        semi->value, c, to_filter(filter),
        or_default(budget, mtop::kDefaultCollectionBudget * 256));
    *found = result ? 1 : 0;
    if (out) {
      if (result)
        family_out(*result, semi->value.topology().space(), out);
      else
        *out = nullptr;
    }
  });
}

mst_status mst_decide_compactness(const mst_semi* semi, mst_variant variant, uint64_t budget,
                                  int* holds, char** verdict_json) {
  if (mst_status s = require(semi && holds, "mst_decide_compactness: null argument")) return s;
  return guarded([&] {
    const mtop::CompactnessVerdict verdict = mtop::decide_compactness(
        semi->value, to_variant(variant), or_default(budget, mtop::kDefaultCollectionBudget));
    *holds = verdict.holds ? 1 : 0;
    if (verdict_json) *verdict_json = dup_string(mtop::verdict_to_json(verdict).dump(2));
  });
}

mst_status mst_has_fip(const mst_family* family, int* out) {
  if (mst_status s = require(family && out, "mst_has_fip: null argument")) return s;
  return guarded([&] { *out = mtop::has_fip(family->to_vector()) ? 1 : 0; });
}

mst_status mst_check_fip_scm(const mst_semi* semi, uint64_t collection_budget, uint64_t seed,
                             int* agree, char** report_json) {
  if (mst_status s = require(semi && agree, "mst_check_fip_scm: null argument")) return s;
  return guarded([&] {
    const mtop::FipTheoremReport report = mtop::check_fip_scm(
        semi->value, or_default(collection_budget, mtop::kDefaultCollectionBudget), seed);
    *agree = report.agree ? 1 : 0;
    if (report_json) *report_json = dup_string(mtop::fip_report_to_json(report).dump(2));
  });
}

mst_status mst_check_fip_scl(const mst_semi* semi, uint64_t collection_budget,
                             uint64_t family_budget, uint64_t seed, int* agree,
                             char** report_json) {
  if (mst_status s = require(semi && agree, "mst_check_fip_scl: null argument")) return s;
  return guarded([&] {
    const mtop::FipTheoremReport report = mtop::check_fip_scl(
        semi->value, or_default(collection_budget, mtop::kDefaultCollectionBudget),
        or_default(family_budget, mtop::kDefaultFamilyBudget), seed);
    *agree = report.agree ? 1 : 0;
    if (report_json) *report_json = dup_string(mtop::fip_report_to_json(report).dump(2));
  });
}

mst_status mst_subspace_compact_equiv(const mst_topology* top, const mst_mset* n,
                                      const mst_mset* a, uint64_t collection_budget,
                                      uint64_t family_budget, uint64_t seed, int* agree,
                                      char** report_json) {
  if (mst_status s = require(top && n && a && agree, "mst_subspace_compact_equiv: null argument"))
    return s;
  return guarded([&] {
    const mtop::SubspaceCompactReport report = mtop::subspace_compact_equiv(
        top->value, n->value, a->value,
        or_default(collection_budget, mtop::kDefaultCollectionBudget),
        or_default(family_budget, mtop::kDefaultFamilyBudget), seed);
    *agree = report.agree ? 1 : 0;
    if (report_json) *report_json = dup_string(mtop::subspace_report_to_json(report).dump(2));
  });
}

mst_status mst_generate_topology(const mst_gen_config* config, uint64_t trial,
                                 mst_topology** out) {
  if (mst_status s = require(config && out, "mst_generate_topology: null argument")) return s;
  return guarded([&] {
    mtop::GenConfig cfg;
    cfg.max_domain = static_cast<int>(config->max_domain);
    cfg.max_w = static_cast<int>(config->max_w);
    cfg.seed = config->seed;
    cfg.density = config->density == 0.0 ? 0.35 : config->density;
    cfg.family_budget = or_default(config->family_budget, mtop::kDefaultFamilyBudget);
    *out = wrap_topology(mtop::generate_topology(cfg, trial));
  });
}

mst_status mst_enumerate_topologies(const mst_mset* ground, int power_budget,
                                    mst_topology_cb callback, void* user) {
  if (mst_status s = require(ground && callback, "mst_enumerate_topologies: null argument"))
    return s;
  return guarded([&] {
    const int budget = power_budget <= 0 ? mtop::kExhaustivePowerBudget : power_budget;
    for (mtop::MTopology& top : mtop::enumerate_topologies(ground->value, budget)) {
      mst_topology* handle = wrap_topology(std::move(top));
      const int stop = callback(handle, user);
      mst_topology_free(handle);
      if (stop) break;
    }
  });
}

mst_status mst_claim_list(char** out) {
  if (mst_status s = require(out != nullptr, "mst_claim_list: null argument")) return s;
  return guarded([&] { *out = dup_string(mtop::json(mtop::claim_catalogue()).dump(2)); });
}

mst_status mst_remark_list(char** out) {
  if (mst_status s = require(out != nullptr, "mst_remark_list: null argument")) return s;
  return guarded([&] { *out = dup_string(mtop::json(mtop::remark_catalogue()).dump(2)); });
}

mst_status mst_verify(const char* claim, const char* corpus_json, int include_timing,
                      int* ok, char** report_json) {
  if (mst_status s = require(claim && corpus_json && ok, "mst_verify: null argument")) return s;
  return guarded([&] {
    const mtop::CorpusSpec spec = parse_corpus(corpus_json);
    const mtop::TheoremReport report = mtop::verify_property(claim, spec);
    *ok = report.violations.empty() ? 1 : 0;
    if (report_json)
      *report_json =
          dup_string(mtop::theorem_report_to_json(report, include_timing != 0).dump(2));
  });
}

mst_status mst_mine(const char* remark, const char* corpus_json, int include_timing,
                    int* found, char** report_json) {
  if (mst_status s = require(remark && corpus_json && found, "mst_mine: null argument"))
    return s;
  return guarded([&] {
    const mtop::CorpusSpec spec = parse_corpus(corpus_json);
    const mtop::MineReport report = mtop::mine(remark, spec);
    *found = report.found ? 1 : 0;
    if (report_json)
      *report_json = dup_string(mtop::mine_report_to_json(report, include_timing != 0).dump(2));
  });
}

}  // extern "C"
