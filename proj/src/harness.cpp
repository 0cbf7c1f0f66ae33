#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace mtop {

namespace {

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
  return std::mt19937_64(seq);
}

// Platform-independent coin: top 53 bits as a uniform double in [0, 1).
bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::uint64_t fnv1a64(std::string_view text, std::uint64_t h = 14695981039346656037ull) {
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

SpacePtr letters_space(int n, int w) {
  if (n < 1 || n > 26)
    fail(Errc::invalid_argument, "generated domains use 1..26 single-letter symbols");
  std::vector<std::string> syms;
  syms.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) syms.emplace_back(1, static_cast<char>('a' + i));
  return make_space(std::move(syms), w);
}

std::string topology_key(const MTopology& top) {
  std::ostringstream out;
  out << "w=" << top.space()->bound() << ";X=";
  for (int i = 0; i < top.space()->size(); ++i) {
    if (i) out << ',';
    out << top.space()->symbol(i);
  }
  out << ";M=" << to_text(top.ground()) << ";tau=";
  for (size_t i = 0; i < top.opens().size(); ++i) {
    if (i) out << '|';
    out << to_text(top.opens()[i]);
  }
  return out.str();
}

std::vector<size_t> sample_subfamily(std::mt19937_64& rng, size_t n) {
  const size_t k = 1 + static_cast<size_t>(rng() % std::min<size_t>(n, 16));
  std::vector<size_t> idx;
  for (size_t t = 0; t < k; ++t) idx.push_back(static_cast<size_t>(rng() % n));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

}  // namespace

MTopology generate_topology(const GenConfig& cfg, std::uint64_t trial_index) {
  if (cfg.max_domain < 1 || cfg.max_w < 1)
    fail(Errc::invalid_argument, "generator bounds must be positive");
  auto rng = seeded_rng(cfg.seed, trial_index * 0x9e3779b97f4a7c15ull + 1);

  const int nx = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_domain));
  const int w = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_w));
  const SpacePtr space = letters_space(nx, w);

  std::vector<int> counts(static_cast<size_t>(nx));
  for (int i = 0; i < nx; ++i)
    counts[static_cast<size_t>(i)] = static_cast<int>(rng() % static_cast<std::uint64_t>(w + 1));
  if (std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; }))
    counts[rng() % static_cast<std::uint64_t>(nx)] =
        1 + static_cast<int>(rng() % static_cast<std::uint64_t>(w));
  const MSet ground(space, counts);

  for (int attempt = 0; attempt < 5; ++attempt) {
    const double density = cfg.density / static_cast<double>(1 << attempt);
    std::vector<MSet> family{MSet::empty(space), ground};

    if (power_cardinality(ground, PowerKind::All) <= cfg.family_budget) {
      for (const MSet& s : power_family(ground, PowerKind::All, cfg.family_budget))
        if (!s.is_empty() && s != ground && coin(rng, density)) family.push_back(s);
    } else {
      // Too many sub-M-sets to enumerate: sample candidates coordinate-wise.
      for (int t = 0; t < 64; ++t) {
        std::vector<int> c(static_cast<size_t>(nx));
        for (int i = 0; i < nx; ++i)
          c[static_cast<size_t>(i)] =
              static_cast<int>(rng() % static_cast<std::uint64_t>(ground.count(i) + 1));
        if (coin(rng, density)) family.emplace_back(space, std::move(c));
      }
    }
    canonicalize_family(family);

    // Close under pairwise union and intersection to a fixpoint.
    bool over_budget = false;
    bool grew = true;
    while (grew && !over_budget) {
      grew = false;
      std::vector<MSet> fresh;
      for (size_t i = 0; i < family.size() && !over_budget; ++i) {
        for (size_t j = i + 1; j < family.size(); ++j) {
          for (const MSet& s : {mset_union(family[i], family[j]),
                                mset_intersect(family[i], family[j])}) {
            if (!family_contains(family, s) && !family_contains(fresh, s)) {
              fresh.push_back(s);
              canonicalize_family(fresh);
            }
          }
          if (family.size() + fresh.size() > cfg.family_budget) {
            over_budget = true;
            break;
          }
        }
      }
      if (!fresh.empty() && !over_budget) {
        family.insert(family.end(), fresh.begin(), fresh.end());
        canonicalize_family(family);
        grew = true;
      }
    }
    if (over_budget) continue;
    return MTopology::unchecked(ground, std::move(family));
  }
  fail(Errc::budget_exceeded,
       "random family closure exceeded budget " + std::to_string(cfg.family_budget) +
           " after retries");
}

std::vector<MTopology> enumerate_topologies(const MSet& ground, int power_budget) {
  const std::uint64_t cardinality = power_cardinality(ground, PowerKind::All);
  if (cardinality > static_cast<std::uint64_t>(power_budget))
    fail(Errc::budget_exceeded,
         "|P(ground)| = " + std::to_string(cardinality) + " exceeds exhaustive bound " +
             std::to_string(power_budget));

  const std::vector<MSet> all = power_family(ground, PowerKind::All);
  const int n = static_cast<int>(all.size());

  // P(ground) is lex-sorted, so the empty M-set is index 0 and ground is
  // index n-1. Precompute the operation tables over indices.
  const auto index_of = [&](const MSet& s) {
    const auto it = std::lower_bound(all.begin(), all.end(), s, lex_less);
    return static_cast<int>(std::distance(all.begin(), it));
  };
  std::vector<std::vector<int>> uni(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  std::vector<std::vector<int>> inter = uni;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      uni[static_cast<size_t>(i)][static_cast<size_t>(j)] = index_of(mset_union(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)]));
      inter[static_cast<size_t>(i)][static_cast<size_t>(j)] = index_of(mset_intersect(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)]));
    }
  }

  std::vector<int> middle;
  for (int i = 1; i < n - 1; ++i) middle.push_back(i);

  std::vector<MTopology> result;
  const std::uint64_t limit = std::uint64_t{1} << middle.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::uint32_t chosen = (1u << 0) | (1u << (n - 1));
    for (size_t b = 0; b < middle.size(); ++b)
      if (mask >> b & 1) chosen |= 1u << middle[b];

    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (!(chosen >> i & 1)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (!(chosen >> j & 1)) continue;
        if (!(chosen >> uni[static_cast<size_t>(i)][static_cast<size_t>(j)] & 1) ||
            !(chosen >> inter[static_cast<size_t>(i)][static_cast<size_t>(j)] & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;

    std::vector<MSet> family;
    for (int i = 0; i < n; ++i)
      if (chosen >> i & 1) family.push_back(all[static_cast<size_t>(i)]);
    result.push_back(MTopology::unchecked(ground, std::move(family)));
  }
  return result;
}

const char* corpus_kind_name(CorpusSpec::Kind kind) {
  switch (kind) {
    case CorpusSpec::Kind::Exhaustive: return "exhaustive";
    case CorpusSpec::Kind::Random: return "random";
    case CorpusSpec::Kind::Fixture: return "fixture";
    case CorpusSpec::Kind::Sweep: return "sweep";
  }
  return "?";
}

CorpusSpec::Kind corpus_kind_from_name(const std::string& name) {
  if (name == "exhaustive") return CorpusSpec::Kind::Exhaustive;
  if (name == "random") return CorpusSpec::Kind::Random;
  if (name == "fixture") return CorpusSpec::Kind::Fixture;
  if (name == "sweep") return CorpusSpec::Kind::Sweep;
  fail(Errc::invalid_argument, "unknown corpus kind '" + name + "'");
}

std::vector<MTopology> build_corpus(const CorpusSpec& spec) {
  std::vector<MTopology> corpus;
  switch (spec.kind) {
    case CorpusSpec::Kind::Fixture: {
      if (!spec.fixture)
        fail(Errc::invalid_argument, "fixture corpus requires a topology");
      corpus.push_back(*spec.fixture);
      break;
    }
    case CorpusSpec::Kind::Exhaustive: {
      const SpacePtr space = letters_space(spec.domain_size, spec.w);
      const MSet everything(space, std::vector<int>(static_cast<size_t>(spec.domain_size), spec.w));
      for (const MSet& ground : power_family(everything, PowerKind::All, spec.family_budget)) {
        if (ground.is_empty()) continue;
        for (MTopology& top : enumerate_topologies(ground))
          corpus.push_back(std::move(top));
      }
      break;
    }
    case CorpusSpec::Kind::Sweep: {
      for (int d = 1; d <= spec.domain_size; ++d) {
        for (int w = 1; w <= spec.w; ++w) {
          const SpacePtr space = letters_space(d, w);
          const MSet everything(space, std::vector<int>(static_cast<size_t>(d), w));
          if (power_cardinality(everything, PowerKind::All) > spec.family_budget) continue;
          for (const MSet& ground : power_family(everything, PowerKind::All, spec.family_budget)) {
            if (ground.is_empty()) continue;
            if (power_cardinality(ground, PowerKind::All) >
                static_cast<std::uint64_t>(kExhaustivePowerBudget))
              continue;
            for (MTopology& top : enumerate_topologies(ground))
              corpus.push_back(std::move(top));
          }
        }
      }
      [[fallthrough]];
    }
    case CorpusSpec::Kind::Random: {
      GenConfig cfg;
      cfg.max_domain = spec.domain_size;
      cfg.max_w = spec.w;
      cfg.seed = spec.seed;
      cfg.density = spec.density;
      cfg.family_budget = spec.family_budget;
      for (int t = 0; t < spec.trials; ++t)
        corpus.push_back(generate_topology(cfg, static_cast<std::uint64_t>(t)));
      break;
    }
  }
  return corpus;
}

std::string corpus_fingerprint(const std::vector<MTopology>& corpus) {
  std::uint64_t h = 14695981039346656037ull;
  for (const MTopology& top : corpus) h = fnv1a64(topology_key(top), h);
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

const std::vector<std::string>& claim_catalogue() {
  static const std::vector<std::string> claims{
      "T3.6", "T3.9", "T3.10", "T3.11", "T3.12",
      "SCM-intersection", "T4.11", "T4.12", "T4.15"};
  return claims;
}

const std::vector<std::string>& remark_catalogue() {
  static const std::vector<std::string> remarks{"3.7", "3.8", "3.13"};
  return remarks;
}

namespace {

struct RunnerState {
  TheoremReport* report;
  bool saw_exhaustive = false;
  bool saw_sampled = false;

  void note_mode(const std::string& mode) {
    if (mode == "exhaustive") saw_exhaustive = true;
    else saw_sampled = true;
  }
  void violation(const MTopology& top, std::vector<MSet> offending, std::string what) {
    report->violations.push_back(Counterexample{
        report->claim, top, std::move(offending), std::move(what),
        "msettop verify --claim " + report->claim + " --corpus fixture --fixture <file>"});
  }
};

std::vector<MSet> pick(const std::vector<MSet>& pool, const std::vector<size_t>& idx) {
  std::vector<MSet> out;
  out.reserve(idx.size());
  for (size_t i : idx) out.push_back(pool[i]);
  return out;
}

// Sweeps subfamilies of pool through check(members); exhaustive when 2^n
// fits the cap, else every pair plus sampled draws plus the whole pool.
void sweep_subfamilies(const std::vector<MSet>& pool, bool include_empty,
                       std::mt19937_64& rng, RunnerState& state,
                       const std::function<void(const std::vector<MSet>&)>& check) {
  const size_t n = pool.size();
  if (n < 63 && (std::uint64_t{1} << n) <= kDefaultCollectionBudget) {
    state.note_mode("exhaustive");
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = include_empty ? 0 : 1; mask < limit; ++mask) {
      std::vector<size_t> idx;
      for (size_t i = 0; i < n; ++i)
        if (mask >> i & 1) idx.push_back(i);
      check(pick(pool, idx));
    }
    return;
  }
  state.note_mode("sampled");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      check({pool[i], pool[j]});
  for (int t = 0; t < 256; ++t) check(pick(pool, sample_subfamily(rng, n)));
  check(pool);
}

void run_t36(const MTopology& top, const SemiFamily& fam, std::mt19937_64& rng,
             RunnerState& state) {
  sweep_subfamilies(fam.som(), true, rng, state, [&](const std::vector<MSet>& members) {
    ++state.report->trials;
    const MSet u = fold_union(top.space(), members);
    if (!fam.is_som(u)) {
      std::vector<MSet> offending = members;
      offending.push_back(u);
      state.violation(top, std::move(offending),
                      "union " + to_text(u) + " of a SOM subfamily is not SOM");
    }
  });
}

void run_scm_intersection(const MTopology& top, const SemiFamily& fam, std::mt19937_64& rng,
                          RunnerState& state) {
  sweep_subfamilies(fam.scm(), false, rng, state, [&](const std::vector<MSet>& members) {
    if (members.empty()) return;
    ++state.report->trials;
    const MSet v = fold_intersect(members);
    if (!fam.is_scm(v)) {
      std::vector<MSet> offending = members;
      offending.push_back(v);
      state.violation(top, std::move(offending),
                      "intersection " + to_text(v) + " of a SCM subfamily is not SCM");
    }
  });
}

void run_t39(const MTopology& top, const SemiFamily& fam, std::mt19937_64&, RunnerState& state) {
  state.note_mode("exhaustive");
  for (const MSet& s : fam.som()) {
    for (const MSet& open : top.opens()) {
      ++state.report->trials;
      const MSet u = mset_union(s, open);
      if (!fam.is_som(u))
        state.violation(top, {s, open, u},
                        "union of SOM " + to_text(s) + " with open " + to_text(open) +
                            " is not SOM");
    }
  }
}

void run_t310(const MTopology& top, const SemiFamily& fam, std::mt19937_64&, RunnerState& state) {
  state.note_mode("exhaustive");
  const std::vector<MSet> all = power_family(top.ground(), PowerKind::All);
  for (const MSet& s : fam.som()) {
    const MSet cl_s = closure(top, s);
    for (const MSet& n : all) {
      if (!subset_leq(s, n) || !subset_leq(n, cl_s)) continue;
      ++state.report->trials;
      if (!fam.is_som(n))
        state.violation(top, {s, n},
                        to_text(n) + " sandwiched between SOM " + to_text(s) +
                            " and its closure is not SOM");
    }
  }
}

void run_t311(const MTopology& top, const SemiFamily& fam, std::mt19937_64&, RunnerState& state) {
  state.note_mode("exhaustive");
  const std::vector<MSet> all = power_family(top.ground(), PowerKind::All);
  for (const MSet& t : fam.scm()) {
    const MSet int_t = interior(top, t);
    for (const MSet& r : all) {
      if (!subset_leq(int_t, r) || !subset_leq(r, t)) continue;
      ++state.report->trials;
      if (!fam.is_scm(r))
        state.violation(top, {t, r},
                        to_text(r) + " sandwiched between int of SCM " + to_text(t) +
                            " and the SCM itself is not SCM");
    }
  }
}

void run_t312(const MTopology& top, const SemiFamily&, std::mt19937_64&, RunnerState& state) {
  state.note_mode("exhaustive");
  const std::vector<MSet> all = power_family(top.ground(), PowerKind::All);
  std::vector<MSet> cl_of_open, int_of_closed;
  for (const MSet& o : top.opens()) cl_of_open.push_back(closure(top, o));
  for (const MSet& k : top.closeds()) int_of_closed.push_back(interior(top, k));

  for (const MSet& s : all) {
    ++state.report->trials;
    const MSet comp = complement_in(s, top.ground());

    bool som_witness = false;
    for (size_t i = 0; i < top.opens().size(); ++i)
      if (subset_leq(top.opens()[i], s) && subset_leq(s, cl_of_open[i])) {
        som_witness = true;
        break;
      }
    const bool criterion = subset_leq(s, closure(top, interior(top, s)));
    const bool comp_criterion = subset_leq(interior(top, closure(top, comp)), comp);
    bool scm_witness = false;
    for (size_t i = 0; i < top.closeds().size(); ++i)
      if (subset_leq(int_of_closed[i], comp) && subset_leq(comp, top.closeds()[i])) {
        scm_witness = true;
        break;
      }

    if (som_witness != criterion || criterion != comp_criterion ||
        comp_criterion != scm_witness) {
      std::ostringstream what;
      what << "equivalence broken on " << to_text(s) << ": (i)=" << som_witness
           << " (ii)=" << criterion << " (iii)=" << comp_criterion << " (iv)=" << scm_witness;
      state.violation(top, {s}, what.str());
    }
  }
}

void run_t411(const MTopology& top, const SemiFamily& fam, std::mt19937_64& rng,
              RunnerState& state) {
  const FipTheoremReport r = check_fip_scm(fam, kDefaultCollectionBudget, rng());
  state.note_mode(r.mode);
  state.report->trials += r.collections_checked;
  if (!state.report->agreement) state.report->agreement = AgreementTable{};
  AgreementTable& table = *state.report->agreement;
  if (r.semi_compact && r.right_holds) ++table.both_true;
  else if (r.semi_compact) ++table.left_only;
  else if (r.right_holds) ++table.right_only;
  else ++table.both_false;
  if (!r.agree)
    state.violation(top, r.violating_collection,
                    "semi compactness and the SCM FIP sweep disagree");
}

void run_t412(const MTopology& top, const SemiFamily& fam, std::mt19937_64& rng,
              RunnerState& state) {
  const FipTheoremReport r =
      check_fip_scl(fam, kDefaultCollectionBudget, kDefaultFamilyBudget, rng());
  state.note_mode(r.mode);
  state.report->trials += r.collections_checked;
  if (!state.report->agreement) state.report->agreement = AgreementTable{};
  AgreementTable& table = *state.report->agreement;
  if (r.semi_compact && r.right_holds) ++table.both_true;
  else if (r.semi_compact) ++table.left_only;
  else if (r.right_holds) ++table.right_only;
  else ++table.both_false;
  if (!r.agree)
    state.violation(top, r.violating_collection,
                    "semi compactness and the semi-closure FIP sweep disagree");
}

void run_t415(const MTopology& top, const SemiFamily&, std::mt19937_64& rng,
              RunnerState& state) {
  const std::vector<MSet> all = power_family(top.ground(), PowerKind::All);
  std::vector<std::pair<MSet, MSet>> chains;  // (N, A)
  if (all.size() <= 6) {
    state.note_mode("exhaustive");
    for (const MSet& n : all)
      for (const MSet& a : all)
        if (subset_leq(a, n)) chains.emplace_back(n, a);
  } else {
    state.note_mode("sampled");
    for (int t = 0; t < 12; ++t) {
      const MSet& n = all[rng() % all.size()];
      std::vector<int> c(static_cast<size_t>(n.dim()));
      for (int i = 0; i < n.dim(); ++i)
        c[static_cast<size_t>(i)] = static_cast<int>(rng() % static_cast<std::uint64_t>(n.count(i) + 1));
      chains.emplace_back(n, MSet(top.space(), std::move(c)));
    }
  }

  if (!state.report->agreement) state.report->agreement = AgreementTable{};
  AgreementTable& table = *state.report->agreement;
  for (const auto& [n, a] : chains) {
    const SubspaceCompactReport r = subspace_compact_equiv(top, n, a, 256, kDefaultFamilyBudget, rng());
    state.report->trials += r.covers_checked_tau + r.covers_checked_sub;
    if (r.tau_compact && r.subspace_compact) ++table.both_true;
    else if (r.tau_compact) ++table.left_only;
    else if (r.subspace_compact) ++table.right_only;
    else ++table.both_false;
    if (!r.agree)
      state.violation(top, {n, a},
                      "tau-semi compactness of " + to_text(a) + " disagrees with the subspace verdict on N = " + to_text(n));
  }
}

}  // namespace

TheoremReport verify_property(std::string_view claim, const CorpusSpec& corpus_spec) {
  const std::string claim_id(claim);
  const auto& claims = claim_catalogue();
  if (std::find(claims.begin(), claims.end(), claim_id) == claims.end())
    fail(Errc::unknown_claim, "unknown claim id '" + claim_id + "'");

  const auto start = std::chrono::steady_clock::now();
  const std::vector<MTopology> corpus = build_corpus(corpus_spec);

  TheoremReport report;
  report.claim = claim_id;
  report.corpus = corpus_spec;
  report.topologies = corpus.size();
  report.fingerprint = corpus_fingerprint(corpus);

  RunnerState state{&report};
  for (size_t ordinal = 0; ordinal < corpus.size(); ++ordinal) {
    const MTopology& top = corpus[ordinal];
    const SemiFamily fam = SemiFamily::enumerate(top, corpus_spec.family_budget);
    auto rng = seeded_rng(corpus_spec.seed, fnv1a64(claim_id) ^ (ordinal + 1));

    if (claim_id == "T3.6") run_t36(top, fam, rng, state);
    else if (claim_id == "T3.9") run_t39(top, fam, rng, state);
    else if (claim_id == "T3.10") run_t310(top, fam, rng, state);
    else if (claim_id == "T3.11") run_t311(top, fam, rng, state);
    else if (claim_id == "T3.12") run_t312(top, fam, rng, state);
    else if (claim_id == "SCM-intersection") run_scm_intersection(top, fam, rng, state);
    else if (claim_id == "T4.11") run_t411(top, fam, rng, state);
    else if (claim_id == "T4.12") run_t412(top, fam, rng, state);
    else if (claim_id == "T4.15") run_t415(top, fam, rng, state);
  }

  report.mode = state.saw_exhaustive && state.saw_sampled ? "mixed"
                : state.saw_sampled ? "sampled"
                                    : "exhaustive";
  report.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return report;
}

MineReport mine(std::string_view remark, const CorpusSpec& corpus_spec) {
  const std::string remark_id(remark);
  const auto& remarks = remark_catalogue();
  if (std::find(remarks.begin(), remarks.end(), remark_id) == remarks.end())
    fail(Errc::unknown_claim, "unknown remark id '" + remark_id + "'");

  const auto start = std::chrono::steady_clock::now();
  const std::vector<MTopology> corpus = build_corpus(corpus_spec);

  MineReport report;
  report.remark = remark_id;
  report.fingerprint = corpus_fingerprint(corpus);
  if (remark_id == "3.8") report.cells = MineCells{};

  const auto recheck_cmd = [&]() {
    return "msettop mine --remark " + remark_id + " --corpus fixture --fixture <file>";
  };

  for (const MTopology& top : corpus) {
    const SemiFamily fam = SemiFamily::enumerate(top, corpus_spec.family_budget);
    ++report.searched;

    if (remark_id == "3.13") {
      for (const MSet& s : fam.som()) {
        if (!top.is_open(s)) {
          report.found = true;
          report.witness = Counterexample{"3.13", top, {s},
                                          "SOM-set " + to_text(s) + " is not open",
                                          recheck_cmd()};
          break;
        }
      }
      if (report.found) break;
    } else if (remark_id == "3.7") {
      for (size_t i = 0; i < fam.som().size() && !report.found; ++i) {
        for (size_t j = i + 1; j < fam.som().size(); ++j) {
          const MSet inter = mset_intersect(fam.som()[i], fam.som()[j]);
          if (!fam.is_som(inter)) {
            report.found = true;
            report.witness = Counterexample{
                "3.7", top, {fam.som()[i], fam.som()[j], inter},
                "intersection " + to_text(inter) + " of SOM-sets " +
                    to_text(fam.som()[i]) + " and " + to_text(fam.som()[j]) +
                    " is not SOM",
                recheck_cmd()};
            break;
          }
        }
      }
      if (report.found) break;
    } else {  // 3.8
      const bool is_top = validate_topology(top.ground(), fam.som()).valid;
      bool closures_open = true;
      for (const MSet& o : top.opens())
        if (!top.is_open(closure(top, o))) {
          closures_open = false;
          break;
        }
      bool disjoint_closures = true;
      for (size_t i = 0; i < top.opens().size() && disjoint_closures; ++i)
        for (size_t j = i + 1; j < top.opens().size(); ++j)
          if (mset_intersect(top.opens()[i], top.opens()[j]).is_empty() &&
              !mset_intersect(closure(top, top.opens()[i]), closure(top, top.opens()[j]))
                   .is_empty()) {
            disjoint_closures = false;
            break;
          }
      if (closures_open != disjoint_closures) ++report.clause_divergences;

      if (closures_open && is_top) ++report.cells->cond_and_topology;
      else if (closures_open) ++report.cells->cond_not_topology;
      else if (is_top) ++report.cells->nocond_topology;
      else ++report.cells->nocond_not_topology;

      if (closures_open != is_top) {
        report.found = true;
        report.surprises.push_back(Counterexample{
            "3.8", top, {},
            closures_open
                ? "closures of opens are all open, yet the SOM family is not an M-topology"
                : "the SOM family is an M-topology although some open has a non-open closure",
            recheck_cmd()});
      }
    }
  }

  report.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return report;
}

}  // namespace mtop
