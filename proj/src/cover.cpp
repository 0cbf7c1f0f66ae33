#include "cover.hpp"

#include <algorithm>
#include <random>

namespace mtop {

bool family_covers(const MSet& target, const std::vector<MSet>& members) {
  for (int i = 0; i < target.dim(); ++i) {
    const int need = target.count(i);
    if (need == 0) continue;
    int best = 0;
    for (const MSet& m : members) best = std::max(best, m.count(i));
    if (best < need) return false;
  }
  return true;
}

Cover make_cover(MSet target, std::vector<MSet> members) {
  for (const MSet& m : members) ensure_same_space(m, target);
  canonicalize_family(members);
  if (!family_covers(target, members))
    fail(Errc::invalid_argument,
         "family does not cover " + to_text(target) + " pointwise");
  return Cover{std::move(target), std::move(members)};
}

bool is_semi_open_cover(const SemiFamily& fam, const std::vector<MSet>& members) {
  const MSet& ground = fam.topology().ground();
  for (const MSet& m : members) {
    ensure_same_space(m, ground);
    if (!subset_leq(m, ground))
      fail(Errc::not_a_subset,
           "cover member " + to_text(m) + " is not a sub-M-set of ground");
  }
  if (!family_covers(ground, members)) return false;
  for (const MSet& m : members)
    if (!fam.is_som(m)) return false;
  return true;
}

const char* filter_name(SubFilter f) {
  switch (f) {
    case SubFilter::Any: return "any";
    case SubFilter::Whole: return "whole";
    case SubFilter::PartialWhole: return "partial_whole";
    case SubFilter::Full: return "full";
  }
  return "?";
}

SubFilter filter_from_name(const std::string& name) {
  if (name == "any") return SubFilter::Any;
  if (name == "whole") return SubFilter::Whole;
  if (name == "partial_whole") return SubFilter::PartialWhole;
  if (name == "full") return SubFilter::Full;
  fail(Errc::invalid_argument, "unknown subcover filter '" + name + "'");
}

bool passes_filter(const MSet& s, const MSet& ground, SubFilter f) {
  if (f == SubFilter::Any) return true;
  const SubRelation rel = classify_sub(s, ground);
  switch (f) {
    case SubFilter::Whole: return rel.is_whole;
    case SubFilter::PartialWhole: return rel.is_partial_whole;
    case SubFilter::Full: return rel.is_full;
    case SubFilter::Any: break;
  }
  return true;
}

namespace {

// Enumerates k-combinations of {0..n-1} in lexicographic order.
struct Combinations {
  int n, k;
  std::vector<int> idx;

  bool start() {
    if (k > n) return false;
    idx.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    return true;
  }
  bool next() {
    for (int i = k - 1; i >= 0; --i) {
      if (idx[static_cast<size_t>(i)] < n - k + i) {
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
          idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<MSet>> find_subcover(const SemiFamily& fam, const Cover& cover,
                                               SubFilter filter, std::uint64_t budget) {
  if (!is_semi_open_cover(fam, cover.members))
    fail(Errc::invalid_argument, "find_subcover requires a semi-open cover");

  const MSet& ground = fam.topology().ground();
  std::vector<MSet> passing;
  for (const MSet& m : cover.members)
    if (passes_filter(m, ground, filter)) passing.push_back(m);

  // A qualifying sub-collection covers iff the passing members jointly do.
  if (!family_covers(cover.target, passing)) return std::nullopt;

  std::uint64_t enumerated = 0;
  const int n = static_cast<int>(passing.size());
  for (int k = 1; k <= n; ++k) {
    Combinations combos{n, k, {}};
    if (!combos.start()) break;
    do {
      if (++enumerated > budget)
        fail(Errc::budget_exceeded,
             "subcover search exceeded budget " + std::to_string(budget) +
                 " at frontier size " + std::to_string(k));
      std::vector<MSet> pick;
      pick.reserve(static_cast<size_t>(k));
      for (int i : combos.idx) pick.push_back(passing[static_cast<size_t>(i)]);
      if (family_covers(cover.target, pick)) return pick;
    } while (combos.next());
  }
  return std::nullopt;  // unreachable: the passing family itself covers
}

const char* variant_name(CompactVariant v) {
  switch (v) {
    case CompactVariant::Semi: return "semi";
    case CompactVariant::SemiWhole: return "semi_whole";
    case CompactVariant::SemiPartialWhole: return "semi_partial_whole";
    case CompactVariant::SemiFull: return "semi_full";
  }
  return "?";
}

CompactVariant variant_from_name(const std::string& name) {
  if (name == "semi") return CompactVariant::Semi;
  if (name == "semi_whole") return CompactVariant::SemiWhole;
  if (name == "semi_partial_whole") return CompactVariant::SemiPartialWhole;
  if (name == "semi_full") return CompactVariant::SemiFull;
  fail(Errc::invalid_argument, "unknown compactness variant '" + name + "'");
}

SubFilter variant_filter(CompactVariant v) {
  switch (v) {
    case CompactVariant::Semi: return SubFilter::Any;
    case CompactVariant::SemiWhole: return SubFilter::Whole;
    case CompactVariant::SemiPartialWhole: return SubFilter::PartialWhole;
    case CompactVariant::SemiFull: return SubFilter::Full;
  }
  return SubFilter::Any;
}

namespace {

// Does some semi-open cover of ground exist whose filter-passing members do
// not dominate ground? Pointwise reduction: such a cover exists iff there is
// an x0 in support(ground) where the non-passing members can carry the count
// while every passing member falls short, and the rest of the ground can
// still be dominated without passing members that reach C_M(x0) at x0.
bool failing_cover_exists(const std::vector<MSet>& som, const std::vector<char>& passes,
                          const MSet& ground) {
  const int dim = ground.dim();
  for (int x0 = 0; x0 < dim; ++x0) {
    const int need0 = ground.count(x0);
    if (need0 == 0) continue;

    int best_nonpass = 0;
    for (size_t i = 0; i < som.size(); ++i)
      if (!passes[i]) best_nonpass = std::max(best_nonpass, som[i].count(x0));
    if (best_nonpass < need0) continue;

    bool covers = true;
    for (int x = 0; x < dim && covers; ++x) {
      const int need = ground.count(x);
      if (need == 0) continue;
      int best = 0;
      for (size_t i = 0; i < som.size(); ++i) {
        if (passes[i] && som[i].count(x0) >= need0) continue;  // excluded from D
        best = std::max(best, som[i].count(x));
      }
      covers = best >= need;
    }
    if (covers) return true;
  }
  return false;
}

}  // namespace

CompactnessVerdict decide_compactness(const SemiFamily& fam, CompactVariant variant,
                                      std::uint64_t budget) {
  const std::vector<MSet>& som = fam.som();
  const MSet& ground = fam.topology().ground();

  if (variant == CompactVariant::Semi) {
    // Covers drawn from the finite SOM family are finite sub-collections of
    // themselves; per-element argmax even bounds the subcover by |support|.
    CompactnessVerdict verdict{variant, true, std::nullopt, std::nullopt};
    verdict.certificate = CompactCertificate{som.size(), 0, "finite-presentation"};
    return verdict;
  }

  const SubFilter filter = variant_filter(variant);
  std::vector<char> passes(som.size());
  for (size_t i = 0; i < som.size(); ++i)
    passes[i] = passes_filter(som[i], ground, filter) ? 1 : 0;

  const bool fails = failing_cover_exists(som, passes, ground);

  if (!fails) {
    CompactnessVerdict verdict{variant, true, std::nullopt, std::nullopt};
    std::uint64_t checked = static_cast<std::uint64_t>(ground.dim());
    std::string mode = "pointwise";
    if (som.size() < 63 && (std::uint64_t{1} << som.size()) <= budget) {
      // Confirm by exhausting every covering subfamily of som.
      checked = 0;
      const std::uint64_t limit = std::uint64_t{1} << som.size();
      for (std::uint64_t mask = 1; mask < limit; ++mask) {
        std::vector<MSet> members, passing;
        for (size_t i = 0; i < som.size(); ++i) {
          if (!(mask >> i & 1)) continue;
          members.push_back(som[i]);
          if (passes[i]) passing.push_back(som[i]);
        }
        if (!family_covers(ground, members)) continue;
        ++checked;
        if (!family_covers(ground, passing))
          fail(Errc::algorithm_divergence,
               "pointwise compactness decision contradicts the exhaustive sweep");
      }
      mode = "exhaustive";
    }
    verdict.certificate = CompactCertificate{som.size(), checked, mode};
    return verdict;
  }

  // Minimal witness: a failing cover of at most |support(ground)| members
  // exists, found by increasing size in canonical combination order.
  const int n = static_cast<int>(som.size());
  const int max_k = static_cast<int>(ground.support().size());
  for (int k = 1; k <= max_k; ++k) {
    Combinations combos{n, k, {}};
    if (!combos.start()) break;
    do {
      std::vector<MSet> members, passing;
      members.reserve(static_cast<size_t>(k));
      for (int i : combos.idx) {
        members.push_back(som[static_cast<size_t>(i)]);
        if (passes[static_cast<size_t>(i)]) passing.push_back(som[static_cast<size_t>(i)]);
      }
      if (family_covers(ground, members) && !family_covers(ground, passing)) {
        CompactnessVerdict verdict{variant, false, std::nullopt, std::nullopt};
        verdict.witness = Cover{ground, std::move(members)};
        return verdict;
      }
    } while (combos.next());
  }
  fail(Errc::algorithm_divergence,
       "failing cover predicted but no witness of size <= |support| found");
}

bool has_fip(const std::vector<MSet>& family) {
  if (family.empty())
    fail(Errc::invalid_argument, "FIP requires a non-empty collection");
  MSet acc = family.front();
  for (size_t i = 1; i < family.size(); ++i) {
    if (acc.is_empty()) return false;
    acc = mset_intersect(acc, family[i]);
  }
  return !acc.is_empty();
}

namespace {

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
  return std::mt19937_64(seq);
}

// Deterministic index sample: a non-empty subfamily of {0..n-1}.
std::vector<size_t> sample_subfamily(std::mt19937_64& rng, size_t n) {
  const size_t k = 1 + static_cast<size_t>(rng() % std::min<size_t>(n, 16));
  std::vector<size_t> idx;
  for (size_t t = 0; t < k; ++t) idx.push_back(static_cast<size_t>(rng() % n));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

// Sweeps collections drawn from pool: FIP must force a non-empty combined
// intersection, where combine(i) maps a pool index to the set actually
// intersected on the right-hand side (identity for T4.11, scl for T4.12).
template <typename Combine>
void sweep_fip(const std::vector<MSet>& pool, std::uint64_t collection_budget,
               std::uint64_t seed, std::uint64_t salt, Combine&& combined,
               FipTheoremReport& report) {
  const size_t n = pool.size();
  report.right_holds = true;
  if (n == 0) return;

  const auto test_collection = [&](const std::vector<size_t>& idx) {
    ++report.collections_checked;
    std::vector<MSet> members;
    members.reserve(idx.size());
    for (size_t i : idx) members.push_back(pool[i]);
    if (!has_fip(members)) return;
    MSet acc = combined(idx.front());
    for (size_t j = 1; j < idx.size(); ++j)
      acc = mset_intersect(acc, combined(idx[j]));
    if (acc.is_empty() && report.right_holds) {
      report.right_holds = false;
      report.violating_collection = members;
    }
  };

  if (n < 63 && (std::uint64_t{1} << n) <= collection_budget) {
    report.mode = "exhaustive";
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      std::vector<size_t> idx;
      for (size_t i = 0; i < n; ++i)
        if (mask >> i & 1) idx.push_back(i);
      test_collection(idx);
    }
  } else {
    report.mode = "sampled";
    auto rng = seeded_rng(seed, salt);
    for (std::uint64_t t = 0; t < collection_budget; ++t)
      test_collection(sample_subfamily(rng, n));
  }
}

}  // namespace

FipTheoremReport check_fip_scm(const SemiFamily& fam, std::uint64_t collection_budget,
                               std::uint64_t seed) {
  FipTheoremReport report;
  report.theorem = "T4.11";
  report.semi_compact = decide_compactness(fam, CompactVariant::Semi).holds;
  const std::vector<MSet>& scm = fam.scm();
  sweep_fip(scm, collection_budget, seed, 0x11, [&](size_t i) { return scm[i]; }, report);
  report.agree = report.semi_compact == report.right_holds;
  return report;
}

FipTheoremReport check_fip_scl(const SemiFamily& fam, std::uint64_t collection_budget,
                               std::uint64_t family_budget, std::uint64_t seed) {
  FipTheoremReport report;
  report.theorem = "T4.12";
  report.semi_compact = decide_compactness(fam, CompactVariant::Semi).holds;
  const std::vector<MSet> pool =
      power_family(fam.topology().ground(), PowerKind::All, family_budget);
  std::vector<MSet> scl_of;
  scl_of.reserve(pool.size());
  for (const MSet& s : pool) scl_of.push_back(semi_closure(fam, s));
  sweep_fip(pool, collection_budget, seed, 0x12, [&](size_t i) { return scl_of[i]; }, report);
  report.agree = report.semi_compact == report.right_holds;
  return report;
}

namespace {

// Per-element argmax subcover: for each element of target pick the first
// member attaining the family maximum there.
std::vector<MSet> argmax_subcover(const MSet& target, const std::vector<MSet>& members) {
  std::vector<MSet> pick;
  for (int x = 0; x < target.dim(); ++x) {
    const int need = target.count(x);
    if (need == 0) continue;
    const MSet* best = nullptr;
    for (const MSet& m : members)
      if (!best || m.count(x) > best->count(x)) best = &m;
    if (best && !family_contains(pick, *best)) {
      pick.push_back(*best);
      canonicalize_family(pick);
    }
  }
  return pick;
}

// Every cover of target by members of the SOM family must admit a finite
// subcover; exhibits one per covering subfamily swept.
bool semi_compact_for_target(const SemiFamily& fam, const MSet& target,
                             std::uint64_t collection_budget, std::uint64_t seed,
                             std::uint64_t salt, std::uint64_t* checked, std::string* mode) {
  const std::vector<MSet>& som = fam.som();
  const size_t n = som.size();
  bool ok = true;

  const auto test_cover = [&](const std::vector<size_t>& idx) {
    std::vector<MSet> members;
    members.reserve(idx.size());
    for (size_t i : idx) members.push_back(som[i]);
    if (!family_covers(target, members)) return;
    ++*checked;
    const std::vector<MSet> finite = argmax_subcover(target, members);
    if (!family_covers(target, finite)) ok = false;
  };

  if (n < 63 && (std::uint64_t{1} << n) <= collection_budget) {
    *mode = "exhaustive";
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      std::vector<size_t> idx;
      for (size_t i = 0; i < n; ++i)
        if (mask >> i & 1) idx.push_back(i);
      if (idx.empty() && !target.is_empty()) continue;
      test_cover(idx);
    }
  } else {
    *mode = "sampled";
    auto rng = seeded_rng(seed, salt);
    for (std::uint64_t t = 0; t < collection_budget; ++t)
      test_cover(sample_subfamily(rng, std::max<size_t>(n, 1)));
    // The full family is always a cover worth exhibiting.
    std::vector<size_t> everything(n);
    for (size_t i = 0; i < n; ++i) everything[i] = i;
    test_cover(everything);
  }
  return ok;
}

}  // namespace

SubspaceCompactReport subspace_compact_equiv(const MTopology& top, const MSet& n, const MSet& a,
                                             std::uint64_t collection_budget,
                                             std::uint64_t family_budget, std::uint64_t seed) {
  ensure_same_space(n, top.ground());
  ensure_same_space(a, top.ground());
  if (!subset_leq(a, n) || !subset_leq(n, top.ground()))
    fail(Errc::chain_of_subsets,
         "requires A <= N <= M; got A = " + to_text(a) + ", N = " + to_text(n) +
             ", M = " + to_text(top.ground()));

  SubspaceCompactReport report;
  const SemiFamily fam_tau = SemiFamily::enumerate(top, family_budget);
  const MTopology sub = subspace(top, n);
  const SemiFamily fam_sub = SemiFamily::enumerate(sub, family_budget);

  std::string mode_tau, mode_sub;
  report.tau_compact = semi_compact_for_target(fam_tau, a, collection_budget, seed, 0x15,
                                               &report.covers_checked_tau, &mode_tau);
  report.subspace_compact = semi_compact_for_target(fam_sub, a, collection_budget, seed, 0x51,
                                                    &report.covers_checked_sub, &mode_sub);
  report.agree = report.tau_compact == report.subspace_compact;
  report.mode = mode_tau == mode_sub ? mode_tau : "mixed";
  return report;
}

}  // namespace mtop
