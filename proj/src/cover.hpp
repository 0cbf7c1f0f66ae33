#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semi.hpp"

namespace mtop {

inline constexpr std::uint64_t kDefaultCollectionBudget = 4096;

// An indexed family asserted to dominate target pointwise.
struct Cover {
  MSet target;
  std::vector<MSet> members;  // canonical, deduplicated
};

// Pointwise-max domination test (Def of cover).
bool family_covers(const MSet& target, const std::vector<MSet>& members);

// Validates domination and canonicalizes members.
Cover make_cover(MSet target, std::vector<MSet> members);

// True iff members dominate the ground and every member is semi-open.
bool is_semi_open_cover(const SemiFamily& fam, const std::vector<MSet>& members);

enum class SubFilter { Any, Whole, PartialWhole, Full };

const char* filter_name(SubFilter f);
SubFilter filter_from_name(const std::string& name);

// Filter classification is always against the topology's ground.
bool passes_filter(const MSet& s, const MSet& ground, SubFilter f);

// Minimum-cardinality sub-collection whose members all pass the filter and
// which still covers the target; std::nullopt when none exists. Search is
// exhaustive in increasing size over filter-passing members.
std::optional<std::vector<MSet>> find_subcover(const SemiFamily& fam, const Cover& cover,
                                               SubFilter filter,
                                               std::uint64_t budget = kDefaultCollectionBudget * 256);

enum class CompactVariant { Semi, SemiWhole, SemiPartialWhole, SemiFull };

const char* variant_name(CompactVariant v);
CompactVariant variant_from_name(const std::string& name);
SubFilter variant_filter(CompactVariant v);

struct CompactCertificate {
  std::uint64_t som_size = 0;
  std::uint64_t covers_checked = 0;
  std::string mode;  // "finite-presentation", "exhaustive", or "pointwise"
};

struct CompactnessVerdict {
  CompactVariant variant = CompactVariant::Semi;
  bool holds = false;
  // A semi-open cover with no qualifying subcover, minimal in cardinality
  // and first in canonical order among minimal ones.
  std::optional<Cover> witness;
  std::optional<CompactCertificate> certificate;
};

// Decides the four variants. Semi always holds on a finite presentation;
// the filtered variants reduce to: does some semi-open cover exist whose
// filter-passing members fail to dominate the ground? The reduction is
// exact because a qualifying subcover exists iff the filter-passing part
// of the cover already dominates.
CompactnessVerdict decide_compactness(const SemiFamily& fam, CompactVariant variant,
                                      std::uint64_t budget = kDefaultCollectionBudget);

// FIP: every non-empty finite sub-collection has non-empty intersection.
// For a finite collection the whole-family intersection decides, so this
// runs the running-intersection with early exit.
bool has_fip(const std::vector<MSet>& family);

struct FipTheoremReport {
  std::string theorem;            // "T4.11" or "T4.12"
  bool semi_compact = false;      // left side of the biconditional
  bool right_holds = false;       // the FIP sweep
  bool agree = false;
  std::uint64_t collections_checked = 0;
  std::string mode;               // "exhaustive" or "sampled"
  std::vector<MSet> violating_collection;  // a FIP family with empty total/scl intersection
};

// T4.11: semi compact iff every FIP family of SCM-sets has non-empty total
// intersection. Both sides evaluated independently on the finite space.
FipTheoremReport check_fip_scm(const SemiFamily& fam,
                               std::uint64_t collection_budget = kDefaultCollectionBudget,
                               std::uint64_t seed = 0);

// T4.12: semi compact iff every FIP family of M-sets has non-empty
// intersection of semi closures. Collections range over P(ground).
FipTheoremReport check_fip_scl(const SemiFamily& fam,
                               std::uint64_t collection_budget = kDefaultCollectionBudget,
                               std::uint64_t family_budget = kDefaultFamilyBudget,
                               std::uint64_t seed = 0);

struct SubspaceCompactReport {
  bool tau_compact = false;
  bool subspace_compact = false;
  bool agree = false;
  std::uint64_t covers_checked_tau = 0;
  std::uint64_t covers_checked_sub = 0;
  std::string mode;
};

// T4.15: for A <= N <= M, A is tau-semi compact iff A is tau_N-semi compact.
// Each side sweeps covering subfamilies of the respective SOM family and
// exhibits a finite subcover for every one.
SubspaceCompactReport subspace_compact_equiv(const MTopology& top, const MSet& n, const MSet& a,
                                             std::uint64_t collection_budget = kDefaultCollectionBudget,
                                             std::uint64_t family_budget = kDefaultFamilyBudget,
                                             std::uint64_t seed = 0);

}  // namespace mtop
