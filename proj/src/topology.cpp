#include "topology.hpp"

#include <algorithm>

namespace mtop {

MTopology::MTopology(MSet ground, std::vector<MSet> opens, std::vector<MSet> closeds)
    : ground_(std::move(ground)), opens_(std::move(opens)), closeds_(std::move(closeds)) {}

MTopology MTopology::unchecked(MSet ground, std::vector<MSet> opens_canonical) {
  std::vector<MSet> closeds;
  closeds.reserve(opens_canonical.size());
  for (const MSet& u : opens_canonical)
    closeds.push_back(mset_subtract(ground, u));
  canonicalize_family(closeds);
  return MTopology(std::move(ground), std::move(opens_canonical), std::move(closeds));
}

ValidationReport validate_topology(const MSet& ground, const std::vector<MSet>& family) {
  ValidationReport report;

  std::vector<MSet> members = family;
  for (const MSet& s : members) {
    ensure_same_space(s, ground);
    if (!subset_leq(s, ground))
      fail(Errc::malformed_family,
           "family member " + to_text(s) + " is not a sub-M-set of ground " +
               to_text(ground));
  }
  report.duplicates_removed = canonicalize_family(members);

  const MSet empty = MSet::empty(ground.space());
  if (!family_contains(members, empty))
    report.violations.push_back({"empty-absent", "empty M-set absent", {}});
  if (!family_contains(members, ground))
    report.violations.push_back({"ground-absent", "ground M-set absent", {}});

  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      const MSet u = mset_union(members[i], members[j]);
      if (!family_contains(members, u)) {
        report.violations.push_back(
            {"union-closure",
             "union " + to_text(u) + " of " + to_text(members[i]) + " and " +
                 to_text(members[j]) + " is missing",
             {members[i], members[j]}});
      }
      const MSet v = mset_intersect(members[i], members[j]);
      if (!family_contains(members, v)) {
        report.violations.push_back(
            {"intersection-closure",
             "intersection " + to_text(v) + " of " + to_text(members[i]) + " and " +
                 to_text(members[j]) + " is missing",
             {members[i], members[j]}});
      }
    }
  }

  report.valid = report.violations.empty();
  report.note =
      "pairwise union closure certifies arbitrary-union closure: the family is "
      "finite and M-set union is associative, commutative, and idempotent";
  return report;
}

MTopology make_topology(const MSet& ground, std::vector<MSet> family) {
  const ValidationReport report = validate_topology(ground, family);
  if (!report.valid)
    fail(Errc::malformed_family,
         "family is not an M-topology: " + report.violations.front().detail);
  canonicalize_family(family);
  return MTopology::unchecked(ground, std::move(family));
}

namespace {

void ensure_sub_of_ground(const MTopology& top, const MSet& a, const char* op) {
  ensure_same_space(a, top.ground());
  if (!subset_leq(a, top.ground()))
    fail(Errc::not_a_subset,
         std::string(op) + " requires a sub-M-set of ground: " + to_text(a) +
             " is not contained in " + to_text(top.ground()));
}

}  // namespace

MSet interior(const MTopology& top, const MSet& a) {
  ensure_sub_of_ground(top, a, "interior");
  MSet acc = MSet::empty(top.space());
  for (const MSet& open : top.opens())
    if (subset_leq(open, a)) acc = mset_union(acc, open);
  return acc;
}

MSet closure(const MTopology& top, const MSet& a) {
  ensure_sub_of_ground(top, a, "closure");
  MSet acc = top.ground();
  for (const MSet& closed : top.closeds())
    if (subset_leq(a, closed)) acc = mset_intersect(acc, closed);

  // Duality cross-check: cl(A) = (int(A^c))^c.
  const MSet dual = complement_in(
      interior(top, complement_in(a, top.ground())), top.ground());
  if (!(acc == dual))
    fail(Errc::algorithm_divergence,
         "closure duality mismatch on " + to_text(a) + ": direct " + to_text(acc) +
             " vs complement route " + to_text(dual));
  return acc;
}

MTopology subspace(const MTopology& top, const MSet& n) {
  ensure_sub_of_ground(top, n, "subspace");
  std::vector<MSet> family;
  family.reserve(top.opens().size());
  for (const MSet& u : top.opens())
    family.push_back(mset_intersect(n, u));
  canonicalize_family(family);
  return MTopology::unchecked(n, std::move(family));
}

namespace {

std::string point_text(const MSet& m, int idx, int count) {
  return std::to_string(count) + "/" + m.space()->symbol(idx);
}

}  // namespace

BasisReport validate_basis(const MSet& ground, const std::vector<MSet>& basis) {
  BasisReport report;
  std::vector<MSet> members = basis;
  for (const MSet& b : members) {
    ensure_same_space(b, ground);
    if (!subset_leq(b, ground))
      fail(Errc::malformed_family,
           "basis member " + to_text(b) + " is not a sub-M-set of ground " +
               to_text(ground));
  }
  canonicalize_family(members);

  // Clause 1: every point m/x of ground (m = C_M(x)) lies in a basis element.
  for (const int x : ground.support()) {
    const int need = ground.count(x);
    bool covered = false;
    for (const MSet& b : members)
      if (b.count(x) >= need) { covered = true; break; }
    if (!covered)
      report.violations.push_back(
          {"point-coverage", point_text(ground, x, need), {}});
  }

  // Clause 2: each point of P /\ Q has a basis element R <= P /\ Q whose
  // count at x equals the intersection's. Matching the full intersection
  // count covers every smaller multiplicity of x at once.
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i; j < members.size(); ++j) {
      const MSet pq = mset_intersect(members[i], members[j]);
      for (const int x : pq.support()) {
        bool refined = false;
        for (const MSet& r : members) {
          if (subset_leq(r, pq) && r.count(x) == pq.count(x)) {
            refined = true;
            break;
          }
        }
        if (!refined)
          report.violations.push_back({"refinement",
                                       point_text(pq, x, pq.count(x)),
                                       {members[i], members[j]}});
      }
    }
  }

  report.valid = report.violations.empty();
  return report;
}

MTopology topology_from_basis(const MSet& ground, const std::vector<MSet>& basis,
                              std::uint64_t budget) {
  // All unions of sub-collections = pairwise-union closure of the basis,
  // plus the empty union.
  std::vector<MSet> family = basis;
  family.push_back(MSet::empty(ground.space()));
  for (const MSet& b : family) {
    ensure_same_space(b, ground);
    if (!subset_leq(b, ground))
      fail(Errc::malformed_family,
           "basis member " + to_text(b) + " is not a sub-M-set of ground " +
               to_text(ground));
  }
  canonicalize_family(family);

  bool grew = true;
  while (grew) {
    grew = false;
    const size_t n = family.size();
    std::vector<MSet> fresh;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        MSet u = mset_union(family[i], family[j]);
        if (!family_contains(family, u) && !family_contains(fresh, u)) {
          fresh.push_back(std::move(u));
          canonicalize_family(fresh);
        }
      }
    }
    if (!fresh.empty()) {
      if (family.size() + fresh.size() > budget)
        fail(Errc::budget_exceeded,
             "basis-generated family exceeds budget " + std::to_string(budget));
      family.insert(family.end(), fresh.begin(), fresh.end());
      canonicalize_family(family);
      grew = true;
    }
  }

  const ValidationReport check = validate_topology(ground, family);
  if (!check.valid)
    fail(Errc::generation_failed,
         "basis does not generate an M-topology: " + check.violations.front().detail);
  return MTopology::unchecked(ground, std::move(family));
}

}  // namespace mtop
