#include "semi.hpp"

#include <algorithm>

namespace mtop {

namespace {

void ensure_candidate(const MTopology& top, const MSet& s, const char* op) {
  ensure_same_space(s, top.ground());
  if (!subset_leq(s, top.ground()))
    fail(Errc::not_a_subset,
         std::string(op) + " requires a sub-M-set of ground: " + to_text(s) +
             " is not contained in " + to_text(top.ground()));
}

SemiCheck semi_open_witness(const MTopology& top, const MSet& s) {
  for (const MSet& open : top.opens()) {
    if (subset_leq(open, s) && subset_leq(s, closure(top, open)))
      return {true, open};
  }
  return {false, std::nullopt};
}

SemiCheck semi_open_criterion(const MTopology& top, const MSet& s) {
  const MSet inner = interior(top, s);
  if (subset_leq(s, closure(top, inner))) return {true, inner};
  return {false, std::nullopt};
}

SemiCheck semi_closed_witness(const MTopology& top, const MSet& s) {
  for (const MSet& closed : top.closeds()) {
    if (subset_leq(interior(top, closed), s) && subset_leq(s, closed))
      return {true, closed};
  }
  return {false, std::nullopt};
}

SemiCheck semi_closed_criterion(const MTopology& top, const MSet& s) {
  const MSet outer = closure(top, s);
  if (subset_leq(interior(top, outer), s)) return {true, outer};
  return {false, std::nullopt};
}

}  // namespace

SemiCheck is_semi_open(const MTopology& top, const MSet& s, SemiAlg alg) {
  ensure_candidate(top, s, "semi-open test");
  switch (alg) {
    case SemiAlg::Witness: return semi_open_witness(top, s);
    case SemiAlg::Criterion: return semi_open_criterion(top, s);
    case SemiAlg::Both: break;
  }
  const SemiCheck via_witness = semi_open_witness(top, s);
  const SemiCheck via_criterion = semi_open_criterion(top, s);
  if (via_witness.holds != via_criterion.holds)
    fail(Errc::algorithm_divergence,
         "semi-open algorithms disagree on " + to_text(s) + ": witness says " +
             (via_witness.holds ? "yes" : "no") + ", criterion says " +
             (via_criterion.holds ? "yes" : "no"));
  return via_witness;
}

SemiCheck is_semi_closed(const MTopology& top, const MSet& s, SemiAlg alg) {
  ensure_candidate(top, s, "semi-closed test");
  switch (alg) {
    case SemiAlg::Witness: return semi_closed_witness(top, s);
    case SemiAlg::Criterion: return semi_closed_criterion(top, s);
    case SemiAlg::Both: break;
  }
  const SemiCheck via_witness = semi_closed_witness(top, s);
  const SemiCheck via_criterion = semi_closed_criterion(top, s);
  if (via_witness.holds != via_criterion.holds)
    fail(Errc::algorithm_divergence,
         "semi-closed algorithms disagree on " + to_text(s));
  const SemiCheck dual = is_semi_open(top, complement_in(s, top.ground()), SemiAlg::Both);
  if (dual.holds != via_witness.holds)
    fail(Errc::algorithm_divergence,
         "semi-closed(" + to_text(s) + ") does not match semi-open of its complement");
  return via_witness;
}

SemiFamily::SemiFamily(MTopology top, std::vector<MSet> som, std::vector<MSet> scm)
    : top_(std::move(top)), som_(std::move(som)), scm_(std::move(scm)) {}

SemiFamily SemiFamily::enumerate(const MTopology& top, std::uint64_t budget) {
  const std::vector<MSet> candidates = power_family(top.ground(), PowerKind::All, budget);

  std::vector<MSet> som;
  for (const MSet& s : candidates) {
    if (s.is_empty()) {
      som.push_back(s);
      continue;
    }
    // Pruning: a non-empty SOM-set needs a non-empty interior, since
    // S <= cl(int(S)) and cl(empty) = empty.
    const MSet inner = interior(top, s);
    if (inner.is_empty()) continue;
    if (subset_leq(s, closure(top, inner))) som.push_back(s);
  }

  // Spot-verify the criterion route against the witness search.
  const size_t stride = som.size() <= 64 ? 1 : 7;
  for (size_t i = 0; i < som.size(); i += stride) {
    if (!semi_open_witness(top, som[i]).holds)
      fail(Errc::algorithm_divergence,
           "criterion admitted " + to_text(som[i]) + " but no open witness exists");
  }

  std::vector<MSet> scm;
  scm.reserve(som.size());
  for (const MSet& s : som) scm.push_back(complement_in(s, top.ground()));
  canonicalize_family(scm);

  return SemiFamily(top, std::move(som), std::move(scm));
}

MSet semi_interior(const SemiFamily& fam, const MSet& a) {
  ensure_candidate(fam.topology(), a, "semi-interior");
  MSet acc = MSet::empty(a.space());
  for (const MSet& s : fam.som())
    if (subset_leq(s, a)) acc = mset_union(acc, s);
  return acc;
}

MSet semi_closure(const SemiFamily& fam, const MSet& a) {
  ensure_candidate(fam.topology(), a, "semi-closure");
  MSet acc = fam.topology().ground();
  for (const MSet& t : fam.scm())
    if (subset_leq(a, t)) acc = mset_intersect(acc, t);
  return acc;
}

ConditionReport condition_checklist(const SemiFamily& fam, const MSet& a) {
  const MTopology& top = fam.topology();
  ensure_candidate(top, a, "condition checklist");
  ConditionReport report;

  const MSet inner = interior(top, a);
  const MSet outer = closure(top, a);

  report.som.open = top.is_open(a);
  report.som.clopen = top.is_open(a) && top.is_closed_set(a);
  for (const MSet& o : top.opens())
    if (closure(top, o) == a) { report.som.closure_of_open = true; break; }
  report.som.interior_of_some = inner == a;
  report.som.criterion = subset_leq(a, closure(top, inner));
  for (const MSet& s : fam.som())
    if (subset_leq(s, a) && subset_leq(a, closure(top, s))) {
      report.som.sandwich = true;
      break;
    }

  report.scm.closed = top.is_closed_set(a);
  report.scm.clopen = report.som.clopen;
  report.scm.closure_of_some = outer == a;
  for (const MSet& k : top.closeds())
    if (interior(top, k) == a) { report.scm.interior_of_closed = true; break; }
  report.scm.criterion = subset_leq(interior(top, outer), a);
  for (const MSet& t : fam.scm())
    if (subset_leq(interior(top, t), a) && subset_leq(a, t)) {
      report.scm.sandwich = true;
      break;
    }

  report.som_holds = is_semi_open(top, a, SemiAlg::Both).holds;
  report.scm_holds = is_semi_closed(top, a, SemiAlg::Both).holds;
  report.sound = (!report.som.any() || report.som_holds) &&
                 (!report.scm.any() || report.scm_holds);
  return report;
}

}  // namespace mtop
