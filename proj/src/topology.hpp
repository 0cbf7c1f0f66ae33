#pragma once

#include <string>
#include <vector>

#include "mset.hpp"

namespace mtop {

struct AxiomViolation {
  std::string axiom;           // "empty-absent", "ground-absent", "union-closure", "intersection-closure"
  std::string detail;
  std::vector<MSet> witness;   // the offending pair, when one exists
};

struct ValidationReport {
  bool valid = false;
  int duplicates_removed = 0;
  std::vector<AxiomViolation> violations;
  // Records the finite-family reduction: pairwise union closure certifies
  // closure under arbitrary unions.
  std::string note;
};

// An M-topology (M, tau): ground M plus a canonical family of open M-sets.
// Construction goes through make_topology (validating) or unchecked (for
// callers that already hold a certified family, e.g. subspace).
class MTopology {
public:
  static MTopology unchecked(MSet ground, std::vector<MSet> opens_canonical);

  const MSet& ground() const { return ground_; }
  const SpacePtr& space() const { return ground_.space(); }
  const std::vector<MSet>& opens() const { return opens_; }
  // Complements of the opens, canonically ordered.
  const std::vector<MSet>& closeds() const { return closeds_; }

  bool is_open(const MSet& s) const { return family_contains(opens_, s); }
  bool is_closed_set(const MSet& s) const { return family_contains(closeds_, s); }

  friend bool operator==(const MTopology& a, const MTopology& b) {
    return a.ground_ == b.ground_ && a.opens_ == b.opens_;
  }

private:
  MTopology(MSet ground, std::vector<MSet> opens, std::vector<MSet> closeds);

  MSet ground_;
  std::vector<MSet> opens_;
  std::vector<MSet> closeds_;
};

// Checks the M-topology axioms on a candidate family. Members that are not
// sub-M-sets of ground raise malformed_family; axiom failures are reported
// with witnesses. Input duplicates are dropped and counted.
ValidationReport validate_topology(const MSet& ground, const std::vector<MSet>& family);

// Validates and constructs; throws malformed_family carrying the first
// violation when the axioms fail.
MTopology make_topology(const MSet& ground, std::vector<MSet> family);

// Union of all opens contained in a; the largest open under a.
MSet interior(const MTopology& top, const MSet& a);

// Intersection of all closed sets containing a. Cross-checked against the
// complement route cl(A) = (int(A^c))^c on every call.
MSet closure(const MTopology& top, const MSet& a);

// Subspace topology tau_N = {N /\ U : U in tau}.
MTopology subspace(const MTopology& top, const MSet& n);

struct BasisViolation {
  std::string clause;   // "point-coverage" or "refinement"
  std::string point;    // "m/x" rendering of the uncovered / unrefined point
  std::vector<MSet> witness;  // the pair (P, Q) for refinement failures
};

struct BasisReport {
  bool valid = false;
  std::vector<BasisViolation> violations;
};

// Checks the two M-basis clauses: every point m/x of ground lies in some
// basis element, and every point of an intersection P /\ Q has a basis
// element R <= P /\ Q matching the intersection's count at x.
BasisReport validate_basis(const MSet& ground, const std::vector<MSet>& basis);

// All unions of sub-collections of the basis, plus the empty M-set. The
// generated family is validated post hoc; failures raise generation_failed
// with the axiom witness.
MTopology topology_from_basis(const MSet& ground, const std::vector<MSet>& basis,
                              std::uint64_t budget = kDefaultFamilyBudget);

}  // namespace mtop
