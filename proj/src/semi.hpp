#pragma once

#include <optional>
#include <vector>

#include "topology.hpp"

namespace mtop {

enum class SemiAlg { Witness, Criterion, Both };

struct SemiCheck {
  bool holds = false;
  // For semi-open: the open O with O <= S <= cl(O); for semi-closed: the
  // closed P with int(P) <= S <= P. Present only when holds.
  std::optional<MSet> witness;
};

// Semi-open test. Witness mode scans tau in canonical order; criterion mode
// evaluates S <= cl(int(S)) and reports int(S) as the canonical witness.
// Both mode runs the two and raises algorithm_divergence if they disagree.
SemiCheck is_semi_open(const MTopology& top, const MSet& s, SemiAlg alg = SemiAlg::Criterion);

// Dual test via int(cl(S)) <= S. Both mode additionally cross-checks
// against is_semi_open on the complement.
SemiCheck is_semi_closed(const MTopology& top, const MSet& s, SemiAlg alg = SemiAlg::Criterion);

// The full SOM/SCM families of a topology. scm is exactly the family of
// complements of som members.
class SemiFamily {
public:
  static SemiFamily enumerate(const MTopology& top,
                              std::uint64_t budget = kDefaultFamilyBudget);

  const MTopology& topology() const { return top_; }
  const std::vector<MSet>& som() const { return som_; }
  const std::vector<MSet>& scm() const { return scm_; }
  bool is_som(const MSet& s) const { return family_contains(som_, s); }
  bool is_scm(const MSet& s) const { return family_contains(scm_, s); }

private:
  SemiFamily(MTopology top, std::vector<MSet> som, std::vector<MSet> scm);

  MTopology top_;
  std::vector<MSet> som_;
  std::vector<MSet> scm_;
};

// Union of all SOM subsets of a / intersection of all SCM supersets of a.
MSet semi_interior(const SemiFamily& fam, const MSet& a);
MSet semi_closure(const SemiFamily& fam, const MSet& a);

struct SomConditions {
  bool open = false;
  bool clopen = false;
  bool closure_of_open = false;   // A = cl(O) for some open O
  bool interior_of_some = false;  // A = int(B) for some B, i.e. int(A) = A
  bool criterion = false;         // A <= cl(int(A))
  bool sandwich = false;          // S <= A <= cl(S) for some SOM S
  bool any() const {
    return open || clopen || closure_of_open || interior_of_some || criterion || sandwich;
  }
};

struct ScmConditions {
  bool closed = false;
  bool clopen = false;
  bool closure_of_some = false;    // A = cl(B) for some B, i.e. cl(A) = A
  bool interior_of_closed = false; // A = int(K) for some closed K
  bool criterion = false;          // int(cl(A)) <= A
  bool sandwich = false;           // int(T) <= A <= T for some SCM T
  bool any() const {
    return closed || clopen || closure_of_some || interior_of_closed || criterion || sandwich;
  }
};

struct ConditionReport {
  SomConditions som;
  bool som_holds = false;  // is_semi_open, cross-checked with Both
  ScmConditions scm;
  bool scm_holds = false;
  // Soundness of the condition lists on this input: any item implies the
  // matching semi property.
  bool sound = false;
};

// Evaluates each sufficient condition independently and checks the list's
// soundness against the semi-open/semi-closed predicates.
ConditionReport condition_checklist(const SemiFamily& fam, const MSet& a);

}  // namespace mtop
