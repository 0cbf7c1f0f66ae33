#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace mtop {

inline constexpr std::uint64_t kDefaultFamilyBudget = 1'000'000;

// The universe [X]^w: a fixed, duplicate-free, ordered domain X plus a
// multiplicity bound w >= 1. Domain order is the canonical element order
// used everywhere (serialization, family ordering, witness selection).
class MSpace {
public:
  MSpace(std::vector<std::string> symbols, int bound);

  int size() const { return static_cast<int>(symbols_.size()); }
  int bound() const { return bound_; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& symbol(int i) const { return symbols_[static_cast<size_t>(i)]; }
  std::optional<int> index_of(std::string_view sym) const;

  friend bool operator==(const MSpace& a, const MSpace& b) {
    return a.bound_ == b.bound_ && a.symbols_ == b.symbols_;
  }

private:
  std::vector<std::string> symbols_;
  int bound_;
};

using SpacePtr = std::shared_ptr<const MSpace>;

SpacePtr make_space(std::vector<std::string> symbols, int bound);

// An M-set: a total count function X -> {0..w}. Immutable value type;
// equality is pointwise count equality over the same space.
class MSet {
public:
  MSet(SpacePtr space, std::vector<int> counts);

  static MSet empty(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const std::vector<int>& counts() const { return counts_; }
  int count(int i) const { return counts_[static_cast<size_t>(i)]; }
  int dim() const { return static_cast<int>(counts_.size()); }

  bool is_empty() const;
  // Support (root set): indices with positive count, in domain order.
  std::vector<int> support() const;
  std::uint64_t total_count() const;

  friend bool operator==(const MSet& a, const MSet& b) {
    return a.counts_ == b.counts_ && same_space(a, b);
  }
  friend bool operator!=(const MSet& a, const MSet& b) { return !(a == b); }

  static bool same_space(const MSet& a, const MSet& b) {
    return a.space_ == b.space_ || *a.space_ == *b.space_;
  }

private:
  SpacePtr space_;
  std::vector<int> counts_;
};

// Throws space_mismatch unless a and b live in the same [X]^w.
void ensure_same_space(const MSet& a, const MSet& b);

enum class CombineOp { Union, Intersect, Add, Subtract };

// Pointwise max / min / saturating-add (capped at w) / truncated subtraction.
MSet combine(CombineOp op, const MSet& a, const MSet& b);
MSet mset_union(const MSet& a, const MSet& b);
MSet mset_intersect(const MSet& a, const MSet& b);
MSet mset_add(const MSet& a, const MSet& b);
MSet mset_subtract(const MSet& a, const MSet& b);

// Pointwise <= on every domain element.
bool subset_leq(const MSet& n, const MSet& m);

struct SubRelation {
  bool is_sub = false;            // C_N(x) <= C_M(x) everywhere
  bool is_whole = false;          // sub and C_N(x) = C_M(x) on all of support(N)
  bool is_partial_whole = false;  // sub and C_N(x) = C_M(x) somewhere on support(N)
  bool is_full = false;           // sub and support(N) = support(M)
};

SubRelation classify_sub(const MSet& n, const MSet& m);

// M-complement within m: pointwise C_m - C_n. Requires n subset of m.
MSet complement_in(const MSet& n, const MSet& m);

enum class PowerKind { All, Whole, Full };

// |P(M)|, |PW(M)|, |PF(M)| without materializing; saturates at UINT64_MAX.
std::uint64_t power_cardinality(const MSet& m, PowerKind kind);

// Materialized power family in canonical order. Throws budget_exceeded
// (message carries the computed cardinality) when it would exceed budget.
std::vector<MSet> power_family(const MSet& m, PowerKind kind,
                               std::uint64_t budget = kDefaultFamilyBudget);

// Canonical order: lexicographic on the count vector in domain order.
bool lex_less(const MSet& a, const MSet& b);

// Sorts into canonical order and removes duplicates; returns how many
// duplicates were dropped.
int canonicalize_family(std::vector<MSet>& family);

// Binary search in a canonical family.
bool family_contains(const std::vector<MSet>& family, const MSet& s);

// Pointwise max / min folds. Union of an empty list is the empty M-set;
// intersecting an empty list is an error (no top element is implied).
MSet fold_union(const SpacePtr& space, const std::vector<MSet>& members);
MSet fold_intersect(const std::vector<MSet>& members);

// Canonical text form: "{5/a, 2/b, 3/c}", zero counts omitted, domain order.
// The empty M-set renders as "{}".
std::string to_text(const MSet& m);

// Parses the canonical text form (whitespace-tolerant). Unknown symbols,
// duplicate entries, and counts outside [0, w] are parse errors.
MSet parse_mset(const SpacePtr& space, std::string_view text);

}  // namespace mtop
