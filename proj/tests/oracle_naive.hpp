#pragma once

// Expansion-based reference for the M-set algebra: an M-set is literally a
// bag of symbol occurrences, and every operation counts occurrences per
// symbol. Deliberately naive and independent of the count-vector code path
// it cross-checks.

#include <algorithm>
#include <string>
#include <vector>

#include "mset.hpp"

namespace oracle {

using Bag = std::vector<std::string>;

inline Bag expand(const mtop::MSet& m) {
  Bag bag;
  for (int i = 0; i < m.dim(); ++i)
    for (int k = 0; k < m.count(i); ++k) bag.push_back(m.space()->symbol(i));
  return bag;
}

inline int occurrences(const Bag& bag, const std::string& sym) {
  return static_cast<int>(std::count(bag.begin(), bag.end(), sym));
}

inline mtop::MSet from_bag(const mtop::SpacePtr& space, const Bag& bag) {
  std::vector<int> counts(static_cast<size_t>(space->size()), 0);
  for (int i = 0; i < space->size(); ++i)
    counts[static_cast<size_t>(i)] = occurrences(bag, space->symbol(i));
  return mtop::MSet(space, std::move(counts));
}

inline mtop::MSet combine(mtop::CombineOp op, const mtop::MSet& a, const mtop::MSet& b) {
  const Bag ba = expand(a), bb = expand(b);
  const auto& space = a.space();
  Bag out;
  for (int i = 0; i < space->size(); ++i) {
    const std::string& sym = space->symbol(i);
    const int na = occurrences(ba, sym), nb = occurrences(bb, sym);
    int n = 0;
    switch (op) {
      case mtop::CombineOp::Union: n = std::max(na, nb); break;
      case mtop::CombineOp::Intersect: n = std::min(na, nb); break;
      case mtop::CombineOp::Add: n = std::min(space->bound(), na + nb); break;
      case mtop::CombineOp::Subtract: n = std::max(na - nb, 0); break;
    }
    for (int k = 0; k < n; ++k) out.push_back(sym);
  }
  return from_bag(space, out);
}

inline mtop::SubRelation classify(const mtop::MSet& n, const mtop::MSet& m) {
  const Bag bn = expand(n), bm = expand(m);
  const auto& space = n.space();
  mtop::SubRelation rel;
  rel.is_sub = true;
  for (int i = 0; i < space->size(); ++i)
    if (occurrences(bn, space->symbol(i)) > occurrences(bm, space->symbol(i)))
      rel.is_sub = false;
  if (!rel.is_sub) return rel;

  rel.is_whole = true;
  rel.is_partial_whole = false;
  rel.is_full = true;
  for (int i = 0; i < space->size(); ++i) {
    const std::string& sym = space->symbol(i);
    const int cn = occurrences(bn, sym), cm = occurrences(bm, sym);
    if (cn > 0) {
      if (cn == cm) rel.is_partial_whole = true;
      else rel.is_whole = false;
    }
    if ((cn > 0) != (cm > 0)) rel.is_full = false;
  }
  return rel;
}

inline mtop::MSet complement(const mtop::MSet& n, const mtop::MSet& m) {
  Bag left = expand(m);
  for (const std::string& sym : expand(n)) {
    const auto it = std::find(left.begin(), left.end(), sym);
    if (it != left.end()) left.erase(it);
  }
  return from_bag(m.space(), left);
}

}  // namespace oracle
