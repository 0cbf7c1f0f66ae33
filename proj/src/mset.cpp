#include "mset.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace mtop {

MSpace::MSpace(std::vector<std::string> symbols, int bound)
    : symbols_(std::move(symbols)), bound_(bound) {
  if (symbols_.empty())
    fail(Errc::invalid_argument, "domain must be non-empty");
  if (bound_ < 1)
    fail(Errc::invalid_argument, "multiplicity bound w must be >= 1");
  std::unordered_set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (s.empty())
      fail(Errc::invalid_argument, "domain symbols must be non-empty strings");
    if (!seen.insert(s).second)
      fail(Errc::invalid_argument, "duplicate domain symbol '" + s + "'");
  }
}

std::optional<int> MSpace::index_of(std::string_view sym) const {
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == sym) return static_cast<int>(i);
  return std::nullopt;
}

SpacePtr make_space(std::vector<std::string> symbols, int bound) {
  return std::make_shared<const MSpace>(std::move(symbols), bound);
}

MSet::MSet(SpacePtr space, std::vector<int> counts)
    : space_(std::move(space)), counts_(std::move(counts)) {
  if (!space_) fail(Errc::invalid_argument, "M-set requires a space");
  if (static_cast<int>(counts_.size()) != space_->size())
    fail(Errc::invalid_argument, "count vector does not match domain size");
  for (size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < 0 || counts_[i] > space_->bound())
      fail(Errc::invalid_argument,
           "count " + std::to_string(counts_[i]) + " for '" +
               space_->symbol(static_cast<int>(i)) + "' outside [0, " +
               std::to_string(space_->bound()) + "]");
  }
}

MSet MSet::empty(SpacePtr space) {
  if (!space) fail(Errc::invalid_argument, "M-set requires a space");
  std::vector<int> zeros(static_cast<size_t>(space->size()), 0);
  return MSet(std::move(space), std::move(zeros));
}

bool MSet::is_empty() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](int c) { return c == 0; });
}

std::vector<int> MSet::support() const {
  std::vector<int> idx;
  for (int i = 0; i < dim(); ++i)
    if (counts_[static_cast<size_t>(i)] > 0) idx.push_back(i);
  return idx;
}

std::uint64_t MSet::total_count() const {
  std::uint64_t t = 0;
  for (int c : counts_) t += static_cast<std::uint64_t>(c);
  return t;
}

void ensure_same_space(const MSet& a, const MSet& b) {
  if (!MSet::same_space(a, b))
    fail(Errc::space_mismatch, "operands belong to different M-set spaces");
}

MSet combine(CombineOp op, const MSet& a, const MSet& b) {
  ensure_same_space(a, b);
  const int w = a.space()->bound();
  std::vector<int> out(a.counts().size());
  for (size_t i = 0; i < out.size(); ++i) {
    const int x = a.counts()[i], y = b.counts()[i];
    switch (op) {
      case CombineOp::Union: out[i] = std::max(x, y); break;
      case CombineOp::Intersect: out[i] = std::min(x, y); break;
      case CombineOp::Add: out[i] = std::min(w, x + y); break;
      case CombineOp::Subtract: out[i] = std::max(x - y, 0); break;
    }
  }
  return MSet(a.space(), std::move(out));
}

MSet mset_union(const MSet& a, const MSet& b) { return combine(CombineOp::Union, a, b); }
MSet mset_intersect(const MSet& a, const MSet& b) { return combine(CombineOp::Intersect, a, b); }
MSet mset_add(const MSet& a, const MSet& b) { return combine(CombineOp::Add, a, b); }
MSet mset_subtract(const MSet& a, const MSet& b) { return combine(CombineOp::Subtract, a, b); }

bool subset_leq(const MSet& n, const MSet& m) {
  ensure_same_space(n, m);
  for (size_t i = 0; i < n.counts().size(); ++i)
    if (n.counts()[i] > m.counts()[i]) return false;
  return true;
}

SubRelation classify_sub(const MSet& n, const MSet& m) {
  ensure_same_space(n, m);
  SubRelation rel;
  rel.is_sub = subset_leq(n, m);
  if (!rel.is_sub) return rel;

  // Quantifiers "for every/some x in N" range over support(N); the empty
  // support makes whole vacuously true and partial-whole false.
  bool all_match = true, some_match = false, supports_equal = true;
  for (int i = 0; i < n.dim(); ++i) {
    const int cn = n.count(i), cm = m.count(i);
    if (cn > 0) {
      if (cn == cm) some_match = true;
      else all_match = false;
    }
    if ((cn > 0) != (cm > 0)) supports_equal = false;
  }
  rel.is_whole = all_match;
  rel.is_partial_whole = some_match;
  rel.is_full = supports_equal;
  return rel;
}

MSet complement_in(const MSet& n, const MSet& m) {
  if (!subset_leq(n, m))
    fail(Errc::not_a_subset,
         "complement requires a sub-M-set: " + to_text(n) + " is not contained in " +
             to_text(m));
  std::vector<int> out(n.counts().size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = m.counts()[i] - n.counts()[i];
  return MSet(m.space(), std::move(out));
}

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::uint64_t power_cardinality(const MSet& m, PowerKind kind) {
  std::uint64_t n = 1;
  for (int i = 0; i < m.dim(); ++i) {
    const std::uint64_t c = static_cast<std::uint64_t>(m.count(i));
    if (c == 0) continue;
    switch (kind) {
      case PowerKind::All: n = sat_mul(n, c + 1); break;
      case PowerKind::Whole: n = sat_mul(n, 2); break;
      case PowerKind::Full: n = sat_mul(n, c); break;
    }
  }
  return n;
}

std::vector<MSet> power_family(const MSet& m, PowerKind kind, std::uint64_t budget) {
  const std::uint64_t total = power_cardinality(m, kind);
  if (total > budget)
    fail(Errc::budget_exceeded,
         "power family of " + to_text(m) + " has " + std::to_string(total) +
             " members, over budget " + std::to_string(budget));

  const std::vector<int> sup = m.support();
  std::vector<MSet> out;
  out.reserve(static_cast<size_t>(total));

  // Odometer over per-element ranges; the last support index varies fastest,
  // which yields canonical (lexicographic) order directly.
  std::vector<int> cur(sup.size(), 0);
  const auto lo = [&](size_t) {
    return kind == PowerKind::Full ? 1 : 0;
  };
  const auto hi = [&](size_t k) {
    return kind == PowerKind::Whole ? 1 : m.count(sup[k]);
  };
  for (size_t k = 0; k < sup.size(); ++k) cur[k] = lo(k);

  while (true) {
    std::vector<int> counts(static_cast<size_t>(m.dim()), 0);
    for (size_t k = 0; k < sup.size(); ++k) {
      const int c = kind == PowerKind::Whole ? (cur[k] ? m.count(sup[k]) : 0) : cur[k];
      counts[static_cast<size_t>(sup[k])] = c;
    }
    out.emplace_back(m.space(), std::move(counts));
    if (sup.empty()) break;

    size_t k = sup.size();
    while (k > 0) {
      --k;
      if (cur[k] < hi(k)) {
        ++cur[k];
        for (size_t j = k + 1; j < sup.size(); ++j) cur[j] = lo(j);
        break;
      }
      if (k == 0) return out;
    }
  }
  return out;
}

bool lex_less(const MSet& a, const MSet& b) {
  return std::lexicographical_compare(a.counts().begin(), a.counts().end(),
                                      b.counts().begin(), b.counts().end());
}

int canonicalize_family(std::vector<MSet>& family) {
  std::sort(family.begin(), family.end(),
            [](const MSet& a, const MSet& b) { return lex_less(a, b); });
  const auto last = std::unique(family.begin(), family.end());
  const int dropped = static_cast<int>(std::distance(last, family.end()));
  family.erase(last, family.end());
  return dropped;
}

bool family_contains(const std::vector<MSet>& family, const MSet& s) {
  const auto it = std::lower_bound(
      family.begin(), family.end(), s,
      [](const MSet& a, const MSet& b) { return lex_less(a, b); });
  return it != family.end() && *it == s;
}

MSet fold_union(const SpacePtr& space, const std::vector<MSet>& members) {
  MSet acc = MSet::empty(space);
  for (const MSet& m : members) acc = mset_union(acc, m);
  return acc;
}

MSet fold_intersect(const std::vector<MSet>& members) {
  if (members.empty())
    fail(Errc::invalid_argument, "intersection of an empty collection");
  MSet acc = members.front();
  for (size_t i = 1; i < members.size(); ++i)
    acc = mset_intersect(acc, members[i]);
  return acc;
}

std::string to_text(const MSet& m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < m.dim(); ++i) {
    if (m.count(i) == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += std::to_string(m.count(i));
    out += '/';
    out += m.space()->symbol(i);
  }
  out += '}';
  return out;
}

namespace {

struct TextCursor {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::parse, "M-set literal, position " + std::to_string(pos) + ": " + what);
  }
};

}  // namespace

MSet parse_mset(const SpacePtr& space, std::string_view text) {
  TextCursor cur{text};
  if (cur.eof() || cur.peek() != '{') cur.error("expected '{'");
  ++cur.pos;

  std::vector<int> counts(static_cast<size_t>(space->size()), 0);
  std::vector<bool> seen(counts.size(), false);

  if (!cur.eof() && cur.peek() == '}') {
    ++cur.pos;
  } else {
    while (true) {
      if (cur.eof()) cur.error("unterminated literal");
      size_t digits = cur.pos;
      while (digits < cur.text.size() &&
             std::isdigit(static_cast<unsigned char>(cur.text[digits])))
        ++digits;
      if (digits == cur.pos) cur.error("expected a count");
      int count = 0;
      try {
        count = std::stoi(std::string(cur.text.substr(cur.pos, digits - cur.pos)));
      } catch (const std::exception&) {
        cur.error("count out of range");
      }
      cur.pos = digits;
      if (cur.eof() || cur.peek() != '/') cur.error("expected '/' after count");
      ++cur.pos;
      cur.skip_ws();
      size_t sym_end = cur.pos;
      while (sym_end < cur.text.size()) {
        const char c = cur.text[sym_end];
        if (c == ',' || c == '}' || std::isspace(static_cast<unsigned char>(c))) break;
        ++sym_end;
      }
      if (sym_end == cur.pos) cur.error("expected a symbol after '/'");
      const std::string_view sym = cur.text.substr(cur.pos, sym_end - cur.pos);
      cur.pos = sym_end;

      const auto idx = space->index_of(sym);
      if (!idx)
        cur.error("symbol '" + std::string(sym) + "' is not in the domain");
      if (seen[static_cast<size_t>(*idx)])
        cur.error("duplicate entry for symbol '" + std::string(sym) + "'");
      if (count > space->bound())
        cur.error("count " + std::to_string(count) + " exceeds bound w = " +
                  std::to_string(space->bound()));
      seen[static_cast<size_t>(*idx)] = true;
      counts[static_cast<size_t>(*idx)] = count;

      if (cur.eof()) cur.error("unterminated literal");
      const char c = cur.peek();
      if (c == ',') {
        ++cur.pos;
        continue;
      }
      if (c == '}') {
        ++cur.pos;
        break;
      }
      cur.error("expected ',' or '}'");
    }
  }
  if (!cur.eof()) cur.error("trailing characters after '}'");
  return MSet(space, std::move(counts));
}

}  // namespace mtop
