#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mset.hpp"
#include "oracle_naive.hpp"

using namespace mtop;

namespace {

SpacePtr abc5() { return make_space({"a", "b", "c"}, 5); }

MSet lit(const SpacePtr& space, const std::string& text) {
  return parse_mset(space, text);
}

struct RandomSets {
  std::mt19937_64 rng{0xc0ffee};

  SpacePtr random_space() {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int w = 1 + static_cast<int>(rng() % 6);
    std::vector<std::string> syms;
    for (int i = 0; i < n; ++i) syms.emplace_back(1, static_cast<char>('a' + i));
    return make_space(std::move(syms), w);
  }
  MSet random_mset(const SpacePtr& space) {
    std::vector<int> counts(static_cast<size_t>(space->size()));
    for (auto& c : counts) c = static_cast<int>(rng() % (space->bound() + 1));
    return MSet(space, std::move(counts));
  }
  MSet random_subset(const MSet& m) {
    std::vector<int> counts(static_cast<size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i)
      counts[static_cast<size_t>(i)] = static_cast<int>(rng() % (m.count(i) + 1));
    return MSet(m.space(), std::move(counts));
  }
};

}  // namespace

TEST_CASE("space invariants") {
  CHECK_THROWS_AS(make_space({}, 3), MtopError);
  CHECK_THROWS_AS(make_space({"a", "a"}, 3), MtopError);
  CHECK_THROWS_AS(make_space({"a"}, 0), MtopError);
  const auto space = abc5();
  CHECK(space->index_of("b") == 1);
  CHECK_FALSE(space->index_of("z"));
}

TEST_CASE("combine matches the pointwise definitions") {
  const auto space = abc5();
  CHECK(mset_union(lit(space, "{3/a, 5/b}"), lit(space, "{1/a, 2/c}")) ==
        lit(space, "{3/a, 5/b, 2/c}"));
  CHECK(mset_add(lit(space, "{3/a}"), lit(space, "{4/a}")) == lit(space, "{5/a}"));
  CHECK(mset_subtract(lit(space, "{5/a, 2/b, 3/c}"), lit(space, "{5/a, 2/b}")) ==
        lit(space, "{3/c}"));

  const auto other = make_space({"a", "b"}, 5);
  CHECK_THROWS_AS(mset_union(lit(space, "{1/a}"), lit(other, "{1/a}")), MtopError);
  try {
    mset_union(lit(space, "{1/a}"), lit(other, "{1/a}"));
  } catch (const MtopError& e) {
    CHECK(e.code() == Errc::space_mismatch);
  }
}

TEST_CASE("classify_sub on the worked examples") {
  const auto space = abc5();
  const MSet m = lit(space, "{5/a, 2/b, 3/c}");

  const SubRelation r1 = classify_sub(lit(space, "{5/a, 2/b}"), m);
  CHECK(r1.is_sub);
  CHECK(r1.is_whole);
  CHECK(r1.is_partial_whole);
  CHECK_FALSE(r1.is_full);

  const SubRelation r2 = classify_sub(MSet::empty(space), m);
  CHECK(r2.is_sub);
  CHECK(r2.is_whole);
  CHECK_FALSE(r2.is_partial_whole);
  CHECK_FALSE(r2.is_full);
  CHECK(classify_sub(MSet::empty(space), MSet::empty(space)).is_full);

  const SubRelation r3 = classify_sub(lit(space, "{1/a, 2/b, 3/c}"), m);
  CHECK(r3.is_sub);
  CHECK_FALSE(r3.is_whole);
  CHECK(r3.is_partial_whole);
  CHECK(r3.is_full);

  CHECK_FALSE(classify_sub(lit(space, "{5/a, 3/c}"), lit(space, "{4/a}")).is_sub);
}

TEST_CASE("complement_in identities") {
  const auto space = abc5();
  const MSet m = lit(space, "{5/a, 2/b, 3/c}");
  CHECK(complement_in(lit(space, "{1/a, 2/b}"), m) == lit(space, "{4/a, 3/c}"));
  CHECK(complement_in(m, m) == MSet::empty(space));
  CHECK(complement_in(MSet::empty(space), m) == m);
  CHECK_THROWS_AS(complement_in(m, lit(space, "{1/a}")), MtopError);
}

TEST_CASE("power families") {
  const auto space2 = make_space({"a", "b"}, 2);
  const auto all = power_family(parse_mset(space2, "{1/a, 1/b}"), PowerKind::All);
  REQUIRE(all.size() == 4);
  CHECK(all[0] == MSet::empty(space2));
  CHECK(all[3] == parse_mset(space2, "{1/a, 1/b}"));

  const auto space = abc5();
  const MSet m = lit(space, "{5/a, 2/b, 3/c}");
  const auto whole = power_family(m, PowerKind::Whole);
  CHECK(whole.size() == 8);
  CHECK(family_contains(whole, lit(space, "{5/a, 3/c}")));

  const auto full = power_family(lit(space, "{2/a, 1/b}"), PowerKind::Full);
  REQUIRE(full.size() == 2);
  CHECK(full[0] == lit(space, "{1/a, 1/b}"));
  CHECK(full[1] == lit(space, "{2/a, 1/b}"));

  CHECK(power_cardinality(m, PowerKind::All) == 6 * 3 * 4);
  const auto everything = power_family(m, PowerKind::All);
  CHECK(everything.size() == 72);
  for (const MSet& s : whole) CHECK(family_contains(everything, s));
  for (const MSet& s : power_family(m, PowerKind::Full))
    CHECK(family_contains(everything, s));

  try {
    power_family(m, PowerKind::All, 10);
    FAIL("budget error expected");
  } catch (const MtopError& e) {
    CHECK(e.code() == Errc::budget_exceeded);
    CHECK(std::string(e.what()).find("72") != std::string::npos);
  }
}

TEST_CASE("lattice laws and De Morgan on random data") {
  RandomSets gen;
  for (int t = 0; t < 300; ++t) {
    const auto space = gen.random_space();
    const MSet m = gen.random_mset(space);
    const MSet a = gen.random_subset(m), b = gen.random_subset(m), c = gen.random_subset(m);

    CHECK(mset_union(a, b) == mset_union(b, a));
    CHECK(mset_intersect(a, b) == mset_intersect(b, a));
    CHECK(mset_union(a, mset_union(b, c)) == mset_union(mset_union(a, b), c));
    CHECK(mset_intersect(a, mset_intersect(b, c)) == mset_intersect(mset_intersect(a, b), c));
    CHECK(mset_union(a, a) == a);
    CHECK(mset_intersect(a, a) == a);
    CHECK(subset_leq(mset_intersect(a, b), a));
    CHECK(subset_leq(a, mset_union(a, b)));

    CHECK(complement_in(mset_union(a, b), m) ==
          mset_intersect(complement_in(a, m), complement_in(b, m)));
    CHECK(complement_in(mset_intersect(a, b), m) ==
          mset_union(complement_in(a, m), complement_in(b, m)));

    CHECK(mset_subtract(m, mset_subtract(m, a)) == a);
    CHECK(complement_in(complement_in(a, m), m) == a);
  }
}

TEST_CASE("algebra agrees with the expansion oracle") {
  RandomSets gen;
  for (int t = 0; t < 2000; ++t) {
    const auto space = gen.random_space();
    const MSet a = gen.random_mset(space);
    const MSet b = gen.random_mset(space);
    for (const CombineOp op : {CombineOp::Union, CombineOp::Intersect,
                               CombineOp::Add, CombineOp::Subtract})
      CHECK(combine(op, a, b) == oracle::combine(op, a, b));

    const SubRelation got = classify_sub(a, b);
    const SubRelation want = oracle::classify(a, b);
    CHECK(got.is_sub == want.is_sub);
    CHECK(got.is_whole == want.is_whole);
    CHECK(got.is_partial_whole == want.is_partial_whole);
    CHECK(got.is_full == want.is_full);

    const MSet sub = gen.random_subset(b);
    CHECK(complement_in(sub, b) == oracle::complement(sub, b));
  }
}

TEST_CASE("canonical text form") {
  const auto space = abc5();
  const MSet m = lit(space, "{5/a, 2/b, 3/c}");
  CHECK(to_text(m) == "{5/a, 2/b, 3/c}");
  CHECK(to_text(MSet::empty(space)) == "{}");
  CHECK(parse_mset(space, " { 2/b , 1/a } ") == lit(space, "{1/a, 2/b}"));
  CHECK(parse_mset(space, "{0/a, 2/b}") == lit(space, "{2/b}"));
  CHECK(parse_mset(space, "{}") == MSet::empty(space));

  RandomSets gen;
  for (int t = 0; t < 200; ++t) {
    const auto s = gen.random_space();
    const MSet x = gen.random_mset(s);
    CHECK(parse_mset(s, to_text(x)) == x);
  }

  for (const char* bad : {"", "{", "{1/z}", "{1/a, 2/a}", "{9/a}", "{a}", "{1/a} x"}) {
    try {
      parse_mset(space, bad);
      FAIL_CHECK("expected parse error for: " << bad);
    } catch (const MtopError& e) {
      CHECK(e.code() == Errc::parse);
    }
  }
}

TEST_CASE("canonical family order") {
  const auto space = abc5();
  std::vector<MSet> family{parse_mset(space, "{5/a, 2/b}"), MSet::empty(space),
                           parse_mset(space, "{3/c}"), MSet::empty(space)};
  const int dropped = canonicalize_family(family);
  CHECK(dropped == 1);
  REQUIRE(family.size() == 3);
  CHECK(family[0] == MSet::empty(space));
  CHECK(family[1] == parse_mset(space, "{3/c}"));
  CHECK(family[2] == parse_mset(space, "{5/a, 2/b}"));
  CHECK(family_contains(family, parse_mset(space, "{3/c}")));
  CHECK_FALSE(family_contains(family, parse_mset(space, "{1/a}")));
}
