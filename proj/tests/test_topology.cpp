#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json_io.hpp"
#include "topology.hpp"
#include "util.hpp"

using namespace mtop;

namespace {

MTopology example33() {
  return require_topology(testutil::read_fixture("example3_3.json"));
}

}  // namespace

TEST_CASE("the worked fixture validates") {
  const LoadedTopology loaded = load_topology(testutil::read_fixture("example3_3.json"));
  CHECK(loaded.report.valid);
  CHECK(loaded.report.duplicates_removed == 0);
  REQUIRE(loaded.topology);
  CHECK(loaded.topology->opens().size() == 6);
  CHECK(loaded.topology->ground() == parse_mset(loaded.space, "{5/a, 2/b, 3/c}"));
}

TEST_CASE("missing empty set is axiom violation one") {
  const LoadedTopology loaded =
      load_topology(testutil::read_fixture("broken_missing_empty.json"));
  CHECK_FALSE(loaded.report.valid);
  REQUIRE_FALSE(loaded.report.violations.empty());
  CHECK(loaded.report.violations.front().axiom == "empty-absent");
  CHECK(loaded.report.violations.front().detail == "empty M-set absent");
}

TEST_CASE("closure axioms report witness pairs") {
  const auto space = make_space({"a", "b"}, 1);
  const MSet m = parse_mset(space, "{1/a, 1/b}");
  const MSet sa = parse_mset(space, "{1/a}");
  const MSet sb = parse_mset(space, "{1/b}");

  CHECK(validate_topology(m, {m, MSet::empty(space), sa, sb}).valid);

  const ValidationReport no_empty = validate_topology(m, {m, sa, sb});
  CHECK_FALSE(no_empty.valid);
  bool found_pair = false;
  for (const AxiomViolation& v : no_empty.violations) {
    if (v.axiom == "intersection-closure") {
      // canonical order: counts (0,1) = {1/b} sorts before (1,0) = {1/a}
      REQUIRE(v.witness.size() == 2);
      CHECK(v.witness[0] == sb);
      CHECK(v.witness[1] == sa);
      found_pair = true;
    }
  }
  CHECK(found_pair);

  try {
    const auto big_space = make_space({"a", "b"}, 2);
    validate_topology(parse_mset(big_space, "{1/a}"), {parse_mset(big_space, "{2/a}")});
    FAIL("malformed-family expected");
  } catch (const MtopError& e) {
    CHECK(e.code() == Errc::malformed_family);
  }
}

TEST_CASE("duplicated members are dropped and counted") {
  const auto space = make_space({"a"}, 1);
  const MSet m = parse_mset(space, "{1/a}");
  const ValidationReport report =
      validate_topology(m, {m, m, MSet::empty(space), MSet::empty(space)});
  CHECK(report.valid);
  CHECK(report.duplicates_removed == 2);
}

TEST_CASE("interior on the worked fixture") {
  const MTopology top = example33();
  const auto& space = top.space();
  CHECK(interior(top, parse_mset(space, "{4/a, 2/b}")) == parse_mset(space, "{1/a, 2/b}"));
  CHECK(interior(top, top.ground()) == top.ground());
  CHECK(interior(top, MSet::empty(space)) == MSet::empty(space));
  CHECK(interior(top, parse_mset(space, "{4/a}")) == MSet::empty(space));

  try {
    interior(top, parse_mset(space, "{5/c}"));
    FAIL("not-a-subset expected");
  } catch (const MtopError& e) {
    CHECK(e.code() == Errc::not_a_subset);
  }
  const auto other_bound = make_space({"a", "b", "c"}, 9);
  try {
    interior(top, parse_mset(other_bound, "{1/a}"));
    FAIL("space-mismatch expected");
  } catch (const MtopError& e) {
    CHECK(e.code() == Errc::space_mismatch);
  }
}

TEST_CASE("closure on the worked fixture") {
  const MTopology top = example33();
  const auto& space = top.space();
  CHECK(closure(top, parse_mset(space, "{1/a, 2/b}")) == parse_mset(space, "{5/a, 2/b}"));
  CHECK(closure(top, top.ground()) == top.ground());
  CHECK(closure(top, MSet::empty(space)) == MSet::empty(space));
  CHECK(closure(top, parse_mset(space, "{3/c}")) == parse_mset(space, "{3/c}"));
}

TEST_CASE("operator laws over every sub-M-set of the fixture") {
  const MTopology top = example33();
  const std::vector<MSet> all = power_family(top.ground(), PowerKind::All);
  REQUIRE(all.size() == 72);

  for (const MSet& a : all) {
    const MSet ia = interior(top, a);
    const MSet ca = closure(top, a);
    CHECK(subset_leq(ia, a));
    CHECK(subset_leq(a, ca));
    CHECK(interior(top, ia) == ia);
    CHECK(closure(top, ca) == ca);
    CHECK(top.is_open(ia));
    CHECK(top.is_open(complement_in(ca, top.ground())));
    CHECK(ca == complement_in(interior(top, complement_in(a, top.ground())), top.ground()));
  }
  for (const MSet& a : all) {
    for (const MSet& b : all) {
      if (!subset_leq(a, b)) continue;
      CHECK(subset_leq(interior(top, a), interior(top, b)));
      CHECK(subset_leq(closure(top, a), closure(top, b)));
    }
  }
}

TEST_CASE("subspace of the worked fixture") {
  const MTopology top = example33();
  const auto& space = top.space();
  const MSet n = parse_mset(space, "{1/a, 2/b, 3/c}");

  const MTopology sub = subspace(top, n);
  REQUIRE(sub.opens().size() == 4);
  CHECK(sub.opens()[0] == MSet::empty(space));
  CHECK(sub.opens()[1] == parse_mset(space, "{3/c}"));
  CHECK(sub.opens()[2] == parse_mset(space, "{1/a, 2/b}"));
  CHECK(sub.opens()[3] == n);
  CHECK(validate_topology(sub.ground(), sub.opens()).valid);

  CHECK(subspace(top, top.ground()) == top);

  const MTopology trivial = subspace(top, MSet::empty(space));
  CHECK(trivial.opens().size() == 1);
  CHECK(trivial.opens()[0] == MSet::empty(space));
}

TEST_CASE("subspace always validates") {
  const MTopology top = example33();
  for (const MSet& n : power_family(top.ground(), PowerKind::All)) {
    const MTopology sub = subspace(top, n);
    CHECK(validate_topology(sub.ground(), sub.opens()).valid);
  }
}

TEST_CASE("a topology is its own basis") {
  const MTopology top = example33();
  const BasisReport report = validate_basis(top.ground(), top.opens());
  CHECK(report.valid);
  const MTopology regen = topology_from_basis(top.ground(), top.opens());
  CHECK(regen == top);
}

TEST_CASE("basis generation over a two-point ground") {
  const auto space = make_space({"a", "b"}, 1);
  const MSet ground = parse_mset(space, "{1/a, 1/b}");
  const std::vector<MSet> basis{parse_mset(space, "{1/a}"), parse_mset(space, "{1/b}")};
  CHECK(validate_basis(ground, basis).valid);
  const MTopology top = topology_from_basis(ground, basis);
  CHECK(top.opens().size() == 4);
  CHECK(top.is_open(ground));
}

TEST_CASE("refinement clause failure carries its witness") {
  const auto space = make_space({"a", "b"}, 2);
  const MSet ground = parse_mset(space, "{2/a, 1/b}");
  const std::vector<MSet> basis{parse_mset(space, "{2/a}"), parse_mset(space, "{1/a, 1/b}")};

  const BasisReport report = validate_basis(ground, basis);
  CHECK_FALSE(report.valid);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].clause == "refinement");
  CHECK(report.violations[0].point == "1/a");
  REQUIRE(report.violations[0].witness.size() == 2);
  CHECK(report.violations[0].witness[0] == parse_mset(space, "{1/a, 1/b}"));
  CHECK(report.violations[0].witness[1] == parse_mset(space, "{2/a}"));

  try {
    topology_from_basis(ground, basis);
    FAIL("generation error expected");
  } catch (const MtopError& e) {
    CHECK(e.code() == Errc::generation_failed);
  }
}

TEST_CASE("topology json round trip") {
  const MTopology top = example33();
  const json j = topology_to_json(top);
  const MTopology again = require_topology(j.dump());
  CHECK(again == top);
  CHECK(topology_to_json(again) == j);
}
