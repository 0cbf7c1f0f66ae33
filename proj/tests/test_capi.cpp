#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "msettop.h"
#include "util.hpp"

namespace {

const char* kSymbols[] = {"a", "b", "c"};

struct SpaceFixture {
  mst_space* space = nullptr;
  SpaceFixture() { REQUIRE(mst_space_new(kSymbols, 3, 5, &space) == MST_OK); }
  ~SpaceFixture() { mst_space_free(space); }
};

std::string fmt(const mst_mset* m) {
  char* text = nullptr;
  REQUIRE(mst_mset_format(m, &text) == MST_OK);
  std::string out(text);
  mst_string_free(text);
  return out;
}

}  // namespace

TEST_CASE("abi and status names") {
  CHECK(mst_abi_version() == 1);
  CHECK(std::string(mst_status_name(MST_OK)) == "ok");
  CHECK(std::string(mst_status_name(MST_ERR_BUDGET)) == "enumeration-budget");
}

TEST_CASE("space and mset lifecycle") {
  SpaceFixture fx;
  CHECK(mst_space_size(fx.space) == 3);
  CHECK(mst_space_bound(fx.space) == 5);
  CHECK(std::string(mst_space_symbol(fx.space, 1)) == "b");
  CHECK(mst_space_symbol(fx.space, 9) == nullptr);

  mst_mset* m = nullptr;
  REQUIRE(mst_mset_parse(fx.space, "{5/a, 2/b, 3/c}", &m) == MST_OK);
  CHECK(fmt(m) == "{5/a, 2/b, 3/c}");
  unsigned count = 0;
  CHECK(mst_mset_count(m, 0, &count) == MST_OK);
  CHECK(count == 5);

  const unsigned counts[] = {1, 2, 0};
  mst_mset* n = nullptr;
  REQUIRE(mst_mset_from_counts(fx.space, counts, 3, &n) == MST_OK);
  CHECK(fmt(n) == "{1/a, 2/b}");

  int flag = -1;
  CHECK(mst_mset_subset(n, m, &flag) == MST_OK);
  CHECK(flag == 1);
  CHECK(mst_mset_equal(n, m, &flag) == MST_OK);
  CHECK(flag == 0);

  mst_mset* u = nullptr;
  REQUIRE(mst_combine(MST_OP_SUBTRACT, m, n, &u) == MST_OK);
  CHECK(fmt(u) == "{4/a, 3/c}");

  mst_subrel rel;
  REQUIRE(mst_classify_sub(n, m, &rel) == MST_OK);
  CHECK(rel.is_sub == 1);
  CHECK(rel.is_whole == 0);
  CHECK(rel.is_partial_whole == 1);
  CHECK(rel.is_full == 0);

  mst_mset* comp = nullptr;
  REQUIRE(mst_complement_in(n, m, &comp) == MST_OK);
  CHECK(fmt(comp) == "{4/a, 3/c}");

  mst_mset_free(comp);
  mst_mset_free(u);
  mst_mset_free(n);
  mst_mset_free(m);
}

TEST_CASE("error codes carry messages") {
  SpaceFixture fx;
  mst_mset* m = nullptr;
  CHECK(mst_mset_parse(fx.space, "{9/a}", &m) == MST_ERR_PARSE);
  CHECK(std::strlen(mst_last_error()) > 0);
  CHECK(mst_mset_parse(nullptr, "{}", &m) == MST_ERR_INVALID_ARGUMENT);

  mst_mset* big = nullptr;
  REQUIRE(mst_mset_parse(fx.space, "{5/a, 2/b, 3/c}", &big) == MST_OK);
  mst_mset* small = nullptr;
  REQUIRE(mst_mset_parse(fx.space, "{1/a}", &small) == MST_OK);
  mst_mset* out = nullptr;
  CHECK(mst_complement_in(big, small, &out) == MST_ERR_NOT_A_SUBSET);

  mst_family* family = nullptr;
  CHECK(mst_power_family(big, MST_POWER_ALL, 10, &family) == MST_ERR_BUDGET);

  mst_mset_free(small);
  mst_mset_free(big);
}

TEST_CASE("power families through the C surface") {
  SpaceFixture fx;
  mst_mset* m = nullptr;
  REQUIRE(mst_mset_parse(fx.space, "{2/a, 1/b}", &m) == MST_OK);
  mst_family* family = nullptr;
  REQUIRE(mst_power_family(m, MST_POWER_FULL, 0, &family) == MST_OK);
  REQUIRE(mst_family_size(family) == 2);
  const mst_mset* first = nullptr;
  REQUIRE(mst_family_get(family, 0, &first) == MST_OK);
  CHECK(fmt(first) == "{1/a, 1/b}");
  const mst_mset* oob = nullptr;
  CHECK(mst_family_get(family, 7, &oob) == MST_ERR_INVALID_ARGUMENT);
  mst_family_free(family);
  mst_mset_free(m);
}

TEST_CASE("full pipeline over the worked fixture") {
  const std::string text = testutil::read_fixture("example3_3.json");

  char* report_text = nullptr;
  REQUIRE(mst_validate_json(text.c_str(), &report_text) == MST_OK);
  CHECK(std::string(report_text).find("\"valid\": true") != std::string::npos);
  mst_string_free(report_text);

  mst_topology* top = nullptr;
  REQUIRE(mst_topology_load(text.c_str(), &top) == MST_OK);

  const mst_mset* ground = nullptr;
  REQUIRE(mst_topology_ground(top, &ground) == MST_OK);
  CHECK(fmt(ground) == "{5/a, 2/b, 3/c}");

  const mst_space* space = mst_topology_space(top);
  mst_mset* probe = nullptr;
  REQUIRE(mst_mset_parse(space, "{4/a, 2/b}", &probe) == MST_OK);
  mst_mset* inner = nullptr;
  REQUIRE(mst_interior(top, probe, &inner) == MST_OK);
  CHECK(fmt(inner) == "{1/a, 2/b}");
  mst_mset* outer = nullptr;
  REQUIRE(mst_closure(top, inner, &outer) == MST_OK);
  CHECK(fmt(outer) == "{5/a, 2/b}");

  int holds = 0;
  mst_mset* witness = nullptr;
  mst_mset* s = nullptr;
  REQUIRE(mst_mset_parse(space, "{2/a, 2/b}", &s) == MST_OK);
  REQUIRE(mst_is_semi_open(top, s, MST_ALG_BOTH, &holds, &witness) == MST_OK);
  CHECK(holds == 1);
  REQUIRE(witness != nullptr);
  CHECK(fmt(witness) == "{1/a, 2/b}");

  mst_semi* semi = nullptr;
  REQUIRE(mst_semi_new(top, 0, &semi) == MST_OK);
  mst_family* som = nullptr;
  REQUIRE(mst_semi_som(semi, &som) == MST_OK);
  CHECK(mst_family_size(som) == 12);

  int is_cover = 0;
  REQUIRE(mst_is_semi_open_cover(semi, som, &is_cover) == MST_OK);
  CHECK(is_cover == 1);

  int found = 0;
  mst_family* sub = nullptr;
  REQUIRE(mst_find_subcover(semi, som, MST_FILTER_ANY, 0, &found, &sub) == MST_OK);
  CHECK(found == 1);
  REQUIRE(mst_family_size(sub) == 1);

  char* verdict_text = nullptr;
  REQUIRE(mst_decide_compactness(semi, MST_COMPACT_SEMI_FULL, 0, &holds, &verdict_text) ==
          MST_OK);
  CHECK(holds == 0);
  CHECK(std::string(verdict_text).find("witness") != std::string::npos);
  mst_string_free(verdict_text);

  int fip = 0;
  REQUIRE(mst_has_fip(som, &fip) == MST_OK);
  CHECK(fip == 0);  // the SOM family contains the empty M-set

  int agree = 0;
  char* fip_text = nullptr;
  REQUIRE(mst_check_fip_scm(semi, 0, 0, &agree, &fip_text) == MST_OK);
  CHECK(agree == 1);
  mst_string_free(fip_text);

  mst_mset* n_set = nullptr;
  REQUIRE(mst_mset_parse(space, "{1/a, 2/b, 3/c}", &n_set) == MST_OK);
  mst_mset* a_set = nullptr;
  REQUIRE(mst_mset_parse(space, "{1/a, 2/b}", &a_set) == MST_OK);
  char* sub_text = nullptr;
  REQUIRE(mst_subspace_compact_equiv(top, n_set, a_set, 0, 0, 0, &agree, &sub_text) == MST_OK);
  CHECK(agree == 1);
  mst_string_free(sub_text);

  mst_mset* semi_closed_probe = nullptr;
  REQUIRE(mst_mset_parse(space, "{4/a}", &semi_closed_probe) == MST_OK);
  mst_mset* scl_out = nullptr;
  REQUIRE(mst_semi_closure(semi, semi_closed_probe, &scl_out) == MST_OK);
  CHECK(fmt(scl_out) == "{4/a}");

  char* checklist_text = nullptr;
  REQUIRE(mst_checklist(semi, s, &checklist_text) == MST_OK);
  CHECK(std::string(checklist_text).find("\"sound\": true") != std::string::npos);
  mst_string_free(checklist_text);

  mst_mset_free(scl_out);
  mst_mset_free(semi_closed_probe);
  mst_mset_free(a_set);
  mst_mset_free(n_set);
  mst_family_free(sub);
  mst_family_free(som);
  mst_semi_free(semi);
  mst_mset_free(s);
  mst_mset_free(witness);
  mst_mset_free(outer);
  mst_mset_free(inner);
  mst_mset_free(probe);
  mst_topology_free(top);
}

TEST_CASE("subspace through the C surface") {
  const std::string text = testutil::read_fixture("example3_3.json");
  mst_topology* top = nullptr;
  REQUIRE(mst_topology_load(text.c_str(), &top) == MST_OK);
  mst_mset* n = nullptr;
  REQUIRE(mst_mset_parse(mst_topology_space(top), "{1/a, 2/b, 3/c}", &n) == MST_OK);
  mst_topology* sub = nullptr;
  REQUIRE(mst_subspace(top, n, &sub) == MST_OK);
  mst_family* opens = nullptr;
  REQUIRE(mst_topology_opens(sub, &opens) == MST_OK);
  CHECK(mst_family_size(opens) == 4);
  mst_family_free(opens);
  mst_topology_free(sub);
  mst_mset_free(n);
  mst_topology_free(top);
}

TEST_CASE("generation and enumeration through the C surface") {
  mst_gen_config cfg{};
  cfg.max_domain = 2;
  cfg.max_w = 2;
  cfg.seed = 9;
  mst_topology* a = nullptr;
  mst_topology* b = nullptr;
  REQUIRE(mst_generate_topology(&cfg, 3, &a) == MST_OK);
  REQUIRE(mst_generate_topology(&cfg, 3, &b) == MST_OK);
  char* ta = nullptr;
  char* tb = nullptr;
  REQUIRE(mst_topology_to_json(a, &ta) == MST_OK);
  REQUIRE(mst_topology_to_json(b, &tb) == MST_OK);
  CHECK(std::string(ta) == tb);
  mst_string_free(ta);
  mst_string_free(tb);
  mst_topology_free(a);
  mst_topology_free(b);

  const char* pair_syms[] = {"a", "b"};
  mst_space* space = nullptr;
  REQUIRE(mst_space_new(pair_syms, 2, 1, &space) == MST_OK);
  mst_mset* ground = nullptr;
  REQUIRE(mst_mset_parse(space, "{1/a, 1/b}", &ground) == MST_OK);
  size_t seen = 0;
  const auto counter = [](const mst_topology*, void* user) -> int {
    ++*static_cast<size_t*>(user);
    return 0;
  };
  REQUIRE(mst_enumerate_topologies(ground, 0, counter, &seen) == MST_OK);
  CHECK(seen == 4);
  mst_mset_free(ground);
  mst_space_free(space);
}

TEST_CASE("verify and mine through the C surface") {
  char* claims_text = nullptr;
  REQUIRE(mst_claim_list(&claims_text) == MST_OK);
  CHECK(std::string(claims_text).find("T3.12") != std::string::npos);
  mst_string_free(claims_text);

  int ok = 0;
  char* report_text = nullptr;
  REQUIRE(mst_verify("T3.12", R"({"kind":"exhaustive","domain":2,"w":1})", 0, &ok,
                     &report_text) == MST_OK);
  CHECK(ok == 1);
  CHECK(std::string(report_text).find("\"violations\": []") != std::string::npos);
  CHECK(std::string(report_text).find("elapsed_ms") == std::string::npos);
  mst_string_free(report_text);

  char* timed_text = nullptr;
  REQUIRE(mst_verify("T3.12", R"({"kind":"exhaustive","domain":2,"w":1})", 1, &ok,
                     &timed_text) == MST_OK);
  CHECK(std::string(timed_text).find("elapsed_ms") != std::string::npos);
  mst_string_free(timed_text);

  CHECK(mst_verify("T99", R"({"kind":"exhaustive","domain":2,"w":1})", 0, &ok, nullptr) ==
        MST_ERR_UNKNOWN_CLAIM);

  const std::string fixture = testutil::read_fixture("example3_3.json");
  const std::string corpus =
      std::string(R"({"kind":"fixture","topology":)") + fixture + "}";
  int found = 0;
  char* mine_text = nullptr;
  REQUIRE(mst_mine("3.13", corpus.c_str(), 0, &found, &mine_text) == MST_OK);
  CHECK(found == 1);
  CHECK(std::string(mine_text).find("{2/a, 2/b}") != std::string::npos);
  mst_string_free(mine_text);
}
