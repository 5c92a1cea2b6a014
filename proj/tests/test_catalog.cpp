#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace softtop;

TEST_CASE("catalog ids and errors") {
  CHECK(catalog_ids() == std::vector<std::string>{"ex4.4", "ex4.9"});
  REQUIRE_THROWS_AS(example("ex4.2"), std::invalid_argument);
  REQUIRE_THROWS_WITH(example("ex4.2"), Catch::Matchers::ContainsSubstring("absent"));
  REQUIRE_THROWS_AS(example("ex9.9"), std::invalid_argument);
}

TEST_CASE("catalog spaces match the hand-built ones exactly") {
  CatalogEntry a = example("ex4.4");
  auto sa = tsupport::sig_a();
  CHECK(a.space == tsupport::space_a(sa));
  REQUIRE(a.named_sets.size() == 2);
  CHECK(a.named_sets[0].second == tsupport::a_f1(sa));
  CHECK(a.named_sets[1].second == tsupport::a_f2(sa));

  CatalogEntry b = example("ex4.9");
  auto sb = tsupport::sig_b();
  CHECK(b.space == tsupport::space_b(sb));
  REQUIRE(b.named_sets.size() == 3);
  CHECK(b.named_sets[2].second == tsupport::b_f3(sb));
}

TEST_CASE("golden expectation profiles replay exactly") {
  for (const std::string& id : catalog_ids()) {
    CatalogEntry entry = example(id);
    for (const Expectation& e : entry.expectations) {
      Verdict v = evaluate_property(entry.space, e.property);
      INFO(id << " / " << property_name(e.property) << ": " << v.detail);
      CHECK(v.holds == e.expected);
      CHECK(v.vacuous == e.vacuous);
    }
  }
}

TEST_CASE("the vacuous annotations sit exactly on the one-point separation axioms") {
  CatalogEntry a = example("ex4.4");
  for (const Expectation& e : a.expectations)
    CHECK(e.vacuous == (e.property == Property::t1));
  CatalogEntry b = example("ex4.9");
  for (const Expectation& e : b.expectations)
    CHECK(e.vacuous == (e.property == Property::t2));
}

TEST_CASE("ex4.4 is the standing witness space for the refutation checks") {
  CatalogEntry a = example("ex4.4");
  CHECK(verify_theorem(Theorem::rem4_7, a.space).holds);
  CHECK(verify_theorem(Theorem::rem4_8, a.space).holds);
  CHECK(verify_theorem(Theorem::prop4_3_converse, a.space).holds);
  CHECK(verify_theorem(Theorem::lemma4_1_converse, a.space).holds);
}
