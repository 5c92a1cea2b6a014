#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"

using namespace softtop;

TEST_CASE("cover recognition") {
  auto b = tsupport::sig_b();
  SoftSet abs = SoftSet::absolute(b);
  std::vector<SoftSet> both{tsupport::b_f1(b), tsupport::b_f2(b)};
  CHECK(is_cover(both, abs));
  std::vector<SoftSet> just_f3{tsupport::b_f3(b)};
  CHECK_FALSE(is_cover(just_f3, abs));
  std::vector<SoftSet> none;
  CHECK(is_cover(none, SoftSet::null_set(b)));

  REQUIRE_THROWS_AS(Cover::of(abs, just_f3), std::invalid_argument);
  auto a = tsupport::sig_a();
  std::vector<SoftSet> mixed{SoftSet::absolute(a)};
  REQUIRE_THROWS_AS(is_cover(mixed, abs), std::invalid_argument);
}

TEST_CASE("minimal subcover on the example spaces") {
  auto b = tsupport::sig_b();
  SoftSet abs = SoftSet::absolute(b);
  SoftSet g1 = tsupport::b_f1(b), g2 = tsupport::b_f2(b), g3 = tsupport::b_f3(b);

  // Brute-force oracle over all 7 nonempty subfamilies: only {F1,F2} and
  // the full family cover, so the minimum is 2.
  CHECK(oracles::brute_min_cover_size({g1.raw(), g2.raw(), g3.raw()}, abs.raw()) == 2);
  std::vector<SoftSet> fam{g1, g2, g3};
  std::vector<SoftSet> exact = minimal_subcover(Cover::of(abs, fam), SubcoverStrategy::exact);
  REQUIRE(exact.size() == 2);
  CHECK(((exact[0] == g1 && exact[1] == g2) || (exact[0] == g2 && exact[1] == g1)));

  std::vector<SoftSet> with_abs{abs, g1, g2};
  std::vector<SoftSet> one = minimal_subcover(Cover::of(abs, with_abs), SubcoverStrategy::exact);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == abs);

  std::vector<SoftSet> self{g3};
  std::vector<SoftSet> same = minimal_subcover(Cover::of(g3, self), SubcoverStrategy::exact);
  REQUIRE(same.size() == 1);
  CHECK(same[0] == g3);
}

TEST_CASE("exact subcover matches the brute-force oracle; greedy never beats it") {
  std::mt19937_64 rng(20240812);
  auto sig = Signature::make({"a", "b", "c", "d"}, {"e1", "e2", "e3"});
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 3 + rng() % 10;  // up to 12 members
    std::vector<SoftSet> members;
    CellMask u = 0;
    for (std::size_t i = 0; i < n; ++i) {
      members.push_back(tsupport::rand_set(sig, rng));
      u |= members.back().raw();
    }
    SoftSet target(sig, u & static_cast<CellMask>(rng()));  // coverable by construction
    Cover c = Cover::of(target, members);
    std::vector<SoftSet> exact = minimal_subcover(c, SubcoverStrategy::exact);
    std::vector<SoftSet> greedy = minimal_subcover(c, SubcoverStrategy::greedy);
    std::vector<CellMask> raws;
    for (const auto& m : members) raws.push_back(m.raw());
    std::size_t best = oracles::brute_min_cover_size(raws, target.raw());
    if (target.is_null()) best = 0;
    CHECK(exact.size() == best);
    CHECK(greedy.size() >= exact.size());
    CHECK(is_cover(exact, target));
    CHECK(is_cover(greedy, target));
  }
}

TEST_CASE("ties break toward the canonically smallest subfamily") {
  auto sig = Signature::make({"a", "b"}, {"e1"});
  SoftSet sa = SoftSet::constant(sig, PointMask{1});
  SoftSet sb = SoftSet::constant(sig, PointMask{2});
  SoftSet abs = SoftSet::absolute(sig);
  // Both {abs} alone and {sa, sb} cover; minimum is the singleton {abs}.
  std::vector<SoftSet> fam{sb, abs, sa};
  std::vector<SoftSet> got = minimal_subcover(Cover::of(abs, fam), SubcoverStrategy::exact);
  REQUIRE(got.size() == 1);
  CHECK(got[0] == abs);

  // Two distinct size-2 optima: {p, q} and {r, w}. In canonical order
  // (q < w < r < p) the first covering pair is {q, p}.
  auto two = Signature::make({"a", "b"}, {"e1", "e2"});
  std::vector<PointMask> sp{1, 1}, sq{2, 2}, sr{1, 2}, sw{2, 1};
  SoftSet p = SoftSet::from_sections(two, sp), q = SoftSet::from_sections(two, sq);
  SoftSet r = SoftSet::from_sections(two, sr), w = SoftSet::from_sections(two, sw);
  SoftSet abs2 = SoftSet::absolute(two);
  std::vector<SoftSet> tied{p, r, w, q};
  std::vector<SoftSet> got2 = minimal_subcover(Cover::of(abs2, tied), SubcoverStrategy::exact);
  REQUIRE(got2.size() == 2);
  CHECK(got2[0] == q);
  CHECK(got2[1] == p);
}

TEST_CASE("cover restriction preserves index correspondence") {
  auto a = tsupport::sig_a();
  Topology ta = tsupport::space_a(a);
  std::vector<SoftSet> fam{tsupport::a_f1(a), tsupport::a_f2(a)};
  Cover c = Cover::open_cover(ta, SoftSet::absolute(a), fam);
  Cover rc = restrict_cover(c, ta, a->all_points());
  REQUIRE(rc.members.size() == 2);
  CHECK(rc.members[0].raw() == tsupport::a_f1(a).raw());  // Y = X: unchanged sections
  CHECK(rc.members[1].raw() == tsupport::a_f2(a).raw());

  auto two = Signature::make({"a", "b"}, {"e1", "e2"});
  SoftSet oa = SoftSet::constant(two, PointMask{1});
  SoftSet ob = SoftSet::constant(two, PointMask{2});
  Topology t = Topology::generate(two, std::vector<SoftSet>{oa, ob});
  SoftSet target = SoftSet::constant(two, PointMask{1});  // ~Y for Y = {a}
  Cover c2 = Cover::open_cover(t, target, std::vector<SoftSet>{oa, ob});
  Cover rc2 = restrict_cover(c2, t, PointMask{1});
  REQUIRE(rc2.members.size() == 2);
  CHECK(rc2.members[0] == SoftSet::absolute(rc2.target.signature()));
  CHECK(rc2.members[1].is_null());
  CHECK(is_cover(rc2.members, rc2.target));
  // The singleton subcover on the restricted side pulls back by index.
  std::vector<SoftSet> pulled{c2.members[0]};
  CHECK(is_cover(pulled, target));

  // Members must be open.
  std::vector<PointMask> crossed{1, 2};
  SoftSet not_open = SoftSet::from_sections(two, crossed);  // <{a}|{b}>, not in t
  REQUIRE_THROWS_AS(
      restrict_cover(Cover::of(target, std::vector<SoftSet>{not_open, oa}), t, PointMask{1}),
      std::invalid_argument);
  // And the target must be ~Y.
  REQUIRE_THROWS_AS(restrict_cover(c2, t, PointMask{2}), std::invalid_argument);
}

TEST_CASE("finite spaces are soft compact, and countably so") {
  auto a = tsupport::sig_a();
  auto b = tsupport::sig_b();
  for (const Topology& t : {tsupport::space_a(a), tsupport::space_b(b),
                            Topology::indiscrete(a)}) {
    Verdict v = is_compact(t);
    CHECK(v.holds);
    CHECK(v.detail.find("finite subcover") != std::string::npos);
    CHECK(v.detail.find("countably") != std::string::npos);
    CHECK(is_countably_compact(t).holds);
  }
}

TEST_CASE("basis cover criterion") {
  auto a = tsupport::sig_a();
  Topology ta = tsupport::space_a(a);
  CHECK(basis_cover_check(ta, ta.members()).holds);

  auto b = tsupport::sig_b();
  Topology tb = tsupport::space_b(b);
  std::vector<SoftSet> basis{tsupport::b_f1(b), tsupport::b_f2(b), tsupport::b_f3(b)};
  CHECK(basis_cover_check(tb, basis).holds);

  Topology ind = Topology::indiscrete(a);
  std::vector<SoftSet> abs_only{SoftSet::absolute(a)};
  CHECK(basis_cover_check(ind, abs_only).holds);

  std::vector<SoftSet> not_basis{tsupport::b_f1(b), tsupport::b_f2(b)};
  REQUIRE_THROWS_AS(basis_cover_check(tb, not_basis), std::invalid_argument);
}

TEST_CASE("finite intersection property") {
  auto b = tsupport::sig_b();
  SoftSet g1c = tsupport::b_f1(b).complement(), g2c = tsupport::b_f2(b).complement();
  SoftSet g3c = tsupport::b_f3(b).complement();
  SoftSet abs = SoftSet::absolute(b);

  std::vector<SoftSet> bad{g1c, g2c};
  Verdict v = has_fip(bad);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.sets.size() == 2);  // the null subfamily is the pair itself
  CHECK(((v.sets[0] == g1c && v.sets[1] == g2c) || (v.sets[0] == g2c && v.sets[1] == g1c)));

  std::vector<SoftSet> good{abs, g3c};
  CHECK(has_fip(good).holds);
  std::vector<SoftSet> single{g3c};
  CHECK(has_fip(single).holds);
  std::vector<SoftSet> empty;
  Verdict ve = has_fip(empty);
  CHECK(ve.holds);
  CHECK(ve.vacuous);

  // The reported witness is a smallest null subfamily.
  std::vector<SoftSet> mixed{abs, g1c, g2c, SoftSet::null_set(b)};
  Verdict vm = has_fip(mixed);
  REQUIRE_FALSE(vm.holds);
  REQUIRE(vm.sets.size() == 1);
  CHECK(vm.sets[0].is_null());

  // The subfamily sweep is exponential, so oversized families are refused.
  std::vector<SoftSet> too_many(21, abs);
  REQUIRE_THROWS_AS(has_fip(too_many), std::invalid_argument);
}

TEST_CASE("FIP equivalence sweep") {
  auto a = tsupport::sig_a();
  auto b = tsupport::sig_b();
  CHECK(fip_equivalence(tsupport::space_a(a)).holds);
  CHECK(fip_equivalence(tsupport::space_b(b)).holds);
  CHECK(fip_equivalence(Topology::indiscrete(a)).holds);
}

TEST_CASE("on finite families FIP coincides with a non-null total intersection") {
  // Independent route: the subfamily enumeration inside has_fip against
  // the one-line monotonicity argument.
  std::mt19937_64 rng(606);
  auto sig = tsupport::sig_of(3, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 6;
    std::vector<SoftSet> family;
    CellMask meet = sig->full_mask();
    for (std::size_t i = 0; i < n; ++i) {
      family.push_back(tsupport::rand_set(sig, rng));
      meet &= family.back().raw();
    }
    CHECK(has_fip(family).holds == (meet != 0));
  }
}

TEST_CASE("nested chains of closed sets") {
  auto b = tsupport::sig_b();
  Topology tb = tsupport::space_b(b);
  SoftSet abs = SoftSet::absolute(b);
  SoftSet g1c = tsupport::b_f1(b).complement();
  SoftSet g3c = tsupport::b_f3(b).complement();

  std::vector<SoftSet> chain{abs, g1c};
  Verdict v = nested_intersection(tb, chain);
  CHECK(v.holds);
  REQUIRE(v.sets.size() == 1);
  CHECK(v.sets[0] == g1c);

  std::vector<SoftSet> constant{abs, abs};
  CHECK(nested_intersection(tb, constant).holds);

  // The corollary's construction: prefix intersections of an FIP family.
  std::vector<SoftSet> family{g3c, abs};
  std::vector<SoftSet> built = fip_chain(family);
  REQUIRE(built.size() == 2);
  CHECK(built[0] == g3c);
  CHECK(built[1] == g3c);
  CHECK(nested_intersection(tb, built).holds);

  std::vector<SoftSet> not_closed{tsupport::b_f3(b)};
  REQUIRE_THROWS_AS(nested_intersection(tb, not_closed), std::invalid_argument);
  std::vector<SoftSet> with_null{abs, SoftSet::null_set(b)};
  REQUIRE_THROWS_AS(nested_intersection(tb, with_null), std::invalid_argument);
  std::vector<SoftSet> not_nested{g1c, abs};
  REQUIRE_THROWS_AS(nested_intersection(tb, not_nested), std::invalid_argument);
}

TEST_CASE("restrictions of covers always cover the restricted target") {
  std::mt19937_64 rng(17);
  auto sig = tsupport::sig_of(3, 2);
  for (int trial = 0; trial < 120; ++trial) {
    Topology t = random_space(sig, rng(), rng() % 5);
    PointMask y = 1 + rng() % sig->all_points();
    SoftSet target = SoftSet::constant(sig, y);
    std::vector<SoftSet> members;
    for (const auto& m : t.members())
      if ((rng() & 1) != 0) members.push_back(m);
    if (!is_cover(members, target)) continue;
    Cover rc = restrict_cover(Cover::open_cover(t, target, members), t, y);
    CHECK(is_cover(rc.members, rc.target));
    CHECK(rc.within.has_value());
    CHECK(*rc.within == t.subspace(y));
  }
}

TEST_CASE("adjoining a closed complement turns covers of ~Y into covers of ~X") {
  std::mt19937_64 rng(5);
  auto sig = Signature::make({"a", "b"}, {"e1", "e2"});
  for (int trial = 0; trial < 150; ++trial) {
    Topology t = random_space(sig, rng(), rng() % 5);
    for (PointMask y = 1; y <= sig->all_points(); ++y) {
      SoftSet target = SoftSet::constant(sig, y);
      SetStatus st = t.status(target);
      if (st != SetStatus::closed && st != SetStatus::clopen) continue;
      std::vector<SoftSet> members;
      for (const auto& m : t.members())
        if ((rng() & 1) != 0) members.push_back(m);
      if (!is_cover(members, target)) continue;
      std::vector<SoftSet> adjoined = members;
      adjoined.push_back(target.complement());
      CHECK(is_cover(adjoined, SoftSet::absolute(sig)));
    }
  }
}

TEST_CASE("coarser topologies lend their covers to finer ones") {
  std::mt19937_64 rng(9);
  auto sig = Signature::make({"a"}, {"e1", "e2", "e3"});
  for (int trial = 0; trial < 100; ++trial) {
    Topology fine = random_space(sig, rng(), 1 + rng() % 4);
    std::vector<SoftSet> some;
    for (const auto& m : fine.members())
      if ((rng() & 1) != 0) some.push_back(m);
    Topology coarse = Topology::generate(sig, some);
    REQUIRE(coarse.compare(fine) != Comparison::incomparable);
    if (fine.compare(coarse) != Comparison::coarser &&
        coarse.compare(fine) != Comparison::finer)
      continue;
    // Every open cover drawn from the coarser family is drawn from the
    // finer one, and subcover extraction goes through unchanged.
    std::vector<SoftSet> cov;
    for (const auto& m : coarse.members()) cov.push_back(m);
    SoftSet abs = SoftSet::absolute(sig);
    REQUIRE(is_cover(cov, abs));
    for (const auto& m : cov) CHECK(fine.contains(m));
    CHECK(is_cover(minimal_subcover(Cover::of(abs, cov), SubcoverStrategy::exact), abs));
  }
}
