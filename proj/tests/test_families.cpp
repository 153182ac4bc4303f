#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "planes/families.hpp"
#include "planes/verify.hpp"

using namespace planes;

TEST_CASE("semisimple three-plane coefficients sit on the printed pairs") {
  Plane l = semisimple_three_plane({Rat(2), Rat(3), Rat(5)});
  // one-based e12, e36, e54 for the first form
  CHECK(l[0].get(0, 1) == Rat(2));
  CHECK(l[0].get(2, 5) == Rat(3));
  CHECK(l[0].get(4, 3) == Rat(5));
  CHECK(l[1].get(2, 3) == Rat(2));
  CHECK(l[1].get(4, 1) == Rat(3));
  CHECK(l[1].get(0, 5) == Rat(5));
  CHECK(l[2].get(4, 5) == Rat(2));
  CHECK(l[2].get(0, 3) == Rat(3));
  CHECK(l[2].get(2, 1) == Rat(5));
  CHECK_THROWS_AS(semisimple_three_plane({Rat(0), Rat(0), Rat(0)}),
                  ZeroTripleError);
}

TEST_CASE("extend_by_pfstar produces member planes containing L") {
  Plane l = semisimple_three_plane({Rat(1), Rat(-1), Rat(0)});
  Mat omega = Mat::identity(3);
  Plane h = extend_by_pfstar(l, omega);
  CHECK(h.size() == 4);
  for (int i = 0; i < 3; ++i) CHECK(h.contains(l[i]));
  CHECK(membership(h).verdict == Verdict::Member);

  Mat singular(3, 3);  // rank 1
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) singular.at(i, j) = 1;
  CHECK_THROWS_AS(extend_by_pfstar(l, singular), QRankDeficientError);
}

TEST_CASE("extend_by_pfstar rejects a degenerate quadratic image") {
  // L with all products inside a fixed hyperplane pattern can make
  // sum Omega_ij w_i w_j fall below full dual rank.
  Plane l = type3_plane_rep();
  Mat omega = Mat::identity(3);
  CHECK_THROWS_AS(extend_by_pfstar(l, omega), RankDeficientOmegaError);
}

TEST_CASE("sample_V is deterministic and seeds differ") {
  SamplerConfig cfg;
  cfg.seed = 1;
  Plane a = sample_V(cfg);
  Plane b = sample_V(cfg);
  REQUIRE(a.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(a[i] == b[i]);
  CHECK(membership(a).verdict == Verdict::Member);

  cfg.seed = 2;
  Plane c = sample_V(cfg);
  CHECK(!a.same_span(c));
}

TEST_CASE("determinantal planes round-trip through their matrix") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 10; ++t) {
    LinearFormMatrix m;
    for (auto& row : m)
      for (auto& entry : row)
        for (auto& c : entry) c = d(rng);
    try {
      Plane h = determinantal_plane(m);
      LinearFormMatrix back = determinantal_matrix(h);
      CHECK(back == m);
    } catch (const IndependenceError&) {
      // degenerate draw; skip
    }
  }
  // e0 ^ e2 lies in wedge^2 V+ and cannot appear in a determinantal plane
  CHECK_THROWS_AS(determinantal_matrix(
                      Plane({TwoForm::from_terms({{0, 1, 1}}),
                             TwoForm::from_terms({{0, 3, 1}}),
                             TwoForm::from_terms({{0, 5, 1}}),
                             TwoForm::from_terms({{0, 2, 1}})})),
                  NotDeterminantalError);
}

TEST_CASE("the explicit member plane is determinantal") {
  Plane h = example_332_plane();
  LinearFormMatrix m = determinantal_matrix(h);
  CHECK(determinantal_plane(m).same_span(h));
}

TEST_CASE("tritangent extension contains the printed 3-plane") {
  Plane h = tritangent_extension(1, 2, 3, -1, 2, 1);
  Plane l = type3_plane_rep();  // the tritangent L shares its first two forms
  CHECK(h.contains(h[1]));
  CHECK(h.size() == 4);
  CHECK(h[1] == l[0]);
  // degenerate parameters: all zero gives omega = 0
  CHECK_THROWS_AS(tritangent_extension(0, 0, 0, 0, 0, 0),
                  DegenerateParametersError);
}

TEST_CASE("rank4_plane_type classifies the four representatives") {
  CHECK(rank4_plane_type(type1_plane_rep()) == 1);
  CHECK(rank4_plane_type(type2_plane_rep()) == 2);
  CHECK(rank4_plane_type(type3_plane_rep()) == 3);
  CHECK(rank4_plane_type(type4_plane_rep()) == 4);
  // a plane containing a rank-6 form is not constant-rank-4; (1,1,1) has
  // a rank-6 basis form (a+b+c != 0), unlike (1,-1,0) whose matrix has
  // identically vanishing determinant
  CHECK_THROWS_AS(
      rank4_plane_type(semisimple_three_plane({Rat(1), Rat(1), Rat(1)})),
      NotConstantRank4Error);
}

TEST_CASE("classification is invariant under base change") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-2, 2);
  for (const auto& [l, want] :
       {std::pair{type1_plane_rep(), 1}, std::pair{type2_plane_rep(), 2},
        std::pair{type3_plane_rep(), 3}, std::pair{type4_plane_rep(), 4}}) {
    for (int t = 0; t < 3; ++t) {
      std::vector<TwoForm> nb;
      Mat c(3, 3);
      do {
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) c.at(i, j) = d(rng);
      } while (c.rank() < 3);
      for (int i = 0; i < 3; ++i)
        nb.push_back(l[0] * c.at(i, 0) + l[1] * c.at(i, 1) + l[2] * c.at(i, 2));
      CHECK(rank4_plane_type(Plane(std::move(nb))) == want);
    }
  }
}

TEST_CASE("type-2 and type-3 extensions are members containing their L") {
  Plane h2 = type2_plane();
  CHECK(membership(h2).verdict == Verdict::Member);
  Plane l2 = type2_plane_rep();
  for (int i = 0; i < 3; ++i) CHECK(h2.contains(l2[i]));

  Vector6 u0, u1;
  u0[5] = 1;
  u1[2] = 1;
  Plane h3 = type3_plane(u0, u1);
  CHECK(membership(h3).verdict == Verdict::Member);
  Plane l3 = type3_plane_rep();
  for (int i = 0; i < 3; ++i) CHECK(h3.contains(l3[i]));

  Vector6 zero;
  CHECK_THROWS_AS(type3_plane(zero, zero), VeroneseDegenerateError);
  Vector6 bad;
  bad[0] = 1;
  CHECK_THROWS_AS(type3_plane(bad, u1), PreconditionError);
}

TEST_CASE("extension_is_member agrees with the full membership test") {
  Plane l = type3_plane_rep();
  Mat ll = ll_products(l);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int t = 0; t < 25; ++t) {
    TwoForm w;
    for (int p = 0; p < kNumPairs; ++p) w.at(p) = d(rng);
    bool fast = extension_is_member(l, ll, w);
    bool slow = false;
    try {
      slow = membership(Plane({w, l[0], l[1], l[2]})).verdict ==
             Verdict::Member;
    } catch (const IndependenceError&) {
      slow = false;
    }
    CHECK(fast == slow);
  }
}

TEST_CASE("bounded searches: type 1 extends nowhere, type 4 does extend") {
  auto r1 = extension_search_type1(1, /*seed=*/42, /*random_draws=*/100);
  CHECK(r1.candidates > 0);
  CHECK(r1.members_found == 0);

  // The type-4 plane admits genuine member extensions; the smallest is
  // w = e01 + e14 + e25 with relation w w1 + w2 w3 = 0.
  auto r4 = extension_search_type4(1, /*seed=*/42, /*random_draws=*/5);
  CHECK(r4.candidates > 0);
  CHECK(r4.members_found > 0);
  Plane l = type4_plane_rep();
  TwoForm w =
      TwoForm::from_terms({{0, 1, Rat(1)}, {1, 4, Rat(1)}, {2, 5, Rat(1)}});
  MembershipReport rep = membership(Plane({w, l[0], l[1], l[2]}));
  CHECK(rep.verdict == Verdict::Member);
  CHECK(rep.qrank == 4);
}
