#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "planes/families.hpp"
#include "planes/verify.hpp"

using namespace planes;

namespace {

TwoForm zb(std::vector<std::tuple<int, int, Rat>> t) {
  return TwoForm::from_terms(t);
}

}  // namespace

TEST_CASE("Plane construction rejects dependent bases") {
  TwoForm a = zb({{0, 1, 1}});
  TwoForm b = zb({{2, 3, 1}});
  CHECK_THROWS_AS(Plane({a, b, a + b}), IndependenceError);
  CHECK_THROWS_AS(Plane({a, b, TwoForm{}}), IndependenceError);
}

TEST_CASE("element/contains/same_span are consistent") {
  Plane h = example_332_plane();
  TwoForm w = h.element({Rat(1), Rat(-2), Rat(3), Rat(1, 2)});
  CHECK(h.contains(w));
  CHECK(!h.contains(zb({{0, 1, 1}})));
  Plane g({h[0] + h[1], h[1], h[2] - h[3], h[3]});
  CHECK(h.same_span(g));
}

TEST_CASE("sym2_matrix columns are the pairwise wedge products") {
  Plane h = example_332_plane();
  Mat s = sym2_matrix(h);
  auto mons = sym2_monomials(4);
  REQUIRE(s.cols() == 10);
  for (size_t c = 0; c < mons.size(); ++c) {
    FourForm f = wedge22(h[mons[c][0]], h[mons[c][1]]);
    for (int q = 0; q < kNumQuads; ++q)
      CHECK(s.at(q, static_cast<int>(c)) == f.at(q));
  }
  CHECK(sym2_monomial_index(4, 1, 2) == 5);
}

TEST_CASE("sym2_kernel vectors annihilate and are normalized") {
  Plane h = example_332_plane();
  auto ker = sym2_kernel(h);
  REQUIRE(ker.size() == 1);
  auto mons = sym2_monomials(4);
  FourForm acc;
  for (size_t c = 0; c < mons.size(); ++c)
    acc = acc + wedge22(h[mons[c][0]], h[mons[c][1]]) * ker[0][c];
  CHECK(acc.is_zero());
  // first nonzero entry is one
  for (const auto& e : ker[0]) {
    if (sgn(e) == 0) continue;
    CHECK(e == Rat(1));
    break;
  }
}

TEST_CASE("membership verdicts across the four regimes") {
  CHECK(verdict_name(Verdict::Member) == "Member");

  MembershipReport rep = membership(example_332_plane());
  CHECK(rep.verdict == Verdict::Member);
  CHECK(rep.sym2_rank == 9);
  CHECK(rep.kernel_dim == 1);
  CHECK(rep.qrank == 4);

  // A generic 4-plane has injective Sym^2: empty kernel.
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-7, 7);
  std::vector<TwoForm> basis(4);
  for (auto& w : basis)
    for (int p = 0; p < kNumPairs; ++p) w.at(p) = d(rng);
  MembershipReport generic = membership(Plane(std::move(basis)));
  CHECK(generic.verdict == Verdict::KernelEmpty);
  CHECK(generic.sym2_rank == 10);

  // The tritangent extension at z = c = 1 sits on the discriminant
  // c^2 = z^2: its kernel generator is the perfect square (w + w2)^2.
  MembershipReport degen = membership(tritangent_extension(0, 0, 1, 0, 0, 1));
  CHECK(degen.verdict == Verdict::KernelDegenerate);
  CHECK(degen.kernel_dim == 1);
  CHECK(degen.qrank == 1);

  // All products of forms sharing e0 vanish.
  MembershipReport big = membership(Plane(
      {zb({{0, 1, 1}}), zb({{0, 2, 1}}), zb({{0, 3, 1}}), zb({{0, 4, 1}})}));
  CHECK(big.verdict == Verdict::KernelTooBig);
  CHECK(big.kernel_dim > 1);
}

TEST_CASE("member relation reproduces the kernel condition") {
  for (const Plane& h : {example_332_plane(), example1_plane(),
                         example2_plane(), type2_plane()}) {
    MembershipReport rep = membership(h);
    REQUIRE(rep.verdict == Verdict::Member);
    Mat q = rep.relation->matrix();
    FourForm acc;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) acc = acc + wedge22(h[i], h[j]) * q.at(i, j);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("three_plane_checks on semisimple planes") {
  auto c1 = three_plane_checks(semisimple_three_plane({1, -1, 0}));
  CHECK(c1.sym2_injective);
  CHECK(c1.has_rank6_in_LL);
  // (1,1,1): (1,1,1) is colinear with (bc,ac,ab) = (1,1,1)
  auto c2 = three_plane_checks(semisimple_three_plane({1, 1, 1}));
  CHECK(!c2.sym2_injective);
}

TEST_CASE("tangent dimension is 38 at the explicit member plane") {
  CHECK(tangent_dimension(example_332_plane()) == 38);
}

TEST_CASE("membership is basis-independent") {
  Plane h = example_332_plane();
  Plane g({h[0] + h[2], h[1] - h[3], h[2], h[3] + h[0]});
  MembershipReport rep = membership(g);
  CHECK(rep.verdict == Verdict::Member);
  CHECK(rep.sym2_rank == 9);
  CHECK(rep.qrank == 4);
}
