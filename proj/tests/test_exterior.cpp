#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "planes/exterior.hpp"
#include "planes/linalg.hpp"

using namespace planes;

namespace {

// Independent sign-of-permutation oracle: plain inversion count.
int sign_oracle(const std::vector<int>& seq) {
  int inv = 0;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) ++inv;
    }
  return inv % 2 == 0 ? 1 : -1;
}

// Independent wedge oracle for two 2-forms: loop over all ordered pairs.
FourForm wedge22_oracle(const TwoForm& a, const TwoForm& b) {
  FourForm out;
  for (int p = 0; p < kNumPairs; ++p)
    for (int q = 0; q < kNumPairs; ++q) {
      std::vector<int> seq = {kPairs[p][0], kPairs[p][1], kPairs[q][0],
                              kPairs[q][1]};
      int s = sign_oracle(seq);
      if (s == 0) continue;
      std::sort(seq.begin(), seq.end());
      out.at(quad_index(seq[0], seq[1], seq[2], seq[3])) +=
          Rat(s) * a.at(p) * b.at(q);
    }
  return out;
}

Rat wedge24_oracle(const TwoForm& a, const FourForm& b) {
  Rat out(0);
  for (int p = 0; p < kNumPairs; ++p)
    for (int q = 0; q < kNumQuads; ++q) {
      std::vector<int> seq = {kPairs[p][0], kPairs[p][1], kQuads[q][0],
                              kQuads[q][1], kQuads[q][2], kQuads[q][3]};
      out += Rat(sign_oracle(seq)) * a.at(p) * b.at(q);
    }
  return out;
}

// Independent determinant by fraction-based Gaussian elimination.
Rat det_oracle(std::vector<std::vector<Rat>> m) {
  int n = static_cast<int>(m.size());
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (sgn(m[r][c]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      Rat f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

TwoForm random_form(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  TwoForm w;
  for (int p = 0; p < kNumPairs; ++p) w.at(p) = d(rng);
  return w;
}

Vector6 random_vec(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Vector6 v;
  for (int i = 0; i < 6; ++i) v[i] = d(rng);
  return v;
}

TwoForm vv(const Vector6& u, const Vector6& v) {
  TwoForm w;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) w.coeff(i, j) = u[i] * v[j] - u[j] * v[i];
  return w;
}

const TwoForm kStd = TwoForm::from_terms({{0, 1, 1}, {2, 3, 1}, {4, 5, 1}});

}  // namespace

TEST_CASE("permutation sign matches the inversion-count oracle") {
  std::mt19937_64 rng(1);
  std::vector<int> seq = {0, 1, 2, 3, 4, 5};
  for (int t = 0; t < 200; ++t) {
    std::shuffle(seq.begin(), seq.end(), rng);
    CHECK(perm_sign(seq) == sign_oracle(seq));
  }
  CHECK(perm_sign({0, 0, 1}) == 0);
}

TEST_CASE("index tables") {
  for (int p = 0; p < kNumPairs; ++p)
    CHECK(pair_index(kPairs[p][0], kPairs[p][1]) == p);
  for (int q = 0; q < kNumQuads; ++q)
    CHECK(quad_index(kQuads[q][0], kQuads[q][1], kQuads[q][2], kQuads[q][3]) ==
          q);
  for (int p = 0; p < kNumPairs; ++p) {
    std::vector<int> seq = {kPairs[p][0], kPairs[p][1]};
    for (int k = 0; k < 4; ++k) seq.push_back(kQuads[pair_complement(p)][k]);
    CHECK(pair_complement_sign(p) == sign_oracle(seq));
  }
}

TEST_CASE("from_terms normalizes index order and one-based input") {
  TwoForm a = TwoForm::from_terms({{5, 4, 1}}, true);  // e54 = -e45 (one-based)
  CHECK(a.get(3, 4) == Rat(-1));
  CHECK(a.get(4, 3) == Rat(1));
  TwoForm b = TwoForm::from_terms({{2, 0, 1}});
  CHECK(b.at(pair_index(0, 2)) == Rat(-1));
}

TEST_CASE("wedge products match the shuffle-sign oracles") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    TwoForm a = random_form(rng, 4), b = random_form(rng, 4);
    FourForm w = wedge22(a, b);
    CHECK(w == wedge22_oracle(a, b));
    CHECK(wedge22(b, a) == w);  // symmetric for 2-forms
    CHECK(wedge24(a, w).coeff == wedge24_oracle(a, w));
  }
}

TEST_CASE("pfaffian anchor and triple-wedge law") {
  CHECK(pfaffian(kStd) == Rat(1));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    TwoForm w = random_form(rng, 4);
    CHECK(wedge24(w, wedge22(w, w)).coeff == 6 * pfaffian(w));
  }
}

TEST_CASE("pfaffian squares to the determinant") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    TwoForm w = random_form(rng, 4);
    auto sm = w.skew_matrix();
    std::vector<std::vector<Rat>> m(6, std::vector<Rat>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m[i][j] = sm[i * 6 + j];
    Rat p = pfaffian(w);
    CHECK(p * p == det_oracle(m));
  }
}

TEST_CASE("rank2 agrees with the skew-matrix rank and is even") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    TwoForm w = random_form(rng, 3);
    Mat m(6, 6);
    auto sm = w.skew_matrix();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m.at(i, j) = sm[i * 6 + j];
    int r = rank2(w);
    CHECK(r == m.rank());
    CHECK(r % 2 == 0);
  }
  Vector6 u = random_vec(rng, 5), v = random_vec(rng, 5);
  CHECK(rank2(vv(u, v)) <= 2);
}

TEST_CASE("dual_two satisfies the volume pairing identity") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    TwoForm a = random_form(rng, 4), b = random_form(rng, 4);
    FourForm o = wedge22(a, b);
    TwoForm d = dual_two(o);
    for (int s = 0; s < 5; ++s) {
      TwoForm w = random_form(rng, 4);
      Rat pairing(0);
      for (int p = 0; p < kNumPairs; ++p) pairing += d.at(p) * w.at(p);
      CHECK(wedge24(w, o).coeff == pairing);
    }
  }
}

TEST_CASE("involution identity pf_star(pf(w)) = 8 Pf(w) w") {
  CHECK(pf_star(pf(kStd)) == kStd * Rat(8));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    TwoForm w = random_form(rng, 5);
    CHECK(pf_star(pf(w)) == w * (Rat(8) * pfaffian(w)));
  }
}

TEST_CASE("rank laws of the squaring maps") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    TwoForm r2 = vv(random_vec(rng, 5), random_vec(rng, 5));
    CHECK(pf(r2).is_zero());
    TwoForm r4 = vv(random_vec(rng, 5), random_vec(rng, 5)) +
                 vv(random_vec(rng, 5), random_vec(rng, 5));
    if (rank2(r4) == 4) CHECK(rank4_of_fourform(pf(r4)) == 2);
    TwoForm w = random_form(rng, 5);
    if (rank2(w) == 6) CHECK(rank4_of_fourform(pf(w)) == 6);
    CHECK(rank4_of_fourform(pf(w)) != 4);
  }
}
