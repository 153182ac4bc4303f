#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "planes/linalg.hpp"

using namespace planes;

namespace {

Mat random_mat(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = d(rng);
  return m;
}

bool is_rref(const Mat& m) {
  int last_pivot = -1;
  for (int r = 0; r < m.rows(); ++r) {
    int lead = -1;
    for (int c = 0; c < m.cols(); ++c)
      if (sgn(m.at(r, c)) != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;  // zero rows trail
    if (lead <= last_pivot) return false;
    if (m.at(r, lead) != Rat(1)) return false;
    for (int r2 = 0; r2 < m.rows(); ++r2)
      if (r2 != r && sgn(m.at(r2, lead)) != 0) return false;
    last_pivot = lead;
  }
  return true;
}

}  // namespace

TEST_CASE("rref is idempotent, reduced, and rank-preserving") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    Mat m = random_mat(rng, 5, 7, 4);
    Mat r = m.rref();
    CHECK(is_rref(r));
    CHECK(r.rref() == r);
    CHECK(r.rank() == m.rank());
  }
}

TEST_CASE("nullspace vectors are exact kernel elements of full dimension") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    Mat m = random_mat(rng, 4, 8, 3);
    auto ns = m.nullspace();
    CHECK(static_cast<int>(ns.size()) == m.cols() - m.rank());
    for (const auto& v : ns)
      for (int r = 0; r < m.rows(); ++r) {
        Rat acc(0);
        for (int c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[c];
        CHECK(sgn(acc) == 0);
      }
  }
}

TEST_CASE("solve returns exact solutions and detects inconsistency") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 30; ++t) {
    Mat m = random_mat(rng, 5, 4, 4);
    std::vector<Rat> x(4);
    for (auto& c : x) c = d(rng);
    std::vector<Rat> b(5);
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 4; ++c) b[r] += m.at(r, c) * x[c];
    auto sol = m.solve(b);
    REQUIRE(sol.has_value());
    for (int r = 0; r < 5; ++r) {
      Rat acc(0);
      for (int c = 0; c < 4; ++c) acc += m.at(r, c) * (*sol)[c];
      CHECK(acc == b[r]);
    }
  }
  // x + y = 0 and x + y = 1 cannot both hold.
  Mat bad(2, 2);
  bad.at(0, 0) = 1;
  bad.at(0, 1) = 1;
  bad.at(1, 0) = 1;
  bad.at(1, 1) = 1;
  CHECK(!bad.solve({Rat(0), Rat(1)}).has_value());
}

TEST_CASE("inverse multiplies back to the identity") {
  std::mt19937_64 rng(4);
  int found = 0;
  while (found < 10) {
    Mat m = random_mat(rng, 5, 5, 4);
    auto inv = m.inverse();
    if (!inv) continue;
    ++found;
    CHECK(m * *inv == Mat::identity(5));
    CHECK(*inv * m == Mat::identity(5));
  }
  Mat sing(3, 3);  // rank 1
  for (int c = 0; c < 3; ++c) {
    sing.at(0, c) = c + 1;
    sing.at(1, c) = 2 * (c + 1);
  }
  CHECK(!sing.inverse().has_value());
}

TEST_CASE("column space intersection has the right dimension and members") {
  // span{e0,e1} and span{e1,e2} meet in span{e1}.
  Mat a(4, 2), b(4, 2);
  a.at(0, 0) = 1;
  a.at(1, 1) = 1;
  b.at(1, 0) = 1;
  b.at(2, 1) = 1;
  CHECK(column_space_intersection_dim(a, b) == 1);
  auto basis = column_space_intersection(a, b);
  REQUIRE(basis.size() == 1);
  CHECK(in_column_span(a, basis[0]));
  CHECK(in_column_span(b, basis[0]));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    Mat x = random_mat(rng, 6, 3, 3), y = random_mat(rng, 6, 3, 3);
    Mat joint = x;
    for (int c = 0; c < 3; ++c) joint.append_col(y.col(c));
    CHECK(column_space_intersection_dim(x, y) ==
          x.rank() + y.rank() - joint.rank());
    for (const auto& v : column_space_intersection(x, y)) {
      CHECK(in_column_span(x, v));
      CHECK(in_column_span(y, v));
    }
  }
}

TEST_CASE("symmetric_rank agrees with dense rank") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 20; ++t) {
    int n = 4;
    std::vector<Rat> a(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        a[i * n + j] = d(rng);
        a[j * n + i] = a[i * n + j];
      }
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = a[i * n + j];
    CHECK(symmetric_rank(a, n) == m.rank());
  }
}
