#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "planes/rational.hpp"

namespace planes {

// Exterior algebra of a fixed 6-dimensional rational vector space with basis
// e0..e5. Two-forms and four-forms are stored densely over the 15 ordered
// index subsets; the volume form is e0^e1^e2^e3^e4^e5.

inline constexpr int kDim = 6;
inline constexpr int kNumPairs = 15;
inline constexpr int kNumQuads = 15;

namespace detail {

constexpr std::array<std::array<int, 2>, kNumPairs> make_pairs() {
  std::array<std::array<int, 2>, kNumPairs> p{};
  int n = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j) p[n++] = {i, j};
  return p;
}

constexpr std::array<std::array<int, 4>, kNumQuads> make_quads() {
  std::array<std::array<int, 4>, kNumQuads> q{};
  int n = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      for (int k = j + 1; k < kDim; ++k)
        for (int l = k + 1; l < kDim; ++l) q[n++] = {i, j, k, l};
  return q;
}

}  // namespace detail

/// Pairs (i,j), i<j, in lexicographic order.
inline constexpr auto kPairs = detail::make_pairs();
/// Ordered 4-subsets of {0..5} in lexicographic order.
inline constexpr auto kQuads = detail::make_quads();

int pair_index(int i, int j);
int quad_index(int i, int j, int k, int l);

/// Complementary quad index of pair p, and the sign of the permutation
/// (p0, p1, c0, c1, c2, c3) of (0..5).
int pair_complement(int pair);
int pair_complement_sign(int pair);

/// Sign of a permutation given as a sequence of distinct values; 0 if repeats.
int perm_sign(const std::vector<int>& seq);

struct Vector6 {
  std::array<Rat, kDim> coords{};
  Rat& operator[](int i) { return coords[i]; }
  const Rat& operator[](int i) const { return coords[i]; }
  bool is_zero() const;
};

class TwoForm {
 public:
  TwoForm() = default;

  /// Builds from (i,j,coeff) terms; indices in any order, e_ji = -e_ij.
  /// With one_based=true indices are 1..6 and get shifted down.
  static TwoForm from_terms(
      const std::vector<std::tuple<int, int, Rat>>& terms,
      bool one_based = false);

  Rat& coeff(int i, int j);
  const Rat& at(int pair) const { return c_[pair]; }
  Rat& at(int pair) { return c_[pair]; }

  /// Signed lookup: works for any i != j.
  Rat get(int i, int j) const;

  bool is_zero() const;
  bool operator==(const TwoForm&) const = default;

  TwoForm operator+(const TwoForm&) const;
  TwoForm operator-(const TwoForm&) const;
  TwoForm operator*(const Rat&) const;
  TwoForm operator-() const;

  /// The associated skew-symmetric 6x6 matrix, row-major.
  std::array<Rat, 36> skew_matrix() const;

  std::array<Rat, kNumPairs> c_{};
};

class FourForm {
 public:
  FourForm() = default;

  const Rat& at(int quad) const { return c_[quad]; }
  Rat& at(int quad) { return c_[quad]; }

  bool is_zero() const;
  bool operator==(const FourForm&) const = default;

  FourForm operator+(const FourForm&) const;
  FourForm operator-(const FourForm&) const;
  FourForm operator*(const Rat&) const;

  std::array<Rat, kNumQuads> c_{};
};

struct SixForm {
  Rat coeff;  // multiple of e0^e1^e2^e3^e4^e5
};

FourForm wedge22(const TwoForm& a, const TwoForm& b);
SixForm wedge24(const TwoForm& a, const FourForm& b);

/// Rank of the associated 6x6 skew matrix; always in {0,2,4,6}.
int rank2(const TwoForm& w);

/// Pfaffian, normalized so Pf(e01+e23+e45) = 1 and w^w^w = 6 Pf(w) vol.
Rat pfaffian(const TwoForm& w);

/// pf(w) = w^w.
FourForm pf(const TwoForm& w);

/// The 2-form on V6* identified with a four-form via <O,w> vol = O ^ w.
TwoForm dual_two(const FourForm& o);

/// Squaring on the dual side: pf_star(pf(w)) = c Pf(w) w for a global c.
TwoForm pf_star(const FourForm& o);

/// Rank of the dual 2-form of a four-form.
int rank4_of_fourform(const FourForm& o);

}  // namespace planes
