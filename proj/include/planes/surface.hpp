#pragma once

#include <optional>
#include <utility>

#include "planes/families.hpp"
#include "planes/membership.hpp"
#include "planes/poly.hpp"

namespace planes {

/// Point of P^3, normalized so the first nonzero coordinate is 1.
struct ProjPoint {
  std::array<Rat, 4> x{};

  static ProjPoint normalized(std::array<Rat, 4> coords);
  bool operator==(const ProjPoint&) const = default;
};

/// Homogeneous cubic in 4 variables, stored as 20 coefficients over the
/// sorted variable triples (a <= b <= c), e.g. (0,0,2) is the monomial
/// x0^2 x2.
class CubicForm {
 public:
  CubicForm() = default;
  explicit CubicForm(Poly p);  // checks homogeneity of degree 3

  static std::vector<std::array<int, 3>> monomials();  // 20 sorted triples

  const Poly& poly() const { return p_; }
  Rat coeff(int a, int b, int c) const;
  bool is_zero() const { return p_.is_zero(); }
  bool operator==(const CubicForm&) const = default;

  Rat eval(const std::array<Rat, 4>& x) const { return p_.eval(x); }
  Poly partial(int var) const { return p_.derivative(var); }

  /// True iff other == s * this for a nonzero rational s; returns s.
  std::optional<Rat> proportionality(const CubicForm& other) const;

 private:
  Poly p_;
};

/// Pf(sum x_i w_i) as a cubic in the plane's basis coordinates, with the
/// normalization Pf(e01+e23+e45) = 1.
CubicForm char_cubic(const Plane& h);

struct SingularPointsResult {
  std::vector<ProjPoint> points;
  bool possibly_incomplete = false;
};

/// Rational singular points of the cubic surface, found chart by chart with
/// a height-bounded grid on the free coordinates and exact root extraction
/// in the last one.
SingularPointsResult singular_points(const CubicForm& f, int height_bound = 10);

bool is_singular_at(const CubicForm& f, const ProjPoint& p);

struct SingularityReport {
  ProjPoint point;
  std::optional<int> milnor;  // nullopt = non-isolated
  std::optional<int> ade_k;   // A_k tag when corank <= 1
  int corank = 0;
};

/// Milnor number by truncated local-algebra dimensions at increasing degree
/// bounds (cap 10); non-stabilization reports a non-isolated singularity.
SingularityReport ade_type(const CubicForm& f, const ProjPoint& p,
                           int degree_cap = 10);

/// Vertex p with the directional derivative D_p F identically zero, if any.
std::optional<ProjPoint> cone_test(const CubicForm& f);

/// The H-symmetry predicate for a rank-4 basis form w0 with H in V4 ^ V6.
bool h_symmetric_test(const Plane& h, int omega0_index);

struct SplitReport {
  std::array<Rat, 4> linear_factor{};
  Mat residual_quadric;  // symmetric 4x4
  int quadric_rank = 0;
  std::optional<ProjPoint> vertex;       // present iff quadric_rank == 3
  std::optional<bool> vertex_on_plane;
};

/// Exact division F = l * Q; throws NotAFactorError when l does not divide.
SplitReport split_off_plane(const CubicForm& f, const std::array<Rat, 4>& l);

struct LinearFactorResult {
  std::optional<std::array<Rat, 4>> factor;
  std::optional<SplitReport> split;
  bool search_incomplete = false;
};

/// Searches coordinate hyperplanes, planes through triples of found singular
/// points, and a height-bounded coefficient grid.
LinearFactorResult find_linear_factor(const CubicForm& f, int height_bound = 5);

/// Orthogonality of the kernel relation to the nine 2x2-minor quadrics of
/// the determinantal representation.
bool schur_orthogonality(const Plane& h, const LinearFormMatrix& m);

}  // namespace planes
