#pragma once

#include <array>
#include <optional>

#include "planes/membership.hpp"

namespace planes {

struct SamplerConfig {
  unsigned long seed = 1;
  int coeff_bound = 3;   // integer coefficients drawn from [-bound, bound]
  int max_retries = 200;
};

struct CartanTriple {
  Rat a, b, c;
};

/// The semisimple Cartan-family 3-plane with parameters (a,b,c):
///   w1 = a e12 + b e36 + c e54,  w2 = a e34 + b e52 + c e16,
///   w3 = a e56 + b e14 + c e32   (one-based indices).
Plane semisimple_three_plane(const CartanTriple& t);

/// True iff (omega ^ L) and (L ^ L) intersect only in 0.
bool omega_L_transversal(const Plane& l, const TwoForm& omega);

/// Completes a 3-plane L to <pf_star(Omega), L> where Omega is a symmetric
/// 3x3 matrix read in Sym^2 L (the (L, Omega) -> H parametrization).
Plane extend_by_pfstar(const Plane& l, const Mat& omega);

/// Draws random integer (L, Omega) until the extension is a member plane.
Plane sample_V(const SamplerConfig& cfg);

/// 3x3 matrix of linear forms in 4 variables: entry (r,s) has coefficient
/// lin[r][s][k] on x_k.
using LinearFormMatrix = std::array<std::array<std::array<Rat, 4>, 3>, 3>;

/// Embeds the coefficient matrices as two-forms in V+ tensor V-, with
/// V+ = <e0,e2,e4> and V- = <e1,e3,e5>.
Plane determinantal_plane(const LinearFormMatrix& m);

/// Recovers the linear-form matrix from a plane contained in V+ tensor V-.
LinearFormMatrix determinantal_matrix(const Plane& h);

/// The triple-tritangent family <omega(x,y,z,a,b,c), L>.
Plane tritangent_extension(const Rat& x, const Rat& y, const Rat& z,
                           const Rat& a, const Rat& b, const Rat& c);

/// The Cayley-surface family with coefficients A..E.
Plane cayley_plane(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                   const Rat& e);

/// The unique member extension of the type-2 constant-rank-4 plane,
/// basis order (a, b, c, d)-forms.
Plane type2_plane();

/// <omega, L> with omega = e0^u0 + e1^u1 + u0^u1 for the type-3 plane L.
Plane type3_plane(const Vector6& u0, const Vector6& u1);

/// Printed representatives of the four constant-rank-4 3-plane types.
Plane type1_plane_rep();
Plane type2_plane_rep();
Plane type3_plane_rep();
Plane type4_plane_rep();

/// Classification of a constant-rank-4 3-plane into types 1..4.
int rank4_plane_type(const Plane& l, unsigned seed = 777);

/// Bounded search for member extensions of the type-1 / type-4
/// representatives over their derived candidate sets.
struct ExtensionSearchResult {
  long candidates = 0;
  long members_found = 0;
};

ExtensionSearchResult extension_search_type1(int bound, unsigned seed = 42,
                                             int random_draws = 2000);
ExtensionSearchResult extension_search_type4(int bound, unsigned seed = 42,
                                             int random_draws = 20);

/// Membership test for <l, w> reusing cached L^L products; false when the
/// joint span is degenerate.
bool extension_is_member(const Plane& l, const Mat& ll_cols, const TwoForm& w);

/// The 15 x 6 matrix of the products w_i ^ w_j of a 3-plane.
Mat ll_products(const Plane& l);

TwoForm wedge_vv(const Vector6& u, const Vector6& v);

}  // namespace planes
