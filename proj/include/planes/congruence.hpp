#pragma once

#include <optional>

#include "planes/membership.hpp"

namespace planes {

/// Field variables u^1..u^4 and flux values V^1..V^4 of the line congruence
/// y^i = u^i y^5 + V^i y^6.
struct CongruencePoint {
  std::array<Rat, 4> u{};
  std::array<Rat, 4> v{};
};

/// Skew matrix of 2x2 minors of ((u, 1, 0), (V, 0, 1)); decomposable as a
/// 2-form, so Y ^ Y = 0.
TwoForm plucker(const std::array<Rat, 4>& u, const std::array<Rat, 4>& v);

/// (tr(Y A^1), ..., tr(Y A^4)) with A^i the skew matrices of H's basis.
std::array<Rat, 4> flux_residuals(const Plane& h, const CongruencePoint& p);

/// Solves the affine-linear system tr(Y(u,V) A^i) = 0 for V; nullopt when
/// the 4x4 coefficient matrix is singular.
std::optional<std::array<Rat, 4>> solve_fluxes(const Plane& h,
                                               const std::array<Rat, 4>& u);

/// Validates the kernel relation q of a member plane as the symmetric matrix
/// of the congruence relation sum q_ij w_i ^ w_j = 0.
bool relation5_check(const Plane& h);

}  // namespace planes
