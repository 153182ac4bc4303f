#include "planes/congruence.hpp"

namespace planes {

TwoForm plucker(const std::array<Rat, 4>& u, const std::array<Rat, 4>& v) {
  std::array<Rat, 6> r0{}, r1{};
  for (int i = 0; i < 4; ++i) {
    r0[i] = u[i];
    r1[i] = v[i];
  }
  r0[4] = 1;
  r1[5] = 1;
  TwoForm y;
  for (int p = 0; p < kNumPairs; ++p) {
    auto [a, b] = kPairs[p];
    y.at(p) = r0[a] * r1[b] - r0[b] * r1[a];
  }
  return y;
}

namespace {

Rat trace_pairing(const TwoForm& y, const TwoForm& a) {
  // tr(Y A) = sum_{ab} Y_ab A_ba = -2 sum_{a<b} Y_ab A_ab
  Rat t(0);
  for (int p = 0; p < kNumPairs; ++p) t += y.at(p) * a.at(p);
  return -2 * t;
}

}  // namespace

std::array<Rat, 4> flux_residuals(const Plane& h, const CongruencePoint& p) {
  if (h.size() != 4) throw PlanesError("flux_residuals expects a 4-plane");
  TwoForm y = plucker(p.u, p.v);
  std::array<Rat, 4> res;
  for (int i = 0; i < 4; ++i) res[i] = trace_pairing(y, h[i]);
  return res;
}

std::optional<std::array<Rat, 4>> solve_fluxes(const Plane& h,
                                               const std::array<Rat, 4>& u) {
  if (h.size() != 4) throw PlanesError("solve_fluxes expects a 4-plane");
  // Residuals are affine-linear in V: evaluate at V = 0 and V = e_j.
  CongruencePoint p0{u, {}};
  std::array<Rat, 4> c = flux_residuals(h, p0);
  Mat m(4, 4);
  for (int j = 0; j < 4; ++j) {
    CongruencePoint pj{u, {}};
    pj.v[j] = 1;
    std::array<Rat, 4> rj = flux_residuals(h, pj);
    for (int i = 0; i < 4; ++i) m.at(i, j) = rj[i] - c[i];
  }
  if (m.rank() < 4) return std::nullopt;
  std::vector<Rat> rhs(4);
  for (int i = 0; i < 4; ++i) rhs[i] = -c[i];
  auto sol = m.solve(rhs);
  if (!sol) return std::nullopt;
  return std::array<Rat, 4>{(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]};
}

bool relation5_check(const Plane& h) {
  MembershipReport rep = membership(h);
  if (rep.verdict != Verdict::Member || !rep.relation) throw NotMemberError();
  Mat q = rep.relation->matrix();
  FourForm acc;
  for (int i = 0; i < h.size(); ++i)
    for (int j = 0; j < h.size(); ++j)
      acc = acc + wedge22(h[i], h[j]) * q.at(i, j);
  return acc.is_zero();
}

}  // namespace planes
