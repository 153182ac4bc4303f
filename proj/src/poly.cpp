#include "planes/poly.hpp"

#include <algorithm>

namespace planes {

Poly Poly::constant(const Rat& c) { return monomial({0, 0, 0, 0}, c); }

Poly Poly::var(int i) {
  Expo e{0, 0, 0, 0};
  e[i] = 1;
  return monomial(e, Rat(1));
}

Poly Poly::monomial(const Expo& e, const Rat& c) {
  Poly p;
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Expo& e, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = t_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

Rat Poly::coeff(const Expo& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rat(0) : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_)
    d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      Expo e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
      r.add_term(e, c1 * c2);
    }
  return r;
}

Poly Poly::operator*(const Rat& s) const {
  Poly r;
  if (sgn(s) == 0) return r;
  for (const auto& [e, c] : t_) r.t_[e] = c * s;
  return r;
}

Poly Poly::operator-() const { return *this * Rat(-1); }

Poly Poly::derivative(int var) const {
  Poly r;
  for (const auto& [e, c] : t_) {
    if (e[var] == 0) continue;
    Expo d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

Poly Poly::truncated(int max_degree) const {
  Poly r;
  for (const auto& [e, c] : t_)
    if (e[0] + e[1] + e[2] + e[3] <= max_degree) r.t_[e] = c;
  return r;
}

Rat Poly::eval(const std::array<Rat, 4>& x) const {
  Rat acc(0);
  for (const auto& [e, c] : t_) {
    Rat term = c;
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < e[v]; ++k) term *= x[v];
    acc += term;
  }
  return acc;
}

Poly Poly::substitute(const std::array<Poly, 4>& repl) const {
  Poly r;
  for (const auto& [e, c] : t_) {
    Poly term = Poly::constant(c);
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < e[v]; ++k) term = term * repl[v];
    r = r + term;
  }
  return r;
}

}  // namespace planes
