#pragma once

#include <array>
#include <map>
#include <vector>

#include "planes/rational.hpp"

namespace planes {

/// Sparse polynomial in (up to) 4 variables over the rationals.
class Poly {
 public:
  using Expo = std::array<int, 4>;

  Poly() = default;
  static Poly constant(const Rat& c);
  static Poly var(int i);
  static Poly monomial(const Expo& e, const Rat& c);

  const std::map<Expo, Rat>& terms() const { return t_; }
  void add_term(const Expo& e, const Rat& c);
  Rat coeff(const Expo& e) const;

  bool is_zero() const { return t_.empty(); }
  int total_degree() const;

  Poly operator+(const Poly&) const;
  Poly operator-(const Poly&) const;
  Poly operator*(const Poly&) const;
  Poly operator*(const Rat&) const;
  Poly operator-() const;
  bool operator==(const Poly&) const = default;

  Poly derivative(int var) const;
  Poly truncated(int max_degree) const;

  Rat eval(const std::array<Rat, 4>& x) const;

  /// Substitutes each variable by the given polynomial.
  Poly substitute(const std::array<Poly, 4>& repl) const;

 private:
  std::map<Expo, Rat> t_;  // zero coefficients never stored
};

}  // namespace planes
