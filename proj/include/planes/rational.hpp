#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace planes {

/// Exact rational scalar. Always kept canonical (reduced, positive denominator).
using Rat = mpq_class;

/// Parses "p/q" or "n" into a canonical rational.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace planes
