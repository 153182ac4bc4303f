#include "planes/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace planes {

ProjPoint ProjPoint::normalized(std::array<Rat, 4> coords) {
  for (const auto& c : coords) {
    if (sgn(c) != 0) {
      Rat inv = 1 / c;
      ProjPoint p;
      for (int i = 0; i < 4; ++i) p.x[i] = coords[i] * inv;
      return p;
    }
  }
  throw PlanesError("zero vector is not a projective point");
}

CubicForm::CubicForm(Poly p) : p_(std::move(p)) {
  for (const auto& [e, c] : p_.terms())
    if (e[0] + e[1] + e[2] + e[3] != 3)
      throw PlanesError("cubic form must be homogeneous of degree 3");
}

std::vector<std::array<int, 3>> CubicForm::monomials() {
  std::vector<std::array<int, 3>> m;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b)
      for (int c = b; c < 4; ++c) m.push_back({a, b, c});
  return m;
}

Rat CubicForm::coeff(int a, int b, int c) const {
  Poly::Expo e{0, 0, 0, 0};
  ++e[a];
  ++e[b];
  ++e[c];
  return p_.coeff(e);
}

std::optional<Rat> CubicForm::proportionality(const CubicForm& other) const {
  if (is_zero() || other.is_zero()) return std::nullopt;
  Rat s(0);
  for (const auto& [e, c] : p_.terms()) {
    Rat oc = other.p_.coeff(e);
    if (sgn(oc) == 0) return std::nullopt;
    if (sgn(s) == 0)
      s = oc / c;
    else if (oc / c != s)
      return std::nullopt;
  }
  if (other.p_.terms().size() != p_.terms().size()) return std::nullopt;
  return s;
}

CubicForm char_cubic(const Plane& h) {
  if (h.size() != 4) throw PlanesError("char_cubic expects a 4-plane");
  Poly p;
  for (const auto& [a, b, c] : CubicForm::monomials()) {
    Rat w = wedge24(h[a], wedge22(h[b], h[c])).coeff;
    if (sgn(w) == 0) continue;
    if (a == c)
      w /= 6;  // x_a^3
    else if (a == b || b == c)
      w /= 2;  // x_a^2 x_b
    Poly::Expo e{0, 0, 0, 0};
    ++e[a];
    ++e[b];
    ++e[c];
    p.add_term(e, w);
  }
  return CubicForm(p);
}

namespace {

/// All reduced rationals p/q with |p| <= bound, 1 <= q <= bound, plus 0.
std::vector<Rat> height_rationals(int bound) {
  std::vector<Rat> out;
  out.emplace_back(0);
  for (int q = 1; q <= bound; ++q)
    for (int p = 1; p <= bound; ++p) {
      if (std::gcd(p, q) != 1) continue;
      out.emplace_back(Rat(p, q));
      out.emplace_back(Rat(-p, q));
    }
  return out;
}

std::optional<Rat> rat_sqrt(const Rat& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (sgn(r) == 0) return Rat(0);
  const mpz_class &num = r.get_num(), &den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rat(sn, sd);
}

/// Rational roots of c2 t^2 + c1 t + c0.
std::vector<Rat> quadratic_roots(const Rat& c2, const Rat& c1, const Rat& c0) {
  std::vector<Rat> roots;
  if (sgn(c2) == 0) {
    if (sgn(c1) != 0) roots.push_back(-c0 / c1);
    return roots;
  }
  auto s = rat_sqrt(c1 * c1 - 4 * c2 * c0);
  if (!s) return roots;
  roots.push_back((-c1 + *s) / (2 * c2));
  if (sgn(*s) != 0) roots.push_back((-c1 - *s) / (2 * c2));
  return roots;
}

void add_point(std::vector<ProjPoint>& pts, std::array<Rat, 4> coords) {
  ProjPoint p = ProjPoint::normalized(std::move(coords));
  if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
}

}  // namespace

SingularPointsResult singular_points(const CubicForm& f, int height_bound) {
  if (f.is_zero()) throw ZeroCubicError();
  std::array<Poly, 4> partial;
  for (int v = 0; v < 4; ++v) partial[v] = f.partial(v);

  SingularPointsResult res;
  res.possibly_incomplete = true;  // grid-bounded in the free coordinates
  std::vector<Rat> grid = height_rationals(height_bound);

  for (int k = 0; k < 4; ++k) {
    // Chart: x_j = 0 for j < k, x_k = 1, x_j free for j > k.
    std::vector<int> free_vars;
    for (int j = k + 1; j < 4; ++j) free_vars.push_back(j);

    auto check_and_add = [&](const std::array<Rat, 4>& x) {
      for (int v = 0; v < 4; ++v)
        if (sgn(partial[v].eval(x)) != 0) return;
      add_point(res.points, x);
    };

    if (free_vars.empty()) {
      std::array<Rat, 4> x{};
      x[k] = 1;
      check_and_add(x);
      continue;
    }

    int lv = free_vars.back();
    int nfix = static_cast<int>(free_vars.size()) - 1;

    // Coefficients of lv^0..lv^2 of each partial, as polys in the fixed vars.
    std::array<std::array<Poly, 3>, 4> by_lv;
    for (int v = 0; v < 4; ++v)
      for (const auto& [e, c] : partial[v].terms()) {
        bool in_chart = true;
        for (int j = 0; j < k; ++j)
          if (e[j] > 0) in_chart = false;
        if (!in_chart) continue;
        Poly::Expo rest = e;
        rest[k] = 0;  // x_k = 1
        int d = rest[lv];
        rest[lv] = 0;
        by_lv[v][d].add_term(rest, c);
      }

    std::vector<int> idx(nfix, 0);
    while (true) {
      std::array<Rat, 4> x{};
      x[k] = 1;
      for (int t = 0; t < nfix; ++t) x[free_vars[t]] = grid[idx[t]];

      // First partial with a nonzero univariate restriction gates the rest.
      bool all_zero = true;
      std::vector<Rat> roots;
      for (int v = 0; v < 4; ++v) {
        Rat c2 = by_lv[v][2].eval(x);
        Rat c1 = by_lv[v][1].eval(x);
        Rat c0 = by_lv[v][0].eval(x);
        if (sgn(c2) == 0 && sgn(c1) == 0 && sgn(c0) == 0) continue;
        all_zero = false;
        roots = quadratic_roots(c2, c1, c0);
        break;
      }
      if (all_zero) {
        // Singular along the whole lv-line; report representatives.
        for (int r : {0, 1, -1}) {
          std::array<Rat, 4> y = x;
          y[lv] = r;
          add_point(res.points, y);
        }
      } else {
        for (const Rat& r : roots) {
          std::array<Rat, 4> y = x;
          y[lv] = r;
          check_and_add(y);
        }
      }

      int t = nfix - 1;
      for (; t >= 0; --t) {
        if (++idx[t] < static_cast<int>(grid.size())) break;
        idx[t] = 0;
      }
      if (t < 0) break;
    }
  }
  return res;
}

bool is_singular_at(const CubicForm& f, const ProjPoint& p) {
  for (int v = 0; v < 4; ++v)
    if (sgn(f.partial(v).eval(p.x)) != 0) return false;
  return true;
}

namespace {

std::vector<std::array<int, 3>> local_monomials(int max_deg) {
  std::vector<std::array<int, 3>> m;
  for (int d = 0; d <= max_deg; ++d)
    for (int a = 0; a <= d; ++a)
      for (int b = 0; b <= d - a; ++b) m.push_back({a, b, d - a - b});
  return m;
}

}  // namespace

SingularityReport ade_type(const CubicForm& f, const ProjPoint& p,
                           int degree_cap) {
  if (!is_singular_at(f, p)) throw NotSingularError();

  int k = 0;
  while (sgn(p.x[k]) == 0) ++k;
  std::vector<int> locals;
  for (int v = 0; v < 4; ++v)
    if (v != k) locals.push_back(v);

  std::array<Poly, 4> repl;
  repl[k] = Poly::constant(Rat(1));
  for (int v : locals) repl[v] = Poly::constant(p.x[v]) + Poly::var(v);
  Poly f_loc = f.poly().substitute(repl);

  std::array<Poly, 3> gens;
  for (int i = 0; i < 3; ++i) gens[i] = f_loc.derivative(locals[i]);

  // Hessian corank at the origin.
  Mat hess(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Poly::Expo e{0, 0, 0, 0};
      ++e[locals[i]];
      ++e[locals[j]];
      Rat c = f_loc.coeff(e);
      hess.at(i, j) = (i == j) ? 2 * c : c;
    }
  SingularityReport rep;
  rep.point = p;
  rep.corank = 3 - hess.rank();

  // mu_D = dim Q[y] / (Jacobian ideal + m^{D+1}); stabilization gives mu.
  std::optional<int> prev;
  for (int d = 2; d <= degree_cap; ++d) {
    auto mons = local_monomials(d);
    std::map<std::array<int, 3>, int> mon_idx;
    for (size_t i = 0; i < mons.size(); ++i) mon_idx[mons[i]] = static_cast<int>(i);

    auto mult_mons = local_monomials(d - 1);
    std::vector<std::vector<Rat>> rows;
    for (const auto& g : gens)
      for (const auto& mm : mult_mons) {
        std::vector<Rat> row(mons.size());
        bool nonzero = false;
        for (const auto& [e, c] : g.terms()) {
          std::array<int, 3> le{mm[0] + e[locals[0]], mm[1] + e[locals[1]],
                                mm[2] + e[locals[2]]};
          if (le[0] + le[1] + le[2] > d) continue;
          row[mon_idx[le]] += c;
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    int mu = static_cast<int>(mons.size()) - Mat::from_rows(rows).rank();
    if (prev && mu == *prev) {
      rep.milnor = mu;
      if (rep.corank <= 1) rep.ade_k = mu;
      return rep;
    }
    prev = mu;
  }
  rep.milnor = std::nullopt;  // dimensions never stabilized: non-isolated
  return rep;
}

std::optional<ProjPoint> cone_test(const CubicForm& f) {
  if (f.is_zero()) throw ZeroCubicError();
  // D_p F = sum_k p_k dF/dx_k must vanish identically: linear in p.
  std::map<Poly::Expo, std::array<Rat, 4>> rows;
  for (int v = 0; v < 4; ++v) {
    Poly dv = f.partial(v);
    for (const auto& [e, c] : dv.terms()) rows[e][v] = c;
  }
  Mat m(static_cast<int>(rows.size()), 4);
  int r = 0;
  for (const auto& [e, coeffs] : rows) {
    for (int v = 0; v < 4; ++v) m.at(r, v) = coeffs[v];
    ++r;
  }
  auto ns = m.nullspace();
  if (ns.empty()) return std::nullopt;
  return ProjPoint::normalized({ns[0][0], ns[0][1], ns[0][2], ns[0][3]});
}

bool h_symmetric_test(const Plane& h, int omega0_index) {
  if (h.size() != 4) throw PlanesError("expected a 4-plane");
  const TwoForm& w0 = h[omega0_index];
  if (rank2(w0) != 4)
    throw PreconditionError("omega0 must have rank 4");
  FourForm w0sq = pf(w0);
  for (int i = 0; i < 4; ++i)
    if (sgn(wedge24(h[i], w0sq).coeff) != 0)
      throw PreconditionError("H is not contained in V4 ^ V6");

  // V4 = support of omega0; complete to a basis of V6.
  auto sm = w0.skew_matrix();
  Mat img(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) img.at(i, j) = sm[i * 6 + j];
  Mat basis(6, 0);
  std::vector<std::vector<Rat>> v4cols;
  {
    Mat span(6, 0);
    for (int c = 0; c < 6; ++c) {
      Mat trial = span;
      trial.append_col(img.col(c));
      if (trial.rank() > span.rank()) {
        span = trial;
        v4cols.push_back(img.col(c));
      }
    }
  }
  if (v4cols.size() != 4) throw PreconditionError("support of omega0 is not 4-dimensional");
  for (const auto& c : v4cols) basis.append_col(c);
  for (int k = 0; k < 6 && basis.cols() < 6; ++k) {
    std::vector<Rat> e(6);
    e[k] = 1;
    Mat trial = basis;
    trial.append_col(e);
    if (trial.rank() > basis.rank()) basis = trial;
  }
  Mat pinv = *basis.inverse();

  // alpha/beta parts of each basis form in the adapted coordinates.
  std::vector<Vector6> alpha(4), beta(4);
  for (int r = 0; r < 4; ++r) {
    auto m = h[r].skew_matrix();
    Mat mm(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) mm.at(i, j) = m[i * 6 + j];
    Mat mp = pinv * mm * pinv.transposed();
    if (sgn(mp.at(4, 5)) != 0)
      throw PreconditionError("form has a component outside V4 ^ V6");
    for (int c = 0; c < 4; ++c) {
      // alpha = sum_m M'_{4m} b_m, beta = sum_m M'_{5m} b_m  (in e-coords)
      for (int i = 0; i < 6; ++i) {
        alpha[r][i] += mp.at(4, c) * basis.at(i, c);
        beta[r][i] += mp.at(5, c) * basis.at(i, c);
      }
    }
  }

  for (int r = 0; r < 4; ++r)
    for (int s = r; s < 4; ++s) {
      FourForm v = wedge22(w0, wedge_vv(alpha[r], beta[s])) +
                   wedge22(w0, wedge_vv(alpha[s], beta[r]));
      if (!v.is_zero()) return false;
    }
  return true;
}

SplitReport split_off_plane(const CubicForm& f, const std::array<Rat, 4>& l) {
  bool l_zero = true;
  for (const auto& c : l)
    if (sgn(c) != 0) l_zero = false;
  if (l_zero) throw PlanesError("zero linear form");

  Poly lp;
  for (int v = 0; v < 4; ++v)
    if (sgn(l[v]) != 0) lp.add_term(Poly::var(v).terms().begin()->first, l[v]);

  // Solve F = l * Q for the 10 quadric coefficients.
  std::vector<std::array<int, 2>> qmons;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) qmons.push_back({i, j});
  auto cmons = CubicForm::monomials();
  Mat m(static_cast<int>(cmons.size()), static_cast<int>(qmons.size()));
  for (size_t c = 0; c < qmons.size(); ++c) {
    Poly prod = lp * Poly::var(qmons[c][0]) * Poly::var(qmons[c][1]);
    for (size_t r = 0; r < cmons.size(); ++r) {
      Poly::Expo e{0, 0, 0, 0};
      ++e[cmons[r][0]];
      ++e[cmons[r][1]];
      ++e[cmons[r][2]];
      m.at(static_cast<int>(r), static_cast<int>(c)) = prod.coeff(e);
    }
  }
  std::vector<Rat> rhs(cmons.size());
  for (size_t r = 0; r < cmons.size(); ++r)
    rhs[r] = f.coeff(cmons[r][0], cmons[r][1], cmons[r][2]);
  auto q = m.solve(rhs);
  if (!q) throw NotAFactorError();

  SplitReport rep;
  rep.linear_factor = l;
  rep.residual_quadric = Mat(4, 4);
  for (size_t c = 0; c < qmons.size(); ++c) {
    int i = qmons[c][0], j = qmons[c][1];
    if (i == j) {
      rep.residual_quadric.at(i, i) = (*q)[c];
    } else {
      rep.residual_quadric.at(i, j) = (*q)[c] / 2;
      rep.residual_quadric.at(j, i) = (*q)[c] / 2;
    }
  }
  rep.quadric_rank = rep.residual_quadric.rank();
  if (rep.quadric_rank == 3) {
    auto ns = rep.residual_quadric.nullspace();
    rep.vertex = ProjPoint::normalized({ns[0][0], ns[0][1], ns[0][2], ns[0][3]});
    Rat on(0);
    for (int v = 0; v < 4; ++v) on += l[v] * rep.vertex->x[v];
    rep.vertex_on_plane = sgn(on) == 0;
  }
  return rep;
}

LinearFactorResult find_linear_factor(const CubicForm& f, int height_bound) {
  if (f.is_zero()) throw ZeroCubicError();
  LinearFactorResult res;

  auto try_factor = [&](const std::array<Rat, 4>& l) -> bool {
    try {
      res.split = split_off_plane(f, l);
      res.factor = l;
      return true;
    } catch (const NotAFactorError&) {
      return false;
    }
  };

  // Cheap necessary filter: F vanishes at a spanning set of the plane l = 0.
  auto passes_filter = [&](const std::array<Rat, 4>& l) -> bool {
    int k = 0;
    while (sgn(l[k]) == 0) ++k;
    std::vector<std::array<Rat, 4>> pts;
    for (int v = 0; v < 4; ++v) {
      if (v == k) continue;
      std::array<Rat, 4> b{};
      b[v] = 1;
      b[k] = -l[v] / l[k];
      pts.push_back(b);
    }
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i; j < pts.size(); ++j) {
        std::array<Rat, 4> s;
        for (int v = 0; v < 4; ++v)
          s[v] = (i == j) ? pts[i][v] : pts[i][v] + pts[j][v];
        if (sgn(f.eval(s)) != 0) return false;
      }
    return true;
  };

  // (i) coordinate hyperplanes
  for (int k = 0; k < 4; ++k) {
    std::array<Rat, 4> l{};
    l[k] = 1;
    if (passes_filter(l) && try_factor(l)) return res;
  }

  // (ii) planes through triples of found singular points
  auto sing = singular_points(f);
  const auto& pts = sing.points;
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b)
      for (size_t c = b + 1; c < pts.size(); ++c) {
        Mat m(3, 4);
        for (int v = 0; v < 4; ++v) {
          m.at(0, v) = pts[a].x[v];
          m.at(1, v) = pts[b].x[v];
          m.at(2, v) = pts[c].x[v];
        }
        auto ns = m.nullspace();
        if (ns.size() != 1) continue;
        std::array<Rat, 4> l{ns[0][0], ns[0][1], ns[0][2], ns[0][3]};
        if (passes_filter(l) && try_factor(l)) return res;
      }

  // (iii) height-bounded grid, first nonzero coefficient normalized to 1
  std::vector<Rat> grid = height_rationals(height_bound);
  for (int k = 0; k < 4; ++k) {
    int nfree = 3 - k;
    std::vector<int> idx(nfree, 0);
    while (true) {
      std::array<Rat, 4> l{};
      l[k] = 1;
      for (int t = 0; t < nfree; ++t) l[k + 1 + t] = grid[idx[t]];
      if (passes_filter(l) && try_factor(l)) return res;
      int t = nfree - 1;
      for (; t >= 0; --t) {
        if (++idx[t] < static_cast<int>(grid.size())) break;
        idx[t] = 0;
      }
      if (t < 0) break;
    }
  }

  res.search_incomplete = true;
  return res;
}

bool schur_orthogonality(const Plane& h, const LinearFormMatrix& m) {
  MembershipReport rep = membership(h);
  if (rep.verdict != Verdict::Member || !rep.relation) throw NotMemberError();
  Mat q = rep.relation->matrix();

  for (int r = 0; r < 3; ++r)
    for (int rp = r + 1; rp < 3; ++rp)
      for (int s = 0; s < 3; ++s)
        for (int sp = s + 1; sp < 3; ++sp) {
          // 2x2 minor quadric: symmetric coefficient matrix over x_0..x_3.
          Mat a(4, 4);
          for (int k = 0; k < 4; ++k)
            for (int l2 = 0; l2 < 4; ++l2) {
              Rat v = m[r][s][k] * m[rp][sp][l2] - m[r][sp][k] * m[rp][s][l2];
              a.at(k, l2) += v / 2;
              a.at(l2, k) += v / 2;
            }
          Rat tr(0);
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) tr += a.at(i, j) * q.at(j, i);
          if (sgn(tr) != 0) return false;
        }
  return true;
}

}  // namespace planes
