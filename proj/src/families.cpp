#include "planes/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace planes {

namespace {

TwoForm one_based(std::vector<std::tuple<int, int, Rat>> terms) {
  return TwoForm::from_terms(terms, /*one_based=*/true);
}

TwoForm zero_based(std::vector<std::tuple<int, int, Rat>> terms) {
  return TwoForm::from_terms(terms, /*one_based=*/false);
}

std::vector<Rat> form_coords(const TwoForm& w) {
  std::vector<Rat> v(kNumPairs);
  for (int p = 0; p < kNumPairs; ++p) v[p] = w.at(p);
  return v;
}

}  // namespace

TwoForm wedge_vv(const Vector6& u, const Vector6& v) {
  TwoForm w;
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      w.coeff(i, j) = u[i] * v[j] - u[j] * v[i];
  return w;
}

Plane semisimple_three_plane(const CartanTriple& t) {
  if (sgn(t.a) == 0 && sgn(t.b) == 0 && sgn(t.c) == 0) throw ZeroTripleError();
  TwoForm w1 = one_based({{1, 2, t.a}, {3, 6, t.b}, {5, 4, t.c}});
  TwoForm w2 = one_based({{3, 4, t.a}, {5, 2, t.b}, {1, 6, t.c}});
  TwoForm w3 = one_based({{5, 6, t.a}, {1, 4, t.b}, {3, 2, t.c}});
  return Plane({w1, w2, w3});
}

Mat ll_products(const Plane& l) {
  if (l.size() != 3) throw PlanesError("expected a 3-plane");
  return sym2_matrix(l);
}

bool omega_L_transversal(const Plane& l, const TwoForm& omega) {
  Mat ll = ll_products(l);
  Mat wl(kNumQuads, l.size());
  for (int i = 0; i < l.size(); ++i) {
    FourForm f = wedge22(omega, l[i]);
    for (int q = 0; q < kNumQuads; ++q) wl.at(q, i) = f.at(q);
  }
  return column_space_intersection_dim(ll, wl) == 0;
}

Plane extend_by_pfstar(const Plane& l, const Mat& omega) {
  if (l.size() != 3 || omega.rows() != 3 || omega.cols() != 3)
    throw PlanesError("extend_by_pfstar expects a 3-plane and a 3x3 matrix");
  if (omega.rank() < 3) throw QRankDeficientError();
  FourForm f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      f = f + wedge22(l[i], l[j]) * omega.at(i, j);
  if (rank4_of_fourform(f) < 6) throw RankDeficientOmegaError();
  TwoForm w = pf_star(f);
  if (l.contains(w)) throw TransversalityError();
  if (!omega_L_transversal(l, w)) throw TransversalityError();
  return Plane({w, l[0], l[1], l[2]});
}

Plane sample_V(const SamplerConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> dist(-cfg.coeff_bound, cfg.coeff_bound);
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    std::vector<TwoForm> lb(3);
    for (auto& w : lb)
      for (int p = 0; p < kNumPairs; ++p) w.at(p) = dist(rng);
    Mat omega(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        omega.at(i, j) = dist(rng);
        omega.at(j, i) = omega.at(i, j);
      }
    try {
      Plane l(std::move(lb));
      auto checks = three_plane_checks(l, static_cast<unsigned>(rng()));
      if (!checks.sym2_injective || !checks.has_rank6_in_LL) continue;
      Plane h = extend_by_pfstar(l, omega);
      if (membership(h).verdict == Verdict::Member) return h;
    } catch (const PlanesError&) {
      continue;
    }
  }
  throw RetriesExhaustedError();
}

Plane determinantal_plane(const LinearFormMatrix& m) {
  std::vector<TwoForm> basis(4);
  for (int k = 0; k < 4; ++k)
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) {
        int i = 2 * r, j = 2 * s + 1;  // e+_r = e_{2r}, e-_s = e_{2s+1}
        if (i < j)
          basis[k].coeff(i, j) += m[r][s][k];
        else
          basis[k].coeff(j, i) -= m[r][s][k];
      }
  return Plane(std::move(basis));
}

LinearFormMatrix determinantal_matrix(const Plane& h) {
  static const int plus_minus[6] = {0, -1, 1, -1, 2, -1};   // e_{2r} -> r
  LinearFormMatrix m{};
  for (int k = 0; k < h.size(); ++k) {
    for (int p = 0; p < kNumPairs; ++p) {
      if (sgn(h[k].at(p)) == 0) continue;
      int i = kPairs[p][0], j = kPairs[p][1];
      if (i % 2 == j % 2) throw NotDeterminantalError();
      int even = (i % 2 == 0) ? i : j;
      int odd = (i % 2 == 0) ? j : i;
      int r = plus_minus[even], s = (odd - 1) / 2;
      // e_even ^ e_odd vs stored ordered pair
      m[r][s][k] = (even < odd) ? h[k].at(p) : -h[k].at(p);
    }
  }
  return m;
}

Plane tritangent_extension(const Rat& x, const Rat& y, const Rat& z,
                           const Rat& a, const Rat& b, const Rat& c) {
  TwoForm l0 = zero_based({{0, 2, Rat(1)}, {1, 3, Rat(1)}});
  TwoForm l1 = zero_based({{0, 4, Rat(1)}, {1, 5, Rat(1)}});
  TwoForm l2 = zero_based({{0, 1, Rat(1)}, {2, 5, Rat(1)}, {3, 4, Rat(1)}});
  Plane l({l0, l1, l2});

  Rat c01 = x * y - z * z;
  Rat c23 = y * c + a * a;
  Rat c45 = x * c + b * b;
  Rat cA = y * b + z * a;   // e02 - e13
  Rat cB = z * b + x * a;   // e04 - e15
  Rat cC = z * c + a * b;   // e34 - e25
  TwoForm w = zero_based({{0, 1, c01},
                          {2, 3, c23},
                          {4, 5, c45},
                          {0, 2, cA},
                          {1, 3, -cA},
                          {0, 4, cB},
                          {1, 5, -cB},
                          {3, 4, cC},
                          {2, 5, -cC}});
  if (w.is_zero() || l.contains(w) || !omega_L_transversal(l, w))
    throw DegenerateParametersError();
  return Plane({w, l0, l1, l2});
}

Plane cayley_plane(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                   const Rat& e) {
  TwoForm w0 = zero_based({{1, 5, Rat(1)},
                           {3, 4, Rat(1)},
                           {0, 3, a},
                           {0, 4, 2 * b},
                           {1, 2, -b},
                           {1, 3, c},
                           {1, 4, d}});
  TwoForm w1 = zero_based({{0, 5, Rat(1)},
                           {2, 3, Rat(-1)},
                           {0, 2, b},
                           {0, 3, e},
                           {0, 4, -d},
                           {1, 2, 2 * d},
                           {1, 3, e}});
  TwoForm w2 = zero_based({{0, 2, Rat(1)}, {1, 3, Rat(1)}});
  TwoForm w3 = zero_based({{0, 3, Rat(1)}, {1, 4, Rat(1)}});
  return Plane({w0, w1, w2, w3});
}

Plane type2_plane() {
  TwoForm wa = zero_based({{0, 4, Rat(1)}, {1, 3, Rat(-1)}});
  TwoForm wb = zero_based({{0, 5, Rat(1)}, {2, 3, Rat(-1)}});
  TwoForm wc = zero_based({{1, 5, Rat(1)}, {2, 4, Rat(-1)}});
  TwoForm wd = zero_based({{0, 3, Rat(1)}, {1, 4, Rat(1)}, {2, 5, Rat(1)}});
  return Plane({wa, wb, wc, wd});
}

Plane type3_plane(const Vector6& u0, const Vector6& u1) {
  if (sgn(u0[0]) != 0 || sgn(u0[1]) != 0 || sgn(u1[0]) != 0 ||
      sgn(u1[1]) != 0)
    throw PreconditionError("u0, u1 must not involve e0, e1");
  Vector6 e0, e1;
  e0[0] = 1;
  e1[1] = 1;
  TwoForm w = wedge_vv(e0, u0) + wedge_vv(e1, u1) + wedge_vv(u0, u1);
  Plane l = type3_plane_rep();
  if (w.is_zero() || l.contains(w)) throw VeroneseDegenerateError();
  if (!omega_L_transversal(l, w)) throw VeroneseDegenerateError();
  return Plane({w, l[0], l[1], l[2]});
}

Plane type1_plane_rep() {
  return Plane({one_based({{1, 4, Rat(1)}, {2, 3, Rat(1)}}),
                one_based({{1, 5, Rat(1)}, {2, 4, Rat(1)}}),
                one_based({{2, 5, Rat(1)}, {3, 4, Rat(1)}})});
}

Plane type2_plane_rep() {
  return Plane({zero_based({{0, 4, Rat(1)}, {1, 3, Rat(-1)}}),
                zero_based({{0, 5, Rat(1)}, {2, 3, Rat(-1)}}),
                zero_based({{1, 5, Rat(1)}, {2, 4, Rat(-1)}})});
}

Plane type3_plane_rep() {
  return Plane({zero_based({{0, 2, Rat(1)}, {1, 3, Rat(1)}}),
                zero_based({{0, 3, Rat(1)}, {1, 4, Rat(1)}}),
                zero_based({{0, 4, Rat(1)}, {1, 5, Rat(1)}})});
}

Plane type4_plane_rep() {
  return Plane({zero_based({{0, 3, Rat(1)}, {1, 2, Rat(1)}}),
                zero_based({{0, 4, Rat(1)}, {2, 3, Rat(1)}}),
                zero_based({{0, 5, Rat(1)}, {1, 3, Rat(1)}})});
}

namespace {

Mat image_matrix(const TwoForm& w) {
  auto m = w.skew_matrix();
  Mat a(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) a.at(i, j) = m[i * 6 + j];
  return a;
}

}  // namespace

int rank4_plane_type(const Plane& l, unsigned seed) {
  if (l.size() != 3) throw PlanesError("expected a 3-plane");
  // Constant-rank-4 check on the basis plus a seeded 50-point sample.
  for (int i = 0; i < 3; ++i)
    if (rank2(l[i]) != 4) throw NotConstantRank4Error();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rat> c(3);
    bool zero = true;
    for (auto& x : c) {
      x = dist(rng);
      if (sgn(x) != 0) zero = false;
    }
    if (zero) continue;
    if (rank2(l.element(c)) != 4) throw NotConstantRank4Error();
  }

  // Type 1: the three forms share a kernel vector.
  Mat stacked(18, 6);
  for (int k = 0; k < 3; ++k) {
    auto m = l[k].skew_matrix();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) stacked.at(6 * k + i, j) = m[i * 6 + j];
  }
  if (!stacked.nullspace().empty()) return 1;

  // Type 2: some element of L^L has dual rank six.
  if (three_plane_checks(l, seed).has_rank6_in_LL) return 2;

  // Type 3: a 2-plane U with L contained in U ^ V6; the candidate U is the
  // intersection of the images of the basis forms.
  auto u01 = column_space_intersection(image_matrix(l[0]), image_matrix(l[1]));
  Mat u01m(6, 0);
  for (const auto& v : u01) u01m.append_col(v);
  auto ub = column_space_intersection(u01m, image_matrix(l[2]));
  if (ub.size() == 2) {
    Mat uv6(kNumPairs, 0);
    for (const auto& uvec : ub) {
      Vector6 u;
      for (int i = 0; i < 6; ++i) u[i] = uvec[i];
      for (int k = 0; k < 6; ++k) {
        Vector6 ek;
        ek[k] = 1;
        uv6.append_col(form_coords(wedge_vv(u, ek)));
      }
    }
    bool all_in = true;
    for (int i = 0; i < 3 && all_in; ++i)
      all_in = in_column_span(uv6, form_coords(l[i]));
    if (all_in) return 3;
  }
  return 4;
}

bool extension_is_member(const Plane& l, const Mat& ll_cols, const TwoForm& w) {
  std::vector<Rat> wc = form_coords(w);
  if (in_column_span(l.coord_matrix(), wc)) return false;

  // Monomial order (00),(01),(02),(03),(11),(12),(13),(22),(23),(33) with
  // basis (w, l0, l1, l2); the last six columns are the cached L^L products.
  Mat s(kNumQuads, 10);
  FourForm ww = wedge22(w, w);
  for (int q = 0; q < kNumQuads; ++q) s.at(q, 0) = ww.at(q);
  for (int i = 0; i < 3; ++i) {
    FourForm f = wedge22(w, l[i]);
    for (int q = 0; q < kNumQuads; ++q) s.at(q, 1 + i) = f.at(q);
  }
  for (int c = 0; c < 6; ++c)
    for (int q = 0; q < kNumQuads; ++q) s.at(q, 4 + c) = ll_cols.at(q, c);

  auto ker = s.nullspace();
  if (ker.size() != 1) return false;
  return QuadRelation(4, ker[0]).qrank() == 4;
}

namespace {

// Greedy standard-coordinate complement of span(cols) within the directions
// listed in `allowed`.
std::vector<int> greedy_complement(const Mat& cols,
                                   const std::vector<int>& allowed) {
  Mat span = cols;
  int rank = span.rank();
  std::vector<int> out;
  for (int p : allowed) {
    std::vector<Rat> e(kNumPairs);
    e[p] = 1;
    Mat trial = span;
    trial.append_col(e);
    if (trial.rank() > rank) {
      ++rank;
      span = std::move(trial);
      out.push_back(p);
    }
  }
  return out;
}

TwoForm combo(const std::vector<int>& gens, const std::vector<Rat>& c) {
  TwoForm w;
  for (size_t k = 0; k < gens.size(); ++k) w.at(gens[k]) = c[k];
  return w;
}

}  // namespace

ExtensionSearchResult extension_search_type1(int bound, unsigned seed,
                                             int random_draws) {
  Plane l = type1_plane_rep();
  Mat ll = ll_products(l);
  ExtensionSearchResult res;

  // Any member extension would have to lie in wedge^2<e0..e4> (candidates
  // outside force a rank-two form into the plane), so search that space
  // modulo L.
  std::vector<int> allowed;
  for (int p = 0; p < kNumPairs; ++p)
    if (kPairs[p][1] <= 4) allowed.push_back(p);
  std::vector<int> gens = greedy_complement(l.coord_matrix(), allowed);
  int n = static_cast<int>(gens.size());

  auto test = [&](const std::vector<Rat>& c) {
    TwoForm w = combo(gens, c);
    if (w.is_zero()) return;
    ++res.candidates;
    if (extension_is_member(l, ll, w)) ++res.members_found;
  };

  // Support <= 3, first nonzero positive.
  std::vector<Rat> c(n);
  for (int i = 0; i < n; ++i)
    for (int ci = 1; ci <= bound; ++ci) {
      std::fill(c.begin(), c.end(), Rat(0));
      c[i] = ci;
      test(c);
      for (int j = i + 1; j < n; ++j)
        for (int cj = -bound; cj <= bound; ++cj) {
          if (cj == 0) continue;
          c[j] = cj;
          test(c);
          for (int k = j + 1; k < n; ++k)
            for (int ck = -bound; ck <= bound; ++ck) {
              if (ck == 0) continue;
              c[k] = ck;
              test(c);
              c[k] = 0;
            }
          c[j] = 0;
        }
      c[i] = 0;
    }

  // Seeded dense draws over the full box.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (int t = 0; t < random_draws; ++t) {
    for (int i = 0; i < n; ++i) c[i] = dist(rng);
    test(c);
  }
  return res;
}

ExtensionSearchResult extension_search_type4(int bound, unsigned seed,
                                             int random_draws) {
  Plane l = type4_plane_rep();
  Mat ll = ll_products(l);
  ExtensionSearchResult res;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-bound, bound);

  auto test = [&](const TwoForm& w) {
    if (w.is_zero()) return;
    ++res.candidates;
    if (extension_is_member(l, ll, w)) ++res.members_found;
  };

  // Branch A: modulo L, a member extension with a kernel relation involving
  // w^2 can be normalized so that w^2 lies in L^L, which forces
  // w = psi + u4 ^ e4 with psi in wedge^2<e0..e3> and psi ^ u4 in
  // <e012, e023>.
  const int p6[6] = {pair_index(0, 1), pair_index(0, 2), pair_index(0, 3),
                     pair_index(1, 2), pair_index(1, 3), pair_index(2, 3)};
  for (int a0 = 0; a0 <= bound; ++a0)
    for (int a1 = -bound; a1 <= bound; ++a1)
      for (int a2 = -bound; a2 <= bound; ++a2)
        for (int a3 = -bound; a3 <= bound; ++a3) {
          std::array<long, 4> u = {a0, a1, a2, a3};
          long g = std::gcd(std::gcd(std::abs(u[0]), std::abs(u[1])),
                            std::gcd(std::abs(u[2]), std::abs(u[3])));
          if (g == 0 || g > 1) continue;
          bool lead_ok = false;  // first nonzero positive
          for (long v : u) {
            if (v != 0) {
              lead_ok = v > 0;
              break;
            }
          }
          if (!lead_ok) continue;

          // Constraint rows: coefficients of e013 and e123 in psi ^ u4.
          Mat cons(2, 6);
          for (int pi = 0; pi < 6; ++pi) {
            int i = kPairs[p6[pi]][0], j = kPairs[p6[pi]][1];
            for (int k = 0; k < 4; ++k) {
              if (u[k] == 0 || k == i || k == j) continue;
              int tri[3] = {i, j, k};
              int s = perm_sign({i, j, k});
              std::sort(tri, tri + 3);
              if (tri[0] == 0 && tri[1] == 1 && tri[2] == 3)
                cons.at(0, pi) += Rat(s) * Rat(u[k]);
              else if (tri[0] == 1 && tri[1] == 2 && tri[2] == 3)
                cons.at(1, pi) += Rat(s) * Rat(u[k]);
            }
          }
          auto ns = cons.nullspace();
          int m = static_cast<int>(ns.size());
          Vector6 u4;
          for (int k = 0; k < 4; ++k) u4[k] = Rat(u[k]);
          Vector6 e4;
          e4[4] = 1;
          TwoForm tail = wedge_vv(u4, e4);

          auto emit = [&](const std::vector<Rat>& cc) {
            TwoForm psi;
            for (int k = 0; k < m; ++k)
              for (int pi = 0; pi < 6; ++pi)
                psi.at(p6[pi]) += cc[k] * ns[k][pi];
            test(psi + tail);
          };
          std::vector<Rat> cc(m);
          // support <= 2 in {-1,0,1}
          for (int i = 0; i < m; ++i) {
            std::fill(cc.begin(), cc.end(), Rat(0));
            cc[i] = 1;
            emit(cc);
            for (int j = i + 1; j < m; ++j)
              for (int cj : {-1, 1}) {
                cc[j] = cj;
                emit(cc);
                cc[j] = 0;
              }
            cc[i] = 0;
          }
          for (int t = 0; t < random_draws; ++t) {
            for (int k = 0; k < m; ++k) cc[k] = dist(rng);
            emit(cc);
          }
        }

  // Branch B: relations without a w^2 term need (w ^ L) to meet L^L, so for
  // each small lambda in L search the space {w : w ^ lambda in L^L}.
  for (int x = 0; x <= bound; ++x)
    for (int y = -bound; y <= bound; ++y)
      for (int z = -bound; z <= bound; ++z) {
        long g = std::gcd(std::gcd(std::abs(x), std::abs(y)),
                          static_cast<long>(std::abs(z)));
        if (g != 1) continue;
        bool lead_ok = x > 0 || (x == 0 && (y > 0 || (y == 0 && z > 0)));
        if (!lead_ok) continue;
        TwoForm lambda = l.element({Rat(x), Rat(y), Rat(z)});
        Mat k(kNumQuads, kNumPairs + 6);
        for (int p = 0; p < kNumPairs; ++p) {
          TwoForm e;
          e.at(p) = 1;
          FourForm f = wedge22(e, lambda);
          for (int q = 0; q < kNumQuads; ++q) k.at(q, p) = f.at(q);
        }
        for (int c2 = 0; c2 < 6; ++c2)
          for (int q = 0; q < kNumQuads; ++q)
            k.at(q, kNumPairs + c2) = -ll.at(q, c2);
        std::vector<TwoForm> cand;
        for (const auto& v : k.nullspace()) {
          TwoForm w;
          for (int p = 0; p < kNumPairs; ++p) w.at(p) = v[p];
          if (!w.is_zero()) cand.push_back(w);
        }
        for (size_t i = 0; i < cand.size(); ++i) {
          test(cand[i]);
          for (size_t j = i + 1; j < cand.size(); ++j) {
            test(cand[i] + cand[j]);
            test(cand[i] - cand[j]);
          }
        }
        for (int t = 0; t < random_draws; ++t) {
          TwoForm w;
          for (const auto& ci : cand) w = w + ci * Rat(dist(rng));
          test(w);
        }
      }

  return res;
}

}  // namespace planes
