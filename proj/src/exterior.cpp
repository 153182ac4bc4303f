#include "planes/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace planes {

namespace {

struct Tables {
  int pair_idx[kDim][kDim];       // -1 on diagonal
  int quad_idx_of_mask[64];       // popcount-4 bitmask -> quad index
  int pair_comp[kNumPairs];       // complementary quad
  int pair_comp_sign[kNumPairs];  // sign of (p0,p1,c0,c1,c2,c3)
  // wedge22: for pair indices (p,q): target quad and sign, or quad=-1.
  int w22_quad[kNumPairs][kNumPairs];
  int w22_sign[kNumPairs][kNumPairs];

  Tables() {
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) pair_idx[i][j] = -1;
    for (int p = 0; p < kNumPairs; ++p) {
      pair_idx[kPairs[p][0]][kPairs[p][1]] = p;
      pair_idx[kPairs[p][1]][kPairs[p][0]] = p;
    }
    for (int m = 0; m < 64; ++m) quad_idx_of_mask[m] = -1;
    for (int q = 0; q < kNumQuads; ++q) {
      int mask = 0;
      for (int v : kQuads[q]) mask |= 1 << v;
      quad_idx_of_mask[mask] = q;
    }
    for (int p = 0; p < kNumPairs; ++p) {
      std::vector<int> seq = {kPairs[p][0], kPairs[p][1]};
      for (int v = 0; v < kDim; ++v)
        if (v != kPairs[p][0] && v != kPairs[p][1]) seq.push_back(v);
      int mask = 0;
      for (int k = 2; k < 6; ++k) mask |= 1 << seq[k];
      pair_comp[p] = quad_idx_of_mask[mask];
      pair_comp_sign[p] = perm_sign(seq);
    }
    for (int p = 0; p < kNumPairs; ++p)
      for (int q = 0; q < kNumPairs; ++q) {
        std::vector<int> seq = {kPairs[p][0], kPairs[p][1], kPairs[q][0],
                                kPairs[q][1]};
        int s = perm_sign(seq);
        if (s == 0) {
          w22_quad[p][q] = -1;
          w22_sign[p][q] = 0;
        } else {
          int mask = 0;
          for (int v : seq) mask |= 1 << v;
          w22_quad[p][q] = quad_idx_of_mask[mask];
          w22_sign[p][q] = s;
        }
      }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

int perm_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) ++inv;
    }
  return (inv % 2 == 0) ? 1 : -1;
}

int pair_index(int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= kDim || j >= kDim)
    throw std::out_of_range("bad pair index");
  return tables().pair_idx[i][j];
}

int quad_index(int i, int j, int k, int l) {
  int mask = (1 << i) | (1 << j) | (1 << k) | (1 << l);
  int q = tables().quad_idx_of_mask[mask];
  if (q < 0) throw std::out_of_range("bad quad index");
  return q;
}

int pair_complement(int pair) { return tables().pair_comp[pair]; }
int pair_complement_sign(int pair) { return tables().pair_comp_sign[pair]; }

bool Vector6::is_zero() const {
  for (const auto& x : coords)
    if (sgn(x) != 0) return false;
  return true;
}

TwoForm TwoForm::from_terms(const std::vector<std::tuple<int, int, Rat>>& terms,
                            bool one_based) {
  TwoForm w;
  for (const auto& [i0, j0, c] : terms) {
    int i = one_based ? i0 - 1 : i0;
    int j = one_based ? j0 - 1 : j0;
    if (i == j) throw std::invalid_argument("repeated index in two-form term");
    if (i < j)
      w.c_[pair_index(i, j)] += c;
    else
      w.c_[pair_index(j, i)] -= c;
  }
  return w;
}

Rat& TwoForm::coeff(int i, int j) { return c_[pair_index(i, j)]; }

Rat TwoForm::get(int i, int j) const {
  if (i < j) return c_[pair_index(i, j)];
  return -c_[pair_index(j, i)];
}

bool TwoForm::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

TwoForm TwoForm::operator+(const TwoForm& o) const {
  TwoForm r;
  for (int p = 0; p < kNumPairs; ++p) r.c_[p] = c_[p] + o.c_[p];
  return r;
}

TwoForm TwoForm::operator-(const TwoForm& o) const {
  TwoForm r;
  for (int p = 0; p < kNumPairs; ++p) r.c_[p] = c_[p] - o.c_[p];
  return r;
}

TwoForm TwoForm::operator*(const Rat& s) const {
  TwoForm r;
  for (int p = 0; p < kNumPairs; ++p) r.c_[p] = c_[p] * s;
  return r;
}

TwoForm TwoForm::operator-() const { return *this * Rat(-1); }

std::array<Rat, 36> TwoForm::skew_matrix() const {
  std::array<Rat, 36> m{};
  for (int p = 0; p < kNumPairs; ++p) {
    int i = kPairs[p][0], j = kPairs[p][1];
    m[i * 6 + j] = c_[p];
    m[j * 6 + i] = -c_[p];
  }
  return m;
}

bool FourForm::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

FourForm FourForm::operator+(const FourForm& o) const {
  FourForm r;
  for (int q = 0; q < kNumQuads; ++q) r.c_[q] = c_[q] + o.c_[q];
  return r;
}

FourForm FourForm::operator-(const FourForm& o) const {
  FourForm r;
  for (int q = 0; q < kNumQuads; ++q) r.c_[q] = c_[q] - o.c_[q];
  return r;
}

FourForm FourForm::operator*(const Rat& s) const {
  FourForm r;
  for (int q = 0; q < kNumQuads; ++q) r.c_[q] = c_[q] * s;
  return r;
}

FourForm wedge22(const TwoForm& a, const TwoForm& b) {
  const Tables& t = tables();
  FourForm r;
  for (int p = 0; p < kNumPairs; ++p) {
    if (sgn(a.c_[p]) == 0) continue;
    for (int q = 0; q < kNumPairs; ++q) {
      int tq = t.w22_quad[p][q];
      if (tq < 0 || sgn(b.c_[q]) == 0) continue;
      if (t.w22_sign[p][q] > 0)
        r.c_[tq] += a.c_[p] * b.c_[q];
      else
        r.c_[tq] -= a.c_[p] * b.c_[q];
    }
  }
  return r;
}

SixForm wedge24(const TwoForm& a, const FourForm& b) {
  const Tables& t = tables();
  SixForm r{Rat(0)};
  for (int p = 0; p < kNumPairs; ++p) {
    const Rat& bc = b.c_[t.pair_comp[p]];
    if (sgn(a.c_[p]) == 0 || sgn(bc) == 0) continue;
    if (t.pair_comp_sign[p] > 0)
      r.coeff += a.c_[p] * bc;
    else
      r.coeff -= a.c_[p] * bc;
  }
  return r;
}

namespace {

// Pfaffian of a skew matrix restricted to the given index set, by expansion
// along the first remaining index.
Rat pf_rec(const std::array<Rat, 36>& m, std::vector<int> idx) {
  if (idx.empty()) return Rat(1);
  int i0 = idx[0];
  Rat acc(0);
  for (size_t k = 1; k < idx.size(); ++k) {
    const Rat& mij = m[i0 * 6 + idx[k]];
    if (sgn(mij) == 0) continue;
    std::vector<int> rest;
    for (size_t l = 1; l < idx.size(); ++l)
      if (l != k) rest.push_back(idx[l]);
    Rat term = mij * pf_rec(m, std::move(rest));
    if (k % 2 == 1)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace

Rat pfaffian(const TwoForm& w) {
  return pf_rec(w.skew_matrix(), {0, 1, 2, 3, 4, 5});
}

int rank2(const TwoForm& w) {
  auto m = w.skew_matrix();
  // Gaussian elimination on the 6x6 skew matrix.
  int rank = 0;
  int r = 0;
  for (int c = 0; c < 6 && r < 6; ++c) {
    int piv = -1;
    for (int i = r; i < 6; ++i)
      if (sgn(m[i * 6 + c]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < 6; ++j) std::swap(m[piv * 6 + j], m[r * 6 + j]);
    for (int i = r + 1; i < 6; ++i) {
      if (sgn(m[i * 6 + c]) == 0) continue;
      Rat f = m[i * 6 + c] / m[r * 6 + c];
      for (int j = c; j < 6; ++j) m[i * 6 + j] -= f * m[r * 6 + j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

FourForm pf(const TwoForm& w) { return wedge22(w, w); }

TwoForm dual_two(const FourForm& o) {
  const Tables& t = tables();
  TwoForm r;
  for (int p = 0; p < kNumPairs; ++p) {
    const Rat& v = o.c_[t.pair_comp[p]];
    r.c_[p] = (t.pair_comp_sign[p] > 0) ? v : -v;
  }
  return r;
}

TwoForm pf_star(const FourForm& o) {
  TwoForm d = dual_two(o);
  return dual_two(wedge22(d, d));
}

int rank4_of_fourform(const FourForm& o) { return rank2(dual_two(o)); }

}  // namespace planes
