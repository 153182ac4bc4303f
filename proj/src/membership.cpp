#include "planes/membership.hpp"

#include <random>

namespace planes {

Plane::Plane(std::vector<TwoForm> basis) : basis_(std::move(basis)) {
  if (basis_.size() != 3 && basis_.size() != 4)
    throw PlanesError("a plane has 3 or 4 basis forms");
  if (coord_matrix().rank() != size()) throw IndependenceError();
}

Mat Plane::coord_matrix() const {
  Mat m(kNumPairs, size());
  for (int c = 0; c < size(); ++c)
    for (int p = 0; p < kNumPairs; ++p) m.at(p, c) = basis_[c].at(p);
  return m;
}

TwoForm Plane::element(const std::vector<Rat>& coords) const {
  TwoForm w;
  for (int i = 0; i < size(); ++i)
    for (int p = 0; p < kNumPairs; ++p) w.at(p) += coords[i] * basis_[i].at(p);
  return w;
}

bool Plane::contains(const TwoForm& w) const {
  Mat m = coord_matrix();
  std::vector<Rat> v(kNumPairs);
  for (int p = 0; p < kNumPairs; ++p) v[p] = w.at(p);
  return m.solve(v).has_value();
}

bool Plane::same_span(const Plane& other) const {
  if (size() != other.size()) return false;
  for (const auto& w : other.basis_)
    if (!contains(w)) return false;
  return true;
}

std::vector<std::array<int, 2>> sym2_monomials(int k) {
  std::vector<std::array<int, 2>> m;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) m.push_back({i, j});
  return m;
}

int sym2_monomial_index(int k, int i, int j) {
  if (i > j) std::swap(i, j);
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += k - a;
  return idx + (j - i);
}

QuadRelation::QuadRelation(int k, const std::vector<Rat>& monomial_coeffs)
    : k_(k), q_(k * k) {
  auto mons = sym2_monomials(k);
  for (size_t m = 0; m < mons.size(); ++m) {
    int i = mons[m][0], j = mons[m][1];
    if (i == j) {
      q_[i * k_ + i] = monomial_coeffs[m];
    } else {
      Rat half = monomial_coeffs[m] / 2;
      q_[i * k_ + j] = half;
      q_[j * k_ + i] = half;
    }
  }
}

std::vector<Rat> QuadRelation::monomial_coeffs() const {
  std::vector<Rat> c;
  for (int i = 0; i < k_; ++i)
    for (int j = i; j < k_; ++j)
      c.push_back(i == j ? at(i, i) : at(i, j) * 2);
  return c;
}

int QuadRelation::qrank() const { return symmetric_rank(q_, k_); }

Mat QuadRelation::matrix() const {
  Mat m(k_, k_);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) m.at(i, j) = at(i, j);
  return m;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Member: return "Member";
    case Verdict::KernelEmpty: return "KernelEmpty";
    case Verdict::KernelTooBig: return "KernelTooBig";
    case Verdict::KernelDegenerate: return "KernelDegenerate";
  }
  return "?";
}

Mat sym2_matrix(const Plane& h) {
  auto mons = sym2_monomials(h.size());
  Mat m(kNumQuads, static_cast<int>(mons.size()));
  for (size_t c = 0; c < mons.size(); ++c) {
    FourForm f = wedge22(h[mons[c][0]], h[mons[c][1]]);
    for (int q = 0; q < kNumQuads; ++q) m.at(q, static_cast<int>(c)) = f.at(q);
  }
  return m;
}

static void normalize_first_nonzero(std::vector<Rat>& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      Rat inv = 1 / x;
      for (auto& y : v) y *= inv;
      return;
    }
  }
}

std::vector<std::vector<Rat>> sym2_kernel(const Plane& h) {
  auto ker = sym2_matrix(h).nullspace();
  for (auto& v : ker) normalize_first_nonzero(v);
  return ker;
}

MembershipReport membership(const Plane& h) {
  if (h.size() != 4) throw PlanesError("membership expects a 4-plane");
  Mat s = sym2_matrix(h);
  auto ker = s.nullspace();
  for (auto& v : ker) normalize_first_nonzero(v);

  MembershipReport r;
  r.kernel_dim = static_cast<int>(ker.size());
  r.sym2_rank = 10 - r.kernel_dim;
  if (ker.empty()) {
    r.verdict = Verdict::KernelEmpty;
    return r;
  }
  if (ker.size() > 1) {
    r.verdict = Verdict::KernelTooBig;
    return r;
  }
  r.relation = QuadRelation(4, ker[0]);
  r.qrank = r.relation->qrank();
  r.verdict = (r.qrank == 4) ? Verdict::Member : Verdict::KernelDegenerate;
  return r;
}

ThreePlaneChecks three_plane_checks(const Plane& l, unsigned seed) {
  if (l.size() != 3) throw PlanesError("expected a 3-plane");
  ThreePlaneChecks out;
  out.sym2_injective = sym2_matrix(l).rank() == 6;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  auto mons = sym2_monomials(3);
  for (int trial = 0; trial < 20 && !out.has_rank6_in_LL; ++trial) {
    FourForm f;
    for (const auto& mon : mons) {
      Rat c(dist(rng));
      f = f + wedge22(l[mon[0]], l[mon[1]]) * c;
    }
    if (rank4_of_fourform(f) == 6) out.has_rank6_in_LL = true;
  }
  return out;
}

namespace {

// Standard coordinate directions completing H to all of Q^15, chosen greedily
// in the given preference order.
std::vector<int> complement_coords(const Plane& h,
                                   const std::vector<int>& order) {
  Mat span = h.coord_matrix();
  int rank = span.rank();
  std::vector<int> chosen;
  for (int p : order) {
    std::vector<Rat> e(kNumPairs);
    e[p] = 1;
    Mat trial = span;
    trial.append_col(e);
    int r = trial.rank();
    if (r > rank) {
      span = std::move(trial);
      rank = r;
      chosen.push_back(p);
    }
    if (rank == kNumPairs) break;
  }
  return chosen;
}

int tangent_rank_with_complement(const Plane& h, const QuadRelation& q,
                                 const Mat& s, int s_rank,
                                 const std::vector<int>& comp) {
  Mat joint = s;
  for (int i = 0; i < 4; ++i) {
    for (int p : comp) {
      TwoForm eta;
      eta.at(p) = 1;
      FourForm img;
      for (int j = 0; j < 4; ++j) {
        if (sgn(q.at(i, j)) == 0) continue;
        img = img + wedge22(eta, h[j]) * (q.at(i, j) * 2);
      }
      std::vector<Rat> colv(kNumQuads);
      for (int k = 0; k < kNumQuads; ++k) colv[k] = img.at(k);
      joint.append_col(colv);
    }
  }
  return joint.rank() - s_rank;
}

}  // namespace

int tangent_dimension(const Plane& h) {
  MembershipReport rep = membership(h);
  if (rep.verdict != Verdict::Member) throw NotMemberError();
  Mat s = sym2_matrix(h);
  int s_rank = s.rank();

  std::vector<int> fwd(kNumPairs), bwd(kNumPairs);
  for (int p = 0; p < kNumPairs; ++p) {
    fwd[p] = p;
    bwd[p] = kNumPairs - 1 - p;
  }
  int r1 = tangent_rank_with_complement(h, *rep.relation, s, s_rank,
                                        complement_coords(h, fwd));
  int r2 = tangent_rank_with_complement(h, *rep.relation, s, s_rank,
                                        complement_coords(h, bwd));
  if (r1 != r2) throw PlanesError("tangent rank depends on complement choice");
  return 44 - r1;
}

}  // namespace planes
