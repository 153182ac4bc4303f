#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planes/errors.hpp"
#include "planes/exterior.hpp"
#include "planes/linalg.hpp"

namespace planes {

/// Ordered basis of k two-forms (k = 3 or 4) spanning a subspace of
/// wedge^2 V6. Independence is checked on construction.
class Plane {
 public:
  explicit Plane(std::vector<TwoForm> basis);

  int size() const { return static_cast<int>(basis_.size()); }
  const TwoForm& operator[](int i) const { return basis_[i]; }
  const std::vector<TwoForm>& basis() const { return basis_; }

  /// 15 x k matrix whose columns are the basis forms.
  Mat coord_matrix() const;

  /// The form with the given coordinates in this basis.
  TwoForm element(const std::vector<Rat>& coords) const;

  bool contains(const TwoForm& w) const;
  bool same_span(const Plane& other) const;

 private:
  std::vector<TwoForm> basis_;
};

/// Monomials w_i w_j, i <= j, of Sym^2 of a k-plane in lexicographic order.
std::vector<std::array<int, 2>> sym2_monomials(int k);
int sym2_monomial_index(int k, int i, int j);

/// Symmetric k x k matrix representing an element of Sym^2 H in the plane's
/// basis; built from a coefficient vector over the sym2 monomials.
class QuadRelation {
 public:
  QuadRelation() = default;
  QuadRelation(int k, const std::vector<Rat>& monomial_coeffs);

  int dim() const { return k_; }
  const Rat& at(int i, int j) const { return q_[i * k_ + j]; }
  Rat& at(int i, int j) { return q_[i * k_ + j]; }

  std::vector<Rat> monomial_coeffs() const;
  int qrank() const;
  Mat matrix() const;

 private:
  int k_ = 0;
  std::vector<Rat> q_;  // symmetric, row-major
};

enum class Verdict { Member, KernelEmpty, KernelTooBig, KernelDegenerate };

std::string verdict_name(Verdict v);

struct MembershipReport {
  Verdict verdict;
  int sym2_rank = 0;
  int kernel_dim = 0;
  std::optional<QuadRelation> relation;  // normalized kernel generator
  int qrank = 0;                         // of the generator, when kernel_dim == 1
};

/// 15 x m matrix of the map Sym^2 H -> wedge^4 V6; columns indexed by the
/// sym2 monomials in lexicographic order, column for w_i w_j holding the
/// coefficients of w_i ^ w_j.
Mat sym2_matrix(const Plane& h);

/// Exact nullspace of the sym2 map, as coefficient vectors over monomials,
/// each normalized so its first nonzero entry is 1.
std::vector<std::vector<Rat>> sym2_kernel(const Plane& h);

MembershipReport membership(const Plane& h);

struct ThreePlaneChecks {
  bool sym2_injective = false;
  bool has_rank6_in_LL = false;
};

/// Conditions for a 3-plane to lie in the open set T of the parametrization:
/// injectivity exactly, rank-6 existence by seeded random sampling (20 tries).
ThreePlaneChecks three_plane_checks(const Plane& l, unsigned seed = 12345);

/// Local dimension 44 - rank(T) of the rank-9 locus at a member plane, where
/// T sends a tangent direction (eta_0..eta_3) mod H to
/// sum_ij Q_ij (eta_i ^ w_j + w_i ^ eta_j) modulo the image of sym2_matrix.
int tangent_dimension(const Plane& h);

}  // namespace planes
