#pragma once

#include "hodgedec/simplicial_complex.hpp"

#include <memory>
#include <vector>

namespace hodgedec {

struct AnalyticForm;

/// Discrete p-form: one real value per oriented p-simplex.
struct Cochain {
  int degree = 0;
  VecX values;
};

enum class StarScheme { Circumcentric, Barycentric };

/// Assembled discrete operators of one complex: coboundaries d_p, diagonal
/// Hodge-star mass matrices M_p, codifferentials delta_p = M_{p-1}^{-1}
/// d_{p-1}' M_p, Laplacians, and the boundary-condition row families.
/// Immutable after assembly; safe to share across threads.
class OperatorSet {
 public:
  static OperatorSet assemble(const SimplicialComplex& K,
                              StarScheme scheme = StarScheme::Circumcentric);

  const SimplicialComplex& complex() const { return *K_; }
  int dim() const { return K_->dim(); }
  StarScheme scheme() const { return scheme_; }
  Eigen::Index size(int p) const { return mass_[p].size(); }

  /// Coboundary N_{p+1} x N_p; valid for 0 <= p < dim.
  const SpMat& d(int p) const;
  /// Diagonal mass (dual/primal volume ratios); valid for 0 <= p <= dim.
  const VecX& mass(int p) const;
  /// Codifferential N_{p-1} x N_p; valid for 1 <= p <= dim.
  const SpMat& delta(int p) const;
  /// Laplacian N_p x N_p; valid for 0 <= p <= dim.
  const SpMat& laplacian(int p) const;

  /// p-simplices not contained in the boundary (the Dirichlet-free rows).
  const std::vector<int>& dirichletRows(int p) const { return dirichletRows_[p]; }
  /// p-simplices whose closed star avoids the boundary.
  const std::vector<int>& starInteriorRows(int p) const { return starInterior_[p]; }
  /// p-simplices with every vertex at depth >= 2; face-closed family.
  const std::vector<int>& deepInteriorRows(int p) const { return deepInterior_[p]; }

  Cochain applyD(const Cochain& w) const;
  Cochain applyDelta(const Cochain& w) const;
  Cochain applyLaplacian(const Cochain& w) const;

  double mInner(const Cochain& a, const Cochain& b) const;
  double mNormOf(const Cochain& a) const;

 private:
  std::shared_ptr<const SimplicialComplex> K_;
  StarScheme scheme_ = StarScheme::Circumcentric;
  std::vector<SpMat> d_;
  std::vector<VecX> mass_;
  std::vector<SpMat> delta_;
  std::vector<SpMat> laplacian_;
  std::vector<std::vector<int>> dirichletRows_;
  std::vector<std::vector<int>> starInterior_;
  std::vector<std::vector<int>> deepInterior_;
};

/// The Dirichlet subcomplex: cochains vanishing on boundary simplices,
/// closed under d; computes relative cohomology. Operators are expressed in
/// the reduced (non-boundary) coordinates.
struct DirichletOperators {
  std::vector<std::vector<int>> rows;  // degree -> kept global simplex ids
  std::vector<SpMat> d;                // reduced coboundaries
  std::vector<VecX> mass;
  std::vector<SpMat> delta;
  std::vector<SpMat> laplacian;
  std::vector<std::vector<int>> starInterior;  // reduced indices

  Eigen::Index count(int p) const { return mass[p].size(); }
  VecX restrictTo(int p, const VecX& full) const;
  VecX extendFrom(int p, const VecX& reduced, Eigen::Index fullSize) const;
};

DirichletOperators dirichletSubcomplex(const OperatorSet& ops);

/// Samples a smooth form to a cochain by quadrature over each oriented
/// p-simplex. Exact for polynomial forms up to the quadrature order;
/// commutes with d through Stokes for exactly integrated forms.
Cochain deRhamMap(const SimplicialComplex& K, const AnalyticForm& form, int degree,
                  int quadratureOrder = 4);

}  // namespace hodgedec
