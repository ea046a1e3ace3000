#pragma once

#include "hodgedec/linalg.hpp"
#include "hodgedec/operators.hpp"

#include <map>
#include <optional>
#include <string>

namespace hodgedec {

// Subspaces of the cochain spaces, named by juxtaposition: C closed,
// cC co-closed, E exact, cE co-exact; N/D mark the boundary condition
// applied before the (co)differential.
enum class SubspaceLabel {
  cEN,    // image of delta (weak Neumann co-exact)
  ED,     // image of d on Dirichlet cochains
  CcC,    // harmonic fields, no boundary condition
  CcCN,   // harmonic Neumann fields:   ker d  inter  ker delta
  CcCD,   // harmonic Dirichlet fields: kernel of the Dirichlet Laplacian
  EcC,    // orthocomplement of CcCN inside CcC (exact harmonic fields)
  CcE,    // orthocomplement of CcCD inside CcC
  C,      // ker d
  E,      // image d
  cC,     // ker delta
  cE,     // image delta (equals cEN discretely)
};

std::string toString(SubspaceLabel label);

struct SubspaceBasis {
  SubspaceLabel label{};
  int degree = 0;
  MatX columns;  // M-orthonormal
  double gramError = 0;
  std::map<std::string, double> residuals;  // label-defining conditions

  Eigen::Index dimension() const { return columns.cols(); }
};

std::string toJson(const SubspaceBasis& basis, bool includeColumns = false);

struct DecompositionResult {
  Cochain input;
  Cochain coexactNeumann;  // component in cE^p_N
  Cochain harmonicField;   // component in CcC^p
  Cochain exactDirichlet;  // component in E^p_D
  double reconstructionResidual = 0;  // relative, M-norm
  double maxPairwiseInner = 0;        // relative, M-inner products
};

std::string toJson(const DecompositionResult& r);

/// Betti number b_p from boundary-matrix ranks (the rank oracle the kernel
/// computations are checked against).
int betti(const SimplicialComplex& K, int p, double tol = kDefaultRankTol);
/// Relative Betti number b_p(M, dM) from the Dirichlet-subcomplex ranks.
int bettiRel(const SimplicialComplex& K, int p, double tol = kDefaultRankTol);

struct Lemma2Result {
  bool empty = false;
  int intersectionDim = 0;
  double maxPrincipalCosine = 0;
  int dimCcCN = 0;
  int dimCcCD = 0;
};

/// Computes and caches bases of every labeled subspace for one assembled
/// operator set, plus the Eq.(1) splitter. Bases are canonical only up to
/// orthogonal transformation; compare subspaces through projectors.
class SubspaceEngine {
 public:
  explicit SubspaceEngine(const OperatorSet& ops, double rankTol = kDefaultRankTol);

  const OperatorSet& ops() const { return ops_; }
  const DirichletOperators& dirichlet();

  const SubspaceBasis& basis(SubspaceLabel label, int degree);

  /// Orthogonal splitting of Eq. (1): w = w_cEN + w_CcC + w_ED.
  DecompositionResult hodgeSplit(const Cochain& w);

  int betti(int p);
  int bettiRel(int p);

  /// Triviality of CcC_N inter CcC_D (the Lemma 2 surrogate). Requires a
  /// connected complex with non-empty boundary.
  Lemma2Result lemma2Check(int degree, double tol = 1e-6);

 private:
  SubspaceBasis compute(SubspaceLabel label, int degree);

  const OperatorSet& ops_;
  double rankTol_;
  std::map<std::pair<int, int>, SubspaceBasis> cache_;
  std::optional<DirichletOperators> dirichlet_;
  std::map<int, int> betti_, bettiRel_;
};

}  // namespace hodgedec
