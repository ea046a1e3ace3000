#pragma once

#include "hodgedec/simplicial_complex.hpp"

#include <vector>

namespace hodgedec {

inline constexpr double kDefaultRankTol = 1e-9;
inline constexpr double kDefaultSolveTol = 1e-10;
inline constexpr double kGapGuard = 10.0;
inline constexpr int kDenseColumnLimit = 2000;

/// Outcome of a numerical rank decision. The gap ratio (smallest kept over
/// largest dropped singular value) must reach kGapGuard for the decision to
/// stand; otherwise AmbiguousRank is raised at the call site.
struct RankDecision {
  Eigen::Index rank = 0;
  VecX spectrum;        // singular values (dense path) or |R| diagonal (sparse path)
  double tolerance = 0;
  double gapRatio = std::numeric_limits<double>::infinity();
};

struct RankNullspace {
  RankDecision decision;
  MatX nullspace;  // Euclidean-orthonormal columns spanning ker A
};

/// Rank and nullspace basis of A. Dense SVD below kDenseColumnLimit columns,
/// sparse rank-revealing QR above. Throws AmbiguousRank when the spectrum
/// gap is below kGapGuard.
RankNullspace rankNullspace(const SpMat& A, double tol = kDefaultRankTol);
RankNullspace rankNullspace(const MatX& A, double tol = kDefaultRankTol);

/// Minimal-Euclidean-norm x with A x ~= b. Throws Inconsistent when the
/// residual exceeds tol * (|A| |x| + |b|).
VecX leastNormSolve(const SpMat& A, const VecX& b, double tol = kDefaultSolveTol);

/// Gram-Schmidt in the inner product <u,v> = u' diag(mass) v, two passes,
/// dependent inputs dropped. Result satisfies |Gram - I| <= 1e-12.
MatX mOrthonormalize(const MatX& V, const VecX& mass, int* droppedCount = nullptr);

/// Basis of the numerical intersection of two M-orthonormal subspaces via
/// principal angles (kept when cos >= 1 - tol). Throws AmbiguousRank when a
/// dropped angle crowds the threshold.
MatX intersectSubspaces(const MatX& U, const MatX& V, const VecX& mass,
                        double tol = 1e-6);

/// M-orthonormal basis of range(A).
MatX mColumnSpaceBasis(const SpMat& A, const VecX& mass, double tol = kDefaultRankTol);

/// M-orthonormal basis of ker(A).
MatX mKernelBasis(const SpMat& A, const VecX& mass, double tol = kDefaultRankTol);

/// Rows stacked as [blocks[0]; blocks[1]; ...], each block scaled to unit
/// max-abs entry so mixed-scale blocks share one rank tolerance.
SpMat vstackNormalized(const std::vector<const SpMat*>& blocks);

/// Row-selection matrix picking `rows` out of n.
SpMat rowSelector(const std::vector<int>& rows, Eigen::Index n);

double mNorm(const VecX& v, const VecX& mass);
double mDot(const VecX& a, const VecX& b, const VecX& mass);

}  // namespace hodgedec
