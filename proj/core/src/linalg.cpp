#include "hodgedec/linalg.hpp"

#include "hodgedec/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseQR>
#include <Eigen/OrderingMethods>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hodgedec {

namespace {

RankDecision decideRank(const VecX& spectrum, double tol, Eigen::Index nCols) {
  RankDecision d;
  d.spectrum = spectrum;
  d.tolerance = tol;
  const double sigmaMax = spectrum.size() > 0 ? spectrum[0] : 0.0;
  if (sigmaMax <= 0.0) {
    d.rank = 0;
    return d;
  }
  const double cut = tol * sigmaMax;
  Eigen::Index r = 0;
  while (r < spectrum.size() && spectrum[r] > cut) ++r;
  d.rank = r;
  if (r > 0 && r < spectrum.size()) {
    const double dropped = spectrum[r];
    d.gapRatio = dropped > 0.0 ? spectrum[r - 1] / dropped
                               : std::numeric_limits<double>::infinity();
  }
  if (d.gapRatio < kGapGuard) {
    std::ostringstream os;
    os << "ambiguous rank decision: kept " << spectrum[r - 1] << ", dropped "
       << spectrum[r] << ", gap " << d.gapRatio << " < " << kGapGuard
       << " (cols " << nCols << ")";
    throw AmbiguousRank(os.str());
  }
  return d;
}

RankNullspace rankNullspaceDense(const SpMat& A, double tol) {
  RankNullspace out;
  const Eigen::Index m = A.rows(), n = A.cols();
  if (n == 0) {
    out.nullspace = MatX(0, 0);
    return out;
  }
  if (m == 0 || A.nonZeros() == 0) {
    out.nullspace = MatX::Identity(n, n);
    return out;
  }
  MatX dense = MatX(A);
  Eigen::BDCSVD<MatX> svd(dense, Eigen::ComputeFullV);
  out.decision = decideRank(svd.singularValues(), tol, n);
  out.nullspace = svd.matrixV().rightCols(n - out.decision.rank);
  return out;
}

RankNullspace rankNullspaceSparse(const SpMat& A, double tol) {
  RankNullspace out;
  const Eigen::Index n = A.cols();
  SpMat Ac = A;
  Ac.makeCompressed();
  Eigen::SparseQR<SpMat, Eigen::COLAMDOrdering<int>> qr;
  qr.setPivotThreshold(tol);
  qr.compute(Ac);
  if (qr.info() != Eigen::Success) throw Error("sparse QR factorization failed");
  const Eigen::Index r = qr.rank();

  SpMat R = qr.matrixR();
  VecX diag = VecX::Zero(std::min(R.rows(), R.cols()));
  for (Eigen::Index i = 0; i < diag.size(); ++i) diag[i] = std::abs(R.coeff(i, i));
  VecX sorted = diag;
  std::sort(sorted.data(), sorted.data() + sorted.size(), std::greater<double>());
  out.decision.spectrum = sorted;
  out.decision.tolerance = tol;
  out.decision.rank = r;
  if (r > 0 && r < sorted.size() && sorted[r] > 0.0)
    out.decision.gapRatio = sorted[r - 1] / sorted[r];
  if (out.decision.gapRatio < kGapGuard)
    throw AmbiguousRank("sparse QR rank gap below guard");

  if (r == n) {
    out.nullspace = MatX(n, 0);
    return out;
  }
  // kernel of A from R [R11 R12]: columns P * [-R11^{-1} R12 ; I]
  MatX R12 = MatX(R.topRows(r).rightCols(n - r));
  MatX top = -MatX(R.topLeftCorner(r, r))
                  .triangularView<Eigen::Upper>()
                  .solve(R12);
  MatX raw(n, n - r);
  raw.topRows(r) = top;
  raw.bottomRows(n - r) = MatX::Identity(n - r, n - r);
  raw = qr.colsPermutation() * raw;
  Eigen::HouseholderQR<MatX> orth(raw);
  MatX Q = orth.householderQ() * MatX::Identity(n, n - r);
  out.nullspace = Q;

  const double scale = sorted.size() > 0 ? sorted[0] : 1.0;
  for (Eigen::Index c = 0; c < Q.cols(); ++c) {
    if ((A * Q.col(c)).norm() > 100.0 * tol * std::max(scale, 1.0))
      throw AmbiguousRank("sparse nullspace residual above tolerance");
  }
  return out;
}

}  // namespace

RankNullspace rankNullspace(const SpMat& A, double tol) {
  if (!(tol > 0.0 && tol < 1.0)) throw BadParams("rank tolerance must lie in (0,1)");
  if (A.cols() > kDenseColumnLimit && A.rows() > 0)
    return rankNullspaceSparse(A, tol);
  return rankNullspaceDense(A, tol);
}

RankNullspace rankNullspace(const MatX& A, double tol) {
  if (!(tol > 0.0 && tol < 1.0)) throw BadParams("rank tolerance must lie in (0,1)");
  RankNullspace out;
  const Eigen::Index n = A.cols();
  if (n == 0) {
    out.nullspace = MatX(0, 0);
    return out;
  }
  if (A.rows() == 0 || A.norm() == 0.0) {
    out.nullspace = MatX::Identity(n, n);
    return out;
  }
  Eigen::BDCSVD<MatX> svd(A, Eigen::ComputeFullV);
  out.decision = decideRank(svd.singularValues(), tol, n);
  out.nullspace = svd.matrixV().rightCols(n - out.decision.rank);
  return out;
}

VecX leastNormSolve(const SpMat& A, const VecX& b, double tol) {
  if (A.rows() != b.size()) throw DegreeMismatch("leastNormSolve: size mismatch");
  if (A.cols() == 0) {
    if (b.norm() > tol * (1.0 + b.norm()))
      throw Inconsistent("leastNormSolve: empty matrix, nonzero rhs");
    return VecX();
  }
  VecX x;
  if (A.cols() <= kDenseColumnLimit) {
    MatX dense = MatX(A);
    Eigen::CompleteOrthogonalDecomposition<MatX> cod(dense);
    x = cod.solve(b);
  } else {
    // least-norm via QR of A': x lies in the row space of A
    SpMat At = SpMat(A.transpose());
    At.makeCompressed();
    Eigen::SparseQR<SpMat, Eigen::COLAMDOrdering<int>> qr;
    qr.compute(At);
    if (qr.info() != Eigen::Success) throw Error("sparse QR factorization failed");
    const Eigen::Index r = qr.rank();
    VecX pb = qr.colsPermutation().transpose() * b;
    SpMat R = qr.matrixR();
    VecX y = VecX::Zero(At.cols() == 0 ? 0 : At.rows());
    VecX y1 = MatX(R.topLeftCorner(r, r))
                  .transpose()
                  .triangularView<Eigen::Lower>()
                  .solve(pb.head(r));
    VecX yfull = VecX::Zero(At.rows());
    yfull.head(r) = y1;
    x = qr.matrixQ() * yfull;
  }
  const double relScale = MatX(A).norm() * x.norm() + b.norm();
  const double residual = (A * x - b).norm();
  if (residual > tol * std::max(relScale, 1e-30)) {
    std::ostringstream os;
    os << "leastNormSolve: residual " << residual << " exceeds " << tol * relScale;
    throw Inconsistent(os.str());
  }
  return x;
}

double mNorm(const VecX& v, const VecX& mass) {
  return std::sqrt(v.dot(mass.cwiseProduct(v)));
}

double mDot(const VecX& a, const VecX& b, const VecX& mass) {
  return a.dot(mass.cwiseProduct(b));
}

MatX mOrthonormalize(const MatX& V, const VecX& mass, int* droppedCount) {
  const double dropTol = 1e-10;
  std::vector<VecX> kept;
  int dropped = 0;
  for (Eigen::Index c = 0; c < V.cols(); ++c) {
    VecX v = V.col(c);
    const double original = mNorm(v, mass);
    if (original <= 0.0) {
      ++dropped;
      continue;
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const VecX& q : kept) v -= mDot(q, v, mass) * q;
    }
    const double remaining = mNorm(v, mass);
    if (remaining < dropTol * original) {
      ++dropped;
      continue;
    }
    kept.push_back(v / remaining);
  }
  if (droppedCount) *droppedCount = dropped;
  MatX out(V.rows(), static_cast<Eigen::Index>(kept.size()));
  for (size_t i = 0; i < kept.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = kept[i];
  return out;
}

MatX intersectSubspaces(const MatX& U, const MatX& V, const VecX& mass, double tol) {
  if (U.cols() == 0 || V.cols() == 0) return MatX(U.rows(), 0);
  MatX C = U.transpose() * mass.asDiagonal() * V;
  Eigen::JacobiSVD<MatX> svd(C, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const VecX& cosines = svd.singularValues();
  Eigen::Index kept = 0;
  while (kept < cosines.size() && cosines[kept] >= 1.0 - tol) ++kept;
  for (Eigen::Index i = kept; i < cosines.size(); ++i) {
    if (1.0 - cosines[i] < kGapGuard * tol) {
      std::ostringstream os;
      os << "intersectSubspaces: principal cosine " << cosines[i]
         << " crowds threshold " << 1.0 - tol;
      throw AmbiguousRank(os.str());
    }
  }
  if (kept == 0) return MatX(U.rows(), 0);
  MatX mid = 0.5 * (U * svd.matrixU().leftCols(kept) + V * svd.matrixV().leftCols(kept));
  return mOrthonormalize(mid, mass);
}

MatX mColumnSpaceBasis(const SpMat& A, const VecX& mass, double tol) {
  if (A.cols() == 0 || A.nonZeros() == 0) return MatX(A.rows(), 0);
  VecX sqrtMass = mass.cwiseSqrt();
  MatX B = sqrtMass.asDiagonal() * MatX(A);
  Eigen::BDCSVD<MatX> svd(B, Eigen::ComputeThinU);
  RankDecision d = decideRank(svd.singularValues(), tol, A.cols());
  MatX Ur = svd.matrixU().leftCols(d.rank);
  return sqrtMass.cwiseInverse().asDiagonal() * Ur;
}

MatX mKernelBasis(const SpMat& A, const VecX& mass, double tol) {
  RankNullspace rn = rankNullspace(A, tol);
  if (rn.nullspace.cols() == 0) return MatX(A.cols(), 0);
  VecX sqrtMass = mass.cwiseSqrt();
  MatX K = sqrtMass.asDiagonal() * rn.nullspace;
  Eigen::BDCSVD<MatX> svd(K, Eigen::ComputeThinU);
  MatX U = svd.matrixU().leftCols(rn.nullspace.cols());
  return sqrtMass.cwiseInverse().asDiagonal() * U;
}

SpMat vstackNormalized(const std::vector<const SpMat*>& blocks) {
  Eigen::Index rows = 0, cols = 0;
  for (const SpMat* b : blocks) {
    rows += b->rows();
    cols = std::max(cols, b->cols());
  }
  std::vector<Eigen::Triplet<double>> trips;
  Eigen::Index offset = 0;
  for (const SpMat* b : blocks) {
    double maxAbs = 0;
    for (int c = 0; c < b->outerSize(); ++c)
      for (SpMat::InnerIterator it(*b, c); it; ++it)
        maxAbs = std::max(maxAbs, std::abs(it.value()));
    const double scale = maxAbs > 0 ? 1.0 / maxAbs : 1.0;
    for (int c = 0; c < b->outerSize(); ++c)
      for (SpMat::InnerIterator it(*b, c); it; ++it)
        trips.emplace_back(offset + it.row(), it.col(), scale * it.value());
    offset += b->rows();
  }
  SpMat out(rows, cols);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

SpMat rowSelector(const std::vector<int>& rows, Eigen::Index n) {
  SpMat P(static_cast<Eigen::Index>(rows.size()), n);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    trips.emplace_back(static_cast<Eigen::Index>(i), rows[i], 1.0);
  P.setFromTriplets(trips.begin(), trips.end());
  return P;
}

}  // namespace hodgedec
