#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <string>
#include <unordered_map>
#include <vector>

namespace hodgedec {

using Vec3 = Eigen::Vector3d;
using SpMat = Eigen::SparseMatrix<double>;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

struct ValidationIssue {
  std::string code;    // e.g. "non_manifold", "dd_nonzero"
  std::string detail;
};

struct ValidationReport {
  int dim = 0;
  std::vector<int> counts;          // N_k per degree
  int euler = 0;                    // alternating sum of counts
  bool manifold = false;
  bool orientable = false;
  bool boundaryFlagsFaceClosed = false;
  bool ddZero = false;
  int boundaryComponents = 0;
  double minAngleDeg = 0.0;         // over triangles; 0 for 1-d complexes
  double minCircumcentricDual = 0.0;
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

/// Oriented simplicial complex of a compact manifold with (possibly empty)
/// boundary, embedded in Euclidean space. Simplices are stored with sorted
/// vertex indices; orientation signs live in the incidence entries, so
/// the boundary-of-boundary identity holds in exact integer arithmetic.
/// Immutable after construction.
class SimplicialComplex {
 public:
  /// Builds the full complex from its top-dimensional cells. Lower simplices
  /// are enumerated, boundary/interior flags computed, and manifoldness plus
  /// orientability checked (recorded, not thrown; see validate()).
  static SimplicialComplex fromCells(int dim,
                                     std::vector<Vec3> vertices,
                                     const std::vector<std::vector<int>>& cells,
                                     int ambientDim);

  int dim() const { return dim_; }
  int ambientDim() const { return ambientDim_; }
  int count(int k) const;
  int vertexCount() const { return static_cast<int>(vertices_.size()); }
  const Vec3& vertex(int i) const { return vertices_[i]; }
  const std::vector<Vec3>& vertices() const { return vertices_; }

  /// Sorted vertex indices of the i-th k-simplex (canonical lexicographic
  /// order within each degree).
  const std::vector<int>& simplex(int k, int i) const { return simplices_[k][i]; }
  const std::vector<std::vector<int>>& simplices(int k) const { return simplices_[k]; }

  /// Index of a k-simplex given its sorted vertex tuple; -1 when absent.
  int indexOf(int k, const std::vector<int>& sortedVerts) const;

  /// Signed incidence matrix of (k-1)-faces in k-simplices, entries in
  /// {-1,0,+1}. Throws DegreeOutOfRange unless 1 <= k <= dim.
  const SpMat& boundaryMatrix(int k) const;

  /// True iff the simplex is contained in the boundary subcomplex.
  bool isBoundary(int k, int i) const { return boundaryFlag_[k][i] != 0; }
  /// True iff the closed star of the simplex contains no boundary simplex.
  bool isStarInterior(int k, int i) const { return starInteriorFlag_[k][i] != 0; }
  /// True iff every vertex of the simplex has graph depth >= 2 from the
  /// boundary. Unlike the closed-star flag this family is face-closed.
  bool isDeepInterior(int k, int i) const { return deepInteriorFlag_[k][i] != 0; }
  /// Edge-graph distance from the boundary (0 on boundary vertices,
  /// INT_MAX on closed meshes).
  int vertexDepth(int i) const { return vertexDepth_[i]; }

  bool hasBoundary() const { return hasBoundary_; }
  bool isManifold() const { return manifold_; }
  bool isOrientable() const { return orientable_; }
  bool isConnected() const { return connected_; }
  int eulerCharacteristic() const;

  /// Length / area of a simplex (1 for vertices).
  double primalVolume(int k, int i) const;

  /// Re-checks every structural invariant; returns findings, never throws.
  ValidationReport validate() const;

 private:
  int dim_ = 0;
  int ambientDim_ = 3;
  std::vector<Vec3> vertices_;
  // simplices_[k]: lexicographically sorted list of sorted vertex tuples.
  std::vector<std::vector<std::vector<int>>> simplices_;
  std::vector<std::unordered_map<std::string, int>> index_;
  std::vector<SpMat> boundary_;  // boundary_[k]: faces x k-simplices, k>=1
  std::vector<std::vector<char>> boundaryFlag_;
  std::vector<std::vector<char>> starInteriorFlag_;
  std::vector<std::vector<char>> deepInteriorFlag_;
  std::vector<int> vertexDepth_;
  bool hasBoundary_ = false;
  bool manifold_ = true;
  bool orientable_ = true;
  bool connected_ = true;
  std::vector<std::string> buildIssues_;  // non-fatal findings from construction

  friend class ComplexBuilder;
};

/// Computes circumcentric (signed) and barycentric dual/primal volume ratios.
/// Returned per degree: ratios[k][i] = |dual sigma| / |sigma|.
/// For the circumcentric scheme entries may be nonpositive on poor meshes;
/// callers decide whether that is an error.
struct DualVolumeRatios {
  std::vector<VecX> ratios;
  double minEntry = 0.0;
};
DualVolumeRatios circumcentricDualRatios(const SimplicialComplex& K);
DualVolumeRatios barycentricDualRatios(const SimplicialComplex& K);

/// Canonical key for a sorted vertex tuple (used by the internal index).
std::string simplexKey(const std::vector<int>& sortedVerts);

}  // namespace hodgedec
