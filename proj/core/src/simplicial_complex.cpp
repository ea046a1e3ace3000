#include "hodgedec/simplicial_complex.hpp"

#include "hodgedec/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <climits>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace hodgedec {

std::string simplexKey(const std::vector<int>& sortedVerts) {
  std::string key;
  key.reserve(sortedVerts.size() * 4);
  for (int v : sortedVerts) {
    key += std::to_string(v);
    key += ',';
  }
  return key;
}

namespace {

std::vector<std::vector<int>> subsetsOfSize(const std::vector<int>& verts, int size) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(verts.size());
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> subset(size);
    for (int i = 0; i < size; ++i) subset[i] = verts[idx[i]];
    out.push_back(std::move(subset));
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

double triangleArea(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * (b - a).cross(c - a).norm();
}

// cot of the angle at `apex` in the triangle (apex, p, q)
double cornerCotan(const Vec3& apex, const Vec3& p, const Vec3& q) {
  const Vec3 u = p - apex;
  const Vec3 v = q - apex;
  const double cross = u.cross(v).norm();
  if (cross <= 0.0) return std::numeric_limits<double>::infinity();
  return u.dot(v) / cross;
}

}  // namespace

int SimplicialComplex::count(int k) const {
  if (k < 0 || k > dim_) return 0;
  return static_cast<int>(simplices_[k].size());
}

int SimplicialComplex::indexOf(int k, const std::vector<int>& sortedVerts) const {
  if (k < 0 || k > dim_) return -1;
  auto it = index_[k].find(simplexKey(sortedVerts));
  return it == index_[k].end() ? -1 : it->second;
}

const SpMat& SimplicialComplex::boundaryMatrix(int k) const {
  if (k < 1 || k > dim_) {
    throw DegreeOutOfRange("boundaryMatrix: degree " + std::to_string(k) +
                           " out of range [1," + std::to_string(dim_) + "]");
  }
  return boundary_[k];
}

int SimplicialComplex::eulerCharacteristic() const {
  int chi = 0;
  for (int k = 0; k <= dim_; ++k) chi += (k % 2 == 0 ? 1 : -1) * count(k);
  return chi;
}

double SimplicialComplex::primalVolume(int k, int i) const {
  const auto& s = simplices_[k][i];
  switch (k) {
    case 0:
      return 1.0;
    case 1:
      return (vertices_[s[1]] - vertices_[s[0]]).norm();
    case 2:
      return triangleArea(vertices_[s[0]], vertices_[s[1]], vertices_[s[2]]);
    case 3: {
      const Vec3 a = vertices_[s[1]] - vertices_[s[0]];
      const Vec3 b = vertices_[s[2]] - vertices_[s[0]];
      const Vec3 c = vertices_[s[3]] - vertices_[s[0]];
      return std::abs(a.cross(b).dot(c)) / 6.0;
    }
    default:
      throw DegreeOutOfRange("primalVolume: unsupported degree");
  }
}

class ComplexBuilder {
 public:
  static SimplicialComplex build(int dim, std::vector<Vec3> vertices,
                                 const std::vector<std::vector<int>>& cells,
                                 int ambientDim) {
    if (dim < 1 || dim > 3) throw BadParams("complex dimension must be 1, 2 or 3");
    if (cells.empty()) throw ParseError("complex has no top-dimensional cells");

    SimplicialComplex K;
    K.dim_ = dim;
    K.ambientDim_ = ambientDim;
    K.vertices_ = std::move(vertices);

    const int nVerts = static_cast<int>(K.vertices_.size());
    std::vector<char> used(nVerts, 0);
    std::set<std::vector<int>> cellSet;
    for (const auto& cell : cells) {
      if (static_cast<int>(cell.size()) != dim + 1)
        throw ParseError("cell arity does not match complex dimension");
      std::vector<int> sorted = cell;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError("cell with repeated vertex index");
      for (int v : sorted) {
        if (v < 0 || v >= nVerts) throw ParseError("vertex index out of range");
        used[v] = 1;
      }
      if (!cellSet.insert(sorted).second) throw ParseError("duplicate top cell");
    }
    for (int v = 0; v < nVerts; ++v)
      if (!used[v]) throw ParseError("isolated vertex " + std::to_string(v));

    enumerateSimplices(K, cellSet);
    buildBoundaryMatrices(K);
    computeBoundaryFlags(K);
    computeVertexDepths(K);
    computeInteriorFlags(K);
    checkOrientability(K);
    checkConnectivity(K);
    return K;
  }

 private:
  static void enumerateSimplices(SimplicialComplex& K,
                                 const std::set<std::vector<int>>& cellSet) {
    const int dim = K.dim_;
    K.simplices_.assign(dim + 1, {});
    K.index_.assign(dim + 1, {});

    std::vector<std::set<std::vector<int>>> bucket(dim + 1);
    bucket[dim] = cellSet;
    for (int k = dim; k >= 1; --k) {
      for (const auto& s : bucket[k]) {
        for (auto& f : subsetsOfSize(s, k)) bucket[k - 1].insert(std::move(f));
      }
    }
    for (int k = 0; k <= dim; ++k) {
      K.simplices_[k].assign(bucket[k].begin(), bucket[k].end());
      for (int i = 0; i < static_cast<int>(K.simplices_[k].size()); ++i)
        K.index_[k][simplexKey(K.simplices_[k][i])] = i;
    }
  }

  static void buildBoundaryMatrices(SimplicialComplex& K) {
    const int dim = K.dim_;
    K.boundary_.assign(dim + 1, SpMat());
    for (int k = 1; k <= dim; ++k) {
      std::vector<Eigen::Triplet<double>> trips;
      const auto& list = K.simplices_[k];
      trips.reserve(list.size() * (k + 1));
      for (int col = 0; col < static_cast<int>(list.size()); ++col) {
        const auto& s = list[col];
        std::vector<int> face(s.size() - 1);
        for (int drop = 0; drop <= k; ++drop) {
          int w = 0;
          for (int j = 0; j <= k; ++j)
            if (j != drop) face[w++] = s[j];
          const int row = K.indexOf(k - 1, face);
          const double sign = (drop % 2 == 0) ? 1.0 : -1.0;
          trips.emplace_back(row, col, sign);
        }
      }
      SpMat B(K.count(k - 1), K.count(k));
      B.setFromTriplets(trips.begin(), trips.end());
      K.boundary_[k] = std::move(B);
    }
  }

  static void computeBoundaryFlags(SimplicialComplex& K) {
    const int dim = K.dim_;
    K.boundaryFlag_.assign(dim + 1, {});
    for (int k = 0; k <= dim; ++k) K.boundaryFlag_[k].assign(K.count(k), 0);

    // facet coface counts decide manifoldness and the boundary facets
    const SpMat& Bn = K.boundary_[dim];
    std::vector<int> cofaceCount(K.count(dim - 1), 0);
    for (int col = 0; col < Bn.outerSize(); ++col)
      for (SpMat::InnerIterator it(Bn, col); it; ++it) ++cofaceCount[it.row()];

    for (int f = 0; f < K.count(dim - 1); ++f) {
      if (cofaceCount[f] == 1) {
        K.boundaryFlag_[dim - 1][f] = 1;
      } else if (cofaceCount[f] != 2) {
        K.manifold_ = false;
        K.buildIssues_.push_back("facet " + std::to_string(f) + " has " +
                                 std::to_string(cofaceCount[f]) + " cofaces");
      }
    }
    // close flags under taking faces
    for (int k = dim - 1; k >= 1; --k) {
      const SpMat& B = K.boundary_[k];
      for (int col = 0; col < B.outerSize(); ++col) {
        if (!K.boundaryFlag_[k][col]) continue;
        for (SpMat::InnerIterator it(B, col); it; ++it)
          K.boundaryFlag_[k - 1][it.row()] = 1;
      }
    }
    K.hasBoundary_ = false;
    for (char f : K.boundaryFlag_[dim - 1])
      if (f) K.hasBoundary_ = true;
  }

  static void computeVertexDepths(SimplicialComplex& K) {
    const int nV = K.vertexCount();
    K.vertexDepth_.assign(nV, INT_MAX);
    std::deque<int> queue;
    for (int v = 0; v < nV; ++v) {
      if (K.boundaryFlag_[0][v]) {
        K.vertexDepth_[v] = 0;
        queue.push_back(v);
      }
    }
    // adjacency through edges
    std::vector<std::vector<int>> nbr(nV);
    for (const auto& e : K.simplices_[1]) {
      nbr[e[0]].push_back(e[1]);
      nbr[e[1]].push_back(e[0]);
    }
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : nbr[v]) {
        if (K.vertexDepth_[w] > K.vertexDepth_[v] + 1) {
          K.vertexDepth_[w] = K.vertexDepth_[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }

  static void computeInteriorFlags(SimplicialComplex& K) {
    const int dim = K.dim_;
    K.starInteriorFlag_.assign(dim + 1, {});
    K.deepInteriorFlag_.assign(dim + 1, {});
    for (int k = 0; k <= dim; ++k) {
      K.starInteriorFlag_[k].assign(K.count(k), 1);
      K.deepInteriorFlag_[k].assign(K.count(k), 0);
    }
    // closed star of sigma avoids the boundary iff every top simplex
    // containing sigma is free of boundary vertices
    for (const auto& top : K.simplices_[dim]) {
      bool clean = true;
      for (int v : top)
        if (K.boundaryFlag_[0][v]) clean = false;
      if (clean) continue;
      for (int k = 0; k <= dim; ++k) {
        for (const auto& sub : subsetsOfSize(top, k + 1)) {
          const int idx = K.indexOf(k, sub);
          if (idx >= 0) K.starInteriorFlag_[k][idx] = 0;
        }
      }
    }
    for (int k = 0; k <= dim; ++k) {
      for (int i = 0; i < K.count(k); ++i) {
        bool deep = true;
        for (int v : K.simplices_[k][i])
          if (K.vertexDepth_[v] < 2) deep = false;
        K.deepInteriorFlag_[k][i] = deep ? 1 : 0;
      }
    }
  }

  static void checkOrientability(SimplicialComplex& K) {
    if (!K.manifold_) {
      K.orientable_ = false;
      return;
    }
    const int dim = K.dim_;
    const int nTop = K.count(dim);
    const SpMat& Bn = K.boundary_[dim];

    // facet -> (top, sign) incidences
    std::vector<std::vector<std::pair<int, double>>> facetTops(K.count(dim - 1));
    for (int col = 0; col < Bn.outerSize(); ++col)
      for (SpMat::InnerIterator it(Bn, col); it; ++it)
        facetTops[it.row()].push_back({col, it.value()});

    std::vector<int> orient(nTop, 0);
    for (int seed = 0; seed < nTop; ++seed) {
      if (orient[seed] != 0) continue;
      orient[seed] = 1;
      std::deque<int> queue{seed};
      while (!queue.empty()) {
        const int t = queue.front();
        queue.pop_front();
        for (SpMat::InnerIterator it(Bn, t); it; ++it) {
          for (const auto& [other, sign] : facetTops[it.row()]) {
            if (other == t) continue;
            // adjacent tops must induce opposite orientations on the facet
            const int required = -orient[t] * static_cast<int>(it.value() * sign);
            if (orient[other] == 0) {
              orient[other] = required;
              queue.push_back(other);
            } else if (orient[other] != required) {
              K.orientable_ = false;
              K.buildIssues_.push_back("orientation conflict at facet " +
                                       std::to_string(it.row()));
              return;
            }
          }
        }
      }
    }
  }

  static void checkConnectivity(SimplicialComplex& K) {
    const int nV = K.vertexCount();
    std::vector<char> seen(nV, 0);
    std::vector<std::vector<int>> nbr(nV);
    for (const auto& e : K.simplices_[1]) {
      nbr[e[0]].push_back(e[1]);
      nbr[e[1]].push_back(e[0]);
    }
    std::deque<int> queue{0};
    seen[0] = 1;
    int visited = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : nbr[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++visited;
          queue.push_back(w);
        }
      }
    }
    K.connected_ = (visited == nV);
  }
};

SimplicialComplex SimplicialComplex::fromCells(int dim, std::vector<Vec3> vertices,
                                               const std::vector<std::vector<int>>& cells,
                                               int ambientDim) {
  return ComplexBuilder::build(dim, std::move(vertices), cells, ambientDim);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ValidationReport SimplicialComplex::validate() const {
  ValidationReport rep;
  rep.dim = dim_;
  rep.counts.resize(dim_ + 1);
  for (int k = 0; k <= dim_; ++k) rep.counts[k] = count(k);
  rep.euler = eulerCharacteristic();

  // manifold: every facet has one or two cofaces
  rep.manifold = true;
  {
    const SpMat& Bn = boundary_[dim_];
    std::vector<int> cofaceCount(count(dim_ - 1), 0);
    for (int col = 0; col < Bn.outerSize(); ++col)
      for (SpMat::InnerIterator it(Bn, col); it; ++it) ++cofaceCount[it.row()];
    for (int f = 0; f < count(dim_ - 1); ++f) {
      if (cofaceCount[f] < 1 || cofaceCount[f] > 2) {
        rep.manifold = false;
        rep.issues.push_back({"non_manifold",
                              "facet " + std::to_string(f) + " has " +
                                  std::to_string(cofaceCount[f]) + " cofaces"});
      }
      const bool shouldFlag = (cofaceCount[f] == 1);
      if (shouldFlag != (boundaryFlag_[dim_ - 1][f] != 0)) {
        rep.issues.push_back({"boundary_flag",
                              "facet " + std::to_string(f) + " flag mismatch"});
      }
    }
  }

  rep.orientable = orientable_;
  if (!orientable_)
    rep.issues.push_back({"non_orientable", "no consistent top orientation"});

  // boundary flags are face-closed
  rep.boundaryFlagsFaceClosed = true;
  for (int k = 1; k <= dim_; ++k) {
    const SpMat& B = boundary_[k];
    for (int col = 0; col < B.outerSize(); ++col) {
      if (!boundaryFlag_[k][col]) continue;
      for (SpMat::InnerIterator it(B, col); it; ++it) {
        if (!boundaryFlag_[k - 1][it.row()]) {
          rep.boundaryFlagsFaceClosed = false;
          rep.issues.push_back({"boundary_flag_not_face_closed",
                                "degree " + std::to_string(k) + " simplex " +
                                    std::to_string(col)});
        }
      }
    }
  }

  // dd == 0 in exact arithmetic
  rep.ddZero = true;
  for (int k = 2; k <= dim_; ++k) {
    SpMat prod = boundary_[k - 1] * boundary_[k];
    double maxAbs = 0;
    for (int col = 0; col < prod.outerSize(); ++col)
      for (SpMat::InnerIterator it(prod, col); it; ++it)
        maxAbs = std::max(maxAbs, std::abs(it.value()));
    if (maxAbs != 0.0) {
      rep.ddZero = false;
      rep.issues.push_back({"dd_nonzero", "degree " + std::to_string(k)});
    }
  }

  // boundary components: connected components of the boundary subcomplex
  {
    std::vector<int> bFacets;
    for (int f = 0; f < count(dim_ - 1); ++f)
      if (boundaryFlag_[dim_ - 1][f]) bFacets.push_back(f);
    if (bFacets.empty()) {
      rep.boundaryComponents = 0;
    } else if (dim_ == 1) {
      rep.boundaryComponents = static_cast<int>(bFacets.size());
    } else {
      std::vector<int> local(count(dim_ - 1), -1);
      for (int i = 0; i < static_cast<int>(bFacets.size()); ++i) local[bFacets[i]] = i;
      UnionFind uf(static_cast<int>(bFacets.size()));
      const SpMat& B = boundary_[dim_ - 1];
      std::unordered_map<int, int> ridgeFirst;  // (dim-2)-face -> first boundary facet
      for (int f : bFacets) {
        for (SpMat::InnerIterator it(B, f); it; ++it) {
          auto [pos, inserted] = ridgeFirst.try_emplace(it.row(), f);
          if (!inserted) uf.unite(local[pos->second], local[f]);
        }
      }
      std::set<int> roots;
      for (int i = 0; i < static_cast<int>(bFacets.size()); ++i) roots.insert(uf.find(i));
      rep.boundaryComponents = static_cast<int>(roots.size());
    }
  }

  // mesh quality
  rep.minAngleDeg = 180.0;
  if (dim_ >= 2) {
    for (const auto& t : simplices_[2]) {
      const Vec3& a = vertices_[t[0]];
      const Vec3& b = vertices_[t[1]];
      const Vec3& c = vertices_[t[2]];
      const auto angleAt = [](const Vec3& apex, const Vec3& p, const Vec3& q) {
        const Vec3 u = (p - apex).normalized();
        const Vec3 v = (q - apex).normalized();
        return std::acos(std::clamp(u.dot(v), -1.0, 1.0)) * 180.0 / M_PI;
      };
      rep.minAngleDeg = std::min({rep.minAngleDeg, angleAt(a, b, c), angleAt(b, a, c),
                                  angleAt(c, a, b)});
    }
  }
  if (dim_ <= 2) {
    const auto duals = circumcentricDualRatios(*this);
    rep.minCircumcentricDual = duals.minEntry;
  }

  for (const auto& msg : buildIssues_) rep.issues.push_back({"build", msg});
  if (!connected_) rep.issues.push_back({"disconnected", "complex is not connected"});
  return rep;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << "dim=" << dim << " counts=[";
  for (size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << counts[i];
  os << "] chi=" << euler << " manifold=" << (manifold ? "yes" : "no")
     << " orientable=" << (orientable ? "yes" : "no")
     << " boundary_components=" << boundaryComponents
     << " min_angle_deg=" << minAngleDeg
     << " min_circ_dual=" << minCircumcentricDual
     << " issues=" << issues.size();
  return os.str();
}

DualVolumeRatios circumcentricDualRatios(const SimplicialComplex& K) {
  DualVolumeRatios out;
  const int dim = K.dim();
  out.ratios.resize(dim + 1);
  if (dim > 2)
    throw Error("circumcentric dual volumes are implemented for dim <= 2");

  if (dim == 1) {
    VecX m0 = VecX::Zero(K.count(0));
    VecX m1 = VecX::Zero(K.count(1));
    for (int e = 0; e < K.count(1); ++e) {
      const double len = K.primalVolume(1, e);
      m1[e] = 1.0 / len;
      m0[K.simplex(1, e)[0]] += 0.5 * len;
      m0[K.simplex(1, e)[1]] += 0.5 * len;
    }
    out.ratios[0] = m0;
    out.ratios[1] = m1;
  } else {
    VecX m0 = VecX::Zero(K.count(0));
    VecX m1 = VecX::Zero(K.count(1));
    VecX m2 = VecX::Zero(K.count(2));
    for (int t = 0; t < K.count(2); ++t) {
      const auto& tri = K.simplex(2, t);
      m2[t] = 1.0 / K.primalVolume(2, t);
      for (int corner = 0; corner < 3; ++corner) {
        const int v = tri[corner];
        const int p = tri[(corner + 1) % 3];
        const int q = tri[(corner + 2) % 3];
        // signed circumcentric corner area at v; each squared edge length
        // pairs with the cotangent of the angle opposite that edge
        const double cotP = cornerCotan(K.vertex(p), K.vertex(q), K.vertex(v));
        const double cotQ = cornerCotan(K.vertex(q), K.vertex(v), K.vertex(p));
        const double lq = (K.vertex(q) - K.vertex(v)).squaredNorm();
        const double lp = (K.vertex(p) - K.vertex(v)).squaredNorm();
        m0[v] += 0.125 * (lp * cotQ + lq * cotP);
        // half dual length of the edge opposite this corner accumulates
        // on that edge: |*e|/|e| = (cot(opposite angles)) / 2
        std::vector<int> edge{p, q};
        std::sort(edge.begin(), edge.end());
        const int e = K.indexOf(1, edge);
        const double cotV = cornerCotan(K.vertex(v), K.vertex(p), K.vertex(q));
        m1[e] += 0.5 * cotV;
      }
    }
    out.ratios[0] = m0;
    out.ratios[1] = m1;
    out.ratios[2] = m2;
  }
  out.minEntry = std::numeric_limits<double>::infinity();
  for (const auto& r : out.ratios)
    if (r.size() > 0) out.minEntry = std::min(out.minEntry, r.minCoeff());
  return out;
}

DualVolumeRatios barycentricDualRatios(const SimplicialComplex& K) {
  DualVolumeRatios out;
  const int dim = K.dim();
  out.ratios.resize(dim + 1);

  if (dim == 1) {
    return circumcentricDualRatios(K);  // midpoints coincide with barycenters
  }
  if (dim != 2) throw Error("barycentric dual volumes are implemented for dim <= 2");

  VecX m0 = VecX::Zero(K.count(0));
  VecX m1 = VecX::Zero(K.count(1));
  VecX m2 = VecX::Zero(K.count(2));
  for (int t = 0; t < K.count(2); ++t) {
    const auto& tri = K.simplex(2, t);
    const double area = K.primalVolume(2, t);
    m2[t] = 1.0 / area;
    const Vec3 bary = (K.vertex(tri[0]) + K.vertex(tri[1]) + K.vertex(tri[2])) / 3.0;
    for (int corner = 0; corner < 3; ++corner) {
      const int v = tri[corner];
      m0[v] += area / 3.0;
      const int p = tri[(corner + 1) % 3];
      const int q = tri[(corner + 2) % 3];
      std::vector<int> edge{p, q};
      std::sort(edge.begin(), edge.end());
      const int e = K.indexOf(1, edge);
      const Vec3 mid = 0.5 * (K.vertex(p) + K.vertex(q));
      m1[e] += (bary - mid).norm() / (K.vertex(p) - K.vertex(q)).norm();
    }
  }
  out.ratios[0] = m0;
  out.ratios[1] = m1;
  out.ratios[2] = m2;
  out.minEntry = std::numeric_limits<double>::infinity();
  for (const auto& r : out.ratios)
    if (r.size() > 0) out.minEntry = std::min(out.minEntry, r.minCoeff());
  return out;
}

}  // namespace hodgedec
