#include "hodgedec/operators.hpp"

#include "hodgedec/analytic.hpp"
#include "hodgedec/errors.hpp"

#include <cmath>
#include <string>

namespace hodgedec {

namespace {

std::vector<int> flaggedRows(const SimplicialComplex& K, int p, bool wantBoundary,
                             bool starInterior, bool deepInterior) {
  std::vector<int> rows;
  for (int i = 0; i < K.count(p); ++i) {
    if (starInterior) {
      if (K.isStarInterior(p, i)) rows.push_back(i);
    } else if (deepInterior) {
      if (K.isDeepInterior(p, i)) rows.push_back(i);
    } else if (K.isBoundary(p, i) == wantBoundary) {
      rows.push_back(i);
    }
  }
  return rows;
}

}  // namespace

OperatorSet OperatorSet::assemble(const SimplicialComplex& K, StarScheme scheme) {
  OperatorSet ops;
  ops.K_ = std::make_shared<SimplicialComplex>(K);
  ops.scheme_ = scheme;
  const int n = K.dim();

  const DualVolumeRatios duals = scheme == StarScheme::Circumcentric
                                     ? circumcentricDualRatios(K)
                                     : barycentricDualRatios(K);
  if (!(duals.minEntry > 0.0)) {
    throw NegativeDualVolume("hodge star has nonpositive entry (min " +
                             std::to_string(duals.minEntry) + "); try barycentric");
  }
  ops.mass_ = duals.ratios;

  ops.d_.resize(n);
  for (int p = 0; p < n; ++p) ops.d_[p] = SpMat(K.boundaryMatrix(p + 1).transpose());

  ops.delta_.resize(n + 1);
  for (int p = 1; p <= n; ++p) {
    ops.delta_[p] = ops.mass_[p - 1].cwiseInverse().asDiagonal() *
                    SpMat(ops.d_[p - 1].transpose()) * ops.mass_[p].asDiagonal();
  }

  ops.laplacian_.resize(n + 1);
  for (int p = 0; p <= n; ++p) {
    SpMat L(K.count(p), K.count(p));
    if (p < n) L = ops.delta_[p + 1] * ops.d_[p];
    if (p > 0) L = L + SpMat(ops.d_[p - 1] * ops.delta_[p]);
    ops.laplacian_[p] = L;
  }

  ops.dirichletRows_.resize(n + 1);
  ops.starInterior_.resize(n + 1);
  ops.deepInterior_.resize(n + 1);
  for (int p = 0; p <= n; ++p) {
    ops.dirichletRows_[p] = flaggedRows(K, p, false, false, false);
    ops.starInterior_[p] = flaggedRows(K, p, false, true, false);
    ops.deepInterior_[p] = flaggedRows(K, p, false, false, true);
  }
  return ops;
}

const SpMat& OperatorSet::d(int p) const {
  if (p < 0 || p >= dim())
    throw DegreeOutOfRange("d: degree " + std::to_string(p));
  return d_[p];
}

const VecX& OperatorSet::mass(int p) const {
  if (p < 0 || p > dim())
    throw DegreeOutOfRange("mass: degree " + std::to_string(p));
  return mass_[p];
}

const SpMat& OperatorSet::delta(int p) const {
  if (p < 1 || p > dim())
    throw DegreeOutOfRange("delta: degree " + std::to_string(p));
  return delta_[p];
}

const SpMat& OperatorSet::laplacian(int p) const {
  if (p < 0 || p > dim())
    throw DegreeOutOfRange("laplacian: degree " + std::to_string(p));
  return laplacian_[p];
}

Cochain OperatorSet::applyD(const Cochain& w) const {
  if (w.degree < 0 || w.degree >= dim())
    throw DegreeMismatch("applyD: cochain degree " + std::to_string(w.degree));
  if (w.values.size() != size(w.degree)) throw DegreeMismatch("applyD: length mismatch");
  return {w.degree + 1, d_[w.degree] * w.values};
}

Cochain OperatorSet::applyDelta(const Cochain& w) const {
  if (w.degree < 1 || w.degree > dim())
    throw DegreeMismatch("applyDelta: cochain degree " + std::to_string(w.degree));
  if (w.values.size() != size(w.degree))
    throw DegreeMismatch("applyDelta: length mismatch");
  return {w.degree - 1, delta_[w.degree] * w.values};
}

Cochain OperatorSet::applyLaplacian(const Cochain& w) const {
  if (w.degree < 0 || w.degree > dim())
    throw DegreeMismatch("applyLaplacian: cochain degree " + std::to_string(w.degree));
  if (w.values.size() != size(w.degree))
    throw DegreeMismatch("applyLaplacian: length mismatch");
  return {w.degree, laplacian_[w.degree] * w.values};
}

double OperatorSet::mInner(const Cochain& a, const Cochain& b) const {
  if (a.degree != b.degree) throw DegreeMismatch("mInner: mixed degrees");
  return a.values.dot(mass_[a.degree].cwiseProduct(b.values));
}

double OperatorSet::mNormOf(const Cochain& a) const {
  return std::sqrt(std::max(0.0, mInner(a, a)));
}

VecX DirichletOperators::restrictTo(int p, const VecX& full) const {
  VecX out(static_cast<Eigen::Index>(rows[p].size()));
  for (size_t i = 0; i < rows[p].size(); ++i) out[static_cast<Eigen::Index>(i)] = full[rows[p][i]];
  return out;
}

VecX DirichletOperators::extendFrom(int p, const VecX& reduced,
                                    Eigen::Index fullSize) const {
  VecX out = VecX::Zero(fullSize);
  for (size_t i = 0; i < rows[p].size(); ++i)
    out[rows[p][i]] = reduced[static_cast<Eigen::Index>(i)];
  return out;
}

DirichletOperators dirichletSubcomplex(const OperatorSet& ops) {
  const SimplicialComplex& K = ops.complex();
  const int n = K.dim();
  DirichletOperators D;
  D.rows.resize(n + 1);
  D.mass.resize(n + 1);
  D.d.resize(n);
  D.delta.resize(n + 1);
  D.laplacian.resize(n + 1);
  D.starInterior.resize(n + 1);

  std::vector<std::vector<int>> globalToLocal(n + 1);
  for (int p = 0; p <= n; ++p) {
    D.rows[p] = ops.dirichletRows(p);
    globalToLocal[p].assign(K.count(p), -1);
    for (size_t i = 0; i < D.rows[p].size(); ++i)
      globalToLocal[p][D.rows[p][i]] = static_cast<int>(i);
    VecX m(static_cast<Eigen::Index>(D.rows[p].size()));
    for (size_t i = 0; i < D.rows[p].size(); ++i)
      m[static_cast<Eigen::Index>(i)] = ops.mass(p)[D.rows[p][i]];
    D.mass[p] = m;
    for (int gi : ops.starInteriorRows(p)) {
      const int li = globalToLocal[p][gi];
      if (li >= 0) D.starInterior[p].push_back(li);
    }
  }
  for (int p = 0; p < n; ++p) {
    std::vector<Eigen::Triplet<double>> trips;
    const SpMat& full = ops.d(p);
    for (int col = 0; col < full.outerSize(); ++col) {
      const int lc = globalToLocal[p][col];
      if (lc < 0) continue;
      for (SpMat::InnerIterator it(full, col); it; ++it) {
        const int lr = globalToLocal[p + 1][it.row()];
        if (lr >= 0) trips.emplace_back(lr, lc, it.value());
      }
    }
    SpMat dd(static_cast<Eigen::Index>(D.rows[p + 1].size()),
             static_cast<Eigen::Index>(D.rows[p].size()));
    dd.setFromTriplets(trips.begin(), trips.end());
    D.d[p] = std::move(dd);
  }
  for (int p = 1; p <= n; ++p) {
    D.delta[p] = D.mass[p - 1].cwiseInverse().asDiagonal() *
                 SpMat(D.d[p - 1].transpose()) * D.mass[p].asDiagonal();
  }
  for (int p = 0; p <= n; ++p) {
    SpMat L(D.count(p), D.count(p));
    if (p < n) L = D.delta[p + 1] * D.d[p];
    if (p > 0) L = L + SpMat(D.d[p - 1] * D.delta[p]);
    D.laplacian[p] = L;
  }
  return D;
}

namespace {

struct GaussRule {
  std::vector<double> nodes;    // on [0,1]
  std::vector<double> weights;  // sum to 1
};

GaussRule gaussOnUnitInterval(int points) {
  // Gauss-Legendre abscissae on [-1,1], mapped to [0,1]
  std::vector<double> x, w;
  switch (std::clamp(points, 1, 5)) {
    case 1:
      x = {0.0};
      w = {2.0};
      break;
    case 2:
      x = {-0.5773502691896257, 0.5773502691896257};
      w = {1.0, 1.0};
      break;
    case 3:
      x = {-0.7745966692414834, 0.0, 0.7745966692414834};
      w = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
      break;
    case 4:
      x = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
           0.8611363115940526};
      w = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
           0.3478548451374538};
      break;
    default:
      x = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
           0.9061798459386640};
      w = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
           0.4786286704993665, 0.2369268850561891};
      break;
  }
  GaussRule rule;
  for (size_t i = 0; i < x.size(); ++i) {
    rule.nodes.push_back(0.5 * (x[i] + 1.0));
    rule.weights.push_back(0.5 * w[i]);
  }
  return rule;
}

struct TriRule {
  std::vector<std::array<double, 3>> bary;
  std::vector<double> weights;  // sum to 1
};

TriRule triangleRule(int order) {
  TriRule r;
  if (order <= 1) {
    r.bary = {{1.0 / 3, 1.0 / 3, 1.0 / 3}};
    r.weights = {1.0};
  } else if (order <= 4) {
    // 3-point edge-midpoint rule, exact through degree 2
    r.bary = {{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}};
    r.weights = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  } else {
    // 7-point rule, exact through degree 5
    const double a = 0.059715871789770, b = 0.470142064105115;
    const double c = 0.797426985353087, d = 0.101286507323456;
    r.bary = {{1.0 / 3, 1.0 / 3, 1.0 / 3}, {a, b, b}, {b, a, b}, {b, b, a},
              {c, d, d},                   {d, c, d}, {d, d, c}};
    r.weights = {0.225,
                 0.132394152788506,
                 0.132394152788506,
                 0.132394152788506,
                 0.125939180544827,
                 0.125939180544827,
                 0.125939180544827};
  }
  return r;
}

}  // namespace

Cochain deRhamMap(const SimplicialComplex& K, const AnalyticForm& form, int degree,
                  int quadratureOrder) {
  if (degree != form.degree)
    throw DegreeMismatch("deRhamMap: form degree does not match requested degree");
  if (degree < 0 || degree > K.dim() || degree > 2)
    throw DegreeOutOfRange("deRhamMap: degree " + std::to_string(degree));

  Cochain out{degree, VecX::Zero(K.count(degree))};
  if (degree == 0) {
    for (int v = 0; v < K.count(0); ++v)
      out.values[v] = form.evalScalar(K.vertex(K.simplex(0, v)[0]));
    return out;
  }
  if (degree == 1) {
    const GaussRule rule = gaussOnUnitInterval(quadratureOrder);
    for (int e = 0; e < K.count(1); ++e) {
      const Vec3& p0 = K.vertex(K.simplex(1, e)[0]);
      const Vec3& p1 = K.vertex(K.simplex(1, e)[1]);
      const Vec3 dir = p1 - p0;
      double sum = 0;
      for (size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * form.evalField(p0 + rule.nodes[i] * dir).dot(dir);
      out.values[e] = sum;
    }
    return out;
  }
  const TriRule rule = triangleRule(quadratureOrder >= 5 ? 5 : quadratureOrder);
  for (int t = 0; t < K.count(2); ++t) {
    const auto& tri = K.simplex(2, t);
    const Vec3& p0 = K.vertex(tri[0]);
    const Vec3& p1 = K.vertex(tri[1]);
    const Vec3& p2 = K.vertex(tri[2]);
    // signed area of the canonically ordered triangle; density forms
    // f dx^dy are sampled on planar meshes
    const double signedArea = 0.5 * (p1 - p0).cross(p2 - p0).z();
    double sum = 0;
    for (size_t i = 0; i < rule.bary.size(); ++i) {
      const auto& b = rule.bary[i];
      const Vec3 x = b[0] * p0 + b[1] * p1 + b[2] * p2;
      sum += rule.weights[i] * form.evalScalar(x);
    }
    out.values[t] = sum * signedArea;
  }
  return out;
}

}  // namespace hodgedec
