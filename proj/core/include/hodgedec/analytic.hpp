#pragma once

#include "hodgedec/operators.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hodgedec {

/// Closed-form differential form on a planar domain. A 0-form is given by
/// `scalar`; a 1-form by the first two components of `field`; a 2-form by
/// its density f (as scalar) with omega = f dx ^ dy. Evaluation outside the
/// guard throws EvalError.
struct AnalyticForm {
  int degree = 0;
  std::function<double(const Vec3&)> scalar;
  std::function<Vec3(const Vec3&)> field;
  std::function<bool(const Vec3&)> guard;  // optional; empty means everywhere

  double evalScalar(const Vec3& x) const;
  Vec3 evalField(const Vec3& x) const;
};

/// The harmonic 2-form -1/2 log(x^2+y^2) dx^dy on the annulus a<=r<=b.
AnalyticForm annulusOmega(double a = 1.0, double b = 2.0);
/// Its codifferential, the winding form (-y dx + x dy)/(x^2+y^2).
AnalyticForm annulusPhi(double a = 1.0, double b = 2.0);

struct ConvergenceRow {
  int nTheta = 0;
  int nRadial = 0;
  double h = 0;                    // max edge length
  double errDeltaInterior = 0;     // |delta w_h - phi_h|_M / |phi_h|_M, non-boundary rows
  double errDeltaAll = 0;          // same over all rows (boundary flux included)
  double errLaplacianInterior = 0; // scaled interior residual of Lap w_h
  double windingIntegral = 0;      // phi_h summed around the inner boundary
  double harmonicClassCoord = 0;   // <phi_h, generator>_M
  double echoClassCoord = 0;       // echo coordinate of w_h (degree-2 class)
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  std::string toCsv() const;
  std::string toJson() const;
  /// errDeltaInterior ratios between consecutive resolutions (coarse/fine).
  std::vector<double> deltaRatios() const;
};

/// Runs the annulus refinement study at the given angular resolutions
/// (radial layers scale along). Requires at least 3 geometrically increasing
/// resolutions.
ConvergenceTable convergenceStudy(const std::vector<int>& angularResolutions,
                                  double innerRadius = 1.0, double outerRadius = 2.0,
                                  StarScheme scheme = StarScheme::Circumcentric,
                                  int quadratureOrder = 4);

/// Signed sum of a 1-cochain over the inner boundary circle of an annulus
/// mesh, traversed counterclockwise.
double innerBoundaryCirculation(const SimplicialComplex& K, const Cochain& w);

}  // namespace hodgedec
