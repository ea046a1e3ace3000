#include "hodgedec/generators.hpp"

#include "hodgedec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace hodgedec {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

SimplicialComplex finish(int dim, std::vector<Vec3> verts,
                         const std::vector<std::vector<int>>& cells, int ambient) {
  SimplicialComplex K = SimplicialComplex::fromCells(dim, std::move(verts), cells, ambient);
  if (dim <= 2) {
    const auto duals = circumcentricDualRatios(K);
    if (!(duals.minEntry > 0.0)) {
      throw StarFailure("generated mesh has nonpositive circumcentric dual volume (min " +
                        std::to_string(duals.minEntry) + ")");
    }
  }
  return K;
}

// ccw split of the polar quad (innerA, innerB | outerA, outerB); the
// diagonal alternates with `parity` to avoid directional bias
void splitQuad(std::vector<std::vector<int>>& cells, int innerA, int innerB,
               int outerA, int outerB, bool parity) {
  if (parity) {
    cells.push_back({innerA, innerB, outerB});
    cells.push_back({innerA, outerB, outerA});
  } else {
    cells.push_back({innerA, innerB, outerA});
    cells.push_back({innerB, outerB, outerA});
  }
}

}  // namespace

SimplicialComplex generateInterval(double length, int segments) {
  if (length <= 0.0) throw BadParams("interval length must be positive");
  if (segments < 1) throw BadParams("interval needs at least one segment");
  std::vector<Vec3> verts(segments + 1);
  for (int i = 0; i <= segments; ++i)
    verts[i] = Vec3(length * i / segments, 0.0, 0.0);
  std::vector<std::vector<int>> cells(segments);
  for (int i = 0; i < segments; ++i) cells[i] = {i, i + 1};
  return finish(1, std::move(verts), cells, 1);
}

SimplicialComplex generateCircle(int segments, double radius) {
  if (segments < 3) throw BadParams("circle needs at least three segments");
  if (radius <= 0.0) throw BadParams("circle radius must be positive");
  std::vector<Vec3> verts(segments);
  for (int i = 0; i < segments; ++i) {
    const double t = kTau * i / segments;
    verts[i] = Vec3(radius * std::cos(t), radius * std::sin(t), 0.0);
  }
  std::vector<std::vector<int>> cells(segments);
  for (int i = 0; i < segments; ++i) cells[i] = {i, (i + 1) % segments};
  return finish(1, std::move(verts), cells, 2);
}

SimplicialComplex generateAnnulus(double innerRadius, double outerRadius,
                                  int nTheta, int nRadial) {
  if (!(innerRadius > 0.0) || !(innerRadius < outerRadius))
    throw BadParams("annulus requires 0 < a < b");
  if (nTheta < 8) throw BadParams("annulus needs at least 8 angular segments");
  if (nRadial < 2) throw BadParams("annulus needs at least 2 radial layers");

  std::vector<Vec3> verts;
  verts.reserve(static_cast<size_t>(nTheta) * (nRadial + 1));
  for (int k = 0; k <= nRadial; ++k) {
    const double r = innerRadius + (outerRadius - innerRadius) * k / nRadial;
    for (int j = 0; j < nTheta; ++j) {
      const double t = kTau * j / nTheta;
      verts.emplace_back(r * std::cos(t), r * std::sin(t), 0.0);
    }
  }
  const auto id = [nTheta](int ring, int j) { return ring * nTheta + (j % nTheta); };
  std::vector<std::vector<int>> cells;
  cells.reserve(static_cast<size_t>(2 * nTheta) * nRadial);
  for (int k = 0; k < nRadial; ++k)
    for (int j = 0; j < nTheta; ++j)
      splitQuad(cells, id(k, j), id(k, j + 1), id(k + 1, j), id(k + 1, j + 1),
                (j + k) % 2 == 0);
  return finish(2, std::move(verts), cells, 2);
}

SimplicialComplex generateDisk(double radius, int segments) {
  if (radius <= 0.0) throw BadParams("disk radius must be positive");
  if (segments < 8) throw BadParams("disk needs at least 8 angular segments");

  const double dTheta = kTau / segments;
  const double growth = 1.0 + dTheta;
  // innermost ring at roughly radius*dTheta keeps cells near-square
  const int nRings = std::max(
      2, static_cast<int>(std::ceil(std::log(1.0 / dTheta) / std::log(growth))));

  std::vector<Vec3> verts;
  verts.emplace_back(0.0, 0.0, 0.0);
  for (int k = 1; k <= nRings; ++k) {
    const double r = radius * std::pow(growth, k - nRings);
    for (int j = 0; j < segments; ++j) {
      const double t = kTau * j / segments;
      verts.emplace_back(r * std::cos(t), r * std::sin(t), 0.0);
    }
  }
  const auto id = [segments](int ring, int j) {
    return 1 + (ring - 1) * segments + (j % segments);
  };
  std::vector<std::vector<int>> cells;
  for (int j = 0; j < segments; ++j)
    cells.push_back({0, id(1, j), id(1, j + 1)});
  for (int k = 1; k < nRings; ++k)
    for (int j = 0; j < segments; ++j)
      splitQuad(cells, id(k, j), id(k, j + 1), id(k + 1, j), id(k + 1, j + 1),
                (j + k) % 2 == 0);
  return finish(2, std::move(verts), cells, 2);
}

SimplicialComplex generateRectangle(double width, double height, int nx, int ny) {
  if (width <= 0.0 || height <= 0.0) throw BadParams("rectangle sides must be positive");
  if (nx < 2 || ny < 2) throw BadParams("rectangle needs nx, ny >= 2");

  const double dx = width / nx;
  const double dy = height / ny;
  std::vector<Vec3> verts;
  std::vector<std::vector<int>> rows(ny + 1);
  for (int j = 0; j <= ny; ++j) {
    const double y = dy * j;
    if (j % 2 == 0) {
      for (int i = 0; i <= nx; ++i) {
        rows[j].push_back(static_cast<int>(verts.size()));
        verts.emplace_back(dx * i, y, 0.0);
      }
    } else {
      // offset row, clamped to the straight left/right sides
      rows[j].push_back(static_cast<int>(verts.size()));
      verts.emplace_back(0.0, y, 0.0);
      for (int i = 0; i < nx; ++i) {
        rows[j].push_back(static_cast<int>(verts.size()));
        verts.emplace_back(dx * (i + 0.5), y, 0.0);
      }
      rows[j].push_back(static_cast<int>(verts.size()));
      verts.emplace_back(width, y, 0.0);
    }
  }
  // zigzag strip triangulation between consecutive rows, merging by x
  std::vector<std::vector<int>> cells;
  for (int j = 0; j < ny; ++j) {
    const auto& bot = rows[j];
    const auto& top = rows[j + 1];
    size_t i = 0, k = 0;
    while (i + 1 < bot.size() || k + 1 < top.size()) {
      const bool advanceBottom =
          (k + 1 >= top.size()) ||
          (i + 1 < bot.size() && verts[bot[i + 1]].x() <= verts[top[k + 1]].x());
      if (advanceBottom) {
        cells.push_back({bot[i], bot[i + 1], top[k]});
        ++i;
      } else {
        cells.push_back({bot[i], top[k + 1], top[k]});
        ++k;
      }
    }
  }
  return finish(2, std::move(verts), cells, 2);
}

SimplicialComplex generateSphere(double radius, int subdivisions) {
  if (radius <= 0.0) throw BadParams("sphere radius must be positive");
  if (subdivisions < 0 || subdivisions > 6)
    throw BadParams("sphere subdivisions must be in [0, 6]");

  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, t, 0}, {1, t, 0},  {-1, -t, 0}, {1, -t, 0}, {0, -1, t},  {0, 1, t},
      {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
  for (auto& v : verts) v = radius * v.normalized();
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    const auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const int idx = static_cast<int>(verts.size());
      verts.push_back(radius * (0.5 * (verts[a] + verts[b])).normalized());
      midpoint[key] = idx;
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = mid(f[0], f[1]);
      const int bc = mid(f[1], f[2]);
      const int ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  std::vector<std::vector<int>> cells;
  cells.reserve(faces.size());
  for (const auto& f : faces) cells.push_back({f[0], f[1], f[2]});
  return finish(2, std::move(verts), cells, 3);
}

SimplicialComplex generateTorus(double majorRadius, double minorRadius,
                                int nMajor, int nMinor) {
  if (!(minorRadius > 0.0) || !(majorRadius > minorRadius))
    throw BadParams("torus requires R > r > 0");
  if (nMajor < 8) throw BadParams("torus needs at least 8 major segments");
  if (nMinor < 4 || nMinor % 2 != 0)
    throw BadParams("torus needs an even number (>= 4) of minor segments");

  const double du = kTau / nMajor;
  std::vector<Vec3> verts(static_cast<size_t>(nMajor) * nMinor);
  const auto id = [nMajor, nMinor](int j, int i) {
    return ((j % nMinor + nMinor) % nMinor) * nMajor + ((i % nMajor + nMajor) % nMajor);
  };
  for (int j = 0; j < nMinor; ++j) {
    const double v = kTau * j / nMinor;
    const double offset = (j % 2 == 1) ? 0.5 : 0.0;
    const double ring = majorRadius + minorRadius * std::cos(v);
    for (int i = 0; i < nMajor; ++i) {
      const double u = (i + offset) * du;
      verts[id(j, i)] =
          Vec3(ring * std::cos(u), ring * std::sin(u), minorRadius * std::sin(v));
    }
  }
  std::vector<std::vector<int>> cells;
  cells.reserve(static_cast<size_t>(2 * nMajor) * nMinor);
  for (int j = 0; j < nMinor; ++j) {
    const bool lowerShifted = (j % 2 == 1);
    for (int i = 0; i < nMajor; ++i) {
      if (!lowerShifted) {
        // upper row sits at half-step offsets above [i, i+1]
        cells.push_back({id(j, i), id(j, i + 1), id(j + 1, i)});
        cells.push_back({id(j, i + 1), id(j + 1, i + 1), id(j + 1, i)});
      } else {
        cells.push_back({id(j, i), id(j, i + 1), id(j + 1, i + 1)});
        cells.push_back({id(j, i), id(j + 1, i + 1), id(j + 1, i)});
      }
    }
  }
  return finish(2, std::move(verts), cells, 3);
}

}  // namespace hodgedec
