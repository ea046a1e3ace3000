#pragma once

#include "hodgedec/simplicial_complex.hpp"

namespace hodgedec {

// All generators are deterministic for fixed parameters, produce
// consistently oriented cells, and refuse (StarFailure) any mesh whose
// circumcentric dual volumes are not strictly positive.

/// Uniform subdivision of [0, length] into `segments` edges.
SimplicialComplex generateInterval(double length, int segments);

/// Closed polygonal circle with `segments` edges, vertices exactly on the
/// circle of the given radius.
SimplicialComplex generateCircle(int segments, double radius = 1.0);

/// Triangulated disk: central fan plus geometrically graded rings so cells
/// stay near-square at every radius. `segments` is the angular resolution.
SimplicialComplex generateDisk(double radius, int segments);

/// Axis-aligned rectangle triangulated with offset (brick) rows to avoid
/// the degenerate right-triangle split.
SimplicialComplex generateRectangle(double width, double height, int nx, int ny);

/// Structured polar annulus a <= r <= b: nTheta angular segments, nRadial
/// uniform layers, quads split with alternating diagonals. Vertices lie
/// exactly on the circles of radius a and b.
SimplicialComplex generateAnnulus(double innerRadius, double outerRadius,
                                  int nTheta, int nRadial);

/// Icosphere: icosahedron subdivided `subdivisions` times, projected to the
/// sphere of the given radius.
SimplicialComplex generateSphere(double radius, int subdivisions);

/// Torus of revolution (major radius R, tube radius r), parameter grid with
/// alternating half-step offsets in the major direction; nMinor must be even.
SimplicialComplex generateTorus(double majorRadius, double minorRadius,
                                int nMajor, int nMinor);

}  // namespace hodgedec
