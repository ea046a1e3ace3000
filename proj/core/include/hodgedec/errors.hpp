#pragma once

#include <stdexcept>
#include <string>

namespace hodgedec {

// Base class for all failures raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file (OFF / complex JSON).
struct ParseError : Error {
  using Error::Error;
};

// Filesystem-level failure (missing file, unwritable output).
struct IoError : Error {
  using Error::Error;
};

// A codimension-1 simplex is shared by more than two top simplices.
struct NonManifold : Error {
  using Error::Error;
};

// No consistent orientation of the top simplices exists.
struct NonOrientable : Error {
  using Error::Error;
};

// Invalid generator or CLI parameters.
struct BadParams : Error {
  using Error::Error;
};

// A generated mesh would carry a nonpositive circumcentric dual volume.
struct StarFailure : Error {
  using Error::Error;
};

// Assembly found a nonpositive circumcentric dual volume.
struct NegativeDualVolume : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct DegreeOutOfRange : Error {
  using Error::Error;
};

// The kept/dropped singular value gap is too small for a confident rank.
struct AmbiguousRank : Error {
  using Error::Error;
};

// Right-hand side outside the numerical range of the matrix.
struct Inconsistent : Error {
  using Error::Error;
};

// Kernel dimension of a Laplacian disagrees with the rank-oracle Betti number.
struct BettiMismatch : Error {
  using Error::Error;
};

struct NotExact : Error {
  using Error::Error;
};

struct NotHarmonic : Error {
  using Error::Error;
};

// No strict-interior simplices at the degree required by a solver.
struct ResolutionTooCoarse : Error {
  using Error::Error;
};

// Analytic form evaluated outside its domain guard.
struct EvalError : Error {
  using Error::Error;
};

}  // namespace hodgedec
