#pragma once

#include <stdexcept>
#include <string>

namespace bubblelab {

// Degenerate (collinear or repeated) triple where a circumcircle was required.
struct CollinearInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Horizontal line does not meet the disk, so xi() is undefined.
struct NoIntersection : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A bracketed tangency solve found no sign change: the requested
// angle/radius combination admits no pressing disk.
struct NoRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Newton iteration ran out of iterations on every configured start.
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TargetTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Point set labels are absent or belong to a different construction than
// the one a structured certificate was requested for.
struct StructureMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DuplicatePoints : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Invalid construction / solver / tolerance parameters.
struct BadSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bubblelab
