#pragma once

#include <stdexcept>

namespace deltoid {

// Domain failures map onto exit code 3 in the command-line tool.

struct OutsideDeltoid : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParallelLines : std::domain_error {
  using std::domain_error::domain_error;
};

struct CoincidentLines : std::domain_error {
  using std::domain_error::domain_error;
};

struct DegenerateTriangle : std::domain_error {
  using std::domain_error::domain_error;
};

struct LambdaOutOfRange : std::domain_error {
  using std::domain_error::domain_error;
};

struct NegativeIndex : std::domain_error {
  using std::domain_error::domain_error;
};

struct IndexOutOfRange : std::domain_error {
  using std::domain_error::domain_error;
};

struct InvalidAmplitude : std::domain_error {
  using std::domain_error::domain_error;
};

// Signals an internal consistency failure (never expected in normal use).
struct NonCollinearFeet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace deltoid
