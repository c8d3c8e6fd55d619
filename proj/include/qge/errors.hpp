#pragma once

#include <stdexcept>
#include <string>

namespace qge {

/// Raised for malformed inputs: nonpositive sizes, degenerate geometry, bad config.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point could not be located in any coarse triangle.
class LookupFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Singular factorization or a solve whose residual check failed.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedDegree : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qge
