// Exception types thrown by nslab.

#ifndef NSLAB_ERROR_HPP_
#define NSLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace nslab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: empty generator lists, non-positive values,
// out-of-range parameters, unbounded search requests.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The generators have gcd > 1, so they do not span a numerical semigroup.
class NotCofinite : public Error {
 public:
  using Error::Error;
};

// The requested set is empty by definition (e.g. pseudo-Frobenius numbers of N).
class EmptyResult : public Error {
 public:
  using Error::Error;
};

// A configured size cap was exceeded; results would otherwise be truncated.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class NotMember : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagree. Always a bug in this library.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace nslab

#endif  // NSLAB_ERROR_HPP_
