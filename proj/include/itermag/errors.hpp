#pragma once

#include <stdexcept>
#include <string>

namespace itermag {

// A structure failed one of its validators.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Boundary maps do not compose to zero, or their shapes disagree.
class InvalidComplex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A homology degree was requested beyond the degree up to which a truncated
// construction is faithful.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(std::string const& what, int required_max_degree)
      : std::runtime_error(what), required_max_degree_(required_max_degree) {}
  int required_max_degree() const noexcept { return required_max_degree_; }

 private:
  int required_max_degree_;
};

}  // namespace itermag
