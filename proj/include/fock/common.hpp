#pragma once

#include <stdexcept>
#include <string>

namespace fock {

// An internal invariant was violated: the two sides of a cross-checked
// identity disagree, or a structural guarantee failed. Always a bug.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// A configurable resource cap (vertex budget, iteration budget) was hit.
class resource_limit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace fock
