#pragma once

#include <stdexcept>
#include <string>

namespace evenodd {

/// Input outside the domain the library accepts (non-finite coordinates,
/// empty polygons, coordinate overflow).
class InputDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A condition the algorithm proves impossible was observed. Always a bug.
class InternalLogicError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace evenodd
