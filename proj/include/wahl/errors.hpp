#ifndef WAHL_ERRORS_HPP
#define WAHL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wahl {

// Matrix dimensions exceed the configured cell limit.
struct SizingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible shapes (e.g. column counts differ in a relative rank).
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bad user-supplied values: malformed type tuples, non-primes, bad flags.
struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Random generator forms repeatedly failed the regular-sequence check.
struct DegenerateDrawError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ranks disagreed at all primes tried within the retry budget.
struct InstabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The closed-form corank is not valid for the requested type.
struct FormulaInapplicableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wahl

#endif
