#ifndef CODIM_ERRORS_HPP
#define CODIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace codim {

// Malformed input: not a bijection, unparsable text, bad inversion set.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the domain where an operation is defined
// (d < 2, mismatched degrees, violated preconditions).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive operation asked to run above its enumeration cap.
class ScaleError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A proved statement failed on a concrete instance.
class FalsificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace codim

#endif  // CODIM_ERRORS_HPP
