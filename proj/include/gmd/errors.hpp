#ifndef GMD_ERRORS_HPP
#define GMD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gmd {

/// Point outside the domain of a formula, or a numeric overflow.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Closed-form data not available for this family.
class UnsupportedFamily : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Family parameters violate the catalog conditions.
class ConstraintViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace gmd

#endif
