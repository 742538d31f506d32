// Exception types thrown by the rootinv library.

#ifndef ROOTINV_ERRORS_HPP_
#define ROOTINV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rootinv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cell parameters that do not describe a parallelepiped.
struct RealizabilityError : Error { using Error::Error; };
// Three vectors that do not span 3-space.
struct DegenerateBasisError : Error { using Error::Error; };
// Seven vonorms violating v0^2+v1^2+v2^2+v3^2 = v01^2+v02^2+v03^2.
struct InconsistentVoFormError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct NotObtuseError : Error { using Error::Error; };
// Zero pattern of conorms that no genuine lattice can produce.
struct DegenerateLatticeError : Error { using Error::Error; };
struct TypePatternError : Error { using Error::Error; };
struct InvalidInvariantError : Error { using Error::Error; };
// Coform whose Gram matrix is not positive definite.
struct NotRealizableError : Error { using Error::Error; };
struct WindowTooSmallError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace rootinv
#endif
