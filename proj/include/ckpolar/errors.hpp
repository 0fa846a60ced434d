#ifndef CKPOLAR_ERRORS_HPP
#define CKPOLAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ckpolar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Size or ambient-dimension mismatch between operands.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A geometric precondition failed (point off a line, intersecting pair, ...).
class GeometryError : public Error {
public:
    using Error::Error;
};

/// The operation is not defined for this input (e.g. regularity of the empty space).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid signature or singular change of basis.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// A motion's block scalar is not the square of a rational.
class NormalizationError : public Error {
public:
    using Error::Error;
};

/// A self-check failed. Always a bug in the library.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Two routes that must agree by a theorem disagreed on some input.
class TheoremViolation : public InternalError {
public:
    using InternalError::InternalError;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace ckpolar

#endif
