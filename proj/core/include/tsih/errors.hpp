#ifndef TSIH_ERRORS_HPP
#define TSIH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsih {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Trial division hit the configured bound before settling the question.
class FactorizationLimit : public Error {
  public:
    explicit FactorizationLimit(const std::string& msg) : Error(msg) {}
};

// A codimension-1 face of the input complex lies in three or more facets.
class NotManifoldLike : public Error {
  public:
    explicit NotManifoldLike(const std::string& msg) : Error(msg) {}
};

// Facet orientations cannot be chosen consistently.
class NotOrientable : public Error {
  public:
    explicit NotOrientable(const std::string& msg) : Error(msg) {}
};

// The complex has no boundary, so there is nothing to cone off.
class EmptyBoundary : public Error {
  public:
    explicit EmptyBoundary(const std::string& msg) : Error(msg) {}
};

// Malformed input file or text.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Structurally invalid value (bad invariant chain, ill-defined homomorphism, ...).
class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace tsih

#endif
