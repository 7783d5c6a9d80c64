#pragma once

#include <stdexcept>
#include <string>

namespace immw {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inputs whose sizes must agree (|λ| vs Σμ, matrix dims, ...) do not.
class SizeMismatchError : public Error {
 public:
  explicit SizeMismatchError(const std::string& what) : Error(what) {}
};

/// A value is outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Request exceeds the hard-coded resource guards (n^m, m, enumeration size).
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

/// Malformed textual input (scalar strings, JSON payload shapes).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace immw
