#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latticeforge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A label appears twice on one axis of a context.
class DuplicateLabel : public Error {
 public:
  using Error::Error;
};

// A label was referenced that is not present on the addressed axis.
class UnknownLabel : public Error {
 public:
  using Error::Error;
};

// The brute-force concept oracle was asked to enumerate too large a context.
class OracleSizeExceeded : public Error {
 public:
  using Error::Error;
};

// A required lexical database file is absent or unreadable.
class MissingDatabaseFile : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The bytes are not well-formed XML.
class XmlError : public Error {
 public:
  using Error::Error;
};

// Well-formed XML that is not a supported conceptual-system document.
class UnsupportedDocument : public Error {
 public:
  using Error::Error;
};

// An intent references an attribute identifier that was never declared.
class DanglingReference : public Error {
 public:
  using Error::Error;
};

// Relative frequencies were requested for a context with an empty axis.
class EmptyAxis : public Error {
 public:
  using Error::Error;
};

// An aggregate was requested over an empty value list.
class EmptyInput : public Error {
 public:
  using Error::Error;
};

// Stored frequency annotations disagree with the incidence relation.
class FrequencyMismatch : public Error {
 public:
  using Error::Error;
};

// An operation was invoked with an unusable configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace latticeforge
