#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forestlcs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ForestErrc { self_loop, vertex_out_of_range, duplicate_edge, cycle };

class ForestError : public Error {
 public:
  ForestError(ForestErrc code, const std::string& what) : Error(what), code_(code) {}
  ForestErrc code() const noexcept { return code_; }

 private:
  ForestErrc code_;
};

enum class ParseErrc { malformed, missing_header, vertex_out_of_range, self_loop, duplicate_edge, cycle };

// Line numbers are 1-based and refer to the physical line in the document.
class ParseError : public Error {
 public:
  ParseError(ParseErrc code, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), code_(code), line_(line) {}
  ParseErrc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrc code_;
  std::size_t line_;
};

enum class CertificateErrc { malformed, dangling_edge, size_mismatch, not_injective, domain_mismatch, edge_image_mismatch };

class CertificateError : public Error {
 public:
  CertificateErrc code() const noexcept { return code_; }
  CertificateError(CertificateErrc code, const std::string& what) : Error(what), code_(code) {}

 private:
  CertificateErrc code_;
};

// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration limit was hit. Callers treat this as "skip", not as failure.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace forestlcs
