#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halinbox {

enum class ErrorCode {
  // instance validation
  NotATree,
  CycleNotOnLeaves,
  CycleTooShort,
  DuplicateCycleVertex,
  Degree2Violation,
  // construction
  NoSpecialVertex,
  NotConsecutive,
  // verification
  VertexSetMismatch,
  CertificateNotInduced,
  // generation
  PreconditionViolated,
  NoViolatingSwap,
  // io
  SyntaxError,
};

std::string_view to_string(ErrorCode code);

class HalinError : public std::runtime_error {
public:
  HalinError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Raised when the leaves below `vertex` are not contiguous in the leaf
/// ordering: positions c(x) < c(z) < c(y) with x, y below `vertex` and z not.
class NotConsecutiveError : public HalinError {
public:
  NotConsecutiveError(std::string vertex, std::string x, std::string z, std::string y);

  const std::string& vertex() const { return vertex_; }
  const std::string& x() const { return x_; }
  const std::string& z() const { return z_; }
  const std::string& y() const { return y_; }

private:
  std::string vertex_, x_, z_, y_;
};

}  // namespace halinbox
