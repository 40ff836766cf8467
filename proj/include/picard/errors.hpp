#pragma once

#include <stdexcept>
#include <string>

namespace picard {

/// Process exit codes used by the CLI; one per error family.
enum class ExitCode : int {
    ok = 0,
    internal = 1,
    parse = 2,
    precondition = 3,
    bound_exceeded = 4,
    contract_violation = 5,
};

class Error : public std::runtime_error {
  public:
    Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ExitCode code() const noexcept { return code_; }

  private:
    ExitCode code_;
};

/// Malformed input document.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error(ExitCode::parse, what) {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
  public:
    explicit PreconditionError(const std::string& what) : Error(ExitCode::precondition, what) {}
};

class DimensionError : public PreconditionError {
  public:
    explicit DimensionError(const std::string& what) : PreconditionError(what) {}
};

class DegenerateLatticeError : public PreconditionError {
  public:
    explicit DegenerateLatticeError(const std::string& what) : PreconditionError(what) {}
};

class NotPrimitiveError : public PreconditionError {
  public:
    explicit NotPrimitiveError(const std::string& what) : PreconditionError(what) {}
};

class PerfectSquareError : public PreconditionError {
  public:
    explicit PerfectSquareError(const std::string& what) : PreconditionError(what) {}
};

class NonIntegralReflectionError : public PreconditionError {
  public:
    explicit NonIntegralReflectionError(const std::string& what) : PreconditionError(what) {}
};

class SignatureError : public PreconditionError {
  public:
    explicit SignatureError(const std::string& what) : PreconditionError(what) {}
};

class AmpleOnWallError : public PreconditionError {
  public:
    explicit AmpleOnWallError(const std::string& what) : PreconditionError(what) {}
};

/// An iteration or size cap was hit; the message names the cap.
class BoundExceededError : public Error {
  public:
    explicit BoundExceededError(const std::string& what) : Error(ExitCode::bound_exceeded, what) {}
};

/// A property the mathematics promises failed on concrete data.
class ContractViolation : public Error {
  public:
    explicit ContractViolation(const std::string& what) : Error(ExitCode::contract_violation, what) {}
};

}  // namespace picard
