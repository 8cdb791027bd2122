#pragma once

#include <stdexcept>
#include <string>

namespace alcalc {

/// Base class for all engine errors that carry a process exit code.
/// The CLI maps these to its documented exit-code contract:
///   2 usage, 3 infeasible input, 4 GKM violation, 5 bound exceeded,
///   6 verification failure.
class EngineError : public std::runtime_error {
public:
  EngineError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

private:
  int exit_code_;
};

struct UsageError : EngineError {
  explicit UsageError(const std::string& w) : EngineError(2, w) {}
};

struct InfeasibleInput : EngineError {
  explicit InfeasibleInput(const std::string& w) : EngineError(3, w) {}
};

struct GkmViolation : EngineError {
  explicit GkmViolation(const std::string& w) : EngineError(4, w) {}
};

struct BoundExceeded : EngineError {
  explicit BoundExceeded(const std::string& w) : EngineError(5, w) {}
};

struct VerificationFailure : EngineError {
  explicit VerificationFailure(const std::string& w) : EngineError(6, w) {}
};

/// divide_exact was asked to divide by a non-divisor.
struct NotDivisible : EngineError {
  explicit NotDivisible(const std::string& w) : EngineError(3, w) {}
};

/// triangular_decompose: supplied basis is not lower-triangular w.r.t. <=.
struct NonTriangularBasis : EngineError {
  explicit NonTriangularBasis(const std::string& w) : EngineError(3, w) {}
};

/// triangular_decompose: a negative coefficient appeared (inconsistent basis).
struct NegativeCoefficient : EngineError {
  explicit NegativeCoefficient(const std::string& w) : EngineError(3, w) {}
};

/// split(): the semisimple quotient of End^0 did not split over k.
struct SemisimpleQuotientNotSplit : EngineError {
  explicit SemisimpleQuotientNotSplit(const std::string& w) : EngineError(5, w) {}
};

} // namespace alcalc
