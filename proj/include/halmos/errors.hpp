// Copyright 2026 The Halmos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HALMOS_ERRORS_HPP
#define HALMOS_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace halmos {

/// Process exit codes. Every failure mode of the library maps to exactly one
/// code so that scripted callers can distinguish them. Documented in the
/// README; the CLI test suite pins each value.
enum class ExitCode : int {
  kOk = 0,
  kSuiteFailure = 1,
  kZeroPolynomial = 2,
  kParseError = 3,
  kNotSquare = 4,
  kNotHermitian = 5,
  kNormExceedsOne = 6,
  kNotPsd = 7,
  kEigNoConvergence = 8,
  kRootsNoConvergence = 9,
  kDegenerateLeadingCoefficient = 10,
  kUnitCircleRoot = 11,
  kResidualTooLarge = 12,
  kPeelingBreakdown = 13,
  kNullOutcome = 14,
  kFidelityBelowTarget = 15,
  kDimensionMismatch = 16,
  kUnnormalizedInput = 17,
  kNonUnitaryInput = 18,
  kOddDimension = 19,
  kZeroVector = 20,
  kEmptyCoefficients = 21,
  kDegreeTooLarge = 22,
  kBounds = 23,
  kNotFinite = 24,
  kUsage = 64,
};

/// Base of all library errors. Carries the exit code and, once a pipeline
/// stage has seen it, the name of the stage that raised it.
class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ExitCode code() const { return code_; }
  int exit_code() const { return static_cast<int>(code_); }

  const std::string& stage() const { return stage_; }
  void set_stage(const std::string& stage) {
    if (stage_.empty()) stage_ = stage;
  }

 private:
  ExitCode code_;
  std::string stage_;
};

struct NotSquareError : Error {
  explicit NotSquareError(const std::string& msg)
      : Error(ExitCode::kNotSquare, msg) {}
};

struct NotHermitianError : Error {
  explicit NotHermitianError(double residual)
      : Error(ExitCode::kNotHermitian,
              "matrix is not Hermitian: max |A(i,j) - conj(A(j,i))| = " +
                  std::to_string(residual) + " exceeds tolerance"),
        residual(residual) {}
  double residual;
};

struct NormExceedsOneError : Error {
  explicit NormExceedsOneError(double norm)
      : Error(ExitCode::kNormExceedsOne,
              "spectral norm " + std::to_string(norm) +
                  " exceeds 1; the dilation requires a contraction"),
        norm(norm) {}
  double norm;
};

struct NotPsdError : Error {
  explicit NotPsdError(double min_eigenvalue)
      : Error(ExitCode::kNotPsd,
              "matrix is not positive semidefinite: min eigenvalue " +
                  std::to_string(min_eigenvalue)),
        min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue;
};

struct EigNoConvergenceError : Error {
  explicit EigNoConvergenceError(int sweeps)
      : Error(ExitCode::kEigNoConvergence,
              "Jacobi eigensolver did not converge after " +
                  std::to_string(sweeps) + " sweeps"),
        sweeps(sweeps) {}
  int sweeps;
};

struct RootsNoConvergenceError : Error {
  explicit RootsNoConvergenceError(int iterations)
      : Error(ExitCode::kRootsNoConvergence,
              "root iteration did not converge after " +
                  std::to_string(iterations) + " iterations"),
        iterations(iterations) {}
  int iterations;
};

struct DegenerateLeadingCoefficientError : Error {
  DegenerateLeadingCoefficientError()
      : Error(ExitCode::kDegenerateLeadingCoefficient,
              "leading coefficient magnitude below 1e-14; degree is "
              "ill-defined") {}
};

struct UnitCircleRootError : Error {
  explicit UnitCircleRootError(std::complex<double> root)
      : Error(ExitCode::kUnitCircleRoot,
              "factorization root too close to the unit circle at (" +
                  std::to_string(root.real()) + ", " +
                  std::to_string(root.imag()) +
                  "); the normalization margin is too small"),
        root(root) {}
  std::complex<double> root;
};

struct ResidualTooLargeError : Error {
  explicit ResidualTooLargeError(double residual)
      : Error(ExitCode::kResidualTooLarge,
              "certification failed: residual " + std::to_string(residual)),
        residual(residual) {}
  double residual;
};

struct PeelingBreakdownError : Error {
  explicit PeelingBreakdownError(int step)
      : Error(ExitCode::kPeelingBreakdown,
              "layer peeling degenerate at step " + std::to_string(step) +
                  ": both leading coefficients below 1e-13"),
        step(step) {}
  int step;
};

struct NullOutcomeError : Error {
  explicit NullOutcomeError(double probability)
      : Error(ExitCode::kNullOutcome,
              "post-selection impossible: outcome probability " +
                  std::to_string(probability)),
        probability(probability) {}
  double probability;
};

struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& msg)
      : Error(ExitCode::kDimensionMismatch, msg) {}
};

struct UnnormalizedInputError : Error {
  explicit UnnormalizedInputError(double norm)
      : Error(ExitCode::kUnnormalizedInput,
              "input state norm " + std::to_string(norm) + " is not 1"),
        norm(norm) {}
  double norm;
};

struct NonUnitaryInputError : Error {
  explicit NonUnitaryInputError(double residual)
      : Error(ExitCode::kNonUnitaryInput,
              "input is not unitary: max |U'U - I| = " +
                  std::to_string(residual)),
        residual(residual) {}
  double residual;
};

struct OddDimensionError : Error {
  explicit OddDimensionError(std::size_t dim)
      : Error(ExitCode::kOddDimension,
              "block extraction needs an even dimension, got " +
                  std::to_string(dim)) {}
};

struct ZeroVectorError : Error {
  ZeroVectorError()
      : Error(ExitCode::kZeroVector, "fidelity of a zero vector is undefined") {
  }
};

struct ZeroPolynomialError : Error {
  ZeroPolynomialError()
      : Error(ExitCode::kZeroPolynomial,
              "zero polynomial: nothing to synthesize") {}
};

struct EmptyCoefficientsError : Error {
  EmptyCoefficientsError()
      : Error(ExitCode::kEmptyCoefficients, "coefficient list is empty") {}
};

struct DegreeTooLargeError : Error {
  explicit DegreeTooLargeError(int n, int bound)
      : Error(ExitCode::kDegreeTooLarge,
              "degree " + std::to_string(n) + " exceeds " +
                  std::to_string(bound) +
                  "; binomial coefficients overflow the exact double range") {}
};

struct BoundsError : Error {
  explicit BoundsError(const std::string& msg)
      : Error(ExitCode::kBounds, msg) {}
};

struct NotFiniteError : Error {
  explicit NotFiniteError(const std::string& msg)
      : Error(ExitCode::kNotFinite, msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg)
      : Error(ExitCode::kParseError, msg) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& msg)
      : Error(ExitCode::kUsage, msg) {}
};

}  // namespace halmos

#endif  // HALMOS_ERRORS_HPP
