#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace credal {

using Real = double;
using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;  // point sets are stored column-wise

namespace tol {
// Sum-to-one slack accepted on input probability vectors.
inline constexpr Real sum = 1e-9;
// Vertices closer than this collapse to one point.
inline constexpr Real dedupe = 1e-10;
// Singular-value cutoff for the affine-hull rank.
inline constexpr Real rank = 1e-10;
// Default membership slack for hull containment queries.
inline constexpr Real membership = 1e-9;
}  // namespace tol

// Bad input: malformed vectors, dimension mismatches, out-of-range
// parameters. CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Numeric failure inside an algorithm (non-convergence, degenerate
// factorization). CLI maps these to exit code 2.
class NumericError : public std::runtime_error {
 public:
  NumericError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace credal
