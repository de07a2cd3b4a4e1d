#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace upen {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

enum class Constraint { unconstrained, nonnegative };

inline const char* to_string(Constraint c) {
  return c == Constraint::nonnegative ? "nonnegative" : "unconstrained";
}

/// Shape of the reconstruction grid. n2 == 0 means a plain 1D signal of
/// length n1; otherwise the unknown is an n1 x n2 image stored column-major.
struct GridShape {
  Index n1 = 0;
  Index n2 = 0;

  bool is_2d() const { return n2 > 0; }
  Index size() const { return is_2d() ? n1 * n2 : n1; }
};

/// Vector of per-penalty regularization weights. Entries must be
/// nonnegative; an all-zero vector only appears at exact data fit, where the
/// outer iteration terminates. Log-domain accumulation is provided so that
/// products over thousands of entries never overflow or underflow.
class LambdaVector {
 public:
  LambdaVector() = default;

  explicit LambdaVector(Vector values) : values_(std::move(values)) {
    if ((values_.array() < 0.0).any() || !values_.allFinite()) {
      throw std::invalid_argument("LambdaVector: entries must be finite and nonnegative");
    }
  }

  static LambdaVector constant(Index p, double value) {
    return LambdaVector(Vector::Constant(p, value));
  }

  Index p() const { return values_.size(); }
  const Vector& values() const { return values_; }
  double operator[](Index i) const { return values_[i]; }

  bool all_positive() const { return values_.size() > 0 && (values_.array() > 0.0).all(); }

  /// sum_i ln(lambda_i); requires strictly positive entries.
  double sum_log() const {
    if (!all_positive()) {
      throw std::domain_error("LambdaVector::sum_log requires strictly positive entries");
    }
    return values_.array().log().sum();
  }

  double norm() const { return values_.norm(); }
  double min() const { return values_.minCoeff(); }
  double max() const { return values_.maxCoeff(); }

 private:
  Vector values_;
};

/// Thrown when a symmetric factorization encounters a nonpositive pivot.
class FactorizationError : public std::runtime_error {
 public:
  FactorizationError(const std::string& what, double smallest_pivot)
      : std::runtime_error(what + " (smallest pivot " + std::to_string(smallest_pivot) + ")"),
        smallest_pivot_(smallest_pivot) {}

  double smallest_pivot() const { return smallest_pivot_; }

 private:
  double smallest_pivot_;
};

}  // namespace upen
