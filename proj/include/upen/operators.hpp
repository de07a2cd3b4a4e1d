#pragma once

#include <array>
#include <filesystem>
#include <memory>

#include "upen/types.hpp"

namespace upen {

/// Abstract M x N linear map. Operators are immutable after construction and
/// may be shared freely across threads; apply/adjoint are reentrant.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;

  virtual Index rows() const = 0;
  virtual Index cols() const = 0;

  /// y = op * x. Throws std::invalid_argument on dimension mismatch.
  virtual Vector apply(const Vector& x) const = 0;

  /// x = op^T * y. Throws std::invalid_argument on dimension mismatch.
  virtual Vector adjoint(const Vector& y) const = 0;

  /// Dense matrix of the operator. Intended for small instances and file
  /// export; apply/adjoint never call this.
  virtual Matrix materialize() const = 0;

 protected:
  void require_apply_dim(Index got) const;
  void require_adjoint_dim(Index got) const;
};

/// Dense stored matrix with rows >= cols.
class DenseOperator final : public LinearOperator {
 public:
  explicit DenseOperator(Matrix entries);

  static DenseOperator identity(Index n);

  Index rows() const override { return a_.rows(); }
  Index cols() const override { return a_.cols(); }
  Vector apply(const Vector& x) const override;
  Vector adjoint(const Vector& y) const override;
  Matrix materialize() const override { return a_; }

  const Matrix& entries() const { return a_; }

 private:
  Matrix a_;
};

/// Separable product K2 (x) K1 acting on column-major vectorized images:
/// apply(vec(U)) = vec(K1 * U * K2^T). The full product matrix is never
/// formed by apply/adjoint.
class KroneckerOperator final : public LinearOperator {
 public:
  KroneckerOperator(DenseOperator k1, DenseOperator k2);

  Index rows() const override { return k1_.rows() * k2_.rows(); }
  Index cols() const override { return k1_.cols() * k2_.cols(); }
  Vector apply(const Vector& x) const override;
  Vector adjoint(const Vector& y) const override;
  Matrix materialize() const override;

  const DenseOperator& k1() const { return k1_; }
  const DenseOperator& k2() const { return k2_; }

 private:
  DenseOperator k1_;
  DenseOperator k2_;
};

enum class DiffOrder { second, first };

/// Circulant finite-difference operator on a periodic grid of size n.
/// Second order has stencil (1, -2, 1); first order is the central
/// difference (-1/2, 0, 1/2). Both annihilate constant vectors.
class DifferenceOperator final : public LinearOperator {
 public:
  DifferenceOperator(Index n, DiffOrder order);

  Index rows() const override { return n_; }
  Index cols() const override { return n_; }
  Vector apply(const Vector& x) const override;
  Vector adjoint(const Vector& y) const override;
  Matrix materialize() const override;

  DiffOrder order() const { return order_; }

  /// Stencil as (offset, coefficient) pairs relative to the row index.
  static std::array<std::pair<int, double>, 3> stencil(DiffOrder order) {
    if (order == DiffOrder::second) {
      return {{{-1, 1.0}, {0, -2.0}, {1, 1.0}}};
    }
    return {{{-1, -0.5}, {0, 0.0}, {1, 0.5}}};
  }

 private:
  Index n_;
  DiffOrder order_;
};

DifferenceOperator build_second_diff(Index n);
DifferenceOperator build_first_diff(Index n);

/// Square banded Toeplitz blur. Each row is an L1-normalized Gaussian
/// centered on the diagonal, truncated at kernel_halfwidth samples; mass
/// falling off the signal ends is dropped, not renormalized, so the matrix
/// stays exactly Toeplitz. kernel_halfwidth < 0 selects ceil(4*sigma).
DenseOperator build_gaussian_blur(Index n, double sigma, Index kernel_halfwidth = -1);

struct HeatProblem {
  DenseOperator op;
  Vector u_true;
};

/// Volterra first-kind heat equation on [0,1], midpoint quadrature, kernel
/// h(t) = t^{-3/2} / (2 kappa sqrt(pi)) * exp(-1/(4 kappa^2 t)). Returns the
/// lower-triangular Toeplitz matrix together with the standard exact
/// solution used with this generator (nonnegative, one hump near the
/// origin, zero tail).
HeatProblem build_heat(Index n, double kappa = 1.0);

/// One CSV row per matrix row, full double precision.
void write_operator_csv(const LinearOperator& op, const std::filesystem::path& path);

}  // namespace upen
