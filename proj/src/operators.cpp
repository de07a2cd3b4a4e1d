#include "upen/operators.hpp"

#include <cmath>

#include "upen/io.hpp"

namespace upen {

void LinearOperator::require_apply_dim(Index got) const {
  if (got != cols()) {
    throw std::invalid_argument("operator apply: expected length " + std::to_string(cols()) +
                                ", got " + std::to_string(got));
  }
}

void LinearOperator::require_adjoint_dim(Index got) const {
  if (got != rows()) {
    throw std::invalid_argument("operator adjoint: expected length " + std::to_string(rows()) +
                                ", got " + std::to_string(got));
  }
}

DenseOperator::DenseOperator(Matrix entries) : a_(std::move(entries)) {
  if (a_.rows() < a_.cols()) {
    throw std::invalid_argument("DenseOperator requires rows >= cols");
  }
}

DenseOperator DenseOperator::identity(Index n) { return DenseOperator(Matrix::Identity(n, n)); }

Vector DenseOperator::apply(const Vector& x) const {
  require_apply_dim(x.size());
  return a_ * x;
}

Vector DenseOperator::adjoint(const Vector& y) const {
  require_adjoint_dim(y.size());
  return a_.transpose() * y;
}

KroneckerOperator::KroneckerOperator(DenseOperator k1, DenseOperator k2)
    : k1_(std::move(k1)), k2_(std::move(k2)) {}

Vector KroneckerOperator::apply(const Vector& x) const {
  require_apply_dim(x.size());
  Eigen::Map<const Matrix> u(x.data(), k1_.cols(), k2_.cols());
  Matrix y = k1_.entries() * u * k2_.entries().transpose();
  return Eigen::Map<const Vector>(y.data(), y.size());
}

Vector KroneckerOperator::adjoint(const Vector& y) const {
  require_adjoint_dim(y.size());
  Eigen::Map<const Matrix> ymat(y.data(), k1_.rows(), k2_.rows());
  Matrix x = k1_.entries().transpose() * ymat * k2_.entries();
  return Eigen::Map<const Vector>(x.data(), x.size());
}

Matrix KroneckerOperator::materialize() const {
  const Matrix& a = k1_.entries();
  const Matrix& b = k2_.entries();
  Matrix full(rows(), cols());
  for (Index j2 = 0; j2 < b.cols(); ++j2) {
    for (Index i2 = 0; i2 < b.rows(); ++i2) {
      full.block(i2 * a.rows(), j2 * a.cols(), a.rows(), a.cols()) = b(i2, j2) * a;
    }
  }
  return full;
}

DifferenceOperator::DifferenceOperator(Index n, DiffOrder order) : n_(n), order_(order) {
  if (n < 3) {
    throw std::invalid_argument("DifferenceOperator requires n >= 3");
  }
}

Vector DifferenceOperator::apply(const Vector& x) const {
  require_apply_dim(x.size());
  Vector y(n_);
  if (order_ == DiffOrder::second) {
    for (Index i = 0; i < n_; ++i) {
      y[i] = x[(i + n_ - 1) % n_] - 2.0 * x[i] + x[(i + 1) % n_];
    }
  } else {
    for (Index i = 0; i < n_; ++i) {
      y[i] = 0.5 * (x[(i + 1) % n_] - x[(i + n_ - 1) % n_]);
    }
  }
  return y;
}

Vector DifferenceOperator::adjoint(const Vector& y) const {
  require_adjoint_dim(y.size());
  // Symmetric circulant for second order, antisymmetric for first.
  if (order_ == DiffOrder::second) {
    return apply(y);
  }
  return -apply(y);
}

Matrix DifferenceOperator::materialize() const {
  Matrix m = Matrix::Zero(n_, n_);
  const auto st = stencil(order_);
  for (Index i = 0; i < n_; ++i) {
    for (const auto& [off, c] : st) {
      if (c != 0.0) m(i, (i + n_ + off) % n_) += c;
    }
  }
  return m;
}

DifferenceOperator build_second_diff(Index n) { return DifferenceOperator(n, DiffOrder::second); }

DifferenceOperator build_first_diff(Index n) { return DifferenceOperator(n, DiffOrder::first); }

DenseOperator build_gaussian_blur(Index n, double sigma, Index kernel_halfwidth) {
  if (n < 1) throw std::invalid_argument("build_gaussian_blur: n must be positive");
  if (sigma <= 0.0) throw std::invalid_argument("build_gaussian_blur: sigma must be positive");
  const Index hw = kernel_halfwidth < 0 ? static_cast<Index>(std::ceil(4.0 * sigma))
                                        : kernel_halfwidth;

  Vector kernel(2 * hw + 1);
  for (Index k = -hw; k <= hw; ++k) {
    kernel[k + hw] = std::exp(-0.5 * static_cast<double>(k * k) / (sigma * sigma));
  }
  kernel /= kernel.sum();

  Matrix a = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const Index lo = std::max<Index>(0, i - hw);
    const Index hi = std::min<Index>(n - 1, i + hw);
    for (Index j = lo; j <= hi; ++j) {
      a(i, j) = kernel[j - i + hw];
    }
  }
  return DenseOperator(std::move(a));
}

HeatProblem build_heat(Index n, double kappa) {
  if (n < 2) throw std::invalid_argument("build_heat: n must be >= 2");
  if (kappa <= 0.0) throw std::invalid_argument("build_heat: kappa must be positive");

  const double h = 1.0 / static_cast<double>(n);
  const double c = h / (2.0 * kappa * std::sqrt(M_PI));
  const double d = 1.0 / (4.0 * kappa * kappa);

  // Kernel samples at grid midpoints; column k of the Toeplitz matrix sees
  // the sample with lag i - j.
  Vector kern(n);
  for (Index i = 0; i < n; ++i) {
    const double t = (static_cast<double>(i) + 0.5) * h;
    kern[i] = c * std::pow(t, -1.5) * std::exp(-d / t);
  }

  Matrix a = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j <= i; ++j) {
      a(i, j) = kern[i - j];
    }
  }

  Vector u = Vector::Zero(n);
  for (Index i = 0; i < n / 2; ++i) {
    const double ti = static_cast<double>(i + 1) * 20.0 / static_cast<double>(n);
    if (ti < 2.0) {
      u[i] = 0.75 * ti * ti / 4.0;
    } else if (ti < 3.0) {
      u[i] = 0.75 + (ti - 2.0) * (3.0 - ti);
    } else {
      u[i] = 0.75 * std::exp(-(ti - 3.0) * 2.0);
    }
  }

  return HeatProblem{DenseOperator(std::move(a)), std::move(u)};
}

void write_operator_csv(const LinearOperator& op, const std::filesystem::path& path) {
  write_matrix_csv(op.materialize(), path);
}

}  // namespace upen
