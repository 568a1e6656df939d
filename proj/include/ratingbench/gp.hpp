// Copyright 2026 The ratingbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact Gaussian-process regression with an isotropic RBF kernel and a
// constant prior mean.

#ifndef RATINGBENCH_GP_HPP_
#define RATINGBENCH_GP_HPP_

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <stdexcept>

namespace ratingbench {

template <typename Scalar>
struct GPConfig {
  Scalar kernel_variance = Scalar(1) / Scalar(1000);
  // k(x, x') = kernel_variance * exp(-|x - x'|^2 / (2 lengthscale_sq)).
  Scalar lengthscale_sq = Scalar(0.25);
  Scalar prior_mean = Scalar(0.60);
  Scalar noise_variance = Scalar(1e-4);
};

template <typename Derived1, typename Derived2>
typename Derived1::Scalar rbf_kernel(const Eigen::MatrixBase<Derived1>& x1,
                                     const Eigen::MatrixBase<Derived2>& x2,
                                     typename Derived1::Scalar variance,
                                     typename Derived1::Scalar lengthscale_sq) {
  using Scalar = typename Derived1::Scalar;
  return variance * std::exp(-(x1 - x2).squaredNorm() / (Scalar(2) * lengthscale_sq));
}

class CholeskyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar>
class GaussianProcess {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  // Jitter added to the diagonal, in order, until the factorization succeeds.
  static constexpr std::array<double, 6> kJitterSchedule = {0.0, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6};

  explicit GaussianProcess(GPConfig<Scalar> config = {}) : config_(config) {}

  // inputs: one row per observation. Zero rows leaves the prior in place.
  void fit(const Matrix& inputs, const Vector& targets) {
    if (inputs.rows() != targets.size()) {
      throw std::invalid_argument("GaussianProcess::fit: inputs and targets differ in length");
    }
    inputs_ = inputs;
    if (inputs.rows() == 0) {
      weights_.resize(0);
      return;
    }
    kernel_ = kernel_matrix(inputs, inputs);
    const Vector residual = targets.array() - config_.prior_mean;
    for (double jitter : kJitterSchedule) {
      Matrix system = kernel_;
      system.diagonal().array() += config_.noise_variance + Scalar(jitter);
      Eigen::LLT<Matrix> llt(system);
      if (llt.info() == Eigen::Success) {
        weights_ = llt.solve(residual);
        jitter_ = Scalar(jitter);
        return;
      }
    }
    throw CholeskyError("GaussianProcess::fit: kernel matrix not positive definite");
  }

  Matrix kernel_matrix(const Matrix& a, const Matrix& b) const {
    Matrix k(a.rows(), b.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < b.rows(); ++j) {
        k(i, j) = rbf_kernel(a.row(i), b.row(j), config_.kernel_variance,
                             config_.lengthscale_sq);
      }
    }
    return k;
  }

  // Posterior mean at each row of points.
  Vector predict(const Matrix& points) const {
    if (inputs_.rows() == 0) return Vector::Constant(points.rows(), config_.prior_mean);
    return (kernel_matrix(points, inputs_) * weights_).array() + config_.prior_mean;
  }

  Scalar predict_one(const Vector& point) const {
    const Matrix row = point.transpose();
    return predict(row)(0);
  }

  const Matrix& kernel() const { return kernel_; }
  Scalar jitter() const { return jitter_; }
  const GPConfig<Scalar>& config() const { return config_; }

 private:
  GPConfig<Scalar> config_;
  Matrix inputs_;
  Matrix kernel_;
  Vector weights_;
  Scalar jitter_ = Scalar(0);
};

}  // namespace ratingbench

#endif  // RATINGBENCH_GP_HPP_
