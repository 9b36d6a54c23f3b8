// Copyright 2026 The AQC Shield Authors
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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

namespace aqcs {

using cplx = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Structural checks (Hermiticity, unitarity, trace) default to this.
inline constexpr double kDefaultTolerance = 1e-10;

/// Raised by logm_unitary when an eigenphase sits on the branch cut.
class BranchError : public std::domain_error {
 public:
  explicit BranchError(const std::string& what) : std::domain_error(what) {}
};

bool is_hermitian(const Operator& a, double tol = kDefaultTolerance);
bool is_unitary(const Operator& u, double tol = kDefaultTolerance);

/// Largest singular value.
double op_norm(const Operator& a);
/// Sum of singular values, Tr|A|.
double trace_norm(const Operator& a);

/// e^{-i t h} for Hermitian h, via the Hermitian eigendecomposition.
Operator expm_hermitian(const Operator& h, double t, double tol = kDefaultTolerance);

/// Principal-branch Hermitian generator H with e^{-iH} = u.
///
/// Eigenphases closer than `branch_margin` to +-pi are ambiguous and raise
/// BranchError. Non-unitary input raises std::invalid_argument.
Operator logm_unitary(const Operator& u, double tol = kDefaultTolerance, double branch_margin = 1e-8);

Operator kron(const Operator& a, const Operator& b);
Operator commutator(const Operator& a, const Operator& b);
Operator identity(std::size_t dim);
Operator projector(const StateVector& psi);

/// Hermitian part (A + A^dagger)/2, used to strip roundoff asymmetry.
Operator hermitian_part(const Operator& a);

/// Reduced operator over the factors listed in `keep` (ascending order is
/// not required; the result keeps the original factor order).
Operator partial_trace(const Operator& rho, std::span<const std::size_t> dims,
                       std::span<const std::size_t> keep);

/// Unit-trace Hermitian matrix. Positivity is checked on demand since it
/// needs a full eigendecomposition.
class DensityMatrix {
 public:
  /// The 1x1 state [1].
  DensityMatrix() : rho_(Operator::Identity(1, 1)) {}
  explicit DensityMatrix(Operator rho, double tol = kDefaultTolerance);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  const Operator& matrix() const { return rho_; }
  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  double trace() const { return rho_.trace().real(); }

  /// Smallest eigenvalue is >= -tol.
  bool is_positive(double tol = kDefaultTolerance) const;

  DensityMatrix evolved(const Operator& u) const;

 private:
  Operator rho_;
};

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

}  // namespace aqcs
