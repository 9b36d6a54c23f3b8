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

#include "aqcs/core/dense.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace aqcs {

namespace {

void require_square(const Operator& a, const char* op) {
  if (a.rows() != a.cols()) throw std::invalid_argument(std::string(op) + ": operator is not square");
}

double max_abs(const Operator& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace

bool is_hermitian(const Operator& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.adjoint()) <= tol;
}

bool is_unitary(const Operator& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs(u.adjoint() * u - Operator::Identity(u.rows(), u.cols())) <= tol;
}

double op_norm(const Operator& a) {
  if (a.size() == 0) return 0.0;
  if (is_hermitian(a, 0.0)) {
    Eigen::SelfAdjointEigenSolver<Operator> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::JacobiSVD<Operator> svd(a);
  return svd.singularValues()(0);
}

double trace_norm(const Operator& a) {
  if (a.size() == 0) return 0.0;
  if (is_hermitian(a, 0.0)) {
    Eigen::SelfAdjointEigenSolver<Operator> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Operator> svd(a);
  return svd.singularValues().sum();
}

Operator expm_hermitian(const Operator& h, double t, double tol) {
  require_square(h, "expm_hermitian");
  if (!is_hermitian(h, tol)) throw std::invalid_argument("expm_hermitian: input is not Hermitian");
  if (t == 0.0) return Operator::Identity(h.rows(), h.cols());
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitian_part(h));
  const auto& v = es.eigenvectors();
  Eigen::VectorXcd phases = es.eigenvalues().unaryExpr(
      [t](double e) { return cplx(std::cos(t * e), -std::sin(t * e)); });
  return v * phases.asDiagonal() * v.adjoint();
}

Operator logm_unitary(const Operator& u, double tol, double branch_margin) {
  require_square(u, "logm_unitary");
  if (!is_unitary(u, tol)) throw std::invalid_argument("logm_unitary: input is not unitary");
  // A unitary is normal, so its complex Schur form is diagonal up to roundoff
  // and the Schur vectors form an orthonormal eigenbasis even when
  // eigenvalues are degenerate.
  Eigen::ComplexSchur<Operator> schur(u);
  const Operator& tri = schur.matrixT();
  const Operator& q = schur.matrixU();
  Operator off = tri;
  off.diagonal().setZero();
  if (max_abs(off) > std::sqrt(tol)) {
    throw std::invalid_argument("logm_unitary: Schur form is not diagonal; input is not normal");
  }
  Eigen::VectorXd gen(u.rows());
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    const double theta = std::arg(tri(i, i));
    if (std::numbers::pi - std::abs(theta) < branch_margin) {
      throw BranchError("logm_unitary: eigenphase " + std::to_string(theta) +
                        " lies on the principal branch cut");
    }
    gen(i) = -theta;
  }
  return hermitian_part(q * gen.cast<cplx>().asDiagonal() * q.adjoint());
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator identity(std::size_t dim) {
  return Operator::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

Operator projector(const StateVector& psi) { return psi * psi.adjoint(); }

Operator hermitian_part(const Operator& a) { return 0.5 * (a + a.adjoint()); }

Operator partial_trace(const Operator& rho, std::span<const std::size_t> dims,
                       std::span<const std::size_t> keep) {
  require_square(rho, "partial_trace");
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (total != static_cast<std::size_t>(rho.rows())) {
    throw std::invalid_argument("partial_trace: product of factor dimensions does not match operator");
  }
  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) {
    if (k >= dims.size()) throw std::invalid_argument("partial_trace: kept factor index out of range");
    kept[k] = true;
  }
  std::size_t keep_dim = 1;
  for (std::size_t f = 0; f < dims.size(); ++f) keep_dim *= kept[f] ? dims[f] : 1;
  const std::size_t trace_dim = total / keep_dim;

  // Map (kept index, traced index) -> full index once, then contract.
  std::vector<std::size_t> full(keep_dim * trace_dim);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    std::size_t ki = 0;
    std::size_t ti = 0;
    std::size_t kstride = 1;
    std::size_t tstride = 1;
    for (std::size_t f = dims.size(); f-- > 0;) {
      const std::size_t digit = rem % dims[f];
      rem /= dims[f];
      if (kept[f]) {
        ki += digit * kstride;
        kstride *= dims[f];
      } else {
        ti += digit * tstride;
        tstride *= dims[f];
      }
    }
    full[ki * trace_dim + ti] = idx;
  }

  const auto kd = static_cast<Eigen::Index>(keep_dim);
  Operator out = Operator::Zero(kd, kd);
  for (std::size_t r = 0; r < keep_dim; ++r) {
    for (std::size_t c = 0; c < keep_dim; ++c) {
      cplx acc = 0.0;
      for (std::size_t t = 0; t < trace_dim; ++t) {
        acc += rho(static_cast<Eigen::Index>(full[r * trace_dim + t]),
                   static_cast<Eigen::Index>(full[c * trace_dim + t]));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return out;
}

DensityMatrix::DensityMatrix(Operator rho, double tol) : rho_(std::move(rho)) {
  require_square(rho_, "DensityMatrix");
  if (!is_hermitian(rho_, tol)) throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  if (std::abs(rho_.trace() - cplx(1.0, 0.0)) > tol) {
    throw std::invalid_argument("DensityMatrix: trace is " + std::to_string(rho_.trace().real()) +
                                ", expected 1");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const double nrm = psi.norm();
  if (std::abs(nrm - 1.0) > 1e-8) throw std::invalid_argument("DensityMatrix::pure: state is not normalized");
  return DensityMatrix(projector(psi / nrm));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

bool DensityMatrix::is_positive(double tol) const {
  Eigen::SelfAdjointEigenSolver<Operator> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

DensityMatrix DensityMatrix::evolved(const Operator& u) const {
  if (u.rows() != rho_.rows()) throw std::invalid_argument("DensityMatrix::evolved: dimension mismatch");
  return DensityMatrix(hermitian_part(u * rho_ * u.adjoint()), 1e-8);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  return DensityMatrix(partial_trace(rho.matrix(), dims, keep), 1e-8);
}

}  // namespace aqcs
