/*
 * Copyright 2026 The halfline Authors
 *
 *      Licensed under the Apache License, Version 2.0 (the "License")
 *
 * You may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *              http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include <halfline/linalg.hpp>

#include <algorithm>
#include <cmath>

namespace halfline {

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::PD: return "PD";
    case Definiteness::PSD: return "PSD";
    case Definiteness::Indefinite: return "INDEFINITE";
    case Definiteness::NonHermitian: return "NON_HERMITIAN";
  }
  return "?";
}

Mat eye(Eigen::Index n) { return Mat::Identity(n, n); }
Mat zeros(Eigen::Index r, Eigen::Index c) { return Mat::Zero(r, c); }
Mat hermitian_part(const Mat& A) { return (A + A.adjoint()) / 2.0; }

static void require_square(const Mat& A, const char* op) {
  if (A.rows() != A.cols())
    throw PreconditionError(std::string(op) + ": matrix is not square");
}

double rel_diff(const Mat& a, const Mat& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

bool is_hermitian(const Mat& A, const Tolerance& tol) {
  require_square(A, "is_hermitian");
  return (A - A.adjoint()).norm() <= tol.herm * (1.0 + A.norm());
}

Eigen::VectorXd hermitian_eigenvalues(const Mat& A) {
  require_square(A, "hermitian_eigenvalues");
  if (A.size() == 0) return Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(A), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double lambda_min(const Mat& A) {
  Eigen::VectorXd ev = hermitian_eigenvalues(A);
  return ev.size() ? ev(0) : 0.0;
}

Definiteness psd_class(const Mat& A, const Tolerance& tol) {
  if (!is_hermitian(A, tol)) return Definiteness::NonHermitian;
  if (A.size() == 0) return Definiteness::PD;
  Eigen::VectorXd ev = hermitian_eigenvalues(A);
  double lo = ev(0);
  double scale = std::max(1.0, ev(ev.size() - 1));
  if (lo > tol.psd * scale) return Definiteness::PD;
  if (lo >= -tol.psd * scale) return Definiteness::PSD;
  return Definiteness::Indefinite;
}

bool loewner_leq(const Mat& A, const Mat& B, const Tolerance& tol) {
  require_square(A, "loewner_leq");
  double scale = std::max({1.0, A.norm(), B.norm()});
  return lambda_min(B - A) >= -tol.psd * scale;
}

Mat pinv(const Mat& A, const Tolerance& tol) {
  if (A.size() == 0) return Mat::Zero(A.cols(), A.rows());
  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  double cut = tol.pinv_cutoff * sv(0);
  Eigen::VectorXd inv_sv(sv.size());
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    inv_sv(k) = (sv(k) > cut && sv(k) > 0.0) ? 1.0 / sv(k) : 0.0;
  return svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();
}

Mat sqrt_psd(const Mat& A, const Tolerance& tol) {
  if (!is_psd(A, tol)) throw PreconditionError("sqrt_psd: input is not positive semidefinite");
  if (A.size() == 0) return A;
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(A));
  Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

Mat inv_pd(const Mat& A, const char* what, const Tolerance& tol) {
  if (!is_pd(A, tol))
    throw PreconditionError(std::string(what) + " is not positive definite");
  return A.partialPivLu().inverse();
}

Mat inv(const Mat& A, const char* what) {
  require_square(A, what);
  if (A.size() == 0) return A;
  Eigen::FullPivLU<Mat> lu(A);
  if (!lu.isInvertible() || lu.rcond() < 1e-15)
    throw PreconditionError(std::string(what) + " is numerically singular");
  return lu.inverse();
}

bool block_psd(const Mat& A, const Mat& B, const Mat& C, const Mat& D,
               const Tolerance& tol) {
  if (A.rows() != A.cols() || D.rows() != D.cols() || B.rows() != A.rows() ||
      B.cols() != D.cols() || C.rows() != D.rows() || C.cols() != A.cols())
    throw PreconditionError("block_psd: block shapes are not conformal");
  if (!is_psd(A, tol)) return false;
  Mat Ap = pinv(A, tol);
  if ((A * Ap * B - B).norm() > tol.identity * (1.0 + B.norm())) return false;
  if ((C - B.adjoint()).norm() > tol.herm * (1.0 + B.norm())) return false;
  return is_psd(D - C * Ap * B, tol);
}

Mat interval_sample(const MatrixInterval& I, const Mat& K, const Tolerance& tol) {
  Eigen::Index q = I.lower.rows();
  if (K.rows() != q || K.cols() != q)
    throw PreconditionError("interval_sample: K has the wrong size");
  if (!is_psd(K, tol) || !is_psd(eye(q) - K, tol))
    throw PreconditionError("interval_sample: K is not between 0 and I");
  Mat root = sqrt_psd(I.upper - I.lower, tol);
  return I.lower + root * hermitian_part(K) * root;
}

Mat signature(SignatureKind kind, Eigen::Index q) {
  Mat J = Mat::Zero(2 * q, 2 * q);
  const cplx i(0.0, 1.0);
  switch (kind) {
    case SignatureKind::JTilde:
      J.topRightCorner(q, q) = -i * eye(q);
      J.bottomLeftCorner(q, q) = i * eye(q);
      break;
    case SignatureKind::Jq:
      J.topRightCorner(q, q) = -eye(q);
      J.bottomLeftCorner(q, q) = -eye(q);
      break;
    case SignatureKind::Jqq:
      J.topLeftCorner(q, q) = eye(q);
      J.bottomRightCorner(q, q) = -eye(q);
      break;
  }
  return J;
}

const char* signature_name(SignatureKind kind) {
  switch (kind) {
    case SignatureKind::JTilde: return "JTILDE";
    case SignatureKind::Jq: return "JQ";
    case SignatureKind::Jqq: return "JQQ";
  }
  return "?";
}

Mat j_defect(const Mat& J, const Mat& A) {
  if (A.rows() != J.rows() || A.cols() != J.cols())
    throw PreconditionError("j_defect: size mismatch");
  return J - A.adjoint() * J * A;
}

}  // namespace halfline
