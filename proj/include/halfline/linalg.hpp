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

#pragma once

#include <halfline/core.hpp>

namespace halfline {

enum class Definiteness { PD, PSD, Indefinite, NonHermitian };

const char* definiteness_name(Definiteness d);

Mat eye(Eigen::Index n);
Mat zeros(Eigen::Index r, Eigen::Index c);
Mat hermitian_part(const Mat& A);

bool is_hermitian(const Mat& A, const Tolerance& tol = {});
Definiteness psd_class(const Mat& A, const Tolerance& tol = {});
inline bool is_pd(const Mat& A, const Tolerance& tol = {}) {
  return psd_class(A, tol) == Definiteness::PD;
}
inline bool is_psd(const Mat& A, const Tolerance& tol = {}) {
  Definiteness d = psd_class(A, tol);
  return d == Definiteness::PD || d == Definiteness::PSD;
}

// eigenvalues of the Hermitian part, ascending
// ‖a − b‖ / max(1, ‖b‖)
double rel_diff(const Mat& a, const Mat& b);

Eigen::VectorXd hermitian_eigenvalues(const Mat& A);
double lambda_min(const Mat& A);

// A ≤ B in the Löwner order, up to psd_tol relative to the larger of the two
bool loewner_leq(const Mat& A, const Mat& B, const Tolerance& tol = {});

Mat pinv(const Mat& A, const Tolerance& tol = {});
Mat sqrt_psd(const Mat& A, const Tolerance& tol = {});

// inverse of a matrix that must be positive definite; `what` names it in the error
Mat inv_pd(const Mat& A, const char* what, const Tolerance& tol = {});
// inverse of a general square matrix, failing on numerical singularity
Mat inv(const Mat& A, const char* what);

bool block_psd(const Mat& A, const Mat& B, const Mat& C, const Mat& D,
               const Tolerance& tol = {});

struct MatrixInterval {
  Mat lower;
  Mat upper;
};

Mat interval_sample(const MatrixInterval& I, const Mat& K, const Tolerance& tol = {});

enum class SignatureKind { JTilde, Jq, Jqq };

Mat signature(SignatureKind kind, Eigen::Index q);
const char* signature_name(SignatureKind kind);
Mat j_defect(const Mat& J, const Mat& A);

}  // namespace halfline
