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

#include <vector>

#include <halfline/core.hpp>

namespace halfline {

// coeffs[j] multiplies z^j
class MatrixPolynomial {
 public:
  MatrixPolynomial() = default;
  MatrixPolynomial(Eigen::Index rows, Eigen::Index cols);
  explicit MatrixPolynomial(std::vector<Mat> coeffs);

  static MatrixPolynomial constant(const Mat& c);
  // c0 + c1·z
  static MatrixPolynomial linear(const Mat& c0, const Mat& c1);
  static MatrixPolynomial blocks(const MatrixPolynomial& p11, const MatrixPolynomial& p12,
                                 const MatrixPolynomial& p21, const MatrixPolynomial& p22);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  const std::vector<Mat>& coeffs() const { return coeffs_; }
  // zero matrix for j beyond the stored range
  Mat coeff(int j) const;

  // -1 for the zero polynomial; coefficients of norm ≤ tol count as zero
  int degree(double tol = 0.0) const;
  MatrixPolynomial trimmed(double tol = 0.0) const;

  Mat eval(cplx z) const;
  Mat operator()(cplx z) const { return eval(z); }

  // the polynomial z ↦ P(z̄)*
  MatrixPolynomial star() const;
  // coefficients in powers of (z − a)
  std::vector<Mat> taylor(cplx a) const;
  MatrixPolynomial block(Eigen::Index r0, Eigen::Index c0, Eigen::Index nr, Eigen::Index nc) const;

  MatrixPolynomial operator+(const MatrixPolynomial& o) const;
  MatrixPolynomial operator-(const MatrixPolynomial& o) const;
  MatrixPolynomial operator-() const;
  MatrixPolynomial operator*(const MatrixPolynomial& o) const;
  MatrixPolynomial operator*(const Mat& m) const;
  MatrixPolynomial operator*(cplx c) const;
  friend MatrixPolynomial operator*(const Mat& m, const MatrixPolynomial& p);
  friend MatrixPolynomial operator*(cplx c, const MatrixPolynomial& p) { return p * c; }

  // multiply by the scalar factor (z − a)
  MatrixPolynomial times_linear(cplx a) const;

 private:
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  std::vector<Mat> coeffs_;
};

inline Mat poly_eval(const MatrixPolynomial& P, cplx z) { return P.eval(z); }

// largest coefficient-wise Frobenius difference
double coeff_distance(const MatrixPolynomial& a, const MatrixPolynomial& b);

}  // namespace halfline
