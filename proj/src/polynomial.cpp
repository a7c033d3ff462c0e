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

#include <halfline/polynomial.hpp>

#include <algorithm>

namespace halfline {

MatrixPolynomial::MatrixPolynomial(Eigen::Index rows, Eigen::Index cols)
    : rows_(rows), cols_(cols) {}

MatrixPolynomial::MatrixPolynomial(std::vector<Mat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("MatrixPolynomial: no coefficients given");
  rows_ = coeffs_[0].rows();
  cols_ = coeffs_[0].cols();
  for (const Mat& c : coeffs_)
    if (c.rows() != rows_ || c.cols() != cols_)
      throw PreconditionError("MatrixPolynomial: coefficient shapes differ");
}

MatrixPolynomial MatrixPolynomial::constant(const Mat& c) { return MatrixPolynomial({c}); }

MatrixPolynomial MatrixPolynomial::linear(const Mat& c0, const Mat& c1) {
  return MatrixPolynomial({c0, c1});
}

MatrixPolynomial MatrixPolynomial::blocks(const MatrixPolynomial& p11, const MatrixPolynomial& p12,
                                          const MatrixPolynomial& p21, const MatrixPolynomial& p22) {
  if (p11.rows() != p12.rows() || p21.rows() != p22.rows() || p11.cols() != p21.cols() ||
      p12.cols() != p22.cols())
    throw PreconditionError("MatrixPolynomial::blocks: shapes are not conformal");
  Eigen::Index r1 = p11.rows(), r2 = p21.rows(), c1 = p11.cols(), c2 = p12.cols();
  std::size_t n = std::max({p11.coeffs_.size(), p12.coeffs_.size(), p21.coeffs_.size(),
                            p22.coeffs_.size()});
  MatrixPolynomial out(r1 + r2, c1 + c2);
  for (std::size_t j = 0; j < n; ++j) {
    Mat c(r1 + r2, c1 + c2);
    c << p11.coeff(int(j)), p12.coeff(int(j)), p21.coeff(int(j)), p22.coeff(int(j));
    out.coeffs_.push_back(c);
  }
  return out;
}

Mat MatrixPolynomial::coeff(int j) const {
  if (j < 0 || j >= int(coeffs_.size())) return Mat::Zero(rows_, cols_);
  return coeffs_[std::size_t(j)];
}

int MatrixPolynomial::degree(double tol) const {
  for (int j = int(coeffs_.size()) - 1; j >= 0; --j)
    if (coeffs_[std::size_t(j)].norm() > tol) return j;
  return -1;
}

MatrixPolynomial MatrixPolynomial::trimmed(double tol) const {
  MatrixPolynomial out(rows_, cols_);
  int d = degree(tol);
  out.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + (d + 1));
  return out;
}

Mat MatrixPolynomial::eval(cplx z) const {
  Mat acc = Mat::Zero(rows_, cols_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

MatrixPolynomial MatrixPolynomial::star() const {
  MatrixPolynomial out(cols_, rows_);
  for (const Mat& c : coeffs_) out.coeffs_.push_back(c.adjoint());
  return out;
}

std::vector<Mat> MatrixPolynomial::taylor(cplx a) const {
  // repeated synthetic division by (z − a)
  std::vector<Mat> work = coeffs_;
  std::vector<Mat> out;
  int n = int(work.size());
  for (int k = 0; k < n; ++k) {
    for (int j = n - 2; j >= k; --j) work[std::size_t(j)] += a * work[std::size_t(j + 1)];
    out.push_back(work[std::size_t(k)]);
  }
  return out;
}

MatrixPolynomial MatrixPolynomial::block(Eigen::Index r0, Eigen::Index c0, Eigen::Index nr,
                                         Eigen::Index nc) const {
  MatrixPolynomial out(nr, nc);
  for (const Mat& c : coeffs_) out.coeffs_.push_back(c.block(r0, c0, nr, nc));
  return out;
}

MatrixPolynomial MatrixPolynomial::operator+(const MatrixPolynomial& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw PreconditionError("MatrixPolynomial: shape mismatch in sum");
  MatrixPolynomial out(rows_, cols_);
  std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  for (std::size_t j = 0; j < n; ++j) out.coeffs_.push_back(coeff(int(j)) + o.coeff(int(j)));
  return out;
}

MatrixPolynomial MatrixPolynomial::operator-() const { return *this * cplx(-1.0); }

MatrixPolynomial MatrixPolynomial::operator-(const MatrixPolynomial& o) const {
  return *this + (-o);
}

MatrixPolynomial MatrixPolynomial::operator*(const MatrixPolynomial& o) const {
  if (cols_ != o.rows_) throw PreconditionError("MatrixPolynomial: shape mismatch in product");
  MatrixPolynomial out(rows_, o.cols_);
  if (coeffs_.empty() || o.coeffs_.empty()) return out;
  out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Mat::Zero(rows_, o.cols_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  return out;
}

MatrixPolynomial MatrixPolynomial::operator*(const Mat& m) const {
  if (cols_ != m.rows()) throw PreconditionError("MatrixPolynomial: shape mismatch in product");
  MatrixPolynomial out(rows_, m.cols());
  for (const Mat& c : coeffs_) out.coeffs_.push_back(c * m);
  return out;
}

MatrixPolynomial operator*(const Mat& m, const MatrixPolynomial& p) {
  if (m.cols() != p.rows_) throw PreconditionError("MatrixPolynomial: shape mismatch in product");
  MatrixPolynomial out(m.rows(), p.cols_);
  for (const Mat& c : p.coeffs_) out.coeffs_.push_back(m * c);
  return out;
}

MatrixPolynomial MatrixPolynomial::operator*(cplx s) const {
  MatrixPolynomial out(rows_, cols_);
  for (const Mat& c : coeffs_) out.coeffs_.push_back(s * c);
  return out;
}

MatrixPolynomial MatrixPolynomial::times_linear(cplx a) const {
  MatrixPolynomial out(rows_, cols_);
  if (coeffs_.empty()) return out;
  out.coeffs_.assign(coeffs_.size() + 1, Mat::Zero(rows_, cols_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    out.coeffs_[j + 1] += coeffs_[j];
    out.coeffs_[j] -= a * coeffs_[j];
  }
  return out;
}

double coeff_distance(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    worst = std::max(worst, (a.coeff(int(j)) - b.coeff(int(j))).norm());
  return worst;
}

}  // namespace halfline
