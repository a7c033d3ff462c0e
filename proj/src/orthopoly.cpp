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

#include <halfline/orthopoly.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace halfline {

namespace {


void require_hankel_prefix(const MomentSequence& seq, const char* op, const Tolerance& tol) {
  int kappa = seq.kappa();
  if (kappa >= 1 && !is_pd(hankel_block(seq, floor_half(kappa - 1)), tol))
    throw PreconditionError(std::string(op) + ": Hankel prefix is not positive definite");
}

// the coefficient row (−z_{n,2n−1}H_{n−1}^{-1}, I) of the n-th monic polynomial
Mat monic_row(const MomentSequence& seq, int n) {
  Eigen::Index q = seq.q;
  Mat row(q, q * (n + 1));
  if (n == 0) {
    row = eye(q);
  } else {
    Mat H = hankel_block(seq, n - 1);
    Mat zH = H.adjoint().partialPivLu().solve(z_stack(seq, n, 2 * n - 1).adjoint()).adjoint();
    row << -zH, eye(q);
  }
  return row;
}

MatrixPolynomial from_row(const Mat& row, Eigen::Index q) {
  std::vector<Mat> c;
  for (Eigen::Index j = 0; j < row.cols() / q; ++j) c.push_back(row.middleCols(q * j, q));
  return MatrixPolynomial(c);
}

bool poly_close(const MatrixPolynomial& a, const MatrixPolynomial& b, double tol) {
  double scale = 1.0;
  for (const Mat& c : b.coeffs()) scale = std::max(scale, c.norm());
  return coeff_distance(a, b) <= tol * scale;
}

double condition_pd(const Mat& A) {
  Eigen::VectorXd ev = hermitian_eigenvalues(A);
  return ev(ev.size() - 1) / ev(0);
}

}  // namespace

double identity_slack(double conditioning, const Tolerance& tol) {
  return std::max(tol.identity, 100.0 * std::numeric_limits<double>::epsilon() * conditioning);
}

PolySeq monic_orthogonal_system(const MomentSequence& seq, const Tolerance& tol) {
  require_hankel_prefix(seq, "monic_orthogonal_system", tol);
  PolySeq out;
  for (int n = 0; n <= floor_half(seq.kappa() + 1); ++n) out.push_back(from_row(monic_row(seq, n), seq.q));
  return out;
}

PolySeq monic_system_recursive(const MomentSequence& seq, const Tolerance& tol) {
  Eigen::Index q = seq.q;
  PolySeq out{MatrixPolynomial::constant(eye(q))};
  int top = floor_half(seq.kappa() + 1);
  if (top == 0) return out;
  FavardPair fp = favard_pair(seq, tol);
  const MatrixPolynomial zI = MatrixPolynomial::linear(Mat::Zero(q, q), eye(q));
  for (int n = 1; n <= top; ++n) {
    MatrixPolynomial next = (zI - MatrixPolynomial::constant(fp.A[std::size_t(n - 1)])) * out.back();
    if (n >= 2) next = next - fp.B[std::size_t(n - 1)].adjoint() * out[std::size_t(n - 2)];
    out.push_back(next);
  }
  return out;
}

PolySeq second_kind_system(const MomentSequence& seq, const Tolerance& tol) {
  require_hankel_prefix(seq, "second_kind_system", tol);
  Eigen::Index q = seq.q;
  StructuralKit kit(seq);
  PolySeq out{MatrixPolynomial::constant(Mat::Zero(q, q))};
  for (int n = 1; n <= floor_half(seq.kappa() + 1); ++n) {
    Mat lower = Mat::Zero(q * (n + 1), q * n);
    lower.bottomRows(q * n) = kit.S(n - 1);
    out.push_back(from_row(monic_row(seq, n) * lower, q));
  }
  return out;
}

PolySeq second_kind_recursive(const MomentSequence& seq, const Tolerance& tol) {
  Eigen::Index q = seq.q;
  PolySeq out{MatrixPolynomial::constant(Mat::Zero(q, q))};
  int top = floor_half(seq.kappa() + 1);
  if (top == 0) return out;
  FavardPair fp = favard_pair(seq, tol);
  out.push_back(MatrixPolynomial::constant(fp.B[0]));
  const MatrixPolynomial zI = MatrixPolynomial::linear(Mat::Zero(q, q), eye(q));
  for (int n = 2; n <= top; ++n)
    out.push_back((zI - MatrixPolynomial::constant(fp.A[std::size_t(n - 1)])) * out.back() -
                  fp.B[std::size_t(n - 1)].adjoint() * out[std::size_t(n - 2)]);
  return out;
}

StieltjesQuadruple stieltjes_quadruple(const MomentSequence& seq, const Tolerance& tol) {
  require_stieltjes_pd(seq, "stieltjes_quadruple", tol);
  Eigen::Index q = seq.q;
  StieltjesQuadruple quad;
  quad.alpha = seq.alpha;
  quad.side = seq.side;
  quad.P = monic_orthogonal_system(seq, tol);
  quad.Psecond = second_kind_system(seq, tol);
  PolySeq shifted_second;
  if (seq.kappa() >= 1) {
    MomentSequence sh = shift_sequence(seq);
    quad.Pshift = monic_orthogonal_system(sh, tol);
    shifted_second = second_kind_system(sh, tol);
  } else {
    quad.Pshift = {MatrixPolynomial::constant(eye(q))};
    shifted_second = {MatrixPolynomial::constant(Mat::Zero(q, q))};
  }
  Mat s0 = seq.side == Side::Right ? seq.s[0] : Mat(-seq.s[0]);
  for (std::size_t n = 0; n < quad.Pshift.size(); ++n)
    quad.Phat.push_back(shifted_second[n] + quad.Pshift[n] * s0);

  for (int n = 0; n <= floor_half(seq.kappa()); ++n)
    quad.conditioning = std::max(quad.conditioning, condition_pd(hankel_block(seq, n)));
  for (int n = 0; n <= floor_half(seq.kappa() - 1); ++n)
    quad.conditioning = std::max(quad.conditioning, condition_pd(shifted_hankel(seq, n)));

  // the shift identity ties the two monic systems together
  double sg = seq.side == Side::Right ? 1.0 : -1.0;
  for (int n = 0; n <= floor_half(seq.kappa() - 1); ++n) {
    Mat c = sg * schur_hat(shift_sequence(seq), n, tol) * inv_pd(schur_hat(seq, n, tol), "Hhat", tol);
    MatrixPolynomial lhs = quad.Pshift[std::size_t(n)].times_linear(seq.alpha);
    MatrixPolynomial rhs = quad.P[std::size_t(n + 1)] + c * quad.P[std::size_t(n)];
    if (!poly_close(lhs, rhs, identity_slack(quad.conditioning, tol)))
      throw InconsistencyError("stieltjes_quadruple: shift identity fails at n = " + std::to_string(n));
  }
  return quad;
}

AlphaEvaluation eval_quadruple_at_alpha(const StieltjesQuadruple& quad, const DSParam& ds,
                                        const StieltjesParam& qp, const Tolerance& tol) {
  const double a = quad.alpha;
  const bool right = quad.side == Side::Right;
  Eigen::Index q = quad.P[0].rows();
  AlphaEvaluation ev;
  for (const auto& p : quad.P) ev.direct.P.push_back(p(a));
  for (const auto& p : quad.Psecond) ev.direct.Psecond.push_back(p(a));
  for (const auto& p : quad.Pshift) ev.direct.Pshift.push_back(p(a));
  for (const auto& p : quad.Phat) ev.direct.Phat.push_back(p(a));

  if (ds.L.size() + 1 < quad.P.size() || ds.M.size() < quad.Pshift.size())
    throw PreconditionError("eval_quadruple_at_alpha: parameters too short for the quadruple");

  // Pi_n = M_0^{-1}L_0^{-1} ··· M_{n−1}^{-1}L_{n−1}^{-1}
  std::vector<Mat> Pi{eye(q)};
  for (std::size_t j = 0; j + 1 < quad.P.size(); ++j)
    Pi.push_back(Pi.back() * inv_pd(ds.M[j], "M", tol) * inv_pd(ds.L[j], "L", tol));
  auto sgn = [&](std::size_t n) { return (right && n % 2 == 1) ? -1.0 : 1.0; };

  Mat sumL = Mat::Zero(q, q);
  for (std::size_t n = 0; n < quad.P.size(); ++n) {
    ev.closed.P.push_back(sgn(n) * Pi[n]);
    ev.closed.Psecond.push_back((right ? -sgn(n) : 1.0) * Pi[n] * sumL);
    if (n < ds.L.size()) sumL += ds.L[n];
  }
  Mat sumM = Mat::Zero(q, q);
  for (std::size_t n = 0; n < quad.Pshift.size(); ++n) {
    sumM += ds.M[n];
    Mat Mi = inv_pd(ds.M[n], "M", tol);
    ev.closed.Pshift.push_back(sgn(n) * Pi[n] * Mi * sumM);
    ev.closed.Phat.push_back((right ? sgn(n) : -1.0) * Pi[n] * Mi);
  }

  for (std::size_t j = 0; j < qp.Q.size(); ++j) {
    std::size_t n = j / 2;
    if (j % 2 == 0) {
      if (n >= ev.direct.Phat.size()) break;
      ev.Q_from_values.push_back((right ? 1.0 : -1.0) * ev.direct.P[n] * ev.direct.Phat[n].adjoint());
    } else {
      if (n + 1 >= ev.direct.P.size()) break;
      ev.Q_from_values.push_back(-ev.direct.Phat[n] * ev.direct.P[n + 1].adjoint());
    }
  }
  Mat prod = eye(q);
  for (std::size_t n = 0; n < quad.P.size(); ++n) {
    ev.P_from_Q.push_back(sgn(n) * prod);
    if (2 * n + 1 < qp.Q.size()) prod = qp.Q[2 * n + 1] * inv_pd(qp.Q[2 * n], "Q", tol) * prod;
  }

  auto compare = [&](const std::vector<Mat>& x, const std::vector<Mat>& y) {
    for (std::size_t j = 0; j < std::min(x.size(), y.size()); ++j)
      ev.max_disagreement = std::max(ev.max_disagreement, rel_diff(x[j], y[j]));
  };
  compare(ev.direct.P, ev.closed.P);
  compare(ev.direct.Psecond, ev.closed.Psecond);
  compare(ev.direct.Pshift, ev.closed.Pshift);
  compare(ev.direct.Phat, ev.closed.Phat);
  compare(ev.Q_from_values, qp.Q);
  compare(ev.direct.P, ev.P_from_Q);
  if (ev.max_disagreement > identity_slack(quad.conditioning, tol))
    throw InconsistencyError("eval_quadruple_at_alpha: closed forms disagree with direct values (" +
                             std::to_string(ev.max_disagreement) + ")");
  return ev;
}

namespace {

std::vector<cplx> companion_eigenvalues(const std::vector<Mat>& monic_low, Eigen::Index q) {
  // block companion of z^d I + Σ_{j<d} C_j z^j
  Eigen::Index d = Eigen::Index(monic_low.size());
  if (d == 0) return {};
  Mat C = Mat::Zero(d * q, d * q);
  for (Eigen::Index j = 0; j + 1 < d; ++j) C.block(j * q, (j + 1) * q, q, q) = eye(q);
  for (Eigen::Index j = 0; j < d; ++j) C.block((d - 1) * q, j * q, q, q) = -monic_low[std::size_t(j)];
  Eigen::ComplexEigenSolver<Mat> es(C, false);
  std::vector<cplx> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

}  // namespace

static std::vector<cplx> by_real_part(std::vector<cplx> zeros) {
  std::sort(zeros.begin(), zeros.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return zeros;
}

std::vector<cplx> project_real(std::vector<cplx> zeros) {
  for (cplx& z : zeros)
    if (std::abs(z.imag()) < 1e-7 * (1.0 + std::abs(z.real()))) z = cplx(z.real(), 0.0);
  return by_real_part(std::move(zeros));
}

std::vector<cplx> det_zeros(const MatrixPolynomial& P, ZeroKind kind) {
  Eigen::Index q = P.rows();
  if (P.rows() != P.cols()) throw PreconditionError("det_zeros: polynomial is not square");
  double scale = 0.0;
  for (const Mat& c : P.coeffs()) scale = std::max(scale, c.norm());
  int deg = P.degree(1e-14 * scale);
  if (deg < 0) throw PreconditionError("det_zeros: polynomial is identically zero");

  if (kind == ZeroKind::Monic) {
    Mat lead = P.coeff(deg);
    Eigen::FullPivLU<Mat> lu(lead);
    if (!lu.isInvertible() || lu.rcond() < 1e-13)
      throw PreconditionError("det_zeros: leading coefficient is singular");
    std::vector<Mat> low;
    for (int j = 0; j < deg; ++j) low.push_back(lu.solve(P.coeff(j)));
    return by_real_part(companion_eigenvalues(low, q));
  }

  // scalar determinant by interpolation on a circle, then an ordinary companion
  int N = deg * int(q);
  if (N == 0) {
    if (std::abs(P.coeff(0).determinant()) == 0.0)
      throw PreconditionError("det_zeros: polynomial is identically singular");
    return {};
  }
  const double pi = std::acos(-1.0);
  double radius = 1.0;
  std::vector<cplx> vals(std::size_t(N + 1));
  for (int k = 0; k <= N; ++k) {
    cplx w = std::polar(radius, 2.0 * pi * k / (N + 1));
    vals[std::size_t(k)] = P(w).determinant();
  }
  std::vector<cplx> a(std::size_t(N + 1));
  double amax = 0.0;
  for (int j = 0; j <= N; ++j) {
    cplx acc = 0.0;
    for (int k = 0; k <= N; ++k) acc += vals[std::size_t(k)] * std::polar(1.0, -2.0 * pi * j * k / (N + 1));
    a[std::size_t(j)] = acc / double(N + 1) / std::pow(radius, j);
    amax = std::max(amax, std::abs(a[std::size_t(j)]));
  }
  if (amax == 0.0) throw PreconditionError("det_zeros: polynomial is identically singular");
  int top = N;
  while (top > 0 && std::abs(a[std::size_t(top)]) <= 1e-12 * amax) --top;
  std::vector<Mat> low;
  for (int j = 0; j < top; ++j) low.push_back(Mat::Constant(1, 1, a[std::size_t(j)] / a[std::size_t(top)]));
  return by_real_part(companion_eigenvalues(low, 1));
}

}  // namespace halfline
