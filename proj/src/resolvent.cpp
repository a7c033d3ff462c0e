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

#include <halfline/resolvent.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace halfline {

namespace {

// Σ_k z^k (T^k w)* X, which is w* R_n*(z̄) X written out in powers of z
MatrixPolynomial toeplitz_form(const Mat& w, const Mat& X, Eigen::Index q) {
  Eigen::Index blocks = w.rows() / q;
  std::vector<Mat> c;
  Mat shifted = w;
  for (Eigen::Index k = 0; k < blocks; ++k) {
    c.push_back(shifted.adjoint() * X);
    Mat next = Mat::Zero(w.rows(), w.cols());
    next.bottomRows(w.rows() - q) = shifted.topRows(w.rows() - q);
    shifted = next;
  }
  return MatrixPolynomial(c);
}

double conditioning_of(const MomentSequence& seq) {
  double c = 1.0;
  auto cond = [](const Mat& H) {
    Eigen::VectorXd ev = hermitian_eigenvalues(H);
    return ev(ev.size() - 1) / ev(0);
  };
  c = std::max(c, cond(hankel_block(seq, floor_half(seq.kappa()))));
  if (seq.kappa() >= 1) c = std::max(c, cond(shifted_hankel(seq, floor_half(seq.kappa() - 1))));
  return c;
}

std::vector<cplx> sample_points(double alpha, int count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> radius(0.1, 2.0), angle(0.0, 2.0 * M_PI);
  std::vector<cplx> out;
  for (int j = 0; j < count; ++j) out.push_back(alpha + std::polar(radius(gen), angle(gen)));
  return out;
}

double poly_rel_distance(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  double scale = 1.0;
  for (const Mat& c : b.coeffs()) scale = std::max(scale, c.norm());
  return coeff_distance(a, b) / scale;
}

void require_order(const MomentSequence& seq, int m, const char* op) {
  if (m < 0 || m > seq.kappa())
    throw PreconditionError(std::string(op) + ": order m must lie in [0, kappa]");
}

}  // namespace

Mat ResolventU::tilde(cplx z) const {
  cplx f = side == Side::Right ? z - alpha : alpha - z;
  if (f == 0.0) throw PreconditionError("tilde resolvent is undefined at z = alpha");
  Eigen::Index n = q();
  Mat out = U(z);
  out.topRightCorner(n, n) *= f;
  out.bottomLeftCorner(n, n) /= f;
  return out;
}

MatrixPolynomial FactorChain::product() const {
  MatrixPolynomial out = W.front();
  for (std::size_t j = 1; j < W.size(); ++j) out = out * W[j];
  return out;
}

DyukarevQuadruple dyukarev_quadruple(const MomentSequence& seq, const Tolerance& tol) {
  require_stieltjes_pd(seq, "dyukarev_quadruple", tol);
  const Eigen::Index q = seq.q;
  const int kappa = seq.kappa();
  const double sg = seq.side == Side::Right ? 1.0 : -1.0;
  StructuralKit kit(seq);
  const MatrixPolynomial one = MatrixPolynomial::constant(eye(q));
  DyukarevQuadruple dq;
  dq.alpha = seq.alpha;
  dq.side = seq.side;

  for (int n = 0; n <= floor_half(kappa); ++n) {
    Mat X = hankel_block(seq, n).partialPivLu().solve(kit.E(n, seq.alpha));
    dq.A.push_back(one + toeplitz_form(kit.u(n), X, q).times_linear(seq.alpha));
    dq.C.push_back(-toeplitz_form(kit.v(n), X, q).times_linear(seq.alpha));
  }
  dq.B.push_back(MatrixPolynomial::constant(Mat::Zero(q, q)));
  dq.D.push_back(one);
  for (int n = 1; n <= floor_half(kappa + 1); ++n) {
    Mat Y = shifted_hankel(seq, n - 1).partialPivLu().solve(y_stack(seq, 0, n - 1));
    dq.B.push_back(toeplitz_form(kit.u_shift(n - 1), Y, q));
    dq.D.push_back(one - sg * toeplitz_form(kit.v(n - 1), Y, q).times_linear(seq.alpha));
  }
  return dq;
}

DyukarevQuadruple dyukarev_from_stieltjes(const StieltjesQuadruple& quad) {
  const double a = quad.alpha;
  const double sg = quad.side == Side::Right ? 1.0 : -1.0;
  DyukarevQuadruple dq;
  dq.alpha = a;
  dq.side = quad.side;
  for (std::size_t n = 0; n < quad.Phat.size(); ++n) {
    Mat hat_inv = inv(quad.Phat[n](a), "Phat(alpha)").adjoint();
    dq.A.push_back(quad.Phat[n].star() * hat_inv);
    dq.C.push_back(-sg * quad.Pshift[n].star().times_linear(a) * hat_inv);
  }
  for (std::size_t n = 0; n < quad.P.size(); ++n) {
    Mat p_inv = inv(quad.P[n](a), "P(alpha)").adjoint();
    dq.B.push_back(-(quad.Psecond[n].star() * p_inv));
    dq.D.push_back(quad.P[n].star() * p_inv);
  }
  return dq;
}

double check_quadruple_routes(const DyukarevQuadruple& def, const DyukarevQuadruple& alt,
                              double slack) {
  if (def.A.size() != alt.A.size() || def.B.size() != alt.B.size())
    throw InconsistencyError("quadruple routes produce families of different length");
  double worst = 0.0;
  auto cmp = [&worst](const PolySeq& x, const PolySeq& y) {
    for (std::size_t n = 0; n < x.size(); ++n) worst = std::max(worst, poly_rel_distance(x[n], y[n]));
  };
  cmp(def.A, alt.A);
  cmp(def.B, alt.B);
  cmp(def.C, alt.C);
  cmp(def.D, alt.D);
  if (worst > slack)
    throw InconsistencyError("quadruple routes disagree (" + std::to_string(worst) + ")");
  return worst;
}

ResolventU assemble_u(const DyukarevQuadruple& dq, int m) {
  std::size_t lo = std::size_t(floor_half(m)), hi = std::size_t(floor_half(m + 1));
  if (m < 0 || lo >= dq.A.size() || hi >= dq.B.size())
    throw PreconditionError("assemble_u: order m exceeds the quadruple");
  ResolventU out;
  out.m = m;
  out.alpha = dq.alpha;
  out.side = dq.side;
  out.U = MatrixPolynomial::blocks(dq.A[lo], dq.B[hi], dq.C[lo], dq.D[hi]);
  return out;
}

ResolventU resolvent_u(const MomentSequence& seq, int m, const Tolerance& tol) {
  require_order(seq, m, "resolvent_u");
  MomentSequence head = seq.truncated(m);
  ResolventU out = assemble_u(dyukarev_quadruple(head, tol), m);

  const double slack = identity_slack(conditioning_of(head), tol);
  const Mat J = signature(SignatureKind::JTilde, seq.q);
  const cplx det0 = out.U(seq.alpha).determinant();
  if (std::abs(det0) == 0.0) throw InconsistencyError("resolvent_u: det U vanishes");
  for (cplx z : sample_points(seq.alpha, 20, 0x5eed)) {
    Mat Uz = out.U(z), Uc = out.U(std::conj(z));
    double scale = std::max(1.0, Uz.norm() * Uc.norm());
    if (std::abs(Uz.determinant() - det0) > slack * (1.0 + std::abs(det0)) * scale)
      throw InconsistencyError("resolvent_u: det U is not constant");
    Mat I2 = eye(2 * seq.q);
    if ((Uz * J * Uc.adjoint() * J - I2).norm() > slack * scale)
      throw InconsistencyError("resolvent_u: J-inverse identity fails");
  }
  return out;
}

Mat resolvent_inverse(const StieltjesQuadruple& quad, int m, cplx z) {
  std::size_t lo = std::size_t(floor_half(m)), hi = std::size_t(floor_half(m + 1));
  if (m < 0 || lo >= quad.Phat.size() || hi >= quad.P.size())
    throw PreconditionError("resolvent_inverse: order m exceeds the quadruple");
  const double a = quad.alpha;
  const double sg = quad.side == Side::Right ? 1.0 : -1.0;
  const Eigen::Index q = quad.P[0].rows();
  Mat p_inv = inv(quad.P[hi](a), "P(alpha)");
  Mat hat_inv = inv(quad.Phat[lo](a), "Phat(alpha)");
  Mat out(2 * q, 2 * q);
  out.topLeftCorner(q, q) = p_inv * quad.P[hi](z);
  out.topRightCorner(q, q) = p_inv * quad.Psecond[hi](z);
  out.bottomLeftCorner(q, q) = sg * (z - a) * hat_inv * quad.Pshift[lo](z);
  out.bottomRightCorner(q, q) = hat_inv * quad.Phat[lo](z);
  return out;
}

FactorChain factor_chain(const DSParam& ds, int m) {
  if (m < 0 || m > ds.kappa()) throw PreconditionError("factor_chain: order m exceeds the parameters");
  const Eigen::Index q = ds.M.front().rows();
  const double sg = ds.side == Side::Right ? 1.0 : -1.0;
  const Mat I = eye(q), O = Mat::Zero(q, q);
  FactorChain chain;
  for (int j = 0; j <= m; ++j) {
    const Mat& X = j % 2 ? ds.L[std::size_t(j / 2)] : ds.M[std::size_t(j / 2)];
    if (j % 2) {
      chain.W.push_back(MatrixPolynomial::blocks(MatrixPolynomial::constant(I), MatrixPolynomial::constant(sg * X),
                                                 MatrixPolynomial::constant(O), MatrixPolynomial::constant(I)));
    } else {
      MatrixPolynomial lower = -MatrixPolynomial::constant(X).times_linear(ds.alpha);
      chain.W.push_back(MatrixPolynomial::blocks(MatrixPolynomial::constant(I), MatrixPolynomial::constant(O),
                                                 lower, MatrixPolynomial::constant(I)));
    }
  }
  return chain;
}

FactorChain factorize_u(const MomentSequence& seq, int m, const Tolerance& tol) {
  require_order(seq, m, "factorize_u");
  MomentSequence head = seq.truncated(m);
  FactorChain chain = factor_chain(ds_param(head, tol), m);
  ResolventU U = resolvent_u(head, m, tol);
  double slack = identity_slack(conditioning_of(head), tol);
  if (poly_rel_distance(chain.product(), U.U) > slack)
    throw InconsistencyError("factorize_u: factor product differs from U");
  return chain;
}

LeadingTerms leading_terms(const DSParam& ds, int m) {
  if (m < 0 || m > ds.kappa()) throw PreconditionError("leading_terms: order m exceeds the parameters");
  const Eigen::Index q = ds.M.front().rows();
  const double sg = ds.side == Side::Right ? 1.0 : -1.0;
  auto L = [&](int j) -> Mat { return sg * ds.L[std::size_t(j)]; };
  auto M = [&](int j) -> const Mat& { return ds.M[std::size_t(j)]; };
  auto sign = [](int k) { return k % 2 ? -1.0 : 1.0; };
  const int lo = floor_half(m), hi = floor_half(m + 1);
  LeadingTerms t;

  Mat lm = eye(q);
  for (int j = 0; j < lo; ++j) lm = lm * L(j) * M(j + 1);
  t.A = {lo, sign(lo) * lm, eye(q)};
  Mat msum = Mat::Zero(q, q);
  for (int j = 0; j <= lo; ++j) msum += M(j);
  t.C = {lo + 1, sign(lo + 1) * M(0) * lm, -msum};

  Mat ml = eye(q);
  for (int j = 0; j < hi; ++j) ml = ml * M(j) * L(j);
  t.D = {hi, sign(hi) * ml, eye(q)};
  if (hi == 0) {
    t.B = {-1, Mat::Zero(q, q), Mat::Zero(q, q)};
  } else {
    Mat b = L(0), lsum = Mat::Zero(q, q);
    for (int j = 1; j < hi; ++j) b = b * M(j) * L(j);
    for (int j = 0; j < hi; ++j) lsum += L(j);
    t.B = {hi - 1, sign(hi - 1) * b, lsum};
  }
  return t;
}

Mat schur_frame(Side side, Eigen::Index q) {
  const cplx i(0.0, 1.0);
  Mat E(2 * q, 2 * q);
  if (side == Side::Right)
    E << -i * eye(q), i * eye(q), eye(q), eye(q);
  else
    E << -i * eye(q), -i * eye(q), -eye(q), eye(q);
  return E / std::sqrt(2.0);
}

Mat frame_signature(Side side, Eigen::Index q) {
  Mat j = signature(SignatureKind::Jqq, q);
  return side == Side::Right ? j : Mat(-j);
}

MatrixPolynomial sigma(const ResolventU& U) { return U.U * schur_frame(U.side, U.q()); }

Mat sigma_solve(const MatrixPolynomial& Sigma, const Mat& F, cplx z) {
  Eigen::Index q = Sigma.rows() / 2;
  Mat S = Sigma(z);
  Mat num = S.topLeftCorner(q, q) * F + S.topRightCorner(q, q);
  Mat den = S.bottomLeftCorner(q, q) * F + S.bottomRightCorner(q, q);
  return num * inv(den, "sigma denominator");
}

JInnerReport j_inner_check(const MatrixPolynomial& U, const std::vector<cplx>& samples,
                           const Tolerance& tol) {
  const Mat J = signature(SignatureKind::JTilde, U.rows() / 2);
  JInnerReport r;
  double scale = 1.0;
  for (cplx z : samples) {
    Mat Uz = U(z);
    Mat defect = j_defect(J, Uz);
    scale = std::max(scale, Uz.squaredNorm());
    if (z.imag() == 0.0)
      r.max_real_defect = std::max(r.max_real_defect, defect.norm());
    else if (z.imag() > 0.0)
      r.min_eigenvalue = std::min(r.min_eigenvalue, lambda_min(defect));
  }
  r.contractive = r.min_eigenvalue >= -tol.psd * scale && r.max_real_defect <= tol.identity * scale;
  return r;
}

}  // namespace halfline
