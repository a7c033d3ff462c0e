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

#include <halfline/solutions.hpp>

#include <algorithm>

namespace halfline {

namespace {

double side_sign(Side s) { return s == Side::Right ? 1.0 : -1.0; }

// z − α on the right, α − z on the left
cplx side_factor(Side s, double alpha, cplx z) { return s == Side::Right ? z - alpha : alpha - z; }

}  // namespace

StieltjesPair StieltjesPair::constant(const Mat& Phi, const Mat& Psi, Side side, const Tolerance& tol) {
  if (Phi.rows() != Phi.cols() || Psi.rows() != Psi.cols() || Phi.rows() != Psi.rows())
    throw PreconditionError("constant pair: Phi and Psi must be square of equal size");
  Eigen::Index q = Phi.rows();
  Mat stacked(2 * q, q);
  stacked << Phi, Psi;
  Eigen::JacobiSVD<Mat> svd(stacked);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv(0) == 0.0 || sv(q - 1) <= tol.pinv_cutoff * sv(0))
    throw PreconditionError("constant pair: [Phi; Psi] does not have full rank");
  Mat X = Psi.adjoint() * Phi;
  if (!is_hermitian(X, tol)) throw PreconditionError("constant pair: Psi*Phi is not Hermitian");
  if (!is_psd(side_sign(side) * X, tol))
    throw PreconditionError(side == Side::Right ? "constant pair: Psi*Phi is not positive semidefinite"
                                                : "constant pair: Psi*Phi is not negative semidefinite");
  StieltjesPair p;
  p.kind_ = PairKind::Constant;
  p.side_ = side;
  p.phi_ = Phi;
  p.psi_ = Psi;
  return p;
}

StieltjesPair StieltjesPair::schur(const Mat& F, Side side, const Tolerance& tol) {
  if (F.rows() != F.cols()) throw PreconditionError("Schur parameter must be square");
  Eigen::Index q = F.rows();
  if ((F.adjoint() * F - eye(q)).norm() > tol.identity)
    throw PreconditionError("Schur parameter is not unitary");
  const cplx i(0.0, 1.0);
  Mat im = (F - F.adjoint()) / (2.0 * i);
  if (!is_psd(side_sign(side) * im, tol))
    throw PreconditionError("Schur parameter has imaginary part of the wrong sign");
  StieltjesPair p;
  p.kind_ = PairKind::SchurConstant;
  p.side_ = side;
  p.F_ = F;
  if (side == Side::Right) {
    p.phi_ = i * (eye(q) - F);
    p.psi_ = eye(q) + F;
  } else {
    p.phi_ = -i * (eye(q) + F);
    p.psi_ = eye(q) - F;
  }
  return p;
}

bool off_cut(Side side, double alpha, cplx z) {
  if (z.imag() != 0.0) return true;
  return side == Side::Right ? z.real() < alpha : z.real() > alpha;
}

Mat lft_solve(const ResolventU& U, const StieltjesPair& pair, cplx z) {
  if (pair.side() != U.side) throw PreconditionError("lft_solve: pair and resolvent belong to different sides");
  if (!off_cut(U.side, U.alpha, z)) throw PreconditionError("lft_solve: z lies on the cut");
  Eigen::Index q = U.q();
  Mat Uz = U(z);
  Mat num = Uz.topLeftCorner(q, q) * pair.phi() + Uz.topRightCorner(q, q) * pair.psi();
  Mat den = Uz.bottomLeftCorner(q, q) * pair.phi() + Uz.bottomRightCorner(q, q) * pair.psi();
  return num * inv(den, "lft_solve: denominator at z");
}

const char* route_name(ExtremalRoute r) {
  switch (r) {
    case ExtremalRoute::Quadruple: return "quadruple";
    case ExtremalRoute::Pencil: return "pencil";
    case ExtremalRoute::Quotient: return "quotient";
  }
  return "?";
}

Extremals::Extremals(const MomentSequence& seq, int m, const Tolerance& tol) : m_(m) {
  if (m < 1 || m > seq.kappa()) throw PreconditionError("extremal: order m must lie in [1, kappa]");
  seq_ = seq.truncated(m);
  U_ = resolvent_u(seq_, m, tol);
  quad_ = stieltjes_quadruple(seq_, tol);

  const Eigen::Index q = seq_.q;
  const int k = floor_half(m - 1), n = floor_half(m);
  H_ = hankel_block(seq_, k);
  Hsh_ = shifted_hankel(seq_, k);
  y_ = y_stack(seq_, 0, k);

  StructuralKit kit(seq_);
  Mat Rinv = eye(q * (n + 1)) - seq_.alpha * kit.T(n);
  X_ = Rinv * hankel_block(seq_, n) * Rinv.adjoint();
  Mat Htilde;
  if (2 * n <= m - 1) {
    Htilde = shifted_hankel(seq_, n);
  } else {
    MomentSequence sh = shift_sequence(seq_);
    Htilde = Mat::Zero(q * (n + 1), q * (n + 1));
    Htilde.topLeftCorner(q * n, q * n) = shifted_hankel(seq_, n - 1);
    Htilde.topRightCorner(q * n, q) = y_stack(sh, n, 2 * n - 1);
    Htilde.bottomLeftCorner(q, q * n) = z_stack(sh, n, 2 * n - 1);
  }
  THT_ = kit.T(n) * Htilde * kit.T(n).adjoint();
}

void Extremals::require_point(cplx z) const {
  if (!off_cut(seq_.side, seq_.alpha, z)) throw PreconditionError("extremal: z lies on the cut");
}

Mat Extremals::bd(cplx z) const {
  Eigen::Index q = seq_.q;
  Mat Uz = U_(z);
  return Uz.topRightCorner(q, q) * inv(Mat(Uz.bottomRightCorner(q, q)), "D(z)");
}

Mat Extremals::ac(cplx z) const {
  Eigen::Index q = seq_.q;
  Mat Uz = U_(z);
  return Uz.topLeftCorner(q, q) * inv(Mat(Uz.bottomLeftCorner(q, q)), "C(z)");
}

Mat Extremals::pencil_y(cplx z) const {
  cplx f = side_factor(seq_.side, seq_.alpha, z);
  Mat P = Hsh_ - f * H_;
  return side_sign(seq_.side) * y_.adjoint() * P.partialPivLu().solve(y_);
}

Mat Extremals::pencil_v(cplx z) const {
  cplx f = side_factor(seq_.side, seq_.alpha, z);
  Eigen::Index q = seq_.q;
  Mat G = THT_ - X_ / f;
  Mat vGv = G.partialPivLu().solve(Mat(Mat::Identity(G.rows(), q))).topRows(q);
  return side_sign(seq_.side) * inv(vGv, "pencil form");
}

Mat Extremals::quotient_first(cplx z) const {
  std::size_t hi = std::size_t(floor_half(m_ + 1));
  cplx w = std::conj(z);
  Mat den = quad_.P[hi](w).adjoint();
  return -quad_.Psecond[hi](w).adjoint() * inv(den, "P(z)");
}

Mat Extremals::quotient_shifted(cplx z) const {
  std::size_t lo = std::size_t(floor_half(m_));
  cplx w = std::conj(z);
  cplx f = side_factor(seq_.side, seq_.alpha, z);
  Mat den = quad_.Pshift[lo](w).adjoint();
  return -(quad_.Phat[lo](w).adjoint() * inv(den, "shifted P(z)")) / f;
}

Mat Extremals::min(cplx z, ExtremalRoute r) const {
  require_point(z);
  bool right = seq_.side == Side::Right;
  switch (r) {
    case ExtremalRoute::Quadruple: return right ? bd(z) : ac(z);
    case ExtremalRoute::Pencil: return right ? pencil_y(z) : pencil_v(z);
    case ExtremalRoute::Quotient: return right ? quotient_first(z) : quotient_shifted(z);
  }
  throw PreconditionError("extremal: unknown route");
}

Mat Extremals::max(cplx z, ExtremalRoute r) const {
  require_point(z);
  bool right = seq_.side == Side::Right;
  switch (r) {
    case ExtremalRoute::Quadruple: return right ? ac(z) : bd(z);
    case ExtremalRoute::Pencil: return right ? pencil_v(z) : pencil_y(z);
    case ExtremalRoute::Quotient: return right ? quotient_shifted(z) : quotient_first(z);
  }
  throw PreconditionError("extremal: unknown route");
}

Evaluator Extremals::min_evaluator(ExtremalRoute r) const {
  Extremals self = *this;
  return [self, r](cplx z) { return self.min(z, r); };
}

Evaluator Extremals::max_evaluator(ExtremalRoute r) const {
  Extremals self = *this;
  return [self, r](cplx z) { return self.max(z, r); };
}

double Extremals::route_spread(cplx z) const {
  double worst = 0.0;
  Mat lo = min(z), hi = max(z);
  for (ExtremalRoute r : {ExtremalRoute::Pencil, ExtremalRoute::Quotient}) {
    worst = std::max(worst, rel_diff(min(z, r), lo));
    worst = std::max(worst, rel_diff(max(z, r), hi));
  }
  return worst;
}

Extremals extremal(const MomentSequence& seq, int m, const Tolerance& tol) {
  return Extremals(seq, m, tol);
}

WeylInterval weyl_interval(const Extremals& ext, double x, const Tolerance& tol) {
  const MomentSequence& seq = ext.sequence();
  if (!off_cut(seq.side, seq.alpha, x))
    throw PreconditionError(seq.side == Side::Right ? "weyl_interval: x must be smaller than alpha"
                                                    : "weyl_interval: x must be larger than alpha");
  WeylInterval w;
  w.x = x;
  w.interval.lower = hermitian_part(ext.min(x));
  w.interval.upper = hermitian_part(ext.max(x));
  double sg = side_sign(seq.side);
  if (!is_pd(sg * w.interval.lower, tol) || !is_pd(sg * w.interval.upper, tol))
    throw InconsistencyError("weyl_interval: endpoints are not definite");
  if (!is_pd(w.interval.upper - w.interval.lower, tol))
    throw InconsistencyError("weyl_interval: endpoints are not strictly ordered");
  return w;
}

IntervalPoint interval_point(const Extremals& ext, double x, const Mat& K, const Tolerance& tol) {
  const MomentSequence& seq = ext.sequence();
  const Eigen::Index q = seq.q;
  if (K.rows() != q || K.cols() != q) throw PreconditionError("interval_point: K has the wrong size");
  if (!is_psd(K, tol) || !is_psd(eye(q) - K, tol))
    throw PreconditionError("interval_point: K must satisfy 0 <= K <= I");
  WeylInterval w = weyl_interval(ext, x, tol);
  Mat root = sqrt_psd(w.interval.upper - w.interval.lower, tol);
  IntervalPoint out;
  out.T = w.interval.upper - root * hermitian_part(K) * root;
  if (!is_pd(K, tol)) return out;

  Mat Ux = ext.resolvent()(x);
  Mat A = Ux.topLeftCorner(q, q), B = Ux.topRightCorner(q, q);
  Mat C = Ux.bottomLeftCorner(q, q), D = Ux.bottomRightCorner(q, q);
  const Mat& T = out.T;
  if (seq.side == Side::Right) {
    Mat W = hermitian_part(inv(Mat(A - T * C), "interval pair") * (T * D - B));
    out.pair = StieltjesPair::constant(W, eye(q), seq.side, tol);
  } else {
    Mat V = hermitian_part(inv(Mat(B - T * D), "interval pair") * (T * C - A));
    out.pair = StieltjesPair::constant(eye(q), V, seq.side, tol);
  }
  if (rel_diff(lft_solve(ext.resolvent(), *out.pair, x), T) > tol.identity * 1e2)
    throw InconsistencyError("interval_point: pair does not reproduce the interval point");
  return out;
}

Mat difference_inverse(const MomentSequence& seq, int m, cplx z) {
  if (m < 1 || m > seq.kappa()) throw PreconditionError("difference_inverse: order m must lie in [1, kappa]");
  MomentSequence head = seq.truncated(m);
  require_stieltjes_pd(head, "difference_inverse");
  StructuralKit kit(head);
  const int n = floor_half(m), k = floor_half(m - 1);
  cplx f = side_factor(head.side, head.alpha, z);
  Mat first = kit.E_row(n, z) * hankel_block(head, n).partialPivLu().solve(kit.E(n, z));
  Mat second = kit.E_row(k, z) * shifted_hankel(head, k).partialPivLu().solve(kit.E(k, z));
  return -f * first + f * f * second;
}

Evaluator reflect_solution(Evaluator S) {
  return [S = std::move(S)](cplx z) { return Mat(-S(-z)); };
}

}  // namespace halfline
