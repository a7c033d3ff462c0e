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

#include <halfline/params.hpp>

#include <cmath>
#include <random>

namespace halfline {

namespace {


// z_{n,2n−1} H_{n−1}⁺ y_{n,2n−1}, the part of s_{2n} fixed by the earlier moments
Mat hat_correction(const MomentSequence& seq, int n, const Tolerance& tol) {
  if (n == 0) return Mat::Zero(seq.q, seq.q);
  return z_stack(seq, n, 2 * n - 1) * pinv(hankel_block(seq, n - 1), tol) * y_stack(seq, n, 2 * n - 1);
}

void require_all_pd(const std::vector<Mat>& xs, const char* what, const Tolerance& tol) {
  for (std::size_t j = 0; j < xs.size(); ++j)
    if (!is_pd(xs[j], tol))
      throw PreconditionError(std::string(what) + "[" + std::to_string(j) +
                              "] is not positive definite");
}

std::vector<Mat> inverses(const std::vector<Mat>& xs, const char* what, const Tolerance& tol) {
  std::vector<Mat> out;
  for (const Mat& x : xs) out.push_back(inv_pd(x, what, tol));
  return out;
}

}  // namespace

StieltjesParam stieltjes_param(const MomentSequence& seq, const Tolerance& tol) {
  StieltjesParam p;
  p.alpha = seq.alpha;
  p.side = seq.side;
  MomentSequence sh;
  if (seq.kappa() >= 1) sh = shift_sequence(seq);
  for (int j = 0; j <= seq.kappa(); ++j)
    p.Q.push_back(j % 2 == 0 ? schur_hat(seq, j / 2, tol) : schur_hat(sh, j / 2, tol));
  return p;
}

MomentSequence seq_from_stieltjes_param(const StieltjesParam& p, const Tolerance& tol) {
  if (p.Q.empty()) throw PreconditionError("seq_from_stieltjes_param: no parameters");
  MomentSequence seq = make_sequence({p.Q[0]}, p.alpha, p.side);
  for (int j = 1; j < int(p.Q.size()); ++j) {
    int n = j / 2;
    if (j % 2 == 0) {
      seq.s.push_back(p.Q[std::size_t(j)] + hat_correction(seq, n, tol));
    } else {
      const Mat& last = seq.s.back();
      Mat t;
      if (n == 0) {
        t = p.Q[std::size_t(j)];
      } else {
        t = p.Q[std::size_t(j)] + hat_correction(shift_sequence(seq), n, tol);
      }
      seq.s.push_back(p.side == Side::Right ? Mat(p.alpha * last + t) : Mat(p.alpha * last - t));
    }
  }
  return seq;
}

namespace {

// the Λ_n correction that fixes the Hermitian part of s_{2n+1}
Mat lambda_term(const MomentSequence& seq, int n, const Tolerance& tol) {
  if (n == 0) return Mat::Zero(seq.q, seq.q);
  Mat Hp = pinv(hankel_block(seq, n - 1), tol);
  Mat zl = z_stack(seq, n, 2 * n - 1), yl = y_stack(seq, n, 2 * n - 1);
  return zl * Hp * y_stack(seq, n + 1, 2 * n) + z_stack(seq, n + 1, 2 * n) * Hp * yl -
         zl * Hp * hankel_block(seq, n - 1, 1) * Hp * yl;
}

}  // namespace

CanonicalHankelParam canonical_hankel_param(const MomentSequence& seq, const Tolerance& tol) {
  CanonicalHankelParam p;
  int kappa = seq.kappa();
  for (int n = 0; n <= floor_half(kappa); ++n) p.D.push_back(schur_hat(seq, n, tol));
  for (int n = 1; n <= floor_half(kappa + 1); ++n)
    p.C.push_back(seq.s[std::size_t(2 * n - 1)] - lambda_term(seq, n - 1, tol));
  return p;
}

MomentSequence seq_from_canonical(const CanonicalHankelParam& p, double alpha, Side side,
                                  const Tolerance& tol) {
  if (p.D.empty() || p.C.size() > p.D.size() || p.D.size() > p.C.size() + 1)
    throw PreconditionError("seq_from_canonical: inconsistent parameter lengths");
  int kappa = int(p.C.size() + p.D.size()) - 1;
  MomentSequence seq = make_sequence({p.D[0]}, alpha, side);
  for (int j = 1; j <= kappa; ++j) {
    int n = (j + 1) / 2;
    if (j % 2 == 1)
      seq.s.push_back(p.C[std::size_t(n - 1)] + lambda_term(seq, n - 1, tol));
    else
      seq.s.push_back(p.D[std::size_t(n)] + hat_correction(seq, n, tol));
  }
  return seq;
}

FavardPair favard_pair(const MomentSequence& seq, const Tolerance& tol) {
  int kappa = seq.kappa();
  if (kappa >= 1 && !is_pd(hankel_block(seq, floor_half(kappa - 1)), tol))
    throw PreconditionError("favard_pair: Hankel prefix is not positive definite");
  FavardPair fp;
  std::vector<Mat> Hhat;
  for (int n = 0; n <= floor_half(kappa); ++n) Hhat.push_back(schur_hat(seq, n, tol));
  fp.B.push_back(seq.s[0]);
  for (int n = 1; n <= floor_half(kappa); ++n)
    fp.B.push_back(inv_pd(Hhat[std::size_t(n - 1)], "Hhat", tol) * Hhat[std::size_t(n)]);
  Eigen::Index q = seq.q;
  for (int n = 0; n <= floor_half(kappa - 1); ++n) {
    Mat row(q, q * (n + 1)), col(q * (n + 1), q);
    if (n == 0) {
      row = eye(q);
      col = eye(q);
    } else {
      Mat Hi = inv_pd(hankel_block(seq, n - 1), "H", tol);
      row << -z_stack(seq, n, 2 * n - 1) * Hi, eye(q);
      col << -Hi * y_stack(seq, n, 2 * n - 1), eye(q);
    }
    fp.A.push_back(row * hankel_block(seq, n, 1) * col * inv_pd(Hhat[std::size_t(n)], "Hhat", tol));
  }
  return fp;
}

DSParam ds_param(const MomentSequence& seq, const Tolerance& tol) {
  require_stieltjes_pd(seq, "ds_param", tol);
  DSParam d;
  d.alpha = seq.alpha;
  d.side = seq.side;
  StructuralKit kit(seq);
  int kappa = seq.kappa();
  Eigen::Index q = seq.q;
  // Each increment E_n*H_n^{-1}E_n − E_{n−1}*H_{n−1}^{-1}E_{n−1} equals w*Ĥ_n^{-1}w with
  // w = α^n I − z_{n,2n−1}H_{n−1}^{-1}E_{n−1}(α); the same update applies to the
  // shifted Hankel blocks for L. This avoids subtracting two large quadratic forms.
  for (int n = 0; n <= floor_half(kappa); ++n) {
    Mat w = std::pow(seq.alpha, n) * eye(q);
    if (n > 0)
      w -= z_stack(seq, n, 2 * n - 1) *
           hankel_block(seq, n - 1).ldlt().solve(kit.E(n - 1, seq.alpha));
    Mat hh = hermitian_part(schur_hat(seq, n, tol));
    d.M.push_back(hermitian_part(w.adjoint() * inv_pd(hh, "Hhat", tol) * w));
  }
  if (kappa >= 1) {
    MomentSequence sh = shift_sequence(seq);
    for (int n = 0; n <= floor_half(kappa - 1); ++n) {
      Mat c = seq.s[std::size_t(n)];
      if (n > 0)
        c -= z_stack(sh, n, 2 * n - 1) * hankel_block(sh, n - 1).ldlt().solve(y_stack(seq, 0, n - 1));
      Mat hh = hermitian_part(schur_hat(sh, n, tol));
      d.L.push_back(hermitian_part(c.adjoint() * inv_pd(hh, "shifted Hhat", tol) * c));
    }
  }
  return d;
}

DSParam ds_from_q(const StieltjesParam& p, const Tolerance& tol) {
  require_all_pd(p.Q, "Q", tol);
  std::vector<Mat> Qi = inverses(p.Q, "Q", tol);
  int kappa = int(p.Q.size()) - 1;
  Eigen::Index q = p.Q[0].rows();
  DSParam d;
  d.alpha = p.alpha;
  d.side = p.side;
  Mat Y = eye(q);
  for (int n = 0; n <= floor_half(kappa); ++n) {
    d.M.push_back(hermitian_part(Y * Qi[std::size_t(2 * n)] * Y.adjoint()));
    if (2 * n + 1 <= kappa) Y = Y * Qi[std::size_t(2 * n)] * p.Q[std::size_t(2 * n + 1)];
  }
  Mat X = eye(q);
  for (int n = 0; n <= floor_half(kappa - 1); ++n) {
    X = X * p.Q[std::size_t(2 * n)] * Qi[std::size_t(2 * n + 1)];
    d.L.push_back(hermitian_part(X * p.Q[std::size_t(2 * n + 1)] * X.adjoint()));
  }
  return d;
}

StieltjesParam q_from_ds(const DSParam& d, const Tolerance& tol) {
  if (d.M.empty() || d.L.size() > d.M.size() || d.M.size() > d.L.size() + 1)
    throw PreconditionError("q_from_ds: inconsistent parameter lengths");
  require_all_pd(d.L, "L", tol);
  require_all_pd(d.M, "M", tol);
  StieltjesParam p;
  p.alpha = d.alpha;
  p.side = d.side;
  Eigen::Index q = d.M[0].rows();
  Mat Zinv = eye(q);  // inverse of the running product M_0L_0···M_{n−1}L_{n−1}
  for (int j = 0; j <= d.kappa(); ++j) {
    int n = j / 2;
    if (j % 2 == 0) {
      p.Q.push_back(hermitian_part(Zinv.adjoint() * inv_pd(d.M[std::size_t(n)], "M", tol) * Zinv));
    } else {
      Zinv = inv_pd(d.L[std::size_t(n)], "L", tol) * inv_pd(d.M[std::size_t(n)], "M", tol) * Zinv;
      p.Q.push_back(hermitian_part(Zinv.adjoint() * d.L[std::size_t(n)] * Zinv));
    }
  }
  return p;
}

MomentSequence seq_from_ds(const DSParam& d, const Tolerance& tol) {
  MomentSequence seq = seq_from_stieltjes_param(q_from_ds(d, tol), tol);
  for (Mat& s : seq.s) s = hermitian_part(s);
  return seq;
}

FavardCross favard_from_q(const StieltjesParam& p, const Tolerance& tol) {
  require_all_pd(p.Q, "Q", tol);
  std::vector<Mat> Qi = inverses(p.Q, "Q", tol);
  const auto& Q = p.Q;
  int kappa = int(Q.size()) - 1;
  Eigen::Index q = Q[0].rows();
  double sg = p.side == Side::Right ? 1.0 : -1.0;
  Mat aI = p.alpha * eye(q);
  auto at = [](const std::vector<Mat>& v, int j) -> const Mat& { return v[std::size_t(j)]; };

  FavardCross fc;
  fc.seq.B.push_back(Q[0]);
  for (int n = 1; n <= floor_half(kappa); ++n) fc.seq.B.push_back(at(Qi, 2 * n - 2) * at(Q, 2 * n));
  for (int n = 0; n <= floor_half(kappa - 1); ++n) {
    Mat d = at(Q, 2 * n + 1) * at(Qi, 2 * n);
    if (n > 0) d += at(Q, 2 * n) * at(Qi, 2 * n - 1);
    fc.seq.A.push_back(aI + sg * d);
  }
  if (kappa >= 1) fc.shifted.B.push_back(Q[1]);
  for (int n = 1; n <= floor_half(kappa - 1); ++n)
    fc.shifted.B.push_back(at(Qi, 2 * n - 1) * at(Q, 2 * n + 1));
  for (int n = 0; n <= floor_half(kappa - 2); ++n)
    fc.shifted.A.push_back(aI + sg * (at(Q, 2 * n + 2) * at(Qi, 2 * n + 1) +
                                      at(Q, 2 * n + 1) * at(Qi, 2 * n)));
  return fc;
}

FavardCross favard_from_ds(const DSParam& d, const Tolerance& tol) {
  if (d.M.empty() || d.L.size() > d.M.size() || d.M.size() > d.L.size() + 1)
    throw PreconditionError("favard_from_ds: inconsistent parameter lengths");
  require_all_pd(d.L, "L", tol);
  require_all_pd(d.M, "M", tol);
  const auto& L = d.L;
  const auto& M = d.M;
  std::vector<Mat> Li = inverses(L, "L", tol), Mi = inverses(M, "M", tol);
  int kappa = d.kappa();
  Eigen::Index q = M[0].rows();
  double sg = d.side == Side::Right ? 1.0 : -1.0;
  Mat aI = d.alpha * eye(q);
  auto at = [](const std::vector<Mat>& v, int j) -> const Mat& { return v[std::size_t(j)]; };

  // ML(a,b) = M_aL_a···M_bL_b, iML(b) = M_0^{-1}L_0^{-1}···M_b^{-1}L_b^{-1},
  // iLM(b) = L_b^{-1}M_b^{-1}···L_0^{-1}M_0^{-1}, LM(b) = L_bM_b···L_0M_0
  auto ML = [&](int b) {
    Mat r = eye(q);
    for (int j = 0; j <= b; ++j) r = r * at(M, j) * at(L, j);
    return r;
  };
  auto iML = [&](int b) {
    Mat r = eye(q);
    for (int j = 0; j <= b; ++j) r = r * at(Mi, j) * at(Li, j);
    return r;
  };
  auto iLM = [&](int b) {
    Mat r = eye(q);
    for (int j = b; j >= 0; --j) r = r * at(Li, j) * at(Mi, j);
    return r;
  };
  auto LM = [&](int b) {
    Mat r = eye(q);
    for (int j = b; j >= 0; --j) r = r * at(L, j) * at(M, j);
    return r;
  };

  FavardCross fc;
  fc.seq.B.push_back(Mi[0]);
  for (int n = 1; n <= floor_half(kappa); ++n)
    fc.seq.B.push_back(ML(n - 2) * at(Li, n - 1) * at(Mi, n) * iLM(n - 1));
  for (int n = 0; n <= floor_half(kappa - 1); ++n) {
    Mat diff = n == 0 ? Mat(Mi[0] * Li[0])
                      : Mat(iML(n) * (at(L, n - 1) + at(L, n)) * at(M, n - 1) * LM(n - 2));
    fc.seq.A.push_back(aI + sg * diff);
  }
  if (kappa >= 1) fc.shifted.B.push_back(Mi[0] * Li[0] * Mi[0]);
  for (int n = 1; n <= floor_half(kappa - 1); ++n)
    fc.shifted.B.push_back(ML(n - 2) * at(M, n - 1) * at(Mi, n) * iLM(n));
  for (int n = 0; n <= floor_half(kappa - 2); ++n)
    fc.shifted.A.push_back(aI + sg * (iML(n) * at(Mi, n + 1) * (at(M, n) + at(M, n + 1)) * LM(n - 1)));
  return fc;
}

DSParam random_ds(Eigen::Index q, int kappa, double alpha, Side side, std::uint64_t seed) {
  if (q < 1 || kappa < 0) throw PreconditionError("random_ds: need q ≥ 1 and κ ≥ 0");
  std::mt19937_64 rng(seed);
  // a tall 4q×q factor keeps G*G near the identity, which keeps the
  // Hankel blocks of the generated sequences within double precision reach
  const Eigen::Index rows = 4 * q;
  std::normal_distribution<double> g(0.0, 1.0 / std::sqrt(2.0 * double(rows)));
  auto draw = [&]() {
    Mat G(rows, q);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < q; ++c) {
        double re = g(rng);
        double im = g(rng);
        G(r, c) = cplx(re, im);
      }
    return Mat(G.adjoint() * G + 0.1 * eye(q));
  };
  DSParam d;
  d.alpha = alpha;
  d.side = side;
  for (int j = 0; j <= kappa; ++j) {
    if (j % 2 == 0)
      d.M.push_back(draw());
    else
      d.L.push_back(draw());
  }
  return d;
}

}  // namespace halfline
