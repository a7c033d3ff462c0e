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

#include <halfline/moments.hpp>

#include <cmath>

namespace halfline {

namespace {


}  // namespace

MomentSequence MomentSequence::truncated(int m) const {
  if (m < 0 || m > kappa()) throw PreconditionError("truncated: index out of range");
  MomentSequence out = *this;
  out.s.resize(std::size_t(m + 1));
  return out;
}

MomentSequence make_sequence(std::vector<Mat> moments, double alpha, Side side) {
  if (moments.empty()) throw PreconditionError("moment sequence is empty");
  if (!std::isfinite(alpha)) throw PreconditionError("alpha is not finite");
  Eigen::Index q = moments[0].rows();
  if (q == 0) throw PreconditionError("moments have size zero");
  for (const Mat& m : moments) {
    if (m.rows() != q || m.cols() != q)
      throw PreconditionError("moments are not all q×q of the same q");
    if (!m.allFinite()) throw PreconditionError("moment has non-finite entries");
  }
  MomentSequence seq;
  seq.q = q;
  seq.alpha = alpha;
  seq.side = side;
  seq.s = std::move(moments);
  return seq;
}

static const Mat& moment(const MomentSequence& seq, int j) {
  if (j < 0 || j > seq.kappa())
    throw PreconditionError("moment index " + std::to_string(j) + " outside 0.." +
                            std::to_string(seq.kappa()));
  return seq.s[std::size_t(j)];
}

Mat y_stack(const MomentSequence& seq, int l, int m) {
  Eigen::Index q = seq.q;
  Mat out(q * std::max(0, m - l + 1), q);
  for (int j = l; j <= m; ++j) out.middleRows(q * (j - l), q) = moment(seq, j);
  return out;
}

Mat z_stack(const MomentSequence& seq, int l, int m) {
  Eigen::Index q = seq.q;
  Mat out(q, q * std::max(0, m - l + 1));
  for (int j = l; j <= m; ++j) out.middleCols(q * (j - l), q) = moment(seq, j);
  return out;
}

Mat hankel_block(const MomentSequence& seq, int n, int offset) {
  Eigen::Index q = seq.q;
  Mat out(q * (n + 1), q * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n; ++k) out.block(q * j, q * k, q, q) = moment(seq, j + k + offset);
  return out;
}

Mat schur_hat(const MomentSequence& seq, int n, const Tolerance& tol) {
  if (n == 0) return moment(seq, 0);
  Mat out = moment(seq, 2 * n) -
            z_stack(seq, n, 2 * n - 1) * pinv(hankel_block(seq, n - 1), tol) * y_stack(seq, n, 2 * n - 1);
  // a Schur complement of a Hermitian block is Hermitian; drop the rounding residue
  if (is_hermitian(hankel_block(seq, n), tol)) out = hermitian_part(out);
  return out;
}

HankelPack build_hankel_pack(const MomentSequence& seq, const Tolerance& tol) {
  HankelPack p;
  p.seq = seq;
  int kappa = seq.kappa();
  for (int n = 0; n <= floor_half(kappa); ++n) {
    p.H.push_back(hankel_block(seq, n, 0));
    p.Hhat.push_back(schur_hat(seq, n, tol));
  }
  for (int n = 0; n <= floor_half(kappa - 1); ++n) p.K.push_back(hankel_block(seq, n, 1));
  for (int n = 0; n <= floor_half(kappa - 2); ++n) p.Ktilde.push_back(hankel_block(seq, n, 2));
  return p;
}

MomentSequence shift_sequence(const MomentSequence& seq) {
  if (seq.kappa() < 1) throw PreconditionError("shift_sequence needs at least two moments");
  MomentSequence out = seq;
  out.s.clear();
  for (int j = 0; j < seq.kappa(); ++j) {
    const Mat& a = seq.s[std::size_t(j)];
    const Mat& b = seq.s[std::size_t(j + 1)];
    out.s.push_back(seq.side == Side::Right ? Mat(-seq.alpha * a + b) : Mat(seq.alpha * a - b));
  }
  out.shifted = true;
  return out;
}

MomentSequence reflect(const MomentSequence& seq) {
  MomentSequence out = seq;
  for (std::size_t j = 1; j < out.s.size(); j += 2) out.s[j] = -out.s[j];
  out.alpha = -seq.alpha;
  out.side = other(seq.side);
  return out;
}

Mat shifted_hankel(const MomentSequence& seq, int n) {
  Mat H = hankel_block(seq, n, 0), K = hankel_block(seq, n, 1);
  return seq.side == Side::Right ? Mat(-seq.alpha * H + K) : Mat(seq.alpha * H - K);
}

Mat shifted_schur_hat(const MomentSequence& seq, int n, const Tolerance& tol) {
  return schur_hat(shift_sequence(seq), n, tol);
}

StructuralKit::StructuralKit(MomentSequence seq) : seq_(std::move(seq)) {
  if (seq_.kappa() >= 1) shifted_ = shift_sequence(seq_).s;
}

Mat StructuralKit::T(int n) const {
  Eigen::Index q = seq_.q;
  Mat out = Mat::Zero(q * (n + 1), q * (n + 1));
  for (int j = 1; j <= n; ++j) out.block(q * j, q * (j - 1), q, q) = eye(q);
  return out;
}

Mat StructuralKit::v(int n) const {
  Eigen::Index q = seq_.q;
  Mat out = Mat::Zero(q * (n + 1), q);
  out.topRows(q) = eye(q);
  return out;
}

Mat StructuralKit::u(int n) const {
  Eigen::Index q = seq_.q;
  Mat out = Mat::Zero(q * (n + 1), q);
  if (n > 0) out.bottomRows(q * n) = y_stack(seq_, 0, n - 1);
  return out;
}

Mat StructuralKit::u_shift(int n) const {
  Eigen::Index q = seq_.q;
  if (n > int(shifted_.size())) throw PreconditionError("u_shift: index out of range");
  Mat out(q * (n + 1), q);
  out.topRows(q) = seq_.side == Side::Right ? seq_.s[0] : Mat(-seq_.s[0]);
  for (int j = 0; j < n; ++j) out.middleRows(q * (j + 1), q) = shifted_[std::size_t(j)];
  return out;
}

Mat StructuralKit::L(int n) const {
  Eigen::Index q = seq_.q;
  Mat out = Mat::Zero(q * (n + 1), q * n);
  out.bottomRows(q * n) = eye(q * n);
  return out;
}

Mat StructuralKit::Lhat(int n) const {
  Eigen::Index q = seq_.q;
  Mat out = Mat::Zero(q * (n + 1), q * n);
  out.topRows(q * n) = eye(q * n);
  return out;
}

Mat StructuralKit::V(int n) const {
  Eigen::Index q = seq_.q;
  Mat out = Mat::Zero(q * (n + 1), q * (n + 1));
  for (int j = 0; j <= n; ++j) out.block(q * j, q * j, q, q) = (j % 2 ? -1.0 : 1.0) * eye(q);
  return out;
}

Mat StructuralKit::S(int n) const {
  Eigen::Index q = seq_.q;
  Mat out = Mat::Zero(q * (n + 1), q * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= j; ++k) out.block(q * j, q * k, q, q) = moment(seq_, j - k);
  return out;
}

Mat StructuralKit::Shat(int n) const {
  Eigen::Index q = seq_.q;
  Mat sym = u_shift(n);
  Mat out = Mat::Zero(q * (n + 1), q * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= j; ++k) out.block(q * j, q * k, q, q) = sym.middleRows(q * (j - k), q);
  return out;
}

Mat StructuralKit::R(int n, cplx z) const {
  Eigen::Index q = seq_.q;
  Mat out = Mat::Zero(q * (n + 1), q * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= j; ++k) out.block(q * j, q * k, q, q) = std::pow(z, j - k) * eye(q);
  return out;
}

Mat StructuralKit::E(int n, cplx z) const {
  Eigen::Index q = seq_.q;
  Mat out(q * (n + 1), q);
  cplx p = 1.0;
  for (int j = 0; j <= n; ++j, p *= z) out.middleRows(q * j, q) = p * eye(q);
  return out;
}

Mat StructuralKit::E_row(int n, cplx z) const { return E(n, z).transpose(); }

const char* class_name(HankelClass c) {
  switch (c) {
    case HankelClass::PD: return "PD";
    case HankelClass::NND: return "NND";
    case HankelClass::NO: return "NO";
  }
  return "?";
}

const char* class_name(StieltjesClass c) {
  switch (c) {
    case StieltjesClass::PD: return "PD";
    case StieltjesClass::NNDExtendable: return "NND_EXTENDABLE";
    case StieltjesClass::NND: return "NND";
    case StieltjesClass::NO: return "NO";
  }
  return "?";
}

namespace {

// 2 = all PD, 1 = all PSD, 0 = otherwise
int worst_definiteness(const std::vector<Mat>& blocks, const Tolerance& tol) {
  int level = 2;
  for (const Mat& b : blocks) {
    Definiteness d = psd_class(b, tol);
    if (d == Definiteness::PD) continue;
    if (d == Definiteness::PSD) {
      level = std::min(level, 1);
      continue;
    }
    return 0;
  }
  return level;
}

bool q_criterion(const MomentSequence& seq, const Tolerance& tol) {
  int kappa = seq.kappa();
  std::vector<Mat> Q;
  MomentSequence sh;
  if (kappa >= 1) sh = shift_sequence(seq);
  for (int j = 0; j <= kappa; ++j)
    Q.push_back(j % 2 == 0 ? schur_hat(seq, j / 2, tol) : schur_hat(sh, j / 2, tol));
  for (const Mat& x : Q)
    if (!is_psd(x, tol)) return false;
  Eigen::Index q = seq.q;
  for (int j = 0; j + 1 <= kappa; ++j) {
    const Mat& a = Q[std::size_t(j)];
    const Mat& b = Q[std::size_t(j + 1)];
    Mat proj = eye(q) - a * pinv(a, tol);
    if ((b * proj).norm() > tol.psd * (1.0 + b.norm())) return false;
  }
  return true;
}

}  // namespace

SequenceClass classify(const MomentSequence& seq, const Tolerance& tol) {
  SequenceClass out;
  out.side = seq.side;
  int kappa = seq.kappa();
  std::vector<Mat> H, Hs;
  for (int n = 0; n <= floor_half(kappa); ++n) H.push_back(hankel_block(seq, n));
  for (int n = 0; n <= floor_half(kappa - 1); ++n) Hs.push_back(shifted_hankel(seq, n));

  int h = worst_definiteness(H, tol);
  out.hankel = h == 2 ? HankelClass::PD : h == 1 ? HankelClass::NND : HankelClass::NO;

  int st = std::min(h, worst_definiteness(Hs, tol));
  if (st == 2)
    out.stieltjes = StieltjesClass::PD;
  else if (st == 1)
    out.stieltjes = q_criterion(seq, tol) ? StieltjesClass::NNDExtendable : StieltjesClass::NND;
  else
    out.stieltjes = StieltjesClass::NO;
  return out;
}

void require_stieltjes_pd(const MomentSequence& seq, const char* op, const Tolerance& tol) {
  if (!is_stieltjes_pd(seq, tol))
    throw PreconditionError(std::string(op) + ": sequence is not " + side_name(seq.side) +
                            "-sided Stieltjes positive definite");
}

std::pair<Mat, Mat> potapov_defect(const MomentSequence& seq, const Mat& S_value, cplx z) {
  if (std::abs(z.imag()) == 0.0) throw PreconditionError("potapov_defect: z must be non-real");
  if (S_value.rows() != seq.q || S_value.cols() != seq.q)
    throw PreconditionError("potapov_defect: value has the wrong size");
  StructuralKit kit(seq);
  int m = seq.kappa();
  Eigen::Index q = seq.q;
  cplx dz = z - std::conj(z);

  auto assemble = [&](const Mat& H, const Mat& off, const Mat& f) {
    Eigen::Index r = H.rows();
    Mat F(r + q, r + q);
    F.topLeftCorner(r, r) = H;
    F.topRightCorner(r, q) = off;
    F.bottomLeftCorner(q, r) = off.adjoint();
    F.bottomRightCorner(q, q) = (f - f.adjoint()) / dz;
    return F;
  };

  int n = floor_half(m);
  Mat first = assemble(hankel_block(seq, n), kit.R(n, z) * (kit.v(n) * S_value + kit.u(n)), S_value);

  cplx lin = seq.side == Side::Right ? z - seq.alpha : seq.alpha - z;
  Mat f = lin * S_value;
  int k = floor_half(m - 1);
  Mat second;
  if (k < 0) {
    second = (f - f.adjoint()) / dz;
  } else {
    second = assemble(shifted_hankel(seq, k), kit.R(k, z) * (kit.v(k) * f + kit.u_shift(k)), f);
  }
  return {first, second};
}

}  // namespace halfline
