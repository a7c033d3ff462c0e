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

#include <utility>
#include <vector>

#include <halfline/linalg.hpp>

namespace halfline {

struct MomentSequence {
  Eigen::Index q = 0;
  double alpha = 0.0;
  Side side = Side::Right;
  std::vector<Mat> s;
  // set on sequences produced by shift_sequence
  bool shifted = false;

  int kappa() const { return int(s.size()) - 1; }
  // s_0..s_m
  MomentSequence truncated(int m) const;
};

// validates shapes and finiteness
MomentSequence make_sequence(std::vector<Mat> moments, double alpha, Side side);

// block column (s_l; ...; s_m) and block row (s_l, ..., s_m)
Mat y_stack(const MomentSequence& seq, int l, int m);
Mat z_stack(const MomentSequence& seq, int l, int m);

// (s_{j+k+offset})_{j,k=0..n}; offset 0, 1, 2 give H_n, K_n and the second shifted Hankel block
Mat hankel_block(const MomentSequence& seq, int n, int offset = 0);
// s_{2n} − z_{n,2n−1} H_{n−1}⁺ y_{n,2n−1}
Mat schur_hat(const MomentSequence& seq, int n, const Tolerance& tol = {});

struct HankelPack {
  MomentSequence seq;
  std::vector<Mat> H;
  std::vector<Mat> K;
  std::vector<Mat> Ktilde;
  std::vector<Mat> Hhat;

  Mat y(int l, int m) const { return y_stack(seq, l, m); }
  Mat z(int l, int m) const { return z_stack(seq, l, m); }
};

HankelPack build_hankel_pack(const MomentSequence& seq, const Tolerance& tol = {});

MomentSequence shift_sequence(const MomentSequence& seq);
MomentSequence reflect(const MomentSequence& seq);

// Hankel block of the shifted sequence, i.e. ∓αH_n ± K_n
Mat shifted_hankel(const MomentSequence& seq, int n);
Mat shifted_schur_hat(const MomentSequence& seq, int n, const Tolerance& tol = {});

class StructuralKit {
 public:
  explicit StructuralKit(MomentSequence seq);

  const MomentSequence& sequence() const { return seq_; }

  Mat T(int n) const;
  Mat v(int n) const;
  Mat u(int n) const;
  // u_{α▷n} on the right side, u_{α◁n} on the left side
  Mat u_shift(int n) const;
  Mat L(int n) const;
  Mat Lhat(int n) const;
  Mat V(int n) const;
  Mat S(int n) const;
  Mat Shat(int n) const;
  Mat R(int n, cplx z) const;
  Mat E(int n, cplx z) const;
  // the block row (I, zI, ..., z^n I) = E_n(z̄)*
  Mat E_row(int n, cplx z) const;

 private:
  MomentSequence seq_;
  std::vector<Mat> shifted_;
};

enum class HankelClass { PD, NND, NO };
enum class StieltjesClass { PD, NNDExtendable, NND, NO };

const char* class_name(HankelClass c);
const char* class_name(StieltjesClass c);

struct SequenceClass {
  HankelClass hankel = HankelClass::NO;
  StieltjesClass stieltjes = StieltjesClass::NO;
  Side side = Side::Right;
};

SequenceClass classify(const MomentSequence& seq, const Tolerance& tol = {});
inline bool is_stieltjes_pd(const MomentSequence& seq, const Tolerance& tol = {}) {
  return classify(seq, tol).stieltjes == StieltjesClass::PD;
}
void require_stieltjes_pd(const MomentSequence& seq, const char* op, const Tolerance& tol = {});

// the two Potapov fundamental matrices for the candidate value S(z); the
// second one belongs to the shifted sequence
std::pair<Mat, Mat> potapov_defect(const MomentSequence& seq, const Mat& S_value, cplx z);

}  // namespace halfline
