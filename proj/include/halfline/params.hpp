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

#include <cstdint>
#include <vector>

#include <halfline/moments.hpp>

namespace halfline {

struct StieltjesParam {
  std::vector<Mat> Q;
  double alpha = 0.0;
  Side side = Side::Right;
};

// C holds C_1, C_2, ... (C[0] is C_1); D holds D_0, D_1, ...
struct CanonicalHankelParam {
  std::vector<Mat> C;
  std::vector<Mat> D;
};

struct FavardPair {
  std::vector<Mat> A;
  std::vector<Mat> B;
};

struct DSParam {
  std::vector<Mat> L;
  std::vector<Mat> M;
  double alpha = 0.0;
  Side side = Side::Right;

  int kappa() const { return int(L.size() + M.size()) - 1; }
};

// Favard pairs of a sequence and of its shifted sequence
struct FavardCross {
  FavardPair seq;
  FavardPair shifted;
};

StieltjesParam stieltjes_param(const MomentSequence& seq, const Tolerance& tol = {});
MomentSequence seq_from_stieltjes_param(const StieltjesParam& p, const Tolerance& tol = {});

CanonicalHankelParam canonical_hankel_param(const MomentSequence& seq, const Tolerance& tol = {});
// the Hankel parametrization carries no base point; alpha and side are attached to the result
MomentSequence seq_from_canonical(const CanonicalHankelParam& p, double alpha = 0.0,
                                  Side side = Side::Right, const Tolerance& tol = {});

FavardPair favard_pair(const MomentSequence& seq, const Tolerance& tol = {});

DSParam ds_param(const MomentSequence& seq, const Tolerance& tol = {});
DSParam ds_from_q(const StieltjesParam& p, const Tolerance& tol = {});
StieltjesParam q_from_ds(const DSParam& d, const Tolerance& tol = {});
MomentSequence seq_from_ds(const DSParam& d, const Tolerance& tol = {});

FavardCross favard_from_ds(const DSParam& d, const Tolerance& tol = {});
FavardCross favard_from_q(const StieltjesParam& p, const Tolerance& tol = {});

// seeded DS parameters with L_n, M_n = G*G + 0.1·I, G complex Gaussian
DSParam random_ds(Eigen::Index q, int kappa, double alpha, Side side, std::uint64_t seed);
inline MomentSequence random_sequence(Eigen::Index q, int kappa, double alpha, Side side,
                                      std::uint64_t seed) {
  return seq_from_ds(random_ds(q, kappa, alpha, side, seed));
}

}  // namespace halfline
