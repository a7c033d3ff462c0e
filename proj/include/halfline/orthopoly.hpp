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

#include <halfline/params.hpp>
#include <halfline/polynomial.hpp>

namespace halfline {

using PolySeq = std::vector<MatrixPolynomial>;

// P: monic first kind, Psecond: second kind, Pshift: monic system of the
// shifted sequence, Phat: the companion family built from Pshift and s_0
struct StieltjesQuadruple {
  PolySeq P;
  PolySeq Psecond;
  PolySeq Pshift;
  PolySeq Phat;
  double alpha = 0.0;
  Side side = Side::Right;
  // largest condition number of the Hankel blocks behind the quadruple
  double conditioning = 1.0;
};

// roundoff allowance for identities checked on data with this conditioning
double identity_slack(double conditioning, const Tolerance& tol);

// explicit coefficient rows (−z_{n,2n−1}H_{n−1}^{-1}, I)
PolySeq monic_orthogonal_system(const MomentSequence& seq, const Tolerance& tol = {});
// three-term recursion driven by the Favard pair
PolySeq monic_system_recursive(const MomentSequence& seq, const Tolerance& tol = {});
PolySeq second_kind_system(const MomentSequence& seq, const Tolerance& tol = {});
PolySeq second_kind_recursive(const MomentSequence& seq, const Tolerance& tol = {});

StieltjesQuadruple stieltjes_quadruple(const MomentSequence& seq, const Tolerance& tol = {});

struct AlphaValues {
  std::vector<Mat> P;
  std::vector<Mat> Psecond;
  std::vector<Mat> Pshift;
  std::vector<Mat> Phat;
};

struct AlphaEvaluation {
  AlphaValues direct;
  AlphaValues closed;
  // Q_0..Q_κ rebuilt from the values at α
  std::vector<Mat> Q_from_values;
  // P_n(α) as a product of Q-parameter quotients
  std::vector<Mat> P_from_Q;
  double max_disagreement = 0.0;
};

// direct evaluation at α next to the closed product forms in L and M;
// throws InconsistencyError when they disagree
AlphaEvaluation eval_quadruple_at_alpha(const StieltjesQuadruple& quad, const DSParam& ds,
                                        const StieltjesParam& qp, const Tolerance& tol = {});

enum class ZeroKind { Monic, General };

// raw roots with multiplicity, sorted by real part
std::vector<cplx> det_zeros(const MatrixPolynomial& P, ZeroKind kind);
// zeros with |Im| < 1e-7·(1+|Re|) moved onto the real axis
std::vector<cplx> project_real(std::vector<cplx> zeros);

}  // namespace halfline
