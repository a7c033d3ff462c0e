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

#include <halfline/orthopoly.hpp>

namespace halfline {

// A, C indexed 0..⟦κ⟧ and B, D indexed 0..⟦κ+1⟧
struct DyukarevQuadruple {
  PolySeq A;
  PolySeq B;
  PolySeq C;
  PolySeq D;
  double alpha = 0.0;
  Side side = Side::Right;
};

struct ResolventU {
  int m = 0;
  double alpha = 0.0;
  Side side = Side::Right;
  // [[A_⟦m⟧, B_⟦m+1⟧], [C_⟦m⟧, D_⟦m+1⟧]]
  MatrixPolynomial U;
  Eigen::Index q() const { return U.rows() / 2; }
  Mat operator()(cplx z) const { return U(z); }
  // the diagonally conjugated resolvent, undefined at z = α
  Mat tilde(cplx z) const;
};

struct FactorChain {
  std::vector<MatrixPolynomial> W;
  MatrixPolynomial product() const;
};

// coefficients in powers of (z − α): the top one and the lowest nonvanishing one
// (the constant term for A, B, D and the linear term for C)
struct LeadingTerm {
  int degree = -1;
  Mat leading;
  Mat lowest;
};

struct LeadingTerms {
  LeadingTerm A;
  LeadingTerm B;
  LeadingTerm C;
  LeadingTerm D;
};

struct JInnerReport {
  // most negative eigenvalue of J̃ − U*J̃U over the samples in the upper half plane
  double min_eigenvalue = 0.0;
  // largest ‖J̃ − U*J̃U‖ over real samples
  double max_real_defect = 0.0;
  bool contractive = true;
};

DyukarevQuadruple dyukarev_quadruple(const MomentSequence& seq, const Tolerance& tol = {});
DyukarevQuadruple dyukarev_from_stieltjes(const StieltjesQuadruple& quad);
// max relative coefficient distance between the two constructions, throws above identity_tol
double check_quadruple_routes(const DyukarevQuadruple& def, const DyukarevQuadruple& alt,
                              double slack);

ResolventU assemble_u(const DyukarevQuadruple& dq, int m);
ResolventU resolvent_u(const MomentSequence& seq, int m, const Tolerance& tol = {});
// U^{-1}(z) read off the first kind, second kind and shifted families
Mat resolvent_inverse(const StieltjesQuadruple& quad, int m, cplx z);

FactorChain factorize_u(const MomentSequence& seq, int m, const Tolerance& tol = {});
FactorChain factor_chain(const DSParam& ds, int m);
LeadingTerms leading_terms(const DSParam& ds, int m);

Mat schur_frame(Side side, Eigen::Index q);
// E*J̃E for the frame of this side: j_qq on the right, −j_qq on the left
Mat frame_signature(Side side, Eigen::Index q);
MatrixPolynomial sigma(const ResolventU& U);
// S = (Σ11F + Σ12)(Σ21F + Σ22)^{-1} for a constant Schur parameter
Mat sigma_solve(const MatrixPolynomial& Sigma, const Mat& F, cplx z);

JInnerReport j_inner_check(const MatrixPolynomial& U, const std::vector<cplx>& samples,
                           const Tolerance& tol = {});

}  // namespace halfline
