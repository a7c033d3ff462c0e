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

#include <functional>
#include <optional>

#include <halfline/resolvent.hpp>

namespace halfline {

using Evaluator = std::function<Mat(cplx)>;

enum class PairKind { Constant, SchurConstant };

class StieltjesPair {
 public:
  // rank [Φ; Ψ] = q and Ψ*Φ Hermitian, PSD on the right side and NSD on the left
  static StieltjesPair constant(const Mat& Phi, const Mat& Psi, Side side, const Tolerance& tol = {});
  // F unitary, Im F PSD on the right side and NSD on the left
  static StieltjesPair schur(const Mat& F, Side side, const Tolerance& tol = {});

  PairKind kind() const { return kind_; }
  Side side() const { return side_; }
  const Mat& F() const { return F_; }
  // (φ, ψ); a Schur parameter is taken through the Cayley-type map of its side
  const Mat& phi() const { return phi_; }
  const Mat& psi() const { return psi_; }

 private:
  PairKind kind_ = PairKind::Constant;
  Side side_ = Side::Right;
  Mat F_, phi_, psi_;
};

// z ∉ [α, ∞) on the right, z ∉ (−∞, α] on the left
bool off_cut(Side side, double alpha, cplx z);

Mat lft_solve(const ResolventU& U, const StieltjesPair& pair, cplx z);

enum class ExtremalRoute { Quadruple, Pencil, Quotient };
const char* route_name(ExtremalRoute r);

class Extremals {
 public:
  Extremals(const MomentSequence& seq, int m, const Tolerance& tol = {});
  Mat min(cplx z, ExtremalRoute r = ExtremalRoute::Quadruple) const;
  Mat max(cplx z, ExtremalRoute r = ExtremalRoute::Quadruple) const;
  Evaluator min_evaluator(ExtremalRoute r = ExtremalRoute::Quadruple) const;
  Evaluator max_evaluator(ExtremalRoute r = ExtremalRoute::Quadruple) const;
  // largest relative disagreement between the three routes at z
  double route_spread(cplx z) const;

  const MomentSequence& sequence() const { return seq_; }
  const ResolventU& resolvent() const { return U_; }
  int order() const { return m_; }

 private:
  void require_point(cplx z) const;
  Mat bd(cplx z) const;
  Mat ac(cplx z) const;
  Mat pencil_y(cplx z) const;
  Mat pencil_v(cplx z) const;
  Mat quotient_first(cplx z) const;
  Mat quotient_shifted(cplx z) const;

  MomentSequence seq_;
  int m_;
  ResolventU U_;
  StieltjesQuadruple quad_;
  Mat H_, Hsh_, y_, X_, THT_;
};

Extremals extremal(const MomentSequence& seq, int m, const Tolerance& tol = {});

struct WeylInterval {
  double x = 0.0;
  MatrixInterval interval;
};

WeylInterval weyl_interval(const Extremals& ext, double x, const Tolerance& tol = {});

struct IntervalPoint {
  Mat T;
  // (W, I) on the right, (I, V) on the left; present for positive definite K
  std::optional<StieltjesPair> pair;
};

IntervalPoint interval_point(const Extremals& ext, double x, const Mat& K, const Tolerance& tol = {});

// the polynomial closed form of (S_max − S_min)^{-1}
Mat difference_inverse(const MomentSequence& seq, int m, cplx z);

// z ↦ −S(−z)
Evaluator reflect_solution(Evaluator S);

}  // namespace halfline
