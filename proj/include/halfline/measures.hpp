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

#include <halfline/solutions.hpp>

namespace halfline {

struct MolecularMeasure {
  std::vector<double> atoms;
  std::vector<Mat> masses;
  Side side = Side::Right;
  double alpha = 0.0;
  Eigen::Index q() const { return masses.empty() ? 0 : masses.front().rows(); }
};

// validates PSD masses and atoms on the half-line of `side` (up to tol)
MolecularMeasure make_measure(std::vector<double> atoms, std::vector<Mat> masses, Side side,
                              double alpha, const Tolerance& tol = {});

// Σ M_k / (x_k − z); an empty measure gives the zero matrix of size q
Mat stieltjes_transform(const MolecularMeasure& mu, cplx z, Eigen::Index q = 0);
std::vector<Mat> measure_moments(const MolecularMeasure& mu, int up_to);

// the reflected measure t ↦ −t, living on the other half-line around −α
MolecularMeasure mirror(const MolecularMeasure& mu);

MolecularMeasure recover_min(const MomentSequence& seq, int m, const Tolerance& tol = {});
MolecularMeasure recover_max(const MomentSequence& seq, int m, const Tolerance& tol = {});

struct MomentFit {
  // max relative error over s_0..s_{m−1}
  double max_rel_error = 0.0;
  // λ_min of σ(s_m − s_m^{(μ)}) relative to max(1, ‖s_m‖), where σ = 1 on the right
  // and σ = (−1)^m on the left (the left problem asks for ≥ when m is odd)
  double order_slack = 0.0;
};

// how well μ reproduces s_0..s_{m−1} and how s_m^{(μ)} compares with s_m
MomentFit moment_fit(const MolecularMeasure& mu, const MomentSequence& seq, int m);

struct HausdorffReport {
  double alpha = 0.0;
  double beta = 0.0;
  int kappa = 0;
  bool odd = false;
  bool solvable = false;
  // odd case: the two shifted blocks at n = (κ−1)/2
  bool right_block_psd = false;
  bool left_block_psd = false;
  // even case: H_n and the interval block
  bool hankel_psd = false;
  bool interval_block_psd = false;
  // odd case: the one-sided problems on [α, ∞) with ≤ and on (−∞, β] with ≥
  bool right_problem = false;
  bool left_problem = false;
  bool decomposition_holds = true;
};

HausdorffReport hausdorff_solvable(const MomentSequence& seq, double alpha, double beta,
                                   const Tolerance& tol = {});

}  // namespace halfline
