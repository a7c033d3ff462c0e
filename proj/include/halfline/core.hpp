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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace halfline {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

enum class Side { Right, Left };

inline const char* side_name(Side s) { return s == Side::Right ? "right" : "left"; }
inline Side other(Side s) { return s == Side::Right ? Side::Left : Side::Right; }

// ⟦k⟧, rounding toward −∞ so that ⟦−1⟧ = −1
inline int floor_half(int k) { return k >= 0 ? k / 2 : -((1 - k) / 2); }

struct Tolerance {
  double herm = 1e-10;
  double psd = 1e-10;
  double pinv_cutoff = 1e-12;
  double identity = 1e-9;
};

// a documented precondition of an operation does not hold for the input
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// two routes that must agree did not, or a guaranteed identity failed
class InconsistencyError : public std::runtime_error {
 public:
  explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace halfline
