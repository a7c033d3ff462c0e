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

#include <random>
#include <vector>

#include <halfline/measures.hpp>

namespace halfline::testing {

inline Mat scalar(cplx x) {
  Mat m(1, 1);
  m(0, 0) = x;
  return m;
}

inline MomentSequence scalar_sequence(std::vector<double> s, double alpha = 0.0, Side side = Side::Right) {
  std::vector<Mat> ms;
  for (double x : s) ms.push_back(scalar(x));
  return make_sequence(std::move(ms), alpha, side);
}

inline MomentSequence F1() { return scalar_sequence({1, 1}); }
inline MomentSequence F2() { return scalar_sequence({1, 1, 2}); }
inline MomentSequence F3() { return scalar_sequence({1, -1}, 0.0, Side::Left); }

inline double value(const Mat& m) { return m(0, 0).real(); }

struct RandomCase {
  Eigen::Index q;
  int kappa;
  double alpha;
  Side side;
  std::uint64_t seed;
  MomentSequence seq;
};

// the desk-scale fixture range: q in 1..4, kappa in 1..5, alpha in [−1, 1], both sides
inline std::vector<RandomCase> random_cases(int count, std::uint64_t salt = 0) {
  std::vector<RandomCase> out;
  for (int j = 0; j < count; ++j) {
    RandomCase c;
    c.q = 1 + j % 4;
    c.kappa = 1 + (j / 4) % 5;
    c.alpha = -1.0 + 0.5 * ((j * 7 + int(salt)) % 5);
    c.side = j % 2 ? Side::Left : Side::Right;
    c.seed = std::uint64_t(j) + 1000 * salt;
    c.seq = random_sequence(c.q, c.kappa, c.alpha, c.side, c.seed);
    out.push_back(std::move(c));
  }
  return out;
}

inline Mat random_matrix(Eigen::Index r, Eigen::Index c, std::mt19937_64& gen) {
  std::normal_distribution<double> N;
  Mat m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = cplx(N(gen), N(gen));
  return m;
}

inline cplx upper_point(double alpha, std::mt19937_64& gen) {
  std::normal_distribution<double> N;
  return {alpha + N(gen), std::abs(N(gen)) + 0.1};
}

// a real point off the half-line of `side`
inline double off_point(double alpha, Side side, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> U(0.2, 2.0);
  return side == Side::Right ? alpha - U(gen) : alpha + U(gen);
}

// block companion when the leading coefficient is invertible, the scalar determinant route otherwise
inline std::vector<cplx> zeros_of(const MatrixPolynomial& p) {
  try {
    return det_zeros(p, ZeroKind::Monic);
  } catch (const PreconditionError&) {
    return det_zeros(p, ZeroKind::General);
  }
}

}  // namespace halfline::testing
