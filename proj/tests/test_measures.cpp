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

#include <gtest/gtest.h>

#include <halfline/measures.hpp>

#include "fixtures.hpp"

namespace halfline {
namespace {

using testing::F1;
using testing::F2;
using testing::F3;
using testing::random_cases;
using testing::scalar;
using testing::scalar_sequence;
using testing::value;

void expect_measure(const MolecularMeasure& mu, std::vector<double> atoms, std::vector<double> masses) {
  ASSERT_EQ(mu.atoms.size(), atoms.size());
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    EXPECT_NEAR(mu.atoms[j], atoms[j], 1e-9) << "atom " << j;
    EXPECT_NEAR(value(mu.masses[j]), masses[j], 1e-9) << "mass " << j;
  }
}

TEST(Measures, TransformExamples) {
  const cplx z(0.3, 0.6);
  MolecularMeasure d1 = make_measure({1.0}, {scalar(1)}, Side::Right, 0.0);
  EXPECT_LT(std::abs(stieltjes_transform(d1, z)(0, 0) - 1.0 / (1.0 - z)), 1e-15);
  MolecularMeasure two = make_measure({0.0, 2.0}, {scalar(0.5), scalar(0.5)}, Side::Right, 0.0);
  EXPECT_LT(std::abs(stieltjes_transform(two, z)(0, 0) - (1.0 - z) / (z * (z - 2.0))), 1e-15);
  MolecularMeasure empty;
  EXPECT_EQ(stieltjes_transform(empty, z, 2), Mat::Zero(2, 2));
}

TEST(Measures, MomentExamples) {
  auto m1 = measure_moments(make_measure({1.0}, {scalar(1)}, Side::Right, 0.0), 3);
  for (const Mat& m : m1) EXPECT_EQ(value(m), 1.0);
  auto m2 = measure_moments(make_measure({0.0, 2.0}, {scalar(0.5), scalar(0.5)}, Side::Right, 0.0), 2);
  EXPECT_EQ(value(m2[0]), 1.0);
  EXPECT_EQ(value(m2[1]), 1.0);
  EXPECT_EQ(value(m2[2]), 2.0);
  auto m3 = measure_moments(make_measure({0.0}, {scalar(1)}, Side::Right, 0.0), 1);
  EXPECT_EQ(value(m3[1]), 0.0);
}

TEST(Measures, MeasurePreconditions) {
  EXPECT_THROW(make_measure({1.0}, {scalar(-1)}, Side::Right, 0.0), PreconditionError);
  EXPECT_THROW(make_measure({-1.0}, {scalar(1)}, Side::Right, 0.0), PreconditionError);
  EXPECT_THROW(make_measure({1.0}, {scalar(1)}, Side::Left, 0.0), PreconditionError);
  EXPECT_THROW(make_measure({1.0, 2.0}, {scalar(1)}, Side::Right, 0.0), PreconditionError);
}

TEST(Measures, RecoveryExamples) {
  expect_measure(recover_min(F1(), 1), {1}, {1});
  expect_measure(recover_min(F2(), 2), {1}, {1});
  expect_measure(recover_min(scalar_sequence({1, 3}, 2.0), 1), {3}, {1});
  expect_measure(recover_max(F1(), 1), {0}, {1});
  expect_measure(recover_max(F2(), 2), {0, 2}, {0.5, 0.5});
  expect_measure(recover_max(scalar_sequence({1, 2}, 1.0), 1), {1}, {1});
  expect_measure(recover_min(F3(), 1), {0}, {1});
  expect_measure(recover_max(F3(), 1), {-1}, {1});
  EXPECT_THROW(recover_min(scalar_sequence({1, -1}), 1), PreconditionError);
  EXPECT_THROW(recover_max(F1(), 2), PreconditionError);
}

TEST(Measures, RecoveredMeasuresReproduceMoments) {
  std::mt19937_64 gen(61);
  for (const auto& c : random_cases(40, 4)) {
    for (int m = 1; m <= c.kappa; ++m) {
      Extremals e(c.seq, m);
      for (bool upper : {false, true}) {
        MolecularMeasure mu = upper ? recover_max(c.seq, m) : recover_min(c.seq, m);
        EXPECT_EQ(mu.side, c.side);
        for (std::size_t j = 0; j < mu.atoms.size(); ++j) {
          double gap = c.side == Side::Right ? mu.atoms[j] - c.alpha : c.alpha - mu.atoms[j];
          EXPECT_GE(gap, -1e-9);
          EXPECT_TRUE(is_psd(mu.masses[j]));
        }
        MomentFit fit = moment_fit(mu, c.seq, m);
        EXPECT_LE(fit.max_rel_error, 1e-8);
        EXPECT_GE(fit.order_slack, -1e-8);
        cplx z = testing::upper_point(c.alpha, gen);
        EXPECT_LT(rel_diff(stieltjes_transform(mu, z), upper ? e.max(z) : e.min(z)), 1e-8);
      }
    }
  }
}

TEST(Measures, LeftOrderingSign) {
  // on the left the order condition flips with the parity of m
  MolecularMeasure mu = recover_min(F3(), 1);
  MomentFit fit = moment_fit(mu, F3(), 1);
  EXPECT_NEAR(fit.max_rel_error, 0.0, 1e-15);
  EXPECT_NEAR(fit.order_slack, 1.0, 1e-12);
}

TEST(Measures, MirrorDuality) {
  for (const auto& c : random_cases(20)) {
    MomentSequence t = reflect(c.seq);
    MolecularMeasure a = mirror(recover_min(c.seq, c.kappa)), b = recover_max(t, c.kappa);
    ASSERT_EQ(a.atoms.size(), b.atoms.size());
    for (std::size_t j = 0; j < a.atoms.size(); ++j) {
      EXPECT_NEAR(a.atoms[j], b.atoms[j], 1e-8 * (1.0 + std::abs(b.atoms[j])));
      EXPECT_LT(rel_diff(a.masses[j], b.masses[j]), 1e-8);
    }
  }
}

TEST(Measures, HausdorffExamples) {
  HausdorffReport a = hausdorff_solvable(scalar_sequence({1, 0.5}), 0.0, 1.0);
  EXPECT_TRUE(a.odd);
  EXPECT_TRUE(a.solvable);
  EXPECT_TRUE(a.decomposition_holds);
  HausdorffReport b = hausdorff_solvable(scalar_sequence({1, 2}), 0.0, 1.0);
  EXPECT_FALSE(b.solvable);
  EXPECT_FALSE(b.left_block_psd);
  HausdorffReport c = hausdorff_solvable(scalar_sequence({1}), 0.0, 1.0);
  EXPECT_FALSE(c.odd);
  EXPECT_TRUE(c.solvable);
  EXPECT_THROW(hausdorff_solvable(scalar_sequence({1}), 1.0, 0.0), PreconditionError);
}

TEST(Measures, HausdorffDecomposition) {
  std::mt19937_64 gen(62);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  int yes = 0, no = 0;
  for (int j = 0; j < 40; ++j) {
    Eigen::Index q = 1 + j % 3;
    int kappa = 1 + 2 * (j % 3);
    MomentSequence s = random_sequence(q, kappa, 0.0, Side::Right, 500 + std::uint64_t(j));
    HausdorffReport r = hausdorff_solvable(s, 0.0, 0.5 + 3.0 * U(gen));
    EXPECT_TRUE(r.decomposition_holds);
    (r.solvable ? yes : no)++;
  }
  EXPECT_GT(yes, 0);
  EXPECT_GT(no, 0);
}

}  // namespace
}  // namespace halfline
