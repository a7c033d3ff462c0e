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

#include <halfline/params.hpp>

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


void expect_values(const std::vector<Mat>& ms, std::vector<double> want) {
  ASSERT_EQ(ms.size(), want.size());
  for (std::size_t j = 0; j < want.size(); ++j) EXPECT_NEAR(value(ms[j]), want[j], 1e-12) << "index " << j;
}

double max_moment_error(const MomentSequence& a, const MomentSequence& b) {
  EXPECT_EQ(a.kappa(), b.kappa());
  double e = 0.0;
  for (std::size_t j = 0; j < b.s.size(); ++j) e = std::max(e, rel_diff(a.s[j], b.s[j]));
  return e;
}

TEST(Params, StieltjesParameterExamples) {
  expect_values(stieltjes_param(F1()).Q, {1, 1});
  expect_values(stieltjes_param(F2()).Q, {1, 1, 1});
  expect_values(stieltjes_param(F3()).Q, {1, 1});
  expect_values(seq_from_stieltjes_param({{scalar(1), scalar(1)}, 0.0, Side::Right}).s, {1, 1});
  expect_values(seq_from_stieltjes_param({{scalar(1), scalar(1), scalar(1)}, 0.0, Side::Right}).s, {1, 1, 2});
  expect_values(seq_from_stieltjes_param({{scalar(1), scalar(1)}, 0.0, Side::Left}).s, {1, -1});
}

TEST(Params, CanonicalHankelExamples) {
  CanonicalHankelParam p = canonical_hankel_param(F2());
  expect_values(p.D, {1, 1});
  expect_values(p.C, {1});
  expect_values(canonical_hankel_param(scalar_sequence({5})).D, {5});
  MomentSequence seq = random_sequence(2, 4, 0.0, Side::Right, 7);
  EXPECT_LT(max_moment_error(seq_from_canonical(canonical_hankel_param(seq)), seq), 1e-12);
}

TEST(Params, FavardExamples) {
  FavardPair f = favard_pair(F2());
  expect_values(f.A, {1});
  expect_values(f.B, {1, 1});
  FavardPair g = favard_pair(scalar_sequence({2, 0}));
  expect_values(g.A, {0});
  expect_values(g.B, {2});
  // D_n of the Hankel parametrization is the product of the B_j
  for (const auto& c : random_cases(12)) {
    FavardPair fp = favard_pair(c.seq);
    CanonicalHankelParam hp = canonical_hankel_param(c.seq);
    Mat prod = eye(c.q);
    for (std::size_t n = 0; n < fp.B.size() && n < hp.D.size(); ++n) {
      prod = prod * fp.B[n];
      EXPECT_LT(rel_diff(prod, hp.D[n]), 1e-9);
    }
  }
}

TEST(Params, DSExamples) {
  DSParam a = ds_param(F1());
  expect_values(a.L, {1});
  expect_values(a.M, {1});
  DSParam b = ds_param(F2());
  expect_values(b.L, {1});
  expect_values(b.M, {1, 1});
  DSParam c = ds_param(scalar_sequence({1, 2}, 1.0));
  expect_values(c.M, {1});
  expect_values(c.L, {1});
  DSParam d = ds_from_q({{scalar(1), scalar(1), scalar(1)}, 0.0, Side::Right});
  expect_values(d.L, {1});
  expect_values(d.M, {1, 1});
  DSParam e = ds_from_q({{scalar(4), scalar(2)}, 0.0, Side::Right});
  expect_values(e.M, {0.25});
  expect_values(e.L, {8});
  expect_values(seq_from_ds({{scalar(1)}, {scalar(1), scalar(1)}, 0.0, Side::Right}).s, {1, 1, 2});
  expect_values(seq_from_ds({{}, {scalar(1)}, 0.0, Side::Right}).s, {1});
}

TEST(Params, GeneratorGivesPositiveDefinite) {
  EXPECT_EQ(classify(random_sequence(2, 5, 0.0, Side::Right, 3)).stieltjes, StieltjesClass::PD);
  for (const auto& c : random_cases(40)) EXPECT_EQ(classify(c.seq).stieltjes, StieltjesClass::PD);
  MomentSequence a = random_sequence(3, 4, 0.5, Side::Left, 99), b = random_sequence(3, 4, 0.5, Side::Left, 99);
  for (std::size_t j = 0; j < a.s.size(); ++j) EXPECT_EQ(a.s[j], b.s[j]);
}

TEST(Params, RoundTrips) {
  for (const auto& c : random_cases(50, 1)) {
    StieltjesParam qp = stieltjes_param(c.seq);
    EXPECT_LT(max_moment_error(seq_from_stieltjes_param(qp), c.seq), 1e-9);
    DSParam ds = ds_param(c.seq);
    EXPECT_LT(max_moment_error(seq_from_ds(ds), c.seq), 1e-9);
    EXPECT_LT(max_moment_error(seq_from_canonical(canonical_hankel_param(c.seq), c.alpha, c.side), c.seq), 1e-9);
    StieltjesParam back = q_from_ds(ds_from_q(qp));
    ASSERT_EQ(back.Q.size(), qp.Q.size());
    for (std::size_t j = 0; j < qp.Q.size(); ++j) EXPECT_LT(rel_diff(back.Q[j], qp.Q[j]), 1e-9);
    DSParam ds2 = ds_from_q(qp);
    for (std::size_t j = 0; j < ds.L.size(); ++j) EXPECT_LT(rel_diff(ds2.L[j], ds.L[j]), 1e-9);
    for (std::size_t j = 0; j < ds.M.size(); ++j) EXPECT_LT(rel_diff(ds2.M[j], ds.M[j]), 1e-9);
  }
}

TEST(Params, DSDuality) {
  for (const auto& c : random_cases(20)) {
    DSParam a = ds_param(c.seq), b = ds_param(reflect(c.seq));
    for (std::size_t j = 0; j < a.L.size(); ++j) EXPECT_LT(rel_diff(b.L[j], a.L[j]), 1e-10);
    for (std::size_t j = 0; j < a.M.size(); ++j) EXPECT_LT(rel_diff(b.M[j], a.M[j]), 1e-10);
  }
}

TEST(Params, FavardCrossMaps) {
  expect_values(favard_from_ds(ds_param(F1())).seq.A, {1});
  expect_values(favard_from_ds(ds_param(F3())).seq.A, {-1});
  expect_values(favard_from_q(stieltjes_param(F2())).seq.A, {1});
  for (const auto& c : random_cases(30)) {
    FavardPair direct = favard_pair(c.seq), shifted = favard_pair(shift_sequence(c.seq));
    for (const FavardCross& x : {favard_from_ds(ds_param(c.seq)), favard_from_q(stieltjes_param(c.seq))}) {
      ASSERT_EQ(x.seq.A.size(), direct.A.size());
      ASSERT_EQ(x.seq.B.size(), direct.B.size());
      for (std::size_t j = 0; j < direct.A.size(); ++j) EXPECT_LT(rel_diff(x.seq.A[j], direct.A[j]), 1e-8);
      for (std::size_t j = 0; j < direct.B.size(); ++j) EXPECT_LT(rel_diff(x.seq.B[j], direct.B[j]), 1e-8);
      ASSERT_EQ(x.shifted.A.size(), shifted.A.size());
      for (std::size_t j = 0; j < shifted.A.size(); ++j) EXPECT_LT(rel_diff(x.shifted.A[j], shifted.A[j]), 1e-8);
      for (std::size_t j = 0; j < shifted.B.size(); ++j) EXPECT_LT(rel_diff(x.shifted.B[j], shifted.B[j]), 1e-8);
    }
  }
}

TEST(Params, ParametersArePositiveDefinite) {
  for (const auto& c : random_cases(30)) {
    for (const Mat& Q : stieltjes_param(c.seq).Q) EXPECT_TRUE(is_pd(Q));
    DSParam ds = ds_param(c.seq);
    for (const Mat& L : ds.L) EXPECT_TRUE(is_pd(L));
    for (const Mat& M : ds.M) EXPECT_TRUE(is_pd(M));
  }
}

}  // namespace
}  // namespace halfline
