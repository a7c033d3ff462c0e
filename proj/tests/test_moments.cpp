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

#include <halfline/moments.hpp>

#include "fixtures.hpp"

namespace halfline {
namespace {

using testing::F1;
using testing::F2;
using testing::random_cases;
using testing::scalar;
using testing::scalar_sequence;
using testing::value;

TEST(Moments, RejectsMalformedSequences) {
  EXPECT_THROW(make_sequence({}, 0.0, Side::Right), PreconditionError);
  EXPECT_THROW(make_sequence({Mat::Identity(2, 2), scalar(1)}, 0.0, Side::Right), PreconditionError);
  EXPECT_THROW(make_sequence({scalar(1)}, std::nan(""), Side::Right), PreconditionError);
}

TEST(Moments, HankelPackExamples) {
  HankelPack p = build_hankel_pack(F2());
  Mat H1(2, 2);
  H1 << 1, 1, 1, 2;
  EXPECT_EQ(p.H[1], H1);
  EXPECT_NEAR(value(p.Hhat[1]), 1.0, 1e-15);
  HankelPack single = build_hankel_pack(scalar_sequence({1}));
  EXPECT_NEAR(value(single.H[0]), 1.0, 0.0);
  EXPECT_NEAR(value(single.Hhat[0]), 1.0, 0.0);
  EXPECT_NEAR(value(build_hankel_pack(scalar_sequence({1, 0, 1})).Hhat[1]), 1.0, 1e-15);
}

TEST(Moments, ShiftExamples) {
  EXPECT_NEAR(value(shift_sequence(F1()).s[0]), 1.0, 0.0);
  EXPECT_NEAR(value(shift_sequence(scalar_sequence({1, 3}, 2.0)).s[0]), 1.0, 0.0);
  EXPECT_NEAR(value(shift_sequence(testing::F3()).s[0]), 1.0, 0.0);
  EXPECT_TRUE(shift_sequence(F1()).shifted);
}

TEST(Moments, ReflectExamples) {
  MomentSequence t = reflect(F1());
  EXPECT_EQ(t.side, Side::Left);
  EXPECT_NEAR(value(t.s[1]), -1.0, 0.0);
  for (const auto& c : random_cases(12)) {
    MomentSequence back = reflect(reflect(c.seq));
    EXPECT_EQ(back.side, c.seq.side);
    EXPECT_EQ(back.alpha, c.seq.alpha);
    for (int j = 0; j <= c.kappa; ++j) EXPECT_EQ(back.s[std::size_t(j)], c.seq.s[std::size_t(j)]);
  }
  Mat d = Mat::Zero(2, 2);
  d.diagonal() << 1, 2;
  MomentSequence diag = make_sequence({d, d, d}, 0.0, Side::Right);
  MomentSequence r = reflect(diag);
  EXPECT_EQ(r.s[1], -d);
  EXPECT_EQ(r.s[2], d);
}

TEST(Moments, ClassifyExamples) {
  EXPECT_EQ(classify(F2()).stieltjes, StieltjesClass::PD);
  EXPECT_EQ(classify(scalar_sequence({1, -1})).stieltjes, StieltjesClass::NO);
  StieltjesClass zero = classify(scalar_sequence({0, 0})).stieltjes;
  EXPECT_NE(zero, StieltjesClass::PD);
  EXPECT_NE(zero, StieltjesClass::NO);
}

TEST(Moments, ReflectionKeepsClass) {
  for (const auto& c : random_cases(40)) {
    SequenceClass a = classify(c.seq), b = classify(reflect(c.seq));
    EXPECT_EQ(a.stieltjes, StieltjesClass::PD);
    EXPECT_EQ(a.stieltjes, b.stieltjes);
    EXPECT_EQ(b.side, other(a.side));
  }
  for (auto s : {std::vector<double>{1, -1}, {0, 0}, {1, 2, 1}, {1, 1, 2}}) {
    MomentSequence seq = scalar_sequence(s);
    EXPECT_EQ(classify(seq).stieltjes, classify(reflect(seq)).stieltjes);
  }
}

TEST(Moments, ReflectedHankelPack) {
  for (const auto& c : random_cases(20)) {
    HankelPack a = build_hankel_pack(c.seq), b = build_hankel_pack(reflect(c.seq));
    StructuralKit kit(c.seq);
    for (std::size_t n = 0; n < a.H.size(); ++n) {
      Mat V = kit.V(int(n));
      EXPECT_LT(rel_diff(b.H[n], V * a.H[n] * V.adjoint()), 1e-14);
      EXPECT_LT(rel_diff(b.Hhat[n], a.Hhat[n]), 1e-9);
    }
  }
}

TEST(Moments, PositiveDefiniteBlocks) {
  for (const auto& c : random_cases(40)) {
    for (int n = 0; n <= floor_half(c.kappa); ++n) {
      Mat H = hankel_block(c.seq, n);
      EXPECT_TRUE(is_pd(H));
      EXPECT_LT((pinv(H) * H - eye(H.rows())).norm(), 1e-9);
    }
    for (int n = 0; n <= floor_half(c.kappa - 1); ++n) EXPECT_TRUE(is_pd(shifted_hankel(c.seq, n)));
  }
}

TEST(Moments, StructuralKitIdentities) {
  std::mt19937_64 gen(31);
  for (const auto& c : random_cases(20)) {
    StructuralKit kit(c.seq);
    for (int n = 0; n <= floor_half(c.kappa); ++n) {
      cplx z = testing::upper_point(c.alpha, gen);
      Mat E = kit.E(n, z);
      EXPECT_LT(rel_diff(kit.R(n, z) * kit.v(n), E), 1e-12);
      EXPECT_LT(rel_diff(kit.R(n, z) * y_stack(c.seq, 0, n), kit.S(n) * E), 1e-12);
      if (n <= floor_half(c.kappa - 1)) EXPECT_LT(rel_diff(kit.R(n, z) * kit.u_shift(n), kit.Shat(n) * E), 1e-12);
    }
  }
}

TEST(Moments, CouplingIdentity) {
  for (const auto& c : random_cases(20)) {
    if (c.side != Side::Right) continue;
    StructuralKit kit(c.seq);
    for (int n = 0; n <= floor_half(c.kappa - 1); ++n) {
      Mat lhs = kit.v(n) * z_stack(c.seq, 0, n);
      Mat rhs = kit.R(n, c.alpha).inverse() * hankel_block(c.seq, n) - kit.T(n) * shifted_hankel(c.seq, n);
      EXPECT_LT(rel_diff(lhs, rhs), 1e-12);
    }
  }
}

TEST(Moments, PotapovDefectExamples) {
  const cplx i(0.0, 1.0);
  auto [a, b] = potapov_defect(F1(), scalar(1.0 / (1.0 - i)), i);
  EXPECT_TRUE(is_psd(a));
  EXPECT_TRUE(is_psd(b));
  auto [c, d] = potapov_defect(F1(), scalar(-1.0 / (2.0 * i)), 2.0 * i);
  EXPECT_TRUE(is_psd(c));
  EXPECT_TRUE(is_psd(d));
  auto [e, f] = potapov_defect(F1(), scalar(0.0), i);
  EXPECT_FALSE(is_psd(e) && is_psd(f));
  EXPECT_EQ(psd_class(f), Definiteness::Indefinite);
}

}  // namespace
}  // namespace halfline
