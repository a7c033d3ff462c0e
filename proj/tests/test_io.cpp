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

#include <halfline/io.hpp>

#include "fixtures.hpp"

namespace halfline {
namespace {

using testing::random_cases;

TEST(Io, ComplexParsing) {
  EXPECT_EQ(parse_complex("-1"), cplx(-1, 0));
  EXPECT_EQ(parse_complex("2.5i"), cplx(0, 2.5));
  EXPECT_EQ(parse_complex("1+2i"), cplx(1, 2));
  EXPECT_EQ(parse_complex("0.5-0.25i"), cplx(0.5, -0.25));
  EXPECT_EQ(parse_complex(" -3e-1 + 4E2i "), cplx(-0.3, 400));
  EXPECT_THROW(parse_complex("abc"), ParseError);
  EXPECT_THROW(parse_complex("1+i+2"), ParseError);
  auto list = parse_complex_list("1,2i,-1-1i");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[2], cplx(-1, -1));
}

TEST(Io, SequenceRoundTripIsExact) {
  for (const auto& c : random_cases(20)) {
    std::string text = sequence_to_json(c.seq).dump();
    MomentSequence back = sequence_from_json(Json::parse(text));
    EXPECT_EQ(back.q, c.seq.q);
    EXPECT_EQ(back.alpha, c.seq.alpha);
    EXPECT_EQ(back.side, c.seq.side);
    ASSERT_EQ(back.s.size(), c.seq.s.size());
    for (std::size_t j = 0; j < back.s.size(); ++j) EXPECT_EQ(back.s[j], c.seq.s[j]);
    EXPECT_EQ(sequence_to_json(back).dump(), text);
  }
}

TEST(Io, MeasureAndPolynomialRoundTrip) {
  MomentSequence seq = random_sequence(2, 4, 0.5, Side::Left, 9);
  MolecularMeasure mu = recover_max(seq, 4);
  MolecularMeasure back = measure_from_json(Json::parse(measure_to_json(mu).dump()));
  EXPECT_EQ(back.atoms, mu.atoms);
  for (std::size_t j = 0; j < mu.masses.size(); ++j) EXPECT_EQ(back.masses[j], mu.masses[j]);
  MatrixPolynomial U = resolvent_u(seq, 3).U;
  MatrixPolynomial P = polynomial_from_json(Json::parse(polynomial_to_json(U).dump()));
  ASSERT_EQ(P.coeffs().size(), U.coeffs().size());
  for (std::size_t j = 0; j < U.coeffs().size(); ++j) EXPECT_EQ(P.coeffs()[j], U.coeffs()[j]);
}

TEST(Io, MalformedDocuments) {
  EXPECT_THROW(sequence_from_json(Json::parse(R"({"q":1,"alpha":0,"side":"up","moments":[[[[1,0]]]]})")), ParseError);
  EXPECT_THROW(sequence_from_json(Json::parse(R"({"q":2,"alpha":0,"side":"right","moments":[[[[1,0]]]]})")),
               ParseError);
  EXPECT_THROW(sequence_from_json(Json::parse(R"({"q":1,"alpha":0,"side":"right","moments":[]})")), ParseError);
  EXPECT_THROW(sequence_from_json(Json::parse(R"({"q":1,"side":"right","moments":[[[[1,0]]]]})")), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"([[[1,0],[2,0]],[[1,0]]])")), ParseError);
  EXPECT_THROW(measure_from_json(Json::parse(R"({"side":"right","atoms":[1],"masses":[[[[-1,0]]]]})")), ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST(Io, MatrixLayout) {
  Mat m(1, 2);
  m << cplx(1, 2), cplx(3, -4);
  EXPECT_EQ(matrix_to_json(m).dump(), "[[[1.0,2.0],[3.0,-4.0]]]");
  EXPECT_EQ(matrix_from_json(Json::parse("[[1, [0, 1]]]"))(0, 1), cplx(0, 1));
}

}  // namespace
}  // namespace halfline
