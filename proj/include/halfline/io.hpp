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

#include <string>
#include <vector>

#include <json.hpp>

#include <halfline/measures.hpp>

namespace halfline {

using Json = nlohmann::json;

// malformed documents and command-line values
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

Json complex_to_json(cplx z);
cplx complex_from_json(const Json& j);

// row-major nested rows of [re, im]
Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j);

Json matrices_to_json(const std::vector<Mat>& ms);
std::vector<Mat> matrices_from_json(const Json& j);

// {"rows", "cols", "coefficients"}; coefficients[j] multiplies z^j
Json polynomial_to_json(const MatrixPolynomial& p);
MatrixPolynomial polynomial_from_json(const Json& j);

Side side_from_string(const std::string& s);

// {"q", "alpha", "side", "moments"}
Json sequence_to_json(const MomentSequence& seq);
MomentSequence sequence_from_json(const Json& j);

// {"side", "alpha", "atoms", "masses"}; masses are checked to be PSD on load
Json measure_to_json(const MolecularMeasure& mu);
MolecularMeasure measure_from_json(const Json& j, const Tolerance& tol = {});

Json read_json_file(const std::string& path);

// "a", "bi", "a+bi", "a-bi" with decimal parts
cplx parse_complex(const std::string& text);
std::vector<cplx> parse_complex_list(const std::string& text);

}  // namespace halfline
