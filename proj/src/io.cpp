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

#include <halfline/io.hpp>

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

namespace halfline {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " is not a number");
  return j.get<double>();
}

}  // namespace

Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ParseError("complex entry must be [re, im]");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty list of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ParseError("matrix rows must be non-empty lists");
  Mat m(Eigen::Index(j.size()), Eigen::Index(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) m(Eigen::Index(r), Eigen::Index(c)) = complex_from_json(j[r][c]);
  }
  return m;
}

Json matrices_to_json(const std::vector<Mat>& ms) {
  Json out = Json::array();
  for (const Mat& m : ms) out.push_back(matrix_to_json(m));
  return out;
}

std::vector<Mat> matrices_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of matrices");
  std::vector<Mat> out;
  for (const Json& m : j) out.push_back(matrix_from_json(m));
  return out;
}

Json polynomial_to_json(const MatrixPolynomial& p) {
  return {{"rows", p.rows()}, {"cols", p.cols()}, {"coefficients", matrices_to_json(p.coeffs())}};
}

MatrixPolynomial polynomial_from_json(const Json& j) {
  std::vector<Mat> coeffs = matrices_from_json(field(j, "coefficients"));
  auto rows = field(j, "rows").get<Eigen::Index>();
  auto cols = field(j, "cols").get<Eigen::Index>();
  for (const Mat& c : coeffs)
    if (c.rows() != rows || c.cols() != cols) throw ParseError("polynomial coefficient has the wrong shape");
  return coeffs.empty() ? MatrixPolynomial(rows, cols) : MatrixPolynomial(std::move(coeffs));
}

Side side_from_string(const std::string& s) {
  if (s == "right") return Side::Right;
  if (s == "left") return Side::Left;
  throw ParseError("side must be \"right\" or \"left\", got \"" + s + "\"");
}

Json sequence_to_json(const MomentSequence& seq) {
  return {{"q", seq.q}, {"alpha", seq.alpha}, {"side", side_name(seq.side)}, {"moments", matrices_to_json(seq.s)}};
}

MomentSequence sequence_from_json(const Json& j) {
  try {
    const Json& q = field(j, "q");
    if (!q.is_number_integer() || q.get<long long>() < 1) throw ParseError("q must be a positive integer");
    const Json& side = field(j, "side");
    if (!side.is_string()) throw ParseError("side must be a string");
    std::vector<Mat> moments = matrices_from_json(field(j, "moments"));
    if (moments.empty()) throw ParseError("moments must be non-empty");
    for (const Mat& s : moments)
      if (s.rows() != q.get<Eigen::Index>() || s.cols() != q.get<Eigen::Index>())
        throw ParseError("every moment must be q×q");
    return make_sequence(std::move(moments), number(field(j, "alpha"), "alpha"),
                         side_from_string(side.get<std::string>()));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json measure_to_json(const MolecularMeasure& mu) {
  return {{"side", side_name(mu.side)}, {"alpha", mu.alpha}, {"atoms", mu.atoms},
          {"masses", matrices_to_json(mu.masses)}};
}

MolecularMeasure measure_from_json(const Json& j, const Tolerance& tol) {
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) throw ParseError("atoms must be a list of numbers");
  std::vector<double> xs;
  for (const Json& a : atoms) xs.push_back(number(a, "atom"));
  const Json& side = field(j, "side");
  if (!side.is_string()) throw ParseError("side must be a string");
  double alpha = j.contains("alpha") ? number(j.at("alpha"), "alpha") : 0.0;
  try {
    return make_measure(std::move(xs), matrices_from_json(field(j, "masses")),
                        side_from_string(side.get<std::string>()), alpha, tol);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

cplx parse_complex(const std::string& text) {
  static const std::regex number(R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*)");
  static const std::regex imaginary(R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*i\s*)");
  static const std::regex both(
      R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*i\s*)");
  std::smatch m;
  if (std::regex_match(text, m, number)) return {std::stod(m[1]), 0.0};
  if (std::regex_match(text, m, imaginary)) return {0.0, std::stod(m[1])};
  if (std::regex_match(text, m, both)) {
    double im = std::stod(m[3]);
    return {std::stod(m[1]), m[2] == "-" ? -im : im};
  }
  throw ParseError("cannot read \"" + text + "\" as a complex number a+bi");
}

std::vector<cplx> parse_complex_list(const std::string& text) {
  std::vector<cplx> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  if (out.empty()) throw ParseError("empty list of points");
  return out;
}

}  // namespace halfline
