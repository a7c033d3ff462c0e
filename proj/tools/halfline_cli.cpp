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

#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <halfline/io.hpp>

using namespace halfline;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 2;
constexpr int kPrecondition = 3;
constexpr int kInconsistent = 4;
constexpr int kUsage = 64;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

MomentSequence load_sequence(const std::string& path) { return sequence_from_json(read_json_file(path)); }

int order_or_kappa(const MomentSequence& seq, std::optional<int> m) { return m ? *m : seq.kappa(); }

bool stieltjes_ok(StieltjesClass c) { return c != StieltjesClass::NO; }

int cmd_classify(const std::string& file, bool as_json) {
  MomentSequence seq = load_sequence(file);
  SequenceClass c = classify(seq);
  if (as_json)
    emit({{"side", side_name(c.side)}, {"hankel", class_name(c.hankel)}, {"stieltjes", class_name(c.stieltjes)}});
  else
    std::cout << "side: " << side_name(c.side) << "\nhankel: " << class_name(c.hankel)
              << "\nstieltjes: " << class_name(c.stieltjes) << "\n";
  return stieltjes_ok(c.stieltjes) ? kOk : kNegative;
}

int cmd_params(const std::string& file, const std::string& kind) {
  MomentSequence seq = load_sequence(file);
  Json out{{"kind", kind}};
  if (kind == "q") {
    StieltjesParam p = stieltjes_param(seq);
    out["alpha"] = p.alpha;
    out["side"] = side_name(p.side);
    out["Q"] = matrices_to_json(p.Q);
  } else if (kind == "hankel") {
    CanonicalHankelParam p = canonical_hankel_param(seq);
    out["C"] = matrices_to_json(p.C);
    out["D"] = matrices_to_json(p.D);
  } else if (kind == "favard") {
    FavardPair p = favard_pair(seq);
    out["A"] = matrices_to_json(p.A);
    out["B"] = matrices_to_json(p.B);
  } else {
    DSParam p = ds_param(seq);
    out["alpha"] = p.alpha;
    out["side"] = side_name(p.side);
    out["L"] = matrices_to_json(p.L);
    out["M"] = matrices_to_json(p.M);
  }
  emit(out);
  return kOk;
}

int cmd_resolvent(const std::string& file, std::optional<int> m, bool factor) {
  MomentSequence seq = load_sequence(file);
  const int order = order_or_kappa(seq, m);
  ResolventU U = resolvent_u(seq, order);
  Json out{{"m", U.m}, {"alpha", U.alpha}, {"side", side_name(U.side)}, {"q", U.q()},
           {"coefficients", matrices_to_json(U.U.coeffs())}};
  if (factor) {
    Json factors = Json::array();
    for (const MatrixPolynomial& W : factorize_u(seq, order).W) factors.push_back(polynomial_to_json(W));
    out["factors"] = factors;
  }
  emit(out);
  return kOk;
}

StieltjesPair load_pair(const std::string& path, Side side) {
  Json j = read_json_file(path);
  if (j.contains("F")) return StieltjesPair::schur(matrix_from_json(j.at("F")), side);
  if (!j.contains("phi") || !j.contains("psi")) throw ParseError(path + ": a pair needs \"phi\" and \"psi\", or \"F\"");
  return StieltjesPair::constant(matrix_from_json(j.at("phi")), matrix_from_json(j.at("psi")), side);
}

int cmd_solve(const std::string& file, const std::string& pair_file, const std::string& at, std::optional<int> m) {
  MomentSequence seq = load_sequence(file);
  StieltjesPair pair = load_pair(pair_file, seq.side);
  std::vector<cplx> points = parse_complex_list(at);
  ResolventU U = resolvent_u(seq, order_or_kappa(seq, m));
  Json values = Json::array();
  for (cplx z : points) values.push_back({{"z", complex_to_json(z)}, {"S", matrix_to_json(lft_solve(U, pair, z))}});
  emit({{"m", U.m}, {"values", values}});
  return kOk;
}

int cmd_extremal(const std::string& file, std::optional<std::string> at, std::optional<int> m) {
  MomentSequence seq = load_sequence(file);
  Extremals ext(seq, order_or_kappa(seq, m));
  if (at) {
    cplx z = parse_complex(*at);
    emit({{"z", complex_to_json(z)}, {"s_min", matrix_to_json(ext.min(z))}, {"s_max", matrix_to_json(ext.max(z))}});
    return kOk;
  }
  // S = N·D^{-1} with N, D the columns of the resolvent
  const MatrixPolynomial& U = ext.resolvent().U;
  const Eigen::Index q = ext.resolvent().q();
  Json left_col{{"numerator", polynomial_to_json(U.block(0, 0, q, q))},
                {"denominator", polynomial_to_json(U.block(q, 0, q, q))}};
  Json right_col{{"numerator", polynomial_to_json(U.block(0, q, q, q))},
                 {"denominator", polynomial_to_json(U.block(q, q, q, q))}};
  bool right = seq.side == Side::Right;
  emit({{"m", ext.order()}, {"form", "numerator * inverse(denominator)"},
        {"s_min", right ? right_col : left_col}, {"s_max", right ? left_col : right_col}});
  return kOk;
}

int cmd_recover(const std::string& file, const std::string& which, std::optional<int> m) {
  MomentSequence seq = load_sequence(file);
  const int order = order_or_kappa(seq, m);
  MolecularMeasure mu = which == "min" ? recover_min(seq, order) : recover_max(seq, order);
  MomentFit fit = moment_fit(mu, seq, order);
  Json out = measure_to_json(mu);
  out["fit"] = {{"max_rel_error", fit.max_rel_error}, {"order_slack", fit.order_slack}};
  emit(out);
  return kOk;
}

int cmd_hausdorff(const std::string& file, double beta) {
  MomentSequence seq = load_sequence(file);
  HausdorffReport r = hausdorff_solvable(seq, seq.alpha, beta);
  Json out{{"alpha", r.alpha}, {"beta", r.beta}, {"kappa", r.kappa}, {"solvable", r.solvable}};
  if (r.odd) {
    out["right_block_psd"] = r.right_block_psd;
    out["left_block_psd"] = r.left_block_psd;
    out["right_problem"] = r.right_problem;
    out["left_problem"] = r.left_problem;
    out["decomposition_holds"] = r.decomposition_holds;
  } else {
    out["hankel_psd"] = r.hankel_psd;
    out["interval_block_psd"] = r.interval_block_psd;
  }
  emit(out);
  if (!r.decomposition_holds) return kInconsistent;
  return r.solvable ? kOk : kNegative;
}

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

// each check throws or returns a short detail; false results carry their own detail
Check run_check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    return {name, ok, detail};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

double moment_error(const MomentSequence& a, const MomentSequence& b) {
  if (a.kappa() != b.kappa()) return INFINITY;
  double e = 0.0;
  for (std::size_t j = 0; j < b.s.size(); ++j) e = std::max(e, rel_diff(a.s[j], b.s[j]));
  return e;
}

int cmd_verify(const std::string& file) {
  const Tolerance tol;
  MomentSequence seq = load_sequence(file);
  SequenceClass cls = classify(seq, tol);
  if (cls.stieltjes != StieltjesClass::PD) {
    emit({{"passed", false}, {"stieltjes", class_name(cls.stieltjes)},
          {"detail", "the verification suite needs a Stieltjes positive definite sequence"}});
    return kNegative;
  }
  const int kappa = seq.kappa();
  StieltjesQuadruple quad = stieltjes_quadruple(seq, tol);
  const double slack = identity_slack(quad.conditioning, tol);
  auto within = [&](double err) { return std::make_pair(err <= slack, "max relative error " + fmt(err)); };

  std::mt19937_64 gen(0xc0ffee);
  std::normal_distribution<double> N;
  auto upper_point = [&]() { return cplx(seq.alpha + N(gen), std::abs(N(gen)) + 0.1); };
  const double off = seq.side == Side::Right ? -1.0 : 1.0;

  std::vector<Check> checks;
  checks.push_back(run_check("sequence from Q parameters", [&] {
    return within(moment_error(seq_from_stieltjes_param(stieltjes_param(seq, tol), tol), seq));
  }));
  checks.push_back(run_check("sequence from DS parameters", [&] {
    return within(moment_error(seq_from_ds(ds_param(seq, tol), tol), seq));
  }));
  checks.push_back(run_check("sequence from Hankel parameters", [&] {
    return within(moment_error(seq_from_canonical(canonical_hankel_param(seq, tol), seq.alpha, seq.side, tol), seq));
  }));
  checks.push_back(run_check("values of the quadruple at alpha", [&] {
    AlphaEvaluation ev = eval_quadruple_at_alpha(quad, ds_param(seq, tol), stieltjes_param(seq, tol), tol);
    return within(ev.max_disagreement);
  }));
  checks.push_back(run_check("reflected sequence keeps its class", [&] {
    SequenceClass r = classify(reflect(seq), tol);
    return std::make_pair(r.stieltjes == cls.stieltjes && r.side == other(cls.side),
                          std::string("reflected class ") + class_name(r.stieltjes));
  }));
  if (kappa >= 1) {
    checks.push_back(run_check("two constructions of the resolvent", [&] {
      return within(check_quadruple_routes(dyukarev_quadruple(seq, tol), dyukarev_from_stieltjes(quad), slack));
    }));
    checks.push_back(run_check("resolvent identities and factorization", [&] {
      ResolventU U = resolvent_u(seq, kappa, tol);
      FactorChain chain = factorize_u(seq, kappa, tol);
      return within(coeff_distance(chain.product(), U.U) / std::max(1.0, U.U.coeff(0).norm()));
    }));
    checks.push_back(run_check("resolvent is J-contractive in the upper half plane", [&] {
      std::vector<cplx> samples;
      for (int j = 0; j < 10; ++j) samples.push_back(upper_point());
      for (int j = 0; j < 5; ++j) samples.emplace_back(seq.alpha + N(gen), 0.0);
      JInnerReport r = j_inner_check(resolvent_u(seq, kappa, tol).U, samples, tol);
      return std::make_pair(r.contractive, "min eigenvalue " + fmt(r.min_eigenvalue) + ", real defect " +
                                               fmt(r.max_real_defect));
    }));
    checks.push_back(run_check("extremal solutions by three routes", [&] {
      Extremals ext(seq, kappa, tol);
      double e = 0.0;
      for (int j = 0; j < 5; ++j) e = std::max(e, ext.route_spread(upper_point()));
      return std::make_pair(e <= 1e2 * slack, "route spread " + fmt(e));
    }));
    checks.push_back(run_check("difference of the extremal solutions", [&] {
      Extremals ext(seq, kappa, tol);
      double e = 0.0;
      for (int j = 0; j < 5; ++j) {
        cplx z = upper_point();
        e = std::max(e, rel_diff(difference_inverse(seq, kappa, z), inv(ext.max(z) - ext.min(z), "S_max − S_min")));
      }
      return std::make_pair(e <= 1e2 * slack, "max relative error " + fmt(e));
    }));
    checks.push_back(run_check("Weyl interval off the half-line", [&] {
      Extremals ext(seq, kappa, tol);
      WeylInterval w = weyl_interval(ext, seq.alpha + off, tol);
      return std::make_pair(true, "width " + fmt((w.interval.upper - w.interval.lower).norm()));
    }));
    for (const char* which : {"min", "max"}) {
      checks.push_back(run_check(std::string("moments of the ") + which + " measure", [&] {
        MolecularMeasure mu = std::string(which) == "min" ? recover_min(seq, kappa, tol) : recover_max(seq, kappa, tol);
        MomentFit fit = moment_fit(mu, seq, kappa);
        return std::make_pair(fit.max_rel_error <= 1e-8 && fit.order_slack >= -1e-8,
                              "max relative error " + fmt(fit.max_rel_error) + ", order slack " + fmt(fit.order_slack));
      }));
    }
  }

  bool passed = true;
  Json list = Json::array();
  for (const Check& c : checks) {
    passed = passed && c.ok;
    list.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    if (!c.ok) std::cerr << "FAIL " << c.name << ": " << c.detail << "\n";
  }
  emit({{"passed", passed}, {"checks", list}});
  return passed ? kOk : kInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated matricial Stieltjes moment problems on a half-line"};
  app.require_subcommand(1);

  std::string file, kind = "q", pair_file, at_list, which = "min", side = "right";
  std::optional<int> order;
  std::optional<std::string> at;
  bool as_json = false, factor = false;
  int q = 1, kappa = 2;
  double alpha = 0.0, beta = 1.0;
  std::uint64_t seed = 0;

  auto with_file = [&](CLI::App* cmd) { cmd->add_option("file", file, "sequence document")->required(); };
  auto with_order = [&](CLI::App* cmd) { cmd->add_option("--m", order, "order m (defaults to kappa)"); };

  auto* classify_cmd = app.add_subcommand("classify", "Hankel and Stieltjes classes of a sequence");
  with_file(classify_cmd);
  classify_cmd->add_flag("--json", as_json, "print the report as JSON");

  auto* params_cmd = app.add_subcommand("params", "parametrizations of a sequence");
  with_file(params_cmd);
  params_cmd->add_option("--kind", kind)->check(CLI::IsMember({"q", "hankel", "favard", "ds"}));

  auto* generate_cmd = app.add_subcommand("generate", "seeded random Stieltjes positive definite sequence");
  generate_cmd->add_option("--q", q)->check(CLI::PositiveNumber);
  generate_cmd->add_option("--m", kappa)->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--alpha", alpha);
  generate_cmd->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));
  generate_cmd->add_option("--seed", seed);

  auto* resolvent_cmd = app.add_subcommand("resolvent", "coefficients of the resolvent matrix");
  with_file(resolvent_cmd);
  with_order(resolvent_cmd);
  resolvent_cmd->add_flag("--factor", factor, "also print the elementary factors");

  auto* solve_cmd = app.add_subcommand("solve", "solution for a constant pair at given points");
  with_file(solve_cmd);
  with_order(solve_cmd);
  solve_cmd->add_option("--pair", pair_file, "pair document with phi/psi or F")->required();
  solve_cmd->add_option("--at", at_list, "comma separated points a+bi")->required();

  auto* extremal_cmd = app.add_subcommand("extremal", "the two extremal solutions");
  with_file(extremal_cmd);
  with_order(extremal_cmd);
  extremal_cmd->add_option("--at", at, "evaluation point a+bi");

  auto* recover_cmd = app.add_subcommand("recover", "molecular measure of an extremal solution");
  with_file(recover_cmd);
  with_order(recover_cmd);
  recover_cmd->add_option("--which", which)->check(CLI::IsMember({"min", "max"}));

  auto* hausdorff_cmd = app.add_subcommand("hausdorff", "solvability on [alpha, beta]");
  with_file(hausdorff_cmd);
  hausdorff_cmd->add_option("--beta", beta)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite on a sequence");
  with_file(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(file, as_json);
    if (*params_cmd) return cmd_params(file, kind);
    if (*generate_cmd) {
      emit(sequence_to_json(random_sequence(q, kappa, alpha, side_from_string(side), seed)));
      return kOk;
    }
    if (*resolvent_cmd) return cmd_resolvent(file, order, factor);
    if (*solve_cmd) return cmd_solve(file, pair_file, at_list, order);
    if (*extremal_cmd) return cmd_extremal(file, at, order);
    if (*recover_cmd) return cmd_recover(file, which, order);
    if (*hausdorff_cmd) return cmd_hausdorff(file, beta);
    if (*verify_cmd) return cmd_verify(file);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconsistent;
  }
  return kUsage;
}
