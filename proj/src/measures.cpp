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

#include <halfline/measures.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace halfline {

namespace {

constexpr double kMergeRel = 1e-7;
constexpr double kDropRel = 1e-9;
constexpr int kContourPoints = 64;

// sorts by atom, sums masses of atoms closer than the merge radius and drops null masses
MolecularMeasure tidy(std::vector<double> atoms, std::vector<Mat> masses, const MomentSequence& seq) {
  std::vector<std::size_t> order(atoms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });
  const double radius = kMergeRel * (1.0 + std::abs(seq.alpha));
  const double floor = kDropRel * (1.0 + seq.s[0].norm());
  MolecularMeasure mu;
  mu.side = seq.side;
  mu.alpha = seq.alpha;
  for (std::size_t idx : order) {
    if (!mu.atoms.empty() && atoms[idx] - mu.atoms.back() <= radius) {
      mu.masses.back() += masses[idx];
      continue;
    }
    mu.atoms.push_back(atoms[idx]);
    mu.masses.push_back(masses[idx]);
  }
  MolecularMeasure out;
  out.side = mu.side;
  out.alpha = mu.alpha;
  for (std::size_t j = 0; j < mu.atoms.size(); ++j) {
    if (mu.masses[j].norm() < floor) continue;
    out.atoms.push_back(mu.atoms[j]);
    out.masses.push_back(hermitian_part(mu.masses[j]));
  }
  return out;
}

void check_transform(const MolecularMeasure& mu, const Evaluator& S, const MomentSequence& seq,
                     double slack, const char* what) {
  std::mt19937_64 gen(0xa70b);
  std::normal_distribution<double> N;
  for (int j = 0; j < 10; ++j) {
    cplx z(seq.alpha + N(gen), std::abs(N(gen)) + 0.1);
    if (j % 2) z = std::conj(z);
    if (rel_diff(stieltjes_transform(mu, z, seq.q), S(z)) > slack)
      throw InconsistencyError(std::string(what) + ": recovered measure does not reproduce the extremal solution");
  }
}

double conditioning(const MomentSequence& seq) {
  auto cond = [](const Mat& H) {
    Eigen::VectorXd ev = hermitian_eigenvalues(H);
    return ev(ev.size() - 1) / ev(0);
  };
  double c = cond(hankel_block(seq, floor_half(seq.kappa())));
  if (seq.kappa() >= 1) c = std::max(c, cond(shifted_hankel(seq, floor_half(seq.kappa() - 1))));
  return c;
}

MolecularMeasure recover_min_right(const MomentSequence& head, const Tolerance& tol) {
  const int k = floor_half(head.kappa() - 1);
  Mat H = hankel_block(head, k);
  Eigen::SelfAdjointEigenSolver<Mat> hs(hermitian_part(H));
  Mat root_inv = hs.eigenvectors() * hs.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                 hs.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<Mat> ps(hermitian_part(root_inv * shifted_hankel(head, k) * root_inv));
  Mat c = y_stack(head, 0, k).adjoint() * root_inv * ps.eigenvectors();
  std::vector<double> atoms;
  std::vector<Mat> masses;
  for (Eigen::Index j = 0; j < ps.eigenvalues().size(); ++j) {
    atoms.push_back(head.alpha + ps.eigenvalues()(j));
    masses.push_back(c.col(j) * c.col(j).adjoint());
  }
  MolecularMeasure mu = tidy(atoms, masses, head);
  Extremals ext(head, head.kappa(), tol);
  check_transform(mu, ext.min_evaluator(), head, 1e2 * identity_slack(conditioning(head), tol), "recover_min");
  return mu;
}

// −Res_x S by the trapezoid rule on a circle of radius r; the nodes avoid the real axis
Mat minus_residue(const Extremals& ext, double x, double r, int points) {
  const double pi = std::acos(-1.0);
  Mat sum;
  for (int k = 0; k < points; ++k) {
    cplx dz = std::polar(r, pi * (2.0 * k + 1.0) / points);
    Mat term = ext.max(x + dz) * dz;
    sum = k == 0 ? term : Mat(sum + term);
  }
  return -sum / double(points);
}

MolecularMeasure recover_max_right(const MomentSequence& head, const Tolerance& tol) {
  const int m = head.kappa();
  Extremals ext(head, m, tol);
  PolySeq shifted = monic_orthogonal_system(shift_sequence(head), tol);
  std::vector<double> candidates{head.alpha};
  for (cplx x : det_zeros(shifted[std::size_t(floor_half(m))], ZeroKind::Monic)) {
    // clustered zeros of a monic determinant split off the axis by about √ε
    if (std::abs(x.imag()) > 1e-5 * (1.0 + std::abs(x.real())))
      throw InconsistencyError("recover_max: a pole candidate is not real");
    candidates.push_back(x.real());
  }
  std::sort(candidates.begin(), candidates.end());
  const double radius = kMergeRel * (1.0 + std::abs(head.alpha));
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [radius](double a, double b) { return b - a <= radius; }),
                   candidates.end());

  std::vector<Mat> masses;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    double gap = 0.1 * (1.0 + std::abs(candidates[j]));
    if (j > 0) gap = std::min(gap, 0.3 * (candidates[j] - candidates[j - 1]));
    if (j + 1 < candidates.size()) gap = std::min(gap, 0.3 * (candidates[j + 1] - candidates[j]));
    Mat coarse = minus_residue(ext, candidates[j], gap, kContourPoints / 2);
    Mat fine = minus_residue(ext, candidates[j], gap, kContourPoints);
    if ((coarse - fine).norm() > 1e-6 * (1.0 + fine.norm()))
      throw InconsistencyError("recover_max: residue quadrature does not converge");
    masses.push_back(fine);
  }
  MolecularMeasure mu = tidy(candidates, masses, head);
  check_transform(mu, ext.max_evaluator(), head, 1e-8 + 1e2 * identity_slack(conditioning(head), tol),
                  "recover_max");
  return mu;
}

MomentSequence head_of(const MomentSequence& seq, int m, const char* op, const Tolerance& tol) {
  if (m < 1 || m > seq.kappa()) throw PreconditionError(std::string(op) + ": order m must lie in [1, kappa]");
  MomentSequence head = seq.truncated(m);
  require_stieltjes_pd(head, op, tol);
  return head;
}

}  // namespace

MolecularMeasure make_measure(std::vector<double> atoms, std::vector<Mat> masses, Side side,
                              double alpha, const Tolerance& tol) {
  if (atoms.size() != masses.size()) throw PreconditionError("measure: atoms and masses differ in number");
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    if (!std::isfinite(atoms[j])) throw PreconditionError("measure: atom is not finite");
    if (masses[j].rows() != masses.front().rows() || masses[j].rows() != masses[j].cols())
      throw PreconditionError("measure: masses must be square of one size");
    if (!is_psd(masses[j], tol)) throw PreconditionError("measure: mass is not positive semidefinite");
    double gap = side == Side::Right ? atoms[j] - alpha : alpha - atoms[j];
    if (gap < -1e-9 * (1.0 + std::abs(alpha))) throw PreconditionError("measure: atom lies off the half-line");
  }
  MolecularMeasure mu;
  mu.atoms = std::move(atoms);
  mu.masses = std::move(masses);
  mu.side = side;
  mu.alpha = alpha;
  return mu;
}

Mat stieltjes_transform(const MolecularMeasure& mu, cplx z, Eigen::Index q) {
  Eigen::Index n = mu.masses.empty() ? q : mu.q();
  Mat out = Mat::Zero(n, n);
  for (std::size_t j = 0; j < mu.atoms.size(); ++j) {
    if (z == cplx(mu.atoms[j], 0.0)) throw PreconditionError("stieltjes_transform: z is an atom");
    out += mu.masses[j] / (mu.atoms[j] - z);
  }
  return out;
}

std::vector<Mat> measure_moments(const MolecularMeasure& mu, int up_to) {
  Eigen::Index q = mu.q();
  std::vector<Mat> out(std::size_t(up_to + 1), Mat::Zero(q, q));
  for (std::size_t k = 0; k < mu.atoms.size(); ++k) {
    double p = 1.0;
    for (int j = 0; j <= up_to; ++j, p *= mu.atoms[k]) out[std::size_t(j)] += p * mu.masses[k];
  }
  return out;
}

MolecularMeasure mirror(const MolecularMeasure& mu) {
  MolecularMeasure out = mu;
  for (double& x : out.atoms) x = -x;
  std::reverse(out.atoms.begin(), out.atoms.end());
  std::reverse(out.masses.begin(), out.masses.end());
  out.side = other(mu.side);
  out.alpha = -mu.alpha;
  return out;
}

MolecularMeasure recover_min(const MomentSequence& seq, int m, const Tolerance& tol) {
  MomentSequence head = head_of(seq, m, "recover_min", tol);
  if (head.side == Side::Right) return recover_min_right(head, tol);
  return mirror(recover_max_right(reflect(head), tol));
}

MolecularMeasure recover_max(const MomentSequence& seq, int m, const Tolerance& tol) {
  MomentSequence head = head_of(seq, m, "recover_max", tol);
  if (head.side == Side::Right) return recover_max_right(head, tol);
  return mirror(recover_min_right(reflect(head), tol));
}

MomentFit moment_fit(const MolecularMeasure& mu, const MomentSequence& seq, int m) {
  if (m < 0 || m > seq.kappa()) throw PreconditionError("moment_fit: order m out of range");
  std::vector<Mat> mom = measure_moments(mu, m);
  MomentFit fit;
  for (int j = 0; j < m; ++j)
    fit.max_rel_error = std::max(fit.max_rel_error, rel_diff(mom[std::size_t(j)], seq.s[std::size_t(j)]));
  double sg = seq.side == Side::Right || m % 2 == 0 ? 1.0 : -1.0;
  const Mat& sm = seq.s[std::size_t(m)];
  fit.order_slack = lambda_min(sg * (sm - mom[std::size_t(m)])) / std::max(1.0, sm.norm());
  return fit;
}

HausdorffReport hausdorff_solvable(const MomentSequence& seq, double alpha, double beta,
                                   const Tolerance& tol) {
  if (!(alpha < beta)) throw PreconditionError("hausdorff_solvable: alpha must be smaller than beta");
  HausdorffReport r;
  r.alpha = alpha;
  r.beta = beta;
  r.kappa = seq.kappa();
  r.odd = r.kappa % 2 == 1;

  MomentSequence right = seq, left = seq;
  right.alpha = alpha;
  right.side = Side::Right;
  left.alpha = beta;
  left.side = Side::Left;
  r.right_problem = classify(right, tol).stieltjes != StieltjesClass::NO;
  r.left_problem = classify(left, tol).stieltjes != StieltjesClass::NO;

  const int n = floor_half(r.kappa);
  if (r.odd) {
    r.right_block_psd = is_psd(shifted_hankel(right, n), tol);
    r.left_block_psd = is_psd(shifted_hankel(left, n), tol);
    r.solvable = r.right_block_psd && r.left_block_psd;
    r.decomposition_holds = r.solvable == (r.right_problem && r.left_problem);
  } else {
    r.hankel_psd = is_psd(hankel_block(seq, n), tol);
    r.interval_block_psd = true;
    if (n >= 1) {
      Mat block = -alpha * beta * hankel_block(seq, n - 1) + (alpha + beta) * hankel_block(seq, n - 1, 1) -
                  hankel_block(seq, n - 1, 2);
      r.interval_block_psd = is_psd(block, tol);
    }
    r.solvable = r.hankel_psd && r.interval_block_psd;
  }
  return r;
}

}  // namespace halfline
