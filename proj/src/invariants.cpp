// Copyright 2026 The fockgate authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockgate/invariants.hpp"

#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>

namespace fockgate {

namespace {

double log_gamma_int(std::int64_t k) {
  // lgamma(0) = +inf makes 1/Gamma terms vanish, which is exactly what the
  // n = 1 pole needs.
  return std::lgamma(static_cast<double>(k));
}

Rational factorial_rational(int k) {
  boost::multiprecision::cpp_int value = 1;
  for (int i = 2; i <= k; ++i) value *= i;
  return Rational(value);
}

bool differs(double a, double b, double tolerance) {
  return std::abs(a - b) > tolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

double InvariantConstants::b() const {
  if (!B) throw DomainError("B is undefined for single-photon spaces");
  return *B;
}

double InvariantConstants::alpha_value() const {
  if (!alpha) throw DomainError("alpha is undefined for single-photon spaces");
  return *alpha;
}

InvariantConstants constants(int modes, int photons) {
  if (modes < 2) throw DomainError("constants need at least two modes");
  if (photons < 1) throw DomainError("constants need at least one photon");
  const std::int64_t m = modes;
  const std::int64_t n = photons;

  InvariantConstants out;
  out.modes = modes;
  out.photons = photons;
  out.A = (m + 2 * n - 1) *
          std::exp(log_gamma_int(m + n) - log_gamma_int(m + 2) - log_gamma_int(n));
  out.C = std::exp(log_gamma_int(m + n) - log_gamma_int(m + 1) - log_gamma_int(n));
  out.C1 = (m * n + 1) *
           std::exp(log_gamma_int(m + 1) + log_gamma_int(n + 1) - log_gamma_int(m + n + 1));
  out.C2 = 2.0 * std::exp(log_gamma_int(m + 2) + log_gamma_int(n) - log_gamma_int(m + n + 1));
  if (photons >= 2) {
    out.B = std::exp(log_gamma_int(m + n) - log_gamma_int(m + 2) - log_gamma_int(n - 1));
    out.alpha = out.A / *out.B;
    const double via_ab = 2.0 / (out.A - *out.B);
    const double via_bc = 2.0 / (*out.B + out.C);
    if (differs(out.C2, via_ab, 1e-10) || differs(out.C2, via_bc, 1e-10))
      throw Error("constants cross-identity failed; Gamma evaluation is inconsistent");
  }
  return out;
}

BruteForceConstants constants_brute_force(int modes, int photons, std::int64_t cap) {
  if (modes < 2) throw DomainError("brute-force constants need at least two modes");
  auto basis = FockBasis::enumerate(modes, photons, cap);
  BruteForceConstants out;
  for (const auto& ket : basis->states()) {
    const double n1 = ket[0];
    const double n2 = ket[1];
    out.A += n1 * n1;
    out.B += n1 * n2;
    out.C += n1;
  }
  return out;
}

std::pair<Rational, Rational> closed_constants_exact(int modes, int photons) {
  if (modes < 2 || photons < 1) throw DomainError("closed constants need m >= 2, n >= 1");
  const Rational mn_fact = factorial_rational(modes + photons);
  const Rational c1 = Rational(modes * photons + 1) * factorial_rational(modes) *
                      factorial_rational(photons) / mn_fact;
  const Rational c2 =
      Rational(2) * factorial_rational(modes + 1) * factorial_rational(photons - 1) / mn_fact;
  return {c1, c2};
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> gram_number_sector(int modes, int photons) {
  if (photons < 2) throw DomainError("the number-sector Gram inverse needs n >= 2");
  const InvariantConstants c = constants(modes, photons);
  const double a = c.A;
  const double b = c.b();
  const double alpha = c.alpha_value();

  Eigen::MatrixXd g = Eigen::MatrixXd::Constant(modes, modes, b);
  g.diagonal().setConstant(a);

  const double denominator = b * (alpha - 1.0) * (modes - 1.0 + alpha);
  const double diag = (modes - 2.0 + alpha) / denominator;
  const double off = -1.0 / denominator;
  Eigen::MatrixXd g_inverse = Eigen::MatrixXd::Constant(modes, modes, off);
  g_inverse.diagonal().setConstant(diag);
  return {std::move(g), std::move(g_inverse)};
}

InvariantReport invariants_projection(const DensityMatrix& rho, const OrthonormalFrame& frame) {
  if (rho.modes() != frame.modes || rho.photons() != frame.photons ||
      rho.basis()->size() != frame.dim)
    throw FrameMismatch("frame does not match the density matrix's (m, n)");
  if (!frame.has_perpendicular())
    throw FrameMismatch("projection invariants need a frame with its perpendicular part");

  const std::complex<double> i(0.0, 1.0);
  const Eigen::MatrixXcd v = i * rho.matrix();
  InvariantReport report;
  report.method = InvariantReport::Method::projection;
  report.purity = rho.purity();
  for (const auto& c : frame.tangent) {
    const double coeff = inner_product(c, v);
    report.tangent += coeff * coeff;
  }
  for (const auto& c : frame.perpendicular) {
    const double coeff = inner_product(c, v);
    report.perpendicular += coeff * coeff;
  }
  return report;
}

namespace {

// Shared skeleton for the closed-formula sums over sparse terms.
double reduced_sum_from_terms(std::span<const WeightedKet> terms, int modes) {
  double total = 0.0;
  for (int i = 1; i <= modes; ++i) {
    const double ni = number_expectation(terms, i);
    for (int j = i + 1; j <= modes; ++j) {
      const double nj = number_expectation(terms, j);
      const std::complex<double> hop = hopping_expectation(terms, i, j);
      total += std::norm(hop) - ni * nj;
    }
  }
  return total;
}

}  // namespace

double reduced_sum(const StateExpression& state) {
  const auto terms = state.weighted_kets();
  return reduced_sum_from_terms(terms, state.modes());
}

double reduced_sum(const PureState& state) {
  const auto terms = state.nonzero_terms();
  return reduced_sum_from_terms(terms, state.modes());
}

std::optional<ExactComplex> exact_hopping_expectation(const StateExpression& state, int mode_i,
                                                      int mode_j) {
  if (!state.is_exact()) return std::nullopt;
  const int modes = state.modes();
  if (mode_i < 1 || mode_i > modes || mode_j < 1 || mode_j > modes)
    throw ModeOutOfRange("mode index outside 1.." + std::to_string(modes));

  const SqrtSum norm2(*state.exact_norm2());
  const std::size_t i = static_cast<std::size_t>(mode_i - 1);
  const std::size_t j = static_cast<std::size_t>(mode_j - 1);

  if (mode_i == mode_j) {
    SqrtSum total;
    for (const auto& term : state.terms())
      total += term.exact->norm2() * SqrtSum(Rational(term.ket[i]));
    return ExactComplex(total.divided_by(norm2), SqrtSum());
  }

  std::map<FockVector, const ExactComplex*> lookup;
  for (const auto& term : state.terms()) lookup.emplace(term.ket, &*term.exact);

  ExactComplex total;
  for (const auto& term : state.terms()) {
    const int nj = term.ket[j];
    if (nj == 0) continue;
    FockVector moved = term.ket;
    moved[j] -= 1;
    moved[i] += 1;
    auto it = lookup.find(moved);
    if (it == lookup.end()) continue;
    const SqrtSum factor =
        SqrtSum::sqrt_of(Rational(static_cast<std::int64_t>(nj) * (term.ket[i] + 1)));
    const ExactComplex contribution = it->second->conj() * (*term.exact);
    total += ExactComplex(contribution.re * factor, contribution.im * factor);
  }
  return total.divided_by(norm2);
}

std::optional<SqrtSum> reduced_sum_exact(const StateExpression& state) {
  if (!state.is_exact()) return std::nullopt;
  const int modes = state.modes();
  SqrtSum total;
  for (int i = 1; i <= modes; ++i) {
    const SqrtSum ni = exact_hopping_expectation(state, i, i)->re;
    for (int j = i + 1; j <= modes; ++j) {
      const SqrtSum nj = exact_hopping_expectation(state, j, j)->re;
      const ExactComplex hop = *exact_hopping_expectation(state, i, j);
      total += hop.norm2() - ni * nj;
    }
  }
  return total;
}

double tangent_invariant_closed(const StateExpression& state) {
  if (state.modes() == 1) return 1.0;  // u(1) sector: everything is tangent
  const InvariantConstants c = constants(state.modes(), state.photons());
  const auto exact = reduced_sum_exact(state);
  const double sum = exact ? exact->to_double() : reduced_sum(state);
  return c.C1 + c.C2 * sum;
}

double tangent_invariant_closed(const PureState& state) {
  if (state.modes() == 1) return 1.0;
  const InvariantConstants c = constants(state.modes(), state.photons());
  return c.C1 + c.C2 * reduced_sum(state);
}

InvariantReport invariants_closed(const StateExpression& state) {
  InvariantReport report;
  report.method = InvariantReport::Method::closed_form;
  report.purity = 1.0;
  report.reduced_exact = reduced_sum_exact(state);
  report.reduced = report.reduced_exact ? report.reduced_exact->to_double() : reduced_sum(state);
  report.tangent = tangent_invariant_closed(state);
  report.perpendicular = 1.0 - report.tangent;
  return report;
}

namespace {

Verdict forbidden(std::string quantity, double lhs, double rhs,
                  std::optional<Rational> exact_gap = std::nullopt) {
  Verdict verdict;
  verdict.kind = Verdict::Kind::forbidden;
  verdict.witness = Witness{std::move(quantity), lhs, rhs, std::abs(lhs - rhs),
                            std::move(exact_gap)};
  return verdict;
}

// Top eigenvector of a purity~1 density matrix, as a pure state.
PureState dominant_pure_component(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
  const Eigen::Index top = rho.matrix().rows() - 1;  // eigenvalues ascend
  return PureState::normalized(rho.basis(), solver.eigenvectors().col(top));
}

}  // namespace

Verdict transition_verdict(const DensityMatrix& rho_in, const DensityMatrix& rho_out,
                           const OrthonormalFrame& frame, const VerdictOptions& options) {
  if (rho_in.modes() != rho_out.modes() || rho_in.photons() != rho_out.photons())
    throw ShapeMismatch("input and output states have different (m, n)");

  const double purity_in = rho_in.purity();
  const double purity_out = rho_out.purity();
  if (differs(purity_in, purity_out, options.tolerance))
    return forbidden("purity", purity_in, purity_out);

  const InvariantReport in_report = invariants_projection(rho_in, frame);
  const InvariantReport out_report = invariants_projection(rho_out, frame);
  if (differs(in_report.tangent, out_report.tangent, options.tolerance))
    return forbidden("I_t", in_report.tangent, out_report.tangent);

  const bool both_pure = !differs(purity_in, 1.0, options.tolerance) &&
                         !differs(purity_out, 1.0, options.tolerance);
  if (both_pure) {
    const double reduced_in = reduced_sum(dominant_pure_component(rho_in));
    const double reduced_out = reduced_sum(dominant_pure_component(rho_out));
    if (differs(reduced_in, reduced_out, options.tolerance))
      return forbidden("reduced_sum", reduced_in, reduced_out);
  }
  return Verdict{};
}

Verdict transition_verdict(const StateExpression& in, const StateExpression& out,
                           const VerdictOptions& options) {
  if (in.modes() != out.modes() || in.photons() != out.photons())
    throw ShapeMismatch("input and output states have different (m, n)");

  const auto exact_in = reduced_sum_exact(in);
  const auto exact_out = reduced_sum_exact(out);
  if (exact_in && exact_out) {
    if (*exact_in != *exact_out) {
      const SqrtSum gap = *exact_in - *exact_out;
      std::optional<Rational> exact_gap;
      if (gap.is_rational()) exact_gap = boost::multiprecision::abs(gap.rational());
      return forbidden("reduced_sum", exact_in->to_double(), exact_out->to_double(),
                       std::move(exact_gap));
    }
    // Equal reduced sums force equal closed-formula tangent invariants.
    return Verdict{};
  }

  const double tangent_in = tangent_invariant_closed(in);
  const double tangent_out = tangent_invariant_closed(out);
  if (differs(tangent_in, tangent_out, options.tolerance))
    return forbidden("I_t", tangent_in, tangent_out);
  const double reduced_in = exact_in ? exact_in->to_double() : reduced_sum(in);
  const double reduced_out = exact_out ? exact_out->to_double() : reduced_sum(out);
  if (differs(reduced_in, reduced_out, options.tolerance))
    return forbidden("reduced_sum", reduced_in, reduced_out);
  return Verdict{};
}

}  // namespace fockgate
