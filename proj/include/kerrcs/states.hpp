// Copyright 2026 The kerrcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Closed-form constructors for coherent, photon-added and Kerr nonlinear
// coherent states, plus the operator route (add_photons) used to check them.
//
// Every closed-form family has amplitudes of the form
//   c_{m+n} = sqrt(t_n / S) * e^{i n phi},   t_0 = 1,
// where t_n is the n-th term of a hypergeometric series with sum S. The
// constructors generate t_n from its term ratio in log space, normalize with
// the closed-form S and stop once the remaining tail mass is certified below
// TruncationPolicy::tail_tol.

#ifndef KERRCS_STATES_HPP
#define KERRCS_STATES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kerrcs/errors.hpp"
#include "kerrcs/fock_state.hpp"
#include "kerrcs/kerr_params.hpp"
#include "kerrcs/ladder.hpp"
#include "kerrcs/series.hpp"
#include "kerrcs/specfun.hpp"

namespace kerrcs {

struct TruncationPolicy {
  /// Relative probability mass allowed beyond the last stored level.
  double tail_tol = 1e-14;
  /// Hard cap on the truncation dimension.
  std::size_t max_dim = 16384;
  /// Policy for the normalization series.
  SeriesTolerance series{};
};

/// zeta(alpha) = e^{i phi} tanh(|alpha| / sqrt(r)), alpha = |alpha| e^{i phi}.
inline complex docs_zeta(complex alpha, const KerrParams& params) {
  return std::polar(std::tanh(std::abs(alpha) / std::sqrt(params.r())), std::arg(alpha));
}

namespace detail {

/// Builds c_{m+n} = sqrt(t_n / S) e^{i n phase}. `ratio(n)` must return
/// t_{n+1}/t_n and be nonincreasing in n once it drops below one; that is what
/// makes t_n rho/(1 - rho) a bound on the remaining tail.
template <typename Ratio>
FockState build_series_state(StateLabel label, double phase, Ratio ratio,
                             double log_norm, std::size_t min_dim,
                             const TruncationPolicy& policy) {
  const std::size_t m = label.m;
  std::vector<double> log_terms{0.0};
  double tail = 0.0;
  bool exhausted = false;  // every later term is exactly zero
  for (std::size_t n = 0;; ++n) {
    const double rho = exhausted ? 0.0 : ratio(n);
    if (rho == 0.0) exhausted = true;
    if (exhausted) {
      tail = 0.0;
    } else if (rho < 1.0) {
      tail = std::exp(log_terms[n] - log_norm) * rho / (1.0 - rho);
    } else {
      tail = INFINITY;
    }
    if (tail < policy.tail_tol && n + m + 1 >= min_dim) break;
    if (n + m + 2 > policy.max_dim) {
      throw TruncationError("cannot certify tail mass below " +
                            std::to_string(policy.tail_tol) + " within " +
                            std::to_string(policy.max_dim) + " Fock levels (family " +
                            std::string(to_string(label.family)) + ")");
    }
    log_terms.push_back(exhausted ? -INFINITY : log_terms[n] + std::log(rho));
  }

  std::vector<complex> c(m + log_terms.size());
  for (std::size_t n = 0; n < log_terms.size(); ++n) {
    if (log_terms[n] == -INFINITY) continue;
    const double mag = std::exp(0.5 * (log_terms[n] - log_norm));
    c[m + n] = std::polar(mag, static_cast<double>(n) * phase);
  }
  FockState state(std::move(c), std::move(label), tail);
  // The stored levels carry 1 - (true tail) of the probability; anything
  // further off means the closed-form constant and the terms disagree.
  const double norm = state.norm_squared();
  if (!(norm - 1.0 < 1e-10 && 1.0 - norm < tail + 1e-10)) {
    throw ConvergenceError("normalization constant disagrees with the coefficient sum: "
                           "norm^2 - 1 = " + std::to_string(norm - 1.0));
  }
  return state;
}

inline double checked_log(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw OverflowError(std::string(what) + ": normalization constant not representable");
  }
  return std::log(v);
}

}  // namespace detail

/// Glauber coherent state, c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!).
inline FockState coherent(complex alpha, std::size_t min_dim = 1,
                          const TruncationPolicy& policy = {}) {
  const double x = std::norm(alpha);
  return detail::build_series_state(
      {Family::kCoherent, alpha, 0, std::nullopt}, std::arg(alpha),
      [x](std::size_t n) { return x / static_cast<double>(n + 1); }, x, min_dim, policy);
}

/// Photon-added coherent state a^{dagger m}|alpha>, normalized by
/// L_m(-|alpha|^2) m!.
inline FockState pacs(complex alpha, std::size_t m, std::size_t min_dim = 1,
                      const TruncationPolicy& policy = {}) {
  const double x = std::norm(alpha);
  const double md = static_cast<double>(m);
  // sum_n (m+1)_n x^n / (n!)^2 = 1F1(m+1; 1; x) = e^x L_m(-x)
  const double log_norm =
      x + detail::checked_log(specfun::laguerre(m, -x), "pacs");
  return detail::build_series_state(
      {Family::kPacs, alpha, m, std::nullopt}, std::arg(alpha),
      [x, md](std::size_t n) {
        const double nd = static_cast<double>(n);
        return x * (md + 1.0 + nd) / ((nd + 1.0) * (nd + 1.0));
      },
      log_norm, min_dim, policy);
}

/// Eigenstate of the deformed annihilation operator,
/// c_n = N r^{n/2} alpha^n / sqrt(n! (b)_n), N^{-2} = 0F1(; b; r |alpha|^2).
inline FockState nlcs_eigenstate(complex alpha, const KerrParams& params,
                                 std::size_t min_dim = 1,
                                 const TruncationPolicy& policy = {}) {
  const double rx = params.r() * std::norm(alpha);
  const double b = params.b();
  const double log_norm = detail::checked_log(
      specfun::hyp_pFq({}, {b}, rx, policy.series), "nlcs_eigenstate");
  return detail::build_series_state(
      {Family::kNlcs, alpha, 0, params.chi_over_omega0()}, std::arg(alpha),
      [rx, b](std::size_t n) {
        const double nd = static_cast<double>(n);
        return rx / ((nd + 1.0) * (b + nd));
      },
      log_norm, min_dim, policy);
}

/// Deformed displacement of the vacuum,
/// c_n = (1 - |zeta|^2)^{b/2} sqrt((b)_n / n!) zeta^n.
inline FockState docs(complex alpha, const KerrParams& params, std::size_t min_dim = 1,
                      const TruncationPolicy& policy = {}) {
  const complex zeta = docs_zeta(alpha, params);
  const double y = std::norm(zeta);
  const double b = params.b();
  return detail::build_series_state(
      {Family::kDocs, alpha, 0, params.chi_over_omega0()}, std::arg(zeta),
      [y, b](std::size_t n) {
        const double nd = static_cast<double>(n);
        return y * (b + nd) / (nd + 1.0);
      },
      -b * std::log1p(-y), min_dim, policy);
}

/// m deformed photons added to nlcs_eigenstate(alpha):
/// c_{n+m} ~ alpha^n r^{n/2} sqrt((m+1)_n (b+m)_n) / (n! (b)_n), with squared
/// norm 2F3(b+m, m+1; b, b, 1; r |alpha|^2).
inline FockState dpancs_a(complex alpha, std::size_t m, const KerrParams& params,
                          std::size_t min_dim = 1, const TruncationPolicy& policy = {}) {
  const double rx = params.r() * std::norm(alpha);
  const double b = params.b();
  const double md = static_cast<double>(m);
  const double log_norm = detail::checked_log(
      specfun::hyp_pFq({b + md, md + 1.0}, {b, b, 1.0}, rx, policy.series), "dpancs_a");
  return detail::build_series_state(
      {Family::kDpancsA, alpha, m, params.chi_over_omega0()}, std::arg(alpha),
      [rx, b, md](std::size_t n) {
        const double nd = static_cast<double>(n);
        return rx * (b + md + nd) * (md + 1.0 + nd) /
               ((b + nd) * (b + nd) * (nd + 1.0) * (nd + 1.0));
      },
      log_norm, min_dim, policy);
}

/// m deformed photons added to docs(alpha):
/// c_{n+m} ~ zeta^n sqrt((m+1)_n (b+m)_n) / n!, with squared norm
/// 2F1(b+m, m+1; 1; |zeta|^2).
inline FockState dpancs_d(complex alpha, std::size_t m, const KerrParams& params,
                          std::size_t min_dim = 1, const TruncationPolicy& policy = {}) {
  const complex zeta = docs_zeta(alpha, params);
  const double y = std::norm(zeta);
  const double b = params.b();
  const double md = static_cast<double>(m);
  const double log_norm = detail::checked_log(
      specfun::hyp_pFq({b + md, md + 1.0}, {1.0}, y, policy.series), "dpancs_d");
  return detail::build_series_state(
      {Family::kDpancsD, alpha, m, params.chi_over_omega0()}, std::arg(zeta),
      [y, b, md](std::size_t n) {
        const double nd = static_cast<double>(n);
        return y * (b + md + nd) * (md + 1.0 + nd) / ((nd + 1.0) * (nd + 1.0));
      },
      log_norm, min_dim, policy);
}

/// Normalized (A^dagger)^m |state>, by repeated application of the ladder.
///
/// The state is embedded in the ladder's space (which must be at least as
/// large); amplitude pushed past the top level is dropped and reported
/// through tail_bound().
inline FockState add_photons(const FockState& state, std::size_t m,
                             const DeformedLadder& ladder) {
  if (ladder.dimension() < state.dim()) {
    throw DomainError("add_photons: ladder dimension " + std::to_string(ladder.dimension()) +
                      " is smaller than the state dimension " + std::to_string(state.dim()));
  }
  std::vector<complex> v(ladder.dimension());
  std::copy(state.coefficients().begin(), state.coefficients().end(), v.begin());
  double dropped = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const complex top = v.back();
    dropped += std::norm(ladder.raising_element(ladder.dimension() - 1) * top);
    v = ladder.create(v);
  }
  double norm = 0.0;
  for (const auto& c : v) norm += std::norm(c);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("add_photons: resulting vector has zero or non-finite norm");
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& c : v) c *= scale;
  StateLabel label = state.label();
  label.family = Family::kCustom;
  label.m += m;
  label.chi_over_omega0 = ladder.params().chi_over_omega0();
  return FockState(std::move(v), label, state.tail_bound() + dropped / norm);
}

/// Builds any closed-form family from its label-level parameters, checking
/// that the combination is meaningful.
inline FockState make_state(Family family, complex alpha, std::size_t m,
                            std::optional<KerrParams> params, std::size_t min_dim = 1,
                            const TruncationPolicy& policy = {}) {
  if (is_deformed(family) && !params) {
    throw DomainError("family " + std::string(to_string(family)) +
                      " requires chi/omega0");
  }
  if (!is_deformed(family) && params) {
    throw DomainError("family " + std::string(to_string(family)) +
                      " is undeformed and takes no chi/omega0");
  }
  if (!takes_photon_count(family) && m != 0) {
    throw DomainError("family " + std::string(to_string(family)) +
                      " takes no photon count m");
  }
  switch (family) {
    case Family::kCoherent: return coherent(alpha, min_dim, policy);
    case Family::kPacs: return pacs(alpha, m, min_dim, policy);
    case Family::kNlcs: return nlcs_eigenstate(alpha, *params, min_dim, policy);
    case Family::kDocs: return docs(alpha, *params, min_dim, policy);
    case Family::kDpancsA: return dpancs_a(alpha, m, *params, min_dim, policy);
    case Family::kDpancsD: return dpancs_d(alpha, m, *params, min_dim, policy);
    case Family::kCustom: break;
  }
  throw DomainError("make_state: family 'custom' has no closed form");
}

}  // namespace kerrcs

#endif  // KERRCS_STATES_HPP
