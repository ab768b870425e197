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

#ifndef KERRCS_STATS_HPP
#define KERRCS_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kerrcs/detail/parallel.hpp"
#include "kerrcs/errors.hpp"
#include "kerrcs/fock_state.hpp"
#include "kerrcs/kerr_params.hpp"
#include "kerrcs/specfun.hpp"
#include "kerrcs/states.hpp"

namespace kerrcs {

/// Photon-number distribution P_k, k = 0..N-1.
struct PhotonDistribution {
  std::vector<double> probabilities;
  StateLabel source;

  double total() const {
    double s = 0.0;
    for (double p : probabilities) s += p;
    return s;
  }

  double mean() const {
    double s = 0.0;
    for (std::size_t k = 0; k < probabilities.size(); ++k) s += static_cast<double>(k) * probabilities[k];
    return s;
  }

  double second_moment() const {
    double s = 0.0;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
      const double kd = static_cast<double>(k);
      s += kd * kd * probabilities[k];
    }
    return s;
  }

  /// Central second moment, summed as sum P_k (k - mean)^2 to avoid the
  /// cancellation in <n^2> - <n>^2.
  double variance() const {
    const double mu = mean();
    double s = 0.0;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
      const double d = static_cast<double>(k) - mu;
      s += d * d * probabilities[k];
    }
    return s;
  }
};

inline PhotonDistribution photon_distribution(const FockState& state) {
  PhotonDistribution d;
  d.source = state.label();
  d.probabilities.reserve(state.dim());
  for (const auto& c : state.coefficients()) d.probabilities.push_back(std::norm(c));
  return d;
}

namespace detail {

/// Common driver for the explicit P_{k,m} formulas: log_pk(k) returns
/// log P_k for k >= m (before dividing by the normalization constant).
template <typename LogTerm>
PhotonDistribution closed_form_distribution(StateLabel label, double log_norm,
                                            std::size_t kmax, LogTerm log_pk) {
  const std::size_t m = label.m;
  if (kmax < m) {
    throw DomainError("closed-form distribution: kmax (" + std::to_string(kmax) +
                      ") must be at least m (" + std::to_string(m) + ")");
  }
  PhotonDistribution d;
  d.source = std::move(label);
  d.probabilities.assign(kmax + 1, 0.0);
  for (std::size_t k = m; k <= kmax; ++k) {
    d.probabilities[k] = std::exp(log_pk(k) - log_norm);
  }
  const double total = d.total();
  if (!(std::abs(total - 1.0) < 1e-10)) {
    throw TruncationError("closed-form distribution is not normalized within kmax = " +
                          std::to_string(kmax) + ": sum P_k = " + std::to_string(total));
  }
  return d;
}

/// log k! and log (b)_k for k = 0..kmax.
struct LogTables {
  std::vector<double> factorial;
  std::vector<double> pochhammer_b;

  LogTables(double b, std::size_t kmax) : factorial(kmax + 1), pochhammer_b(kmax + 1) {
    for (std::size_t k = 1; k <= kmax; ++k) {
      factorial[k] = factorial[k - 1] + std::log(static_cast<double>(k));
      pochhammer_b[k] = pochhammer_b[k - 1] + std::log(b + static_cast<double>(k - 1));
    }
  }
};

/// log of x^n for x >= 0 with the 0^0 = 1 convention.
inline double log_power(double x, double n) {
  if (n == 0.0) return 0.0;
  return n * std::log(x);
}

}  // namespace detail

/// Explicit probability formula for the A-family (photons added to the
/// annihilation-operator eigenstate):
///   P_k = N^{-1} r^{k-m} k! (b)_k |alpha|^{2(k-m)}
///         / (m! (b)_m [(k-m)!]^2 [(b)_{k-m}]^2),
/// N = 2F3(b+m, m+1; b, b, 1; r |alpha|^2). Zero for k < m.
inline PhotonDistribution closed_form_distribution_a(complex alpha, std::size_t m,
                                                     const KerrParams& params,
                                                     std::size_t kmax,
                                                     const SeriesTolerance& tol = {}) {
  const double b = params.b();
  const double r = params.r();
  const double x = std::norm(alpha);
  const double md = static_cast<double>(m);
  const double norm = specfun::hyp_pFq({b + md, md + 1.0}, {b, b, 1.0}, r * x, tol);
  const detail::LogTables lt(b, std::max(kmax, m));
  const double log_m_part = lt.factorial[m] + lt.pochhammer_b[m];
  return detail::closed_form_distribution(
      {Family::kDpancsA, alpha, m, params.chi_over_omega0()}, std::log(norm), kmax,
      [&](std::size_t k) {
        const std::size_t j = k - m;
        const double jd = static_cast<double>(j);
        return detail::log_power(r, jd) + lt.factorial[k] + lt.pochhammer_b[k] +
               detail::log_power(x, jd) - log_m_part - 2.0 * lt.factorial[j] -
               2.0 * lt.pochhammer_b[j];
      });
}

/// Explicit probability formula for the D-family (photons added to the
/// displaced vacuum):
///   P_k = N^{-1} k! (b)_k |zeta|^{2(k-m)} / (m! (b)_m [(k-m)!]^2),
/// N = 2F1(b+m, m+1; 1; |zeta|^2). Zero for k < m.
inline PhotonDistribution closed_form_distribution_d(complex alpha, std::size_t m,
                                                     const KerrParams& params,
                                                     std::size_t kmax,
                                                     const SeriesTolerance& tol = {}) {
  const double b = params.b();
  const double y = std::norm(docs_zeta(alpha, params));
  const double md = static_cast<double>(m);
  const double norm = specfun::hyp_pFq({b + md, md + 1.0}, {1.0}, y, tol);
  const detail::LogTables lt(b, std::max(kmax, m));
  const double log_m_part = lt.factorial[m] + lt.pochhammer_b[m];
  return detail::closed_form_distribution(
      {Family::kDpancsD, alpha, m, params.chi_over_omega0()}, std::log(norm), kmax,
      [&](std::size_t k) {
        const std::size_t j = k - m;
        return lt.factorial[k] + lt.pochhammer_b[k] +
               detail::log_power(y, static_cast<double>(j)) - log_m_part -
               2.0 * lt.factorial[j];
      });
}

/// Mandel parameter in the convention Q = (<n^2> - <n>^2) / <n>, so that a
/// Poissonian distribution gives Q = 1 (the usual Q_M is Q - 1).
inline double mandel_q(const PhotonDistribution& dist) {
  const double mean = dist.mean();
  if (!(mean > 0.0)) {
    throw DomainError("mandel_q: undefined for <n> = 0 (vacuum)");
  }
  return dist.variance() / mean;
}

inline double mandel_q(const FockState& state) {
  return mandel_q(photon_distribution(state));
}

/// Standard Mandel parameter Q_M = Q - 1 (Poissonian = 0).
inline double standard_mandel(double q_ratio) { return q_ratio - 1.0; }

/// Q as a function of real alpha for one family.
struct MandelSweep {
  Family family = Family::kCoherent;
  std::size_t m = 0;
  std::optional<double> chi_over_omega0;
  std::vector<double> alphas;
  std::vector<double> q_values;
  /// Empty on success, otherwise the reason the point failed.
  std::vector<std::string> errors;

  bool ok() const {
    for (const auto& e : errors) {
      if (!e.empty()) return false;
    }
    return true;
  }
};

/// Evaluates Q at every alpha. alpha = 0 yields the analytic limit: 0 for
/// m >= 1 (the state is |m>) and 1 for m = 0. A failing point is recorded in
/// `errors` (with q = NaN) and the sweep continues. Points are independent
/// and may run on `threads` workers; output order follows `alphas`.
inline MandelSweep mandel_sweep(Family family, std::size_t m,
                                std::optional<KerrParams> params,
                                std::span<const double> alphas,
                                const TruncationPolicy& policy = {},
                                unsigned threads = 1) {
  MandelSweep sweep;
  sweep.family = family;
  sweep.m = m;
  if (params) sweep.chi_over_omega0 = params->chi_over_omega0();
  sweep.alphas.assign(alphas.begin(), alphas.end());
  sweep.q_values.assign(alphas.size(), NAN);
  sweep.errors.assign(alphas.size(), std::string());
  // Validates the family/parameter combination once, before the sweep.
  make_state(family, 0.0, m, params, 1, policy);

  detail::parallel_for(alphas.size(), threads, [&](std::size_t i) {
    const double a = alphas[i];
    try {
      if (!(a >= 0.0) || !std::isfinite(a)) {
        throw DomainError("alpha must be real and nonnegative, got " + std::to_string(a));
      }
      if (a == 0.0) {
        sweep.q_values[i] = m >= 1 ? 0.0 : 1.0;
        return;
      }
      sweep.q_values[i] = mandel_q(make_state(family, a, m, params, 1, policy));
    } catch (const std::exception& e) {
      sweep.errors[i] = "alpha = " + std::to_string(a) + ": " + e.what();
    }
  });
  return sweep;
}

}  // namespace kerrcs

#endif  // KERRCS_STATS_HPP
