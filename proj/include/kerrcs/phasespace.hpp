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

// Husimi Q and Wigner functions.
//
// Two independent routes are provided for every family:
//  * generic: overlaps of an arbitrary FockState with coherent states
//    (Husimi) or with displaced number states (Wigner);
//  * closed form: the explicit series for each state family, evaluated
//    directly from the family parameters.

#ifndef KERRCS_PHASESPACE_HPP
#define KERRCS_PHASESPACE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "kerrcs/displacement.hpp"
#include "kerrcs/errors.hpp"
#include "kerrcs/fock_state.hpp"
#include "kerrcs/kerr_params.hpp"
#include "kerrcs/series.hpp"
#include "kerrcs/specfun.hpp"
#include "kerrcs/states.hpp"

namespace kerrcs {

struct PhaseSpaceOptions {
  /// Allowed absolute error of a Husimi value caused by state truncation.
  double husimi_truncation_tol = 1e-8;
  /// Completeness deficit 1 - sum_k |<alpha,k|psi>|^2 at which the
  /// alternating Wigner series is cut.
  double wigner_tail_tol = 1e-10;
  /// Largest displaced-number index the Wigner series may use.
  std::size_t max_kmax = 4096;
  SeriesTolerance series{};
};

// ---------------------------------------------------------------------------
// Generic route
// ---------------------------------------------------------------------------

namespace detail {

struct HusimiValue {
  double q;
  double error_bound;
};

/// Q(z) on the stored levels, with a bound on what the cut-off levels can
/// contribute: |<z|psi>| moves by at most sqrt(tail_psi * tail_z), where
/// tail_z is the Poisson(|z|^2) mass past the truncation.
inline HusimiValue husimi_truncated(const FockState& state, complex z) {
  const double x = std::norm(z);
  const complex zc = std::conj(z);
  complex w = std::exp(-0.5 * x);  // e^{-|z|^2/2} (z*)^n / sqrt(n!)
  complex overlap = 0.0;
  double covered = 0.0;
  const auto c = state.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) {
    overlap += w * c[n];
    covered += std::norm(w);
    w *= zc / std::sqrt(static_cast<double>(n + 1));
  }
  const double tail_z = std::max(0.0, 1.0 - covered);
  const double eps = std::sqrt(state.tail_bound() * tail_z);
  return {std::norm(overlap) / std::numbers::pi,
          (2.0 * std::abs(overlap) * eps + eps * eps) / std::numbers::pi};
}

}  // namespace detail

/// Q(z) = |<z|psi>|^2 / pi with <z|psi> = e^{-|z|^2/2} sum_n (z*)^n c_n / sqrt(n!).
///
/// If the truncation error bound exceeds options.husimi_truncation_tol and
/// the state carries a closed-form label, the state is rebuilt on a larger
/// space (doubling, up to the default TruncationPolicy cap). Otherwise a
/// TruncationError is raised.
inline double husimi(const FockState& state, complex z, const PhaseSpaceOptions& options = {}) {
  auto v = detail::husimi_truncated(state, z);
  if (v.error_bound <= options.husimi_truncation_tol) return v.q;
  const StateLabel& label = state.label();
  if (label.family != Family::kCustom) {
    const std::optional<KerrParams> params =
        label.chi_over_omega0 ? std::optional<KerrParams>(KerrParams(*label.chi_over_omega0))
                              : std::nullopt;
    const TruncationPolicy policy;
    for (std::size_t dim = 2 * state.dim(); dim <= policy.max_dim; dim *= 2) {
      const FockState wider = make_state(label.family, label.alpha, label.m, params, dim, policy);
      v = detail::husimi_truncated(wider, z);
      if (v.error_bound <= options.husimi_truncation_tol) return v.q;
    }
  }
  throw TruncationError("husimi: state truncated at dimension " + std::to_string(state.dim()) +
                        " is insufficient at |z| = " + std::to_string(std::abs(z)) +
                        " (error bound " + std::to_string(v.error_bound) + ")");
}

/// Wigner function from a fixed number of displaced number states,
/// W = (2/pi) sum_{k<=kmax} (-1)^k |<alpha,k|psi>|^2.
///
/// Throws TruncationError when the completeness deficit at kmax exceeds
/// options.wigner_tail_tol, since the neglected alternating tail is bounded
/// by that deficit.
inline double wigner(const FockState& state, complex alpha, std::size_t kmax,
                     const PhaseSpaceOptions& options = {}) {
  const auto ov = displaced_number_overlaps(alpha, state, kmax);
  double signed_sum = 0.0;
  double mass = 0.0;
  for (std::size_t k = 0; k < ov.size(); ++k) {
    const double p = std::norm(ov[k]);
    mass += p;
    signed_sum += (k % 2 == 0) ? p : -p;
  }
  const double deficit = state.norm_squared() - mass;
  if (deficit > options.wigner_tail_tol) {
    throw TruncationError("wigner: completeness deficit " + std::to_string(deficit) +
                          " at kmax = " + std::to_string(kmax));
  }
  return 2.0 / std::numbers::pi * signed_sum;
}

/// Smallest displaced-number cutoff worth trying first at alpha.
inline std::size_t initial_wigner_kmax(const FockState& state, complex alpha) {
  const double x = std::norm(alpha);
  return state.dim() + static_cast<std::size_t>(std::ceil(x + 8.0 * std::sqrt(x + 1.0))) + 8;
}

/// Wigner function with the cutoff grown until the completeness deficit is
/// below options.wigner_tail_tol.
inline double wigner(const FockState& state, complex alpha, const PhaseSpaceOptions& options = {}) {
  std::size_t kmax = std::min(initial_wigner_kmax(state, alpha), options.max_kmax);
  for (;;) {
    try {
      return wigner(state, alpha, kmax, options);
    } catch (const TruncationError&) {
      if (kmax >= options.max_kmax) throw;
      kmax = std::min(2 * kmax, options.max_kmax);
    }
  }
}

// ---------------------------------------------------------------------------
// Closed-form route
// ---------------------------------------------------------------------------

/// Q of a coherent state |alpha>: exp(-|z - alpha|^2) / pi.
inline double husimi_closed_coherent(complex alpha, complex z) {
  return std::exp(-std::norm(z - alpha)) / std::numbers::pi;
}

/// Q of the photon-added coherent state:
/// |z|^{2m} exp(-|z - alpha|^2) / (pi m! L_m(-|alpha|^2)).
inline double husimi_closed_pacs(complex alpha, std::size_t m, complex z) {
  const double md = static_cast<double>(m);
  return std::pow(std::norm(z), md) * std::exp(-std::norm(z - alpha)) /
         (std::numbers::pi * specfun::pochhammer(1.0, m) *
          specfun::laguerre(m, -std::norm(alpha)));
}

namespace detail {

/// sum_n u^n g_n with g_{n+1}/g_n = ratio(n), g_0 = 1.
template <typename Ratio>
complex power_series(complex u, Ratio ratio, const SeriesTolerance& tol, const char* what) {
  SeriesMonitor monitor(tol);
  complex term = 1.0;
  complex sum = 1.0;
  monitor.converged(1.0, 1.0);
  for (std::size_t n = 0;; ++n) {
    const complex step = u * ratio(n);
    term *= step;
    sum += term;
    if (monitor.converged(std::abs(term), std::abs(sum), std::abs(step))) return sum;
    if (monitor.exhausted()) {
      throw ConvergenceError(std::string(what) + ": series did not converge");
    }
  }
}

}  // namespace detail

/// Explicit Husimi function of the A-family state (m photons added to the
/// annihilation-operator eigenstate with parameter alpha):
///   Q(z) = e^{-|z|^2} |z|^{2m} / (pi N m!)
///          |sum_n (z* alpha)^n / n! r^{n/2} sqrt((b+m)_n) / (b)_n|^2,
///   N = 2F3(b+m, m+1; b, b, 1; r |alpha|^2).
inline double husimi_closed_a(complex alpha, std::size_t m, const KerrParams& params,
                              complex z, const SeriesTolerance& tol = {}) {
  const double b = params.b();
  const double r = params.r();
  const double md = static_cast<double>(m);
  const double norm = specfun::hyp_pFq({b + md, md + 1.0}, {b, b, 1.0}, r * std::norm(alpha), tol);
  const complex s = detail::power_series(
      std::conj(z) * alpha * std::sqrt(r),
      [b, md](std::size_t n) {
        const double nd = static_cast<double>(n);
        return std::sqrt(b + md + nd) / ((nd + 1.0) * (b + nd));
      },
      tol, "husimi_closed_a");
  return std::exp(-std::norm(z)) * std::pow(std::norm(z), md) * std::norm(s) /
         (std::numbers::pi * norm * specfun::pochhammer(1.0, m));
}

/// Explicit Husimi function of the D-family state:
///   Q(z) = e^{-|z|^2} |z|^{2m} / (pi N m!) |sum_n (z* zeta)^n / n! sqrt((b+m)_n)|^2,
///   N = 2F1(b+m, m+1; 1; |zeta|^2).
inline double husimi_closed_d(complex alpha, std::size_t m, const KerrParams& params,
                              complex z, const SeriesTolerance& tol = {}) {
  const double b = params.b();
  const double md = static_cast<double>(m);
  const complex zeta = docs_zeta(alpha, params);
  const double norm = specfun::hyp_pFq({b + md, md + 1.0}, {1.0}, std::norm(zeta), tol);
  const complex s = detail::power_series(
      std::conj(z) * zeta,
      [b, md](std::size_t n) {
        const double nd = static_cast<double>(n);
        return std::sqrt(b + md + nd) / (nd + 1.0);
      },
      tol, "husimi_closed_d");
  return std::exp(-std::norm(z)) * std::pow(std::norm(z), md) * std::norm(s) /
         (std::numbers::pi * norm * specfun::pochhammer(1.0, m));
}

/// Wigner function of a coherent state |beta>: (2/pi) exp(-2|beta - alpha|^2).
inline double wigner_closed_coherent(complex alpha, complex beta) {
  return 2.0 / std::numbers::pi * std::exp(-2.0 * std::norm(beta - alpha));
}

namespace detail {

// S_k cancels terms of size ~e^{|alpha|^2}, so double and even long double
// lose everything near the edge of a [-4,4]^2 grid. Quad precision keeps
// about 34 digits where the compiler offers it.
#if defined(__SIZEOF_FLOAT128__) && !defined(KERRCS_NO_FLOAT128)
using wreal = __float128;
inline constexpr double kWignerEpsilon = 1.93e-34;
#else
using wreal = long double;
inline constexpr double kWignerEpsilon = std::numeric_limits<long double>::epsilon();
#endif

// Minimal complex arithmetic over wreal; std::complex is only specified for
// the standard floating types.
struct wcomplex {
  wreal re = 0;
  wreal im = 0;
  wcomplex() = default;
  wcomplex(wreal r, wreal i = 0) : re(r), im(i) {}
  wcomplex& operator+=(const wcomplex& o) { re += o.re; im += o.im; return *this; }
  wcomplex& operator*=(const wcomplex& o) { return *this = *this * o; }
  wcomplex& operator*=(wreal v) { re *= v; im *= v; return *this; }
  friend wcomplex operator*(const wcomplex& a, const wcomplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend wcomplex operator*(const wcomplex& a, wreal v) { return {a.re * v, a.im * v}; }
  friend wcomplex conj(const wcomplex& a) { return {a.re, -a.im}; }
  friend wcomplex operator-(const wcomplex& a) { return {-a.re, -a.im}; }
  wreal norm() const { return re * re + im * im; }
  double abs() const { return std::hypot(static_cast<double>(re), static_cast<double>(im)); }
};

/// Explicit triple series for photon-added states whose Fock amplitudes are
/// c_{n+m} = h_n / sqrt(N m!) * sqrt((n+m)!) with h_{n+1}/h_n = u * g(n):
///
///   W(alpha) = 2 e^{-|alpha|^2} / (pi N) sum_k (-1)^k (k!/m!) |alpha|^{2(m-k)}
///              | sum_{l<=k} (-|alpha|^2)^l / l!
///                sum_n (alpha* )^n h_n binom(n+m, k-l) |^2.
///
/// The powers of |alpha| are folded into the inner terms, which keeps every
/// exponent nonnegative (binom(n+m, k-l) vanishes whenever n+m-k+l < 0), so
/// the expression is regular at alpha = 0. Grouping by j = k - l the inner
/// double sum becomes the convolution
///   S_k = sum_{j<=k} (-alpha)^{k-j} / (k-j)! U_j,
///   U_j = sum_{n >= max(0, j-m)} h_n binom(n+m, j) (alpha*)^{n+m-j}.
/// The outer sum over k stops once sum_k |<alpha,k|psi>|^2 reaches
/// 1 - options.wigner_tail_tol (displaced number states are complete).
///
/// A running rounding-error estimate is kept; if cancellation has eaten the
/// precision needed for wigner_tail_tol the call throws instead of returning
/// noise.
template <typename Ratio>
double wigner_photon_added_series(complex alpha_d, complex u_d, std::size_t m, double norm,
                                  Ratio ratio, const PhaseSpaceOptions& options,
                                  const char* what) {
  const wcomplex alpha(alpha_d.real(), alpha_d.imag());
  const wcomplex alpha_c = conj(alpha);
  const wcomplex u(u_d.real(), u_d.imag());
  const double x = std::norm(alpha_d);
  // The U_j feed a cancelling convolution, so they are summed to working
  // precision rather than to options.series.rel_tol.
  SeriesTolerance tol = options.series;
  tol.rel_tol = kWignerEpsilon;

  // h_n, extended on demand.
  std::vector<wcomplex> h{wcomplex(1)};
  auto h_at = [&](std::size_t n) -> const wcomplex& {
    while (h.size() <= n) {
      const std::size_t j = h.size() - 1;
      h.push_back(h[j] * u * static_cast<wreal>(ratio(j)));
    }
    return h[n];
  };

  struct Coefficient {
    wcomplex value;
    double abs_sum;  // sum of |terms|, for the rounding estimate
  };
  auto u_coefficient = [&](std::size_t j) -> Coefficient {
    const std::size_t n0 = j > m ? j - m : 0;
    // binom(n0 + m, j) (alpha*)^{n0 + m - j}
    wreal binom = 1;
    for (std::size_t i = 0; i < j; ++i) {
      binom *= static_cast<wreal>(n0 + m - i) / static_cast<wreal>(i + 1);
    }
    wcomplex weight(binom);
    for (std::size_t i = 0; i < n0 + m - j; ++i) weight *= alpha_c;
    wcomplex sum;
    double abs_sum = 0.0;
    SeriesMonitor monitor(tol);
    for (std::size_t n = n0;; ++n) {
      const wcomplex term = h_at(n) * weight;
      sum += term;
      abs_sum += term.abs();
      const wreal top = static_cast<wreal>(n + 1 + m);
      const wreal step = top / (top - static_cast<wreal>(j));
      // |next term / this term|; decreasing once n is past the peak
      const double next_ratio = std::abs(u_d) * std::abs(ratio(n)) * std::sqrt(x) *
                                static_cast<double>(step);
      if (monitor.converged(term.abs(), sum.abs(), next_ratio)) return {sum, abs_sum};
      if (monitor.exhausted()) {
        throw ConvergenceError(std::string(what) + ": inner series did not converge");
      }
      weight *= alpha_c * step;
    }
  };

  const wreal prefactor_sq = static_cast<wreal>(std::exp(-x) / norm);
  std::vector<Coefficient> u_coeffs;
  wreal ratio_km = 1;  // k! / m!, updated incrementally
  for (std::size_t i = 1; i <= m; ++i) ratio_km /= static_cast<wreal>(i);
  wreal mass = 0;
  wreal signed_sum = 0;
  double rounding = 0.0;
  int stalled = 0;
  wreal previous = 0;
  for (std::size_t k = 0;; ++k) {
    if (k > 0) ratio_km *= static_cast<wreal>(k);
    u_coeffs.push_back(u_coefficient(k));
    wcomplex s;
    double s_scale = 0.0;
    wcomplex w(1);  // (-alpha)^{k-j} / (k-j)!
    for (std::size_t step = 0; step <= k; ++step) {
      const Coefficient& c = u_coeffs[k - step];
      s += w * c.value;
      s_scale += w.abs() * c.abs_sum;
      w *= -alpha * (wreal(1) / static_cast<wreal>(step + 1));
    }
    const wreal scale = prefactor_sq * ratio_km;
    const wreal p = scale * s.norm();
    // rounding plus the truncation of each U_j
    const double s_err = 5.0 * static_cast<double>(k + 2) * kWignerEpsilon * s_scale;
    rounding += static_cast<double>(scale * static_cast<wreal>(s_err * (2.0 * s.abs() + s_err)));
    if (!std::isfinite(static_cast<double>(p)) || !std::isfinite(rounding)) {
      throw OverflowError(std::string(what) + ": term overflow at k = " + std::to_string(k));
    }
    mass += p;
    signed_sum += (k % 2 == 0) ? p : -p;
    if (rounding > options.wigner_tail_tol) {
      throw ConvergenceError(std::string(what) + ": cancellation at alpha = (" +
                             std::to_string(alpha_d.real()) + ", " +
                             std::to_string(alpha_d.imag()) + ") exceeds working precision");
    }
    const double deficit = 1.0 - static_cast<double>(mass);
    if (deficit < options.wigner_tail_tol) break;
    // Falling terms far below the missing mass for this long will not
    // supply it.
    stalled = p < previous && static_cast<double>(p) < 1e-6 * deficit ? stalled + 1 : 0;
    previous = p;
    if (stalled >= 200) {
      throw ConvergenceError(std::string(what) + ": completeness stalled at 1 - mass = " +
                             std::to_string(deficit) + ", k = " + std::to_string(k));
    }
    if (k >= options.max_kmax) {
      throw ConvergenceError(std::string(what) + ": completeness not reached by k = " +
                             std::to_string(k));
    }
  }
  return 2.0 / std::numbers::pi * static_cast<double>(signed_sum);
}

}  // namespace detail

/// Wigner function of the photon-added coherent state with parameter beta,
/// through the same series with h_n = beta^n / n!.
inline double wigner_closed_pacs(complex alpha, complex beta, std::size_t m,
                                 const PhaseSpaceOptions& options = {}) {
  const double x = std::norm(beta);
  const double norm = std::exp(x) * specfun::laguerre(m, -x);
  return detail::wigner_photon_added_series(
      alpha, beta, m, norm, [](std::size_t n) { return 1.0 / (static_cast<double>(n) + 1.0); },
      options, "wigner_closed_pacs");
}

/// Explicit Wigner function W_{f,A}^m(alpha) of the A-family state with
/// parameter beta (m photons added to the annihilation-operator eigenstate).
inline double wigner_closed_a(complex alpha, complex beta, std::size_t m,
                              const KerrParams& params, const PhaseSpaceOptions& options = {}) {
  const double b = params.b();
  const double r = params.r();
  const double md = static_cast<double>(m);
  const double norm =
      specfun::hyp_pFq({b + md, md + 1.0}, {b, b, 1.0}, r * std::norm(beta), options.series);
  // h_n = (beta sqrt(r))^n sqrt((b+m)_n) / (n! (b)_n)
  return detail::wigner_photon_added_series(
      alpha, beta * std::sqrt(r), m, norm,
      [b, md](std::size_t n) {
        const double nd = static_cast<double>(n);
        return std::sqrt(b + md + nd) / ((nd + 1.0) * (b + nd));
      },
      options, "wigner_closed_a");
}

/// Explicit Wigner function W_{f,D}^m(alpha) of the D-family state with
/// parameter beta (m photons added to the displaced vacuum zeta(beta)).
inline double wigner_closed_d(complex alpha, complex beta, std::size_t m,
                              const KerrParams& params, const PhaseSpaceOptions& options = {}) {
  const double b = params.b();
  const double md = static_cast<double>(m);
  const complex zeta = docs_zeta(beta, params);
  const double norm = specfun::hyp_pFq({b + md, md + 1.0}, {1.0}, std::norm(zeta), options.series);
  // h_n = zeta^n sqrt((b+m)_n) / n!
  return detail::wigner_photon_added_series(
      alpha, zeta, m, norm,
      [b, md](std::size_t n) {
        const double nd = static_cast<double>(n);
        return std::sqrt(b + md + nd) / (nd + 1.0);
      },
      options, "wigner_closed_d");
}

}  // namespace kerrcs

#endif  // KERRCS_PHASESPACE_HPP
