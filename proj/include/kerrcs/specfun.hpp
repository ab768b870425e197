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

// Special-function kernels: Pochhammer symbols, Laguerre polynomials and
// generalized hypergeometric series. Everything is plain real arithmetic
// (no gamma-function calls) so results are reproducible bit for bit.

#ifndef KERRCS_SPECFUN_HPP
#define KERRCS_SPECFUN_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kerrcs/errors.hpp"
#include "kerrcs/kerr_params.hpp"
#include "kerrcs/series.hpp"

namespace kerrcs::specfun {

namespace detail {

inline void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw OverflowError(std::string(what) + ": result overflows double");
  }
}

inline bool is_nonpositive_integer(double v) {
  return v <= 0.0 && v == std::floor(v);
}

}  // namespace detail

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), evaluated as a product.
inline double pochhammer(double a, std::size_t n) {
  double p = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    p *= a + static_cast<double>(j);
  }
  detail::check_finite(p, "pochhammer");
  return p;
}

/// Sum of log(a + j) for j < n; requires a > 0.
inline double log_pochhammer(double a, std::size_t n) {
  if (!(a > 0.0)) {
    throw DomainError("log_pochhammer: a must be positive");
  }
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    s += std::log(a + static_cast<double>(j));
  }
  return s;
}

/// Generalized Laguerre polynomial L_n^{(k)}(x) for real superscript k.
///
/// Uses the three-term recurrence in the degree, which holds for any real k
/// and avoids the cancellation of the alternating power sum.
inline double assoc_laguerre_recurrence(std::size_t n, double k, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + k - x;
  for (std::size_t j = 1; j < n; ++j) {
    const double jd = static_cast<double>(j);
    const double next = ((2.0 * jd + 1.0 + k - x) * cur - (jd + k) * prev) /
                        (jd + 1.0);
    prev = cur;
    cur = next;
  }
  detail::check_finite(cur, "assoc_laguerre");
  return cur;
}

/// Laguerre polynomial L_m(x).
inline double laguerre(std::size_t m, double x) {
  return assoc_laguerre_recurrence(m, 0.0, x);
}

/// Associated Laguerre polynomial L_n^{(k)}(x) with integer superscript.
///
/// A negative superscript -j with n >= j is mapped through
/// L_n^{(-j)}(x) = (-x)^j (n-j)!/n! L_{n-j}^{(j)}(x); for n < j the
/// polynomial is evaluated directly from its recurrence.
inline double assoc_laguerre(std::size_t n, int k, double x) {
  if (k >= 0 || n < static_cast<std::size_t>(-static_cast<long>(k))) {
    return assoc_laguerre_recurrence(n, static_cast<double>(k), x);
  }
  const auto j = static_cast<std::size_t>(-static_cast<long>(k));
  const double inner = assoc_laguerre_recurrence(n - j, static_cast<double>(j), x);
  const double factor =
      std::pow(-x, static_cast<double>(j)) / pochhammer(static_cast<double>(n - j + 1), j);
  const double v = factor * inner;
  detail::check_finite(v, "assoc_laguerre");
  return v;
}

/// A real number stored as mantissa * exp(log_scale).
struct ScaledReal {
  double mantissa = 0.0;
  double log_scale = 0.0;

  double value() const { return mantissa * std::exp(log_scale); }
};

/// L_0^{(k)}(x), ..., L_{max_degree}^{(k)}(x) from one recurrence run,
/// rescaled on the fly so that large superscripts cannot overflow.
inline std::vector<ScaledReal> assoc_laguerre_sequence(std::size_t max_degree,
                                                       double k, double x) {
  constexpr double kRescaleAbove = 1e150;
  std::vector<ScaledReal> out(max_degree + 1);
  double log_scale = 0.0;
  double prev = 1.0;
  out[0] = {1.0, 0.0};
  if (max_degree == 0) return out;
  double cur = 1.0 + k - x;
  out[1] = {cur, 0.0};
  for (std::size_t j = 1; j < max_degree; ++j) {
    const double jd = static_cast<double>(j);
    double next = ((2.0 * jd + 1.0 + k - x) * cur - (jd + k) * prev) / (jd + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleAbove) {
      const double s = std::log(std::abs(cur));
      cur /= std::abs(cur);
      prev *= std::exp(-s);
      log_scale += s;
    }
    out[j + 1] = {cur, log_scale};
  }
  return out;
}

/// Generalized hypergeometric series pFq(a; b; x), summed with the term-ratio
/// recurrence under the given tolerance policy.
///
/// Throws DomainError on a denominator pole or a divergent configuration
/// (p > q + 1, or p = q + 1 with |x| >= 1, unless the series terminates) and
/// ConvergenceError when max_terms is exhausted.
inline double hyp_pFq(std::span<const double> a, std::span<const double> b,
                      double x, const SeriesTolerance& tol = {}) {
  bool terminates = false;
  for (double ai : a) terminates = terminates || detail::is_nonpositive_integer(ai);
  if (!terminates && x != 0.0) {
    if (a.size() > b.size() + 1) {
      throw DomainError("hyp_pFq: series diverges for p > q + 1");
    }
    if (a.size() == b.size() + 1 && std::abs(x) >= 1.0) {
      throw DomainError("hyp_pFq: |x| >= 1 outside the disc of convergence, x = " +
                        std::to_string(x));
    }
  }

  SeriesMonitor monitor(tol);
  double term = 1.0;
  double sum = 1.0;
  monitor.converged(std::abs(term), std::abs(sum));
  for (std::size_t n = 0;; ++n) {
    const double nd = static_cast<double>(n);
    double ratio = x / (nd + 1.0);
    bool zero_numerator = false;
    for (double ai : a) {
      ratio *= ai + nd;
      zero_numerator = zero_numerator || ai + nd == 0.0;
    }
    if (zero_numerator || x == 0.0) return sum;
    for (double bj : b) {
      if (bj + nd == 0.0) {
        throw DomainError("hyp_pFq: denominator parameter " + std::to_string(bj) +
                          " hits a pole at term " + std::to_string(n));
      }
      ratio /= bj + nd;
    }
    term *= ratio;
    sum += term;
    detail::check_finite(sum, "hyp_pFq");
    if (monitor.converged(std::abs(term), std::abs(sum), std::abs(ratio))) return sum;
    if (monitor.exhausted()) {
      throw ConvergenceError("hyp_pFq: no convergence within " +
                             std::to_string(tol.max_terms) + " terms");
    }
  }
}

inline double hyp_pFq(std::initializer_list<double> a, std::initializer_list<double> b,
                      double x, const SeriesTolerance& tol = {}) {
  return hyp_pFq(std::span<const double>(a.begin(), a.size()),
                 std::span<const double>(b.begin(), b.size()), x, tol);
}

/// Deformed factorial f(n)! = f(n) f(n-1) ... f(1), with f(0)! = 1.
inline double f_factorial(std::size_t n, const KerrParams& params) {
  double p = 1.0;
  for (std::size_t k = 1; k <= n; ++k) p *= params.f(k);
  detail::check_finite(p, "f_factorial");
  return p;
}

}  // namespace kerrcs::specfun

#endif  // KERRCS_SPECFUN_HPP
