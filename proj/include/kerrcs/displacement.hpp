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

#ifndef KERRCS_DISPLACEMENT_HPP
#define KERRCS_DISPLACEMENT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "kerrcs/errors.hpp"
#include "kerrcs/fock_state.hpp"
#include "kerrcs/specfun.hpp"

namespace kerrcs {

/// Displaced number states |alpha, k> = D(alpha)|k>, k = 0..kmax, expanded on
/// the Fock levels n = 0..rows-1:
///
///   <n|D(alpha)|k> = e^{-|alpha|^2/2} sqrt(k!/n!) alpha^{n-k} L_k^{(n-k)}(|alpha|^2).
///
/// For n < k the negative superscript is reflected, which gives the
/// equivalent sqrt(n!/k!) (-alpha*)^{k-n} L_n^{(k-n)}(|alpha|^2). Entries are
/// filled one diagonal (fixed n - k) at a time so that each diagonal is a
/// single Laguerre recurrence with a fixed superscript.
///
/// The object is immutable after construction and may be shared across
/// threads.
class DisplacedNumberBasis {
 public:
  DisplacedNumberBasis(complex alpha, std::size_t rows, std::size_t kmax)
      : alpha_(alpha), rows_(rows), cols_(kmax + 1), entries_(rows * (kmax + 1)) {
    if (rows == 0) throw DomainError("DisplacedNumberBasis: rows must be positive");
    build();
  }

  complex alpha() const { return alpha_; }
  std::size_t rows() const { return rows_; }
  std::size_t kmax() const { return cols_ - 1; }

  /// <n|D(alpha)|k>.
  complex element(std::size_t n, std::size_t k) const { return entries_[k * rows_ + n]; }

  /// Fock expansion of |alpha, k> restricted to the stored rows.
  std::span<const complex> column(std::size_t k) const {
    return {entries_.data() + k * rows_, rows_};
  }

  /// <alpha, k|psi> for k = 0..kmax. The state must fit in the stored rows.
  std::vector<complex> overlaps(std::span<const complex> psi) const {
    if (psi.size() > rows_) {
      throw DomainError("DisplacedNumberBasis: state dimension " + std::to_string(psi.size()) +
                        " exceeds basis rows " + std::to_string(rows_));
    }
    std::vector<complex> out(cols_);
    for (std::size_t k = 0; k < cols_; ++k) {
      const complex* col = entries_.data() + k * rows_;
      complex s = 0.0;
      for (std::size_t n = 0; n < psi.size(); ++n) s += std::conj(col[n]) * psi[n];
      out[k] = s;
    }
    return out;
  }

 private:
  void build() {
    const double x = std::norm(alpha_);
    if (x == 0.0) {
      for (std::size_t k = 0; k < cols_ && k < rows_; ++k) entries_[k * rows_ + k] = 1.0;
      return;
    }
    const std::size_t top = std::max(rows_, cols_);
    std::vector<double> log_fact(top + 1, 0.0);
    for (std::size_t j = 1; j <= top; ++j) log_fact[j] = log_fact[j - 1] + std::log(static_cast<double>(j));
    const double log_abs = 0.5 * std::log(x);
    const double phase = std::arg(alpha_);

    // n - k = d >= 0: sqrt(k!/n!) alpha^d L_k^{(d)}(x)
    for (std::size_t d = 0; d < rows_; ++d) {
      const std::size_t len = std::min(cols_, rows_ - d);
      const auto lag = specfun::assoc_laguerre_sequence(len - 1, static_cast<double>(d), x);
      const complex unit = std::polar(1.0, static_cast<double>(d) * phase);
      for (std::size_t k = 0; k < len; ++k) {
        const std::size_t n = k + d;
        const double log_pref = -0.5 * x + 0.5 * (log_fact[k] - log_fact[n]) +
                                static_cast<double>(d) * log_abs + lag[k].log_scale;
        entries_[k * rows_ + n] = unit * (lag[k].mantissa * std::exp(log_pref));
      }
    }
    // k - n = e > 0: sqrt(n!/k!) (-alpha*)^e L_n^{(e)}(x)
    for (std::size_t e = 1; e < cols_; ++e) {
      const std::size_t len = std::min(rows_, cols_ - e);
      const auto lag = specfun::assoc_laguerre_sequence(len - 1, static_cast<double>(e), x);
      const complex unit = std::polar(1.0, static_cast<double>(e) * (std::numbers::pi - phase));
      for (std::size_t n = 0; n < len; ++n) {
        const std::size_t k = n + e;
        const double log_pref = -0.5 * x + 0.5 * (log_fact[n] - log_fact[k]) +
                                static_cast<double>(e) * log_abs + lag[n].log_scale;
        entries_[k * rows_ + n] = unit * (lag[n].mantissa * std::exp(log_pref));
      }
    }
  }

  complex alpha_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<complex> entries_;  // column-major, column k = |alpha, k>
};

/// <alpha, k|psi> for k = 0..kmax, via the Laguerre expansion of the
/// displaced number states.
inline std::vector<complex> displaced_number_overlaps(complex alpha, const FockState& state,
                                                      std::size_t kmax) {
  return DisplacedNumberBasis(alpha, state.dim(), kmax).overlaps(state.coefficients());
}

}  // namespace kerrcs

#endif  // KERRCS_DISPLACEMENT_HPP
