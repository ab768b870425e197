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

#ifndef KERRCS_SERIES_HPP
#define KERRCS_SERIES_HPP

#include <cmath>
#include <cstddef>
#include <string>

#include "kerrcs/errors.hpp"

namespace kerrcs {

/// Termination policy shared by every infinite-series evaluation.
///
/// A series stops once |term| < max(rel_tol * |partial sum|, abs_tol) holds
/// for three consecutive terms and at least five terms have been added. When
/// the caller knows the current term ratio rho, |term| is replaced by the
/// geometric tail estimate |term| / (1 - rho), so slowly converging series
/// (e.g. 2F1 close to |x| = 1) are not cut early.
/// Running out of `max_terms` first is an error, never a silent truncation.
struct SeriesTolerance {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  std::size_t max_terms = 10'000;

  void validate() const {
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
      throw DomainError("SeriesTolerance: rel_tol must be positive, got " +
                        std::to_string(rel_tol));
    }
    if (!(abs_tol >= 0.0)) {
      throw DomainError("SeriesTolerance: abs_tol must be nonnegative");
    }
    if (max_terms < 1) {
      throw DomainError("SeriesTolerance: max_terms must be at least 1");
    }
  }
};

/// Stateful helper implementing the SeriesTolerance stopping rule.
///
/// Feed it |term| and |partial sum| after each accumulated term; it reports
/// when the series may stop.
class SeriesMonitor {
 public:
  static constexpr int kConsecutive = 3;
  static constexpr std::size_t kMinTerms = 5;

  explicit SeriesMonitor(const SeriesTolerance& tol) : tol_(tol) {
    tol_.validate();
  }

  /// Returns true when the series has converged after this term.
  /// `abs_ratio` is |term_n / term_{n-1}| if known, otherwise 0.
  bool converged(double abs_term, double abs_sum, double abs_ratio = 0.0) {
    ++terms_;
    const double tail = abs_ratio < 1.0 ? abs_term / (1.0 - abs_ratio) : INFINITY;
    if (tail < tol_.rel_tol * abs_sum || abs_term <= tol_.abs_tol) {
      ++small_run_;
    } else {
      small_run_ = 0;
    }
    return small_run_ >= kConsecutive && terms_ >= kMinTerms;
  }

  bool exhausted() const { return terms_ >= tol_.max_terms; }
  std::size_t terms() const { return terms_; }

 private:
  SeriesTolerance tol_;
  std::size_t terms_ = 0;
  int small_run_ = 0;
};

}  // namespace kerrcs

#endif  // KERRCS_SERIES_HPP
