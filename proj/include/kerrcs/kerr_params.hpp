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

#ifndef KERRCS_KERR_PARAMS_HPP
#define KERRCS_KERR_PARAMS_HPP

#include <cmath>
#include <cstddef>
#include <string>

#include "kerrcs/errors.hpp"

namespace kerrcs {

/// Kerr deformation of a single field mode, H = w0 n + chi n^2 written as
/// Omega A^dagger A with Omega = w0 - chi and f^2(n) = 1 + n chi / Omega.
///
/// The only free parameter is the ratio chi/w0, restricted to (0, 1) so that
/// Omega > 0 and f^2(n) > 0 for every n.
class KerrParams {
 public:
  explicit KerrParams(double chi_over_omega0) : ratio_(chi_over_omega0) {
    if (!(chi_over_omega0 > 0.0 && chi_over_omega0 < 1.0)) {
      throw DomainError("KerrParams: chi/omega0 must lie in (0, 1), got " +
                        std::to_string(chi_over_omega0));
    }
  }

  double chi_over_omega0() const { return ratio_; }

  /// r = (w0 - chi) / chi.
  double r() const { return (1.0 - ratio_) / ratio_; }

  /// b = w0 / chi = r + 1.
  double b() const { return 1.0 / ratio_; }

  /// chi / (w0 - chi), the slope of f^2 in n.
  double slope() const { return ratio_ / (1.0 - ratio_); }

  double f_squared(std::size_t n) const {
    return 1.0 + static_cast<double>(n) * slope();
  }

  double f(std::size_t n) const { return std::sqrt(f_squared(n)); }

  friend bool operator==(const KerrParams&, const KerrParams&) = default;

 private:
  double ratio_;
};

}  // namespace kerrcs

#endif  // KERRCS_KERR_PARAMS_HPP
