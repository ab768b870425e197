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

#ifndef KERRCS_LADDER_HPP
#define KERRCS_LADDER_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kerrcs/errors.hpp"
#include "kerrcs/fock_state.hpp"
#include "kerrcs/kerr_params.hpp"

namespace kerrcs {

/// Deformed ladder operators A = a f(n), A^dagger = f(n) a^dagger on a
/// truncated Fock space:
///   A |n> = sqrt(n) f(n) |n-1>,   A^dagger |n> = sqrt(n+1) f(n+1) |n+1>.
///
/// A^dagger maps the top level out of the space; that amplitude is dropped.
class DeformedLadder {
 public:
  DeformedLadder(KerrParams params, std::size_t dimension)
      : params_(params), dimension_(dimension) {
    if (dimension == 0) {
      throw DomainError("DeformedLadder: dimension must be positive");
    }
  }

  const KerrParams& params() const { return params_; }
  std::size_t dimension() const { return dimension_; }

  /// <n-1| A |n>.
  double lowering_element(std::size_t n) const {
    return std::sqrt(static_cast<double>(n)) * params_.f(n);
  }

  /// <n+1| A^dagger |n>.
  double raising_element(std::size_t n) const {
    return std::sqrt(static_cast<double>(n + 1)) * params_.f(n + 1);
  }

  std::vector<complex> annihilate(std::span<const complex> v) const {
    check_size(v);
    std::vector<complex> out(dimension_);
    for (std::size_t n = 1; n < dimension_; ++n) out[n - 1] = lowering_element(n) * v[n];
    return out;
  }

  std::vector<complex> create(std::span<const complex> v) const {
    check_size(v);
    std::vector<complex> out(dimension_);
    for (std::size_t n = 0; n + 1 < dimension_; ++n) out[n + 1] = raising_element(n) * v[n];
    return out;
  }

  /// <n| [A, A^dagger] |n> from the matrix elements; exact for n + 1 < dimension.
  double commutator_diagonal(std::size_t n) const {
    const double up = raising_element(n);
    const double down = n > 0 ? lowering_element(n) : 0.0;
    return up * up - down * down;
  }

 private:
  void check_size(std::span<const complex> v) const {
    if (v.size() != dimension_) {
      throw DomainError("DeformedLadder: vector has dimension " + std::to_string(v.size()) +
                        ", ladder has " + std::to_string(dimension_));
    }
  }

  KerrParams params_;
  std::size_t dimension_;
};

}  // namespace kerrcs

#endif  // KERRCS_LADDER_HPP
