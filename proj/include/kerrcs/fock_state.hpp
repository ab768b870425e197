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

#ifndef KERRCS_FOCK_STATE_HPP
#define KERRCS_FOCK_STATE_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kerrcs/errors.hpp"

namespace kerrcs {

using complex = std::complex<double>;

/// State families that can be built in closed form.
enum class Family {
  kCoherent,  ///< Glauber coherent state
  kPacs,      ///< photon-added coherent state
  kNlcs,      ///< eigenstate of the deformed annihilation operator
  kDocs,      ///< deformed displacement of the vacuum
  kDpancsA,   ///< photons added (deformed) to an NLCS
  kDpancsD,   ///< photons added (deformed) to a DOCS
  kCustom,    ///< anything else, e.g. the output of add_photons
};

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::kCoherent: return "coherent";
    case Family::kPacs: return "pacs";
    case Family::kNlcs: return "nlcs";
    case Family::kDocs: return "docs";
    case Family::kDpancsA: return "dpancs-a";
    case Family::kDpancsD: return "dpancs-d";
    case Family::kCustom: return "custom";
  }
  return "custom";
}

inline Family family_from_string(std::string_view s) {
  for (Family f : {Family::kCoherent, Family::kPacs, Family::kNlcs, Family::kDocs,
                   Family::kDpancsA, Family::kDpancsD, Family::kCustom}) {
    if (to_string(f) == s) return f;
  }
  throw DomainError("unknown state family '" + std::string(s) + "'");
}

/// True for the families parameterized by a Kerr deformation.
inline bool is_deformed(Family f) {
  return f == Family::kNlcs || f == Family::kDocs || f == Family::kDpancsA ||
         f == Family::kDpancsD;
}

/// True for the families that take a photon-addition count m.
inline bool takes_photon_count(Family f) {
  return f == Family::kPacs || f == Family::kDpancsA || f == Family::kDpancsD;
}

/// Provenance of a state.
struct StateLabel {
  Family family = Family::kCustom;
  complex alpha{0.0, 0.0};
  std::size_t m = 0;
  std::optional<double> chi_over_omega0;

  friend bool operator==(const StateLabel&, const StateLabel&) = default;
};

/// Pure state of one mode as a truncated vector of Fock amplitudes c_0..c_{N-1}.
///
/// Instances are immutable. `tail_bound()` is a certified upper bound on the
/// probability mass that lives beyond the last stored level.
class FockState {
 public:
  FockState(std::vector<complex> coefficients, StateLabel label, double tail_bound = 0.0)
      : coefficients_(std::move(coefficients)), label_(std::move(label)),
        tail_bound_(tail_bound) {
    if (coefficients_.empty()) {
      throw DomainError("FockState: truncation dimension must be positive");
    }
  }

  /// Number state |n> in a space of dimension max(dim, n + 1).
  static FockState number(std::size_t n, std::size_t dim = 0) {
    std::vector<complex> c(std::max(dim, n + 1));
    c[n] = 1.0;
    StateLabel label;
    label.m = n;
    return FockState(std::move(c), label);
  }

  std::size_t dim() const { return coefficients_.size(); }
  std::span<const complex> coefficients() const { return coefficients_; }
  const complex& operator[](std::size_t n) const { return coefficients_[n]; }

  /// Amplitude c_n, zero beyond the stored truncation.
  complex amplitude(std::size_t n) const {
    return n < coefficients_.size() ? coefficients_[n] : complex{};
  }

  const StateLabel& label() const { return label_; }
  double tail_bound() const { return tail_bound_; }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& c : coefficients_) s += std::norm(c);
    return s;
  }

 private:
  std::vector<complex> coefficients_;
  StateLabel label_;
  double tail_bound_;
};

}  // namespace kerrcs

#endif  // KERRCS_FOCK_STATE_HPP
