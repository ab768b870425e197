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

#ifndef KERRCS_FIELD_HPP
#define KERRCS_FIELD_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "kerrcs/detail/parallel.hpp"
#include "kerrcs/errors.hpp"
#include "kerrcs/fock_state.hpp"
#include "kerrcs/phasespace.hpp"

namespace kerrcs {

/// Rectangular grid in the complex plane; point (i, j) is x_i + i y_j.
struct PhaseSpaceGrid {
  double x_min = -4.0;
  double x_max = 4.0;
  double y_min = -4.0;
  double y_max = 4.0;
  std::size_t nx = 161;
  std::size_t ny = 161;

  /// Square grid [lo, hi]^2 with n points per axis.
  static PhaseSpaceGrid square(double lo, double hi, std::size_t n) {
    PhaseSpaceGrid g{lo, hi, lo, hi, n, n};
    g.validate();
    return g;
  }

  /// Parses "lo:hi:n" into a square grid.
  static PhaseSpaceGrid parse(std::string_view spec) {
    const auto c1 = spec.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
    if (c2 == std::string_view::npos) {
      throw DomainError("grid spec must look like lo:hi:n, got '" + std::string(spec) + "'");
    }
    auto num = [&](std::string_view part, auto& out) {
      const auto res = std::from_chars(part.data(), part.data() + part.size(), out);
      if (res.ec != std::errc() || res.ptr != part.data() + part.size()) {
        throw DomainError("grid spec: cannot parse '" + std::string(part) + "'");
      }
    };
    double lo = 0.0;
    double hi = 0.0;
    std::size_t n = 0;
    num(spec.substr(0, c1), lo);
    num(spec.substr(c1 + 1, c2 - c1 - 1), hi);
    num(spec.substr(c2 + 1), n);
    return square(lo, hi, n);
  }

  void validate() const {
    if (!(x_min < x_max) || !(y_min < y_max)) {
      throw DomainError("PhaseSpaceGrid: bounds must satisfy min < max");
    }
    if (nx < 2 || ny < 2) {
      throw DomainError("PhaseSpaceGrid: need at least 2 points per axis");
    }
  }

  double dx() const { return (x_max - x_min) / static_cast<double>(nx - 1); }
  double dy() const { return (y_max - y_min) / static_cast<double>(ny - 1); }
  double x(std::size_t i) const { return i + 1 == nx ? x_max : x_min + static_cast<double>(i) * dx(); }
  double y(std::size_t j) const { return j + 1 == ny ? y_max : y_min + static_cast<double>(j) * dy(); }
  complex point(std::size_t i, std::size_t j) const { return {x(i), y(j)}; }
  std::size_t size() const { return nx * ny; }

  friend bool operator==(const PhaseSpaceGrid&, const PhaseSpaceGrid&) = default;
};

enum class FieldKind { kHusimi, kWigner };

inline std::string_view to_string(FieldKind k) {
  return k == FieldKind::kHusimi ? "husimi" : "wigner";
}

/// Real-valued field over a grid, stored row-major in y: value(i, j) lives
/// at values[j * nx + i].
struct PhaseSpaceField {
  PhaseSpaceGrid grid;
  FieldKind kind = FieldKind::kWigner;
  StateLabel source;
  std::vector<double> values;

  double value(std::size_t i, std::size_t j) const { return values[j * grid.nx + i]; }

  double min() const { return *std::min_element(values.begin(), values.end()); }
  double max() const { return *std::max_element(values.begin(), values.end()); }

  /// Trapezoid-rule integral of f(value) over the grid.
  template <typename F>
  double integrate(F f) const {
    return integrate_points([&](complex, double v) { return f(v); });
  }

  /// Trapezoid-rule integral of f(z, value) over the grid.
  template <typename F>
  double integrate_points(F f) const {
    double s = 0.0;
    for (std::size_t j = 0; j < grid.ny; ++j) {
      const double wy = (j == 0 || j + 1 == grid.ny) ? 0.5 : 1.0;
      for (std::size_t i = 0; i < grid.nx; ++i) {
        const double wx = (i == 0 || i + 1 == grid.nx) ? 0.5 : 1.0;
        s += wx * wy * f(grid.point(i, j), value(i, j));
      }
    }
    return s * grid.dx() * grid.dy();
  }

  double integral() const {
    return integrate([](double v) { return v; });
  }

  /// Largest |value| on the outer edge of the grid; small values mean the
  /// grid contains the distribution.
  double boundary_max_abs() const {
    double m = 0.0;
    for (std::size_t i = 0; i < grid.nx; ++i) {
      m = std::max({m, std::abs(value(i, 0)), std::abs(value(i, grid.ny - 1))});
    }
    for (std::size_t j = 0; j < grid.ny; ++j) {
      m = std::max({m, std::abs(value(0, j)), std::abs(value(grid.nx - 1, j))});
    }
    return m;
  }
};

/// Negativity volume: integral of |W| minus one.
inline double negativity(const PhaseSpaceField& wigner_field) {
  return wigner_field.integrate([](double v) { return std::abs(v); }) - 1.0;
}

/// Evaluates `fn(z)` at every grid point, on up to `threads` workers. Each
/// point is computed independently and written to its own slot, so the
/// result is bitwise identical for any thread count. The first failing
/// point aborts the evaluation with its grid location in the message.
template <typename Fn>
PhaseSpaceField field_over_grid(FieldKind kind, const PhaseSpaceGrid& grid, Fn fn,
                                StateLabel source = {}, unsigned threads = 1) {
  grid.validate();
  PhaseSpaceField field{grid, kind, std::move(source), std::vector<double>(grid.size())};
  detail::parallel_for(grid.size(), threads, [&](std::size_t idx) {
    const std::size_t i = idx % grid.nx;
    const std::size_t j = idx / grid.nx;
    const complex z = grid.point(i, j);
    try {
      field.values[idx] = fn(z);
    } catch (const std::exception& e) {
      throw Error(std::string(to_string(kind)) + " evaluation failed at grid point (" +
                  std::to_string(i) + ", " + std::to_string(j) + "), z = " +
                  std::to_string(z.real()) + (z.imag() < 0 ? " - " : " + ") +
                  std::to_string(std::abs(z.imag())) + "i: " + e.what());
    }
  });
  return field;
}

inline PhaseSpaceField husimi_field(const FockState& state, const PhaseSpaceGrid& grid,
                                    const PhaseSpaceOptions& options = {}, unsigned threads = 1) {
  return field_over_grid(
      FieldKind::kHusimi, grid, [&](complex z) { return husimi(state, z, options); },
      state.label(), threads);
}

inline PhaseSpaceField wigner_field(const FockState& state, const PhaseSpaceGrid& grid,
                                    const PhaseSpaceOptions& options = {}, unsigned threads = 1) {
  return field_over_grid(
      FieldKind::kWigner, grid, [&](complex z) { return wigner(state, z, options); },
      state.label(), threads);
}

}  // namespace kerrcs

#endif  // KERRCS_FIELD_HPP
