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

// Serialization of states, distributions, sweeps and fields.
//
// All numbers are written with std::to_chars (shortest round-trip form), so
// equal inputs always give equal bytes.

#ifndef KERRCS_IO_HPP
#define KERRCS_IO_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kerrcs/errors.hpp"
#include "kerrcs/field.hpp"
#include "kerrcs/fock_state.hpp"
#include "kerrcs/stats.hpp"

namespace kerrcs::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// ---- labels and states ----------------------------------------------------

inline json label_to_json(const StateLabel& label) {
  json j;
  j["family"] = std::string(to_string(label.family));
  j["alpha_re"] = label.alpha.real();
  j["alpha_im"] = label.alpha.imag();
  j["m"] = label.m;
  j["chi_over_omega0"] = label.chi_over_omega0 ? json(*label.chi_over_omega0) : json(nullptr);
  return j;
}

inline StateLabel label_from_json(const json& j) {
  try {
    StateLabel label;
    label.family = family_from_string(j.at("family").get<std::string>());
    label.alpha = {j.at("alpha_re").get<double>(), j.at("alpha_im").get<double>()};
    label.m = j.at("m").get<std::size_t>();
    if (!j.at("chi_over_omega0").is_null()) {
      label.chi_over_omega0 = j.at("chi_over_omega0").get<double>();
    }
    return label;
  } catch (const json::exception& e) {
    throw IoError(std::string("state label: ") + e.what());
  }
}

inline json state_to_json(const FockState& state) {
  json j = label_to_json(state.label());
  j["dim"] = state.dim();
  j["tail_bound"] = state.tail_bound();
  json coeffs = json::array();
  for (const complex& c : state.coefficients()) coeffs.push_back({c.real(), c.imag()});
  j["coefficients"] = std::move(coeffs);
  return j;
}

inline FockState state_from_json(const json& j) {
  StateLabel label = label_from_json(j);
  try {
    const auto& arr = j.at("coefficients");
    std::vector<complex> c;
    c.reserve(arr.size());
    for (const auto& pair : arr) {
      if (!pair.is_array() || pair.size() != 2) throw IoError("coefficient must be [re, im]");
      c.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    if (j.contains("dim") && j["dim"].get<std::size_t>() != c.size()) {
      throw IoError("state: dim does not match the number of coefficients");
    }
    const double tail = j.value("tail_bound", 0.0);
    return FockState(std::move(c), std::move(label), tail);
  } catch (const json::exception& e) {
    throw IoError(std::string("state: ") + e.what());
  }
}

// ---- fields ---------------------------------------------------------------

inline json grid_to_json(const PhaseSpaceGrid& g) {
  return {{"x_min", g.x_min}, {"x_max", g.x_max}, {"y_min", g.y_min},
          {"y_max", g.y_max}, {"nx", g.nx},       {"ny", g.ny}};
}

inline json field_to_json(const PhaseSpaceField& f) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = std::string(to_string(f.kind));
  j["grid"] = grid_to_json(f.grid);
  j["source_label"] = label_to_json(f.source);
  j["values"] = f.values;
  return j;
}

inline PhaseSpaceField field_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw IoError("field: unsupported schema_version " + j["schema_version"].dump());
    }
    PhaseSpaceField f;
    const auto& g = j.at("grid");
    f.grid = {g.at("x_min").get<double>(), g.at("x_max").get<double>(),
              g.at("y_min").get<double>(), g.at("y_max").get<double>(),
              g.at("nx").get<std::size_t>(), g.at("ny").get<std::size_t>()};
    f.grid.validate();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "husimi") {
      f.kind = FieldKind::kHusimi;
    } else if (kind == "wigner") {
      f.kind = FieldKind::kWigner;
    } else {
      throw IoError("field: unknown kind '" + kind + "'");
    }
    f.source = label_from_json(j.at("source_label"));
    f.values = j.at("values").get<std::vector<double>>();
    if (f.values.size() != f.grid.size()) throw IoError("field: value count does not match grid");
    return f;
  } catch (const json::exception& e) {
    throw IoError(std::string("field: ") + e.what());
  }
}

/// x,y,value rows; y is the slow index.
inline void write_field_csv(std::ostream& os, const PhaseSpaceField& f) {
  os << "x,y,value\n";
  for (std::size_t j = 0; j < f.grid.ny; ++j) {
    for (std::size_t i = 0; i < f.grid.nx; ++i) {
      os << format_double(f.grid.x(i)) << ',' << format_double(f.grid.y(j)) << ','
         << format_double(f.value(i, j)) << '\n';
    }
  }
}

// ---- statistics -----------------------------------------------------------

inline void write_distribution_csv(std::ostream& os, const PhotonDistribution& d) {
  os << "k,probability\n";
  for (std::size_t k = 0; k < d.probabilities.size(); ++k) {
    os << k << ',' << format_double(d.probabilities[k]) << '\n';
  }
}

inline json distribution_to_json(const PhotonDistribution& d) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["source_label"] = label_to_json(d.source);
  j["mean"] = d.mean();
  j["variance"] = d.variance();
  j["probabilities"] = d.probabilities;
  return j;
}

/// One row per (sweep, alpha). q_ratio = Var n / <n>, so Q = 1 for a
/// Poissonian distribution; q_standard = q_ratio - 1.
inline void write_mandel_csv(std::ostream& os, std::span<const MandelSweep> sweeps) {
  os << "alpha,q_ratio,q_standard,family,m,chi_over_omega0\n";
  for (const auto& s : sweeps) {
    const std::string chi = s.chi_over_omega0 ? format_double(*s.chi_over_omega0) : "";
    for (std::size_t i = 0; i < s.alphas.size(); ++i) {
      os << format_double(s.alphas[i]) << ',' << format_double(s.q_values[i]) << ','
         << format_double(standard_mandel(s.q_values[i])) << ',' << to_string(s.family) << ','
         << s.m << ',' << chi << '\n';
    }
  }
}

inline json mandel_to_json(std::span<const MandelSweep> sweeps) {
  json j;
  j["schema_version"] = kSchemaVersion;
  json arr = json::array();
  for (const auto& s : sweeps) {
    json e;
    e["family"] = std::string(to_string(s.family));
    e["m"] = s.m;
    e["chi_over_omega0"] = s.chi_over_omega0 ? json(*s.chi_over_omega0) : json(nullptr);
    e["alpha"] = s.alphas;
    e["q_ratio"] = s.q_values;
    arr.push_back(std::move(e));
  }
  j["sweeps"] = std::move(arr);
  return j;
}

// ---- files ----------------------------------------------------------------

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.close();
  if (!out) throw IoError("write to '" + path + "' failed");
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// JSON text as written by every writer here: two-space indent, trailing
/// newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace kerrcs::io

#endif  // KERRCS_IO_HPP
