// Copyright 2026 The taitpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "taitpoly/adequacy.hpp"
#include "taitpoly/signed_map.hpp"

namespace taitpoly {

/// Edge labels of `h` in id order, e.g. "{0, 3, 7}".
inline std::string format_edge_set(const SignedMap& g, const EdgeSet& h) {
  std::string s = "{";
  bool first = true;
  for (EdgeId id : h) {
    if (!first) s += ", ";
    first = false;
    s += g.edge_by_id(id).label;
  }
  return s + "}";
}

inline nlohmann::json edge_labels_json(const SignedMap& g, const EdgeSet& h) {
  nlohmann::json arr = nlohmann::json::array();
  for (EdgeId id : h) arr.push_back(g.edge_by_id(id).label);
  return arr;
}

inline nlohmann::json report_json(const SignedMap& g, const AdequacyReport& rep) {
  nlohmann::json states = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.states.size(); ++i) {
    const auto& s = rep.states[i];
    nlohmann::json js{{"id", i + 1},
                      {"e_sigma", edge_labels_json(g, s.e_sigma)},
                      {"state", s.state.to_string()},
                      {"phi", s.phi.to_json()},
                      {"phi_text", s.phi.to_t_string()}};
    if (rep.homogeneity_evaluated) {
      js["homogeneous"] = s.homogeneous;
      js["conditions"] = {{"components_pure", s.conditions.components_pure},
                          {"bounded_regions_pure", s.conditions.bounded_regions_pure},
                          {"outer_region_pure", s.conditions.outer_region_pure}};
    }
    states.push_back(std::move(js));
  }
  nlohmann::json out{{"edge_count", rep.edge_count},
                     {"state_count", rep.states.size()},
                     {"adequate_count", rep.adequate_count},
                     {"states", std::move(states)},
                     {"state_sum", rep.state_sum.to_json()},
                     {"chi_diag", rep.chi_diag.to_json()},
                     {"chi_diag_text", rep.chi_diag.to_t_string()},
                     {"tree_count", rep.tree_count.str()},
                     {"tree_gap", Integer(rep.tree_count - rep.adequate_count).str()},
                     {"verified", rep.verified},
                     {"bounds_hold", rep.bounds_hold()}};
  if (rep.homogeneity_evaluated) out["homogeneous_count"] = rep.homogeneous_count();
  return out;
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// One row per state: id, E_sigma, phi (and the homogeneity flag when
/// computed).
inline std::string report_csv(const SignedMap& g, const AdequacyReport& rep) {
  std::ostringstream os;
  os << "state,e_sigma,phi";
  if (rep.homogeneity_evaluated) os << ",homogeneous";
  os << "\n";
  for (std::size_t i = 0; i < rep.states.size(); ++i) {
    const auto& s = rep.states[i];
    os << i + 1 << "," << detail::csv_quote(format_edge_set(g, s.e_sigma)) << ","
       << detail::csv_quote(s.phi.to_t_string());
    if (rep.homogeneity_evaluated) os << "," << (s.homogeneous ? "true" : "false");
    os << "\n";
  }
  return os.str();
}

inline std::string report_table(const SignedMap& g, const AdequacyReport& rep) {
  std::size_t set_width = 7;
  for (const auto& s : rep.states) set_width = std::max(set_width, format_edge_set(g, s.e_sigma).size());
  std::ostringstream os;
  os << std::left << std::setw(6) << "state" << std::setw(static_cast<int>(set_width) + 2) << "E_sigma";
  if (rep.homogeneity_evaluated) os << std::setw(13) << "homogeneous";
  os << "phi\n";
  for (std::size_t i = 0; i < rep.states.size(); ++i) {
    const auto& s = rep.states[i];
    os << std::left << std::setw(6) << i + 1 << std::setw(static_cast<int>(set_width) + 2)
       << format_edge_set(g, s.e_sigma);
    if (rep.homogeneity_evaluated) os << std::setw(13) << (s.homogeneous ? "yes" : "no");
    os << s.phi.to_t_string() << "\n";
  }
  os << "\nadequate states: " << rep.adequate_count << "\n";
  if (rep.homogeneity_evaluated) os << "homogeneous:     " << rep.homogeneous_count() << "\n";
  os << "state sum:       " << rep.state_sum.to_t_string() << "\n"
     << "chi(t,t):        " << rep.chi_diag.to_t_string() << "\n"
     << "spanning trees:  " << rep.tree_count << "\n"
     << "verified:        " << (rep.verified ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace taitpoly
