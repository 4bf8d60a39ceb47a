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

// taitpoly: Tait graphs, Tutte polynomials and adequate states from the
// command line. Reads a PD code or a JSON graph from a file or stdin.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "taitpoly/taitpoly.hpp"

namespace {

using namespace taitpoly;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2, kCapExceeded = 3 };

struct InputFlags {
  std::string path = "-";
  std::string format = "pd";
  std::string coloring = "canonical";
  bool mirror = false;
  std::string output = "table";
};

void add_input_flags(CLI::App& cmd, InputFlags& f) {
  cmd.add_option("input", f.path, "PD or JSON file; '-' or omitted reads stdin");
  cmd.add_option("--format", f.format, "input format")
      ->check(CLI::IsMember({"pd", "json"}))
      ->capture_default_str();
  cmd.add_option("--coloring", f.coloring, "checkerboard convention")
      ->check(CLI::IsMember({"canonical", "swapped"}))
      ->capture_default_str();
  cmd.add_flag("--mirror", f.mirror, "mirror the diagram (flip every Tait sign)");
  cmd.add_option("--output", f.output, "report format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
}

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    os << in.rdbuf();
  }
  return os.str();
}

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

// Either a diagram (PD text or {"pd": ...}) or a bare signed map.
struct Input {
  std::optional<LinkDiagram> diagram;
  SignedMap graph;
};

Input load(const InputFlags& f) {
  const std::string text = read_input(f.path);
  const Coloring coloring = f.coloring == "swapped" ? Coloring::swapped : Coloring::canonical;
  Input in;
  if (f.format == "json" || looks_like_json(text)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("pd")) {
      in.diagram = diagram_from_json(j);
    } else {
      SignedMap g = signed_map_from_json(j);
      if (f.mirror) g = g.with_signs_flipped();
      if (coloring == Coloring::swapped) g = planar_dual(g).with_signs_flipped();
      in.graph = std::move(g);
      return in;
    }
  } else {
    in.diagram = parse_pd(text);
  }
  if (f.mirror) in.diagram = mirror(*in.diagram);
  in.diagram = checkerboard(*in.diagram, coloring);
  in.graph = tait_graph(*in.diagram);
  return in;
}

// ---------------------------------------------------------------------------

struct TutteFlags {
  bool diag = false;
  bool trees = false;
};

int cmd_tutte(const InputFlags& f, const TutteFlags& t) {
  const SignedMap g = load(f).graph;
  const BiPoly chi = tutte(g);
  const bool full = !t.diag && !t.trees;
  std::vector<std::pair<std::string, std::string>> rows;
  nlohmann::json j = nlohmann::json::object();
  if (full) {
    rows.emplace_back("chi(x,y)", chi.to_string());
    j["tutte"] = chi.to_json();
    j["tutte_text"] = chi.to_string();
  }
  if (t.diag) {
    const BiPoly d = specialize(chi, Specialization::x_equals_y);
    rows.emplace_back("chi(t,t)", d.to_t_string());
    j["diag"] = d.to_json();
    j["diag_text"] = d.to_t_string();
  }
  if (t.trees) {
    const std::string n = eval(chi, 1, 1).str();
    rows.emplace_back("chi(1,1)", n);
    j["trees"] = n;
  }
  if (f.output == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (f.output == "csv") {
    std::cout << "quantity,value\n";
    for (const auto& [k, v] : rows) std::cout << k << ",\"" << v << "\"\n";
  } else {
    for (const auto& [k, v] : rows) std::cout << k << ": " << v << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct AdequateFlags {
  bool verify = false;
  bool homogeneous = false;
  bool ab = false;
  bool pruned = false;
  std::size_t max_edges = 24;
};

int cmd_ab(const InputFlags& f, const SignedMap& g) {
  const AbAdequacy ab = ab_adequacy(g);
  if (f.output == "json") {
    std::cout << nlohmann::json{{"a_adequate", ab.a_adequate},
                                {"b_adequate", ab.b_adequate},
                                {"phi_plus", ab.phi_plus.to_json()},
                                {"phi_minus", ab.phi_minus.to_json()}}
                     .dump(2)
              << "\n";
  } else if (f.output == "csv") {
    std::cout << "state,adequate,phi\n"
              << "A," << (ab.a_adequate ? "true" : "false") << ",\"" << ab.phi_plus.to_t_string() << "\"\n"
              << "B," << (ab.b_adequate ? "true" : "false") << ",\"" << ab.phi_minus.to_t_string() << "\"\n";
  } else {
    std::cout << "all-A: " << (ab.a_adequate ? "adequate" : "not adequate")
              << "  phi = " << ab.phi_plus.to_t_string() << "\n"
              << "all-B: " << (ab.b_adequate ? "adequate" : "not adequate")
              << "  phi = " << ab.phi_minus.to_t_string() << "\n";
  }
  return kOk;
}

int cmd_adequate(const InputFlags& f, const AdequateFlags& a) {
  const SignedMap g = load(f).graph;
  if (a.ab) return cmd_ab(f, g);
  EnumerateOptions opts;
  opts.max_edges = a.max_edges;
  opts.strategy = a.pruned ? Strategy::pruned : Strategy::plain;
  opts.require_verified = false;
  const AdequacyReport rep = a.homogeneous ? enumerate_homogeneous(g, opts) : enumerate(g, opts);
  if (f.output == "json") std::cout << report_json(g, rep).dump(2) << "\n";
  else if (f.output == "csv") std::cout << report_csv(g, rep);
  else std::cout << report_table(g, rep);
  if (a.verify && !rep.verified) {
    std::cerr << "error: state sum " << rep.state_sum.to_t_string() << " differs from chi(t,t) "
              << rep.chi_diag.to_t_string() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_check(const InputFlags& f) {
  const Input in = load(f);
  const SignedMap& g = in.graph;
  std::vector<std::string> problems;
  std::ostringstream os;
  const bool connected = is_connected(g);
  const bool plane = is_plane_embedding(g);
  if (in.diagram) {
    const LinkDiagram& d = *in.diagram;
    const int n = static_cast<int>(d.crossing_count());
    os << "crossings: " << n << "\n"
       << "connected: yes\n"
       << "euler: v - e + f = " << n << " - " << 2 * n << " + " << d.face_count() << " = "
       << static_cast<int>(d.face_count()) - n << "\n";
    int black = 0;
    for (int x = 0; x < static_cast<int>(d.face_count()); ++x) black += d.is_black(x);
    bool proper = true;
    for (int c = 0; c < n; ++c)
      for (int k = 0; k < 4; ++k) proper &= d.is_black(d.face_of_corner(c, k)) != d.is_black(d.face_of_corner(c, k + 1));
    os << "coloring: " << (d.coloring() == Coloring::swapped ? "swapped" : "canonical") << ", "
       << black << " black and " << d.face_count() - black << " white faces, "
       << (proper ? "proper" : "NOT proper") << "\n";
    if (!proper) problems.push_back("checkerboard coloring is not proper");
    os << "alternating: " << (d.is_alternating() ? "yes" : "no") << "\n";
    const std::vector<int> nug = nugatory_crossings(d);
    if (nug.empty()) os << "reduced: yes\n";
    for (int c : nug) {
      os << "not reduced: crossing " << c << " is nugatory\n";
      problems.push_back("crossing " + std::to_string(c) + " is nugatory");
    }
  } else {
    os << "vertices: " << g.vertex_count() << "\n"
       << "edges: " << g.edge_count() << "\n"
       << "connected: " << (connected ? "yes" : "no") << "\n"
       << "euler: v - e + f = " << euler_characteristic(g) << (plane ? " (plane)" : " (NOT plane)") << "\n";
    if (!connected) problems.push_back("graph is not connected");
    if (!plane) problems.push_back("rotation system is not a plane embedding");
    const EdgeClasses ec = classify_edges(g);
    if (ec.bridges.empty() && ec.loops.empty()) os << "reduced: yes\n";
    for (EdgeId id : ec.bridges) {
      os << "not reduced: edge " << g.edge_by_id(id).label << " is a bridge\n";
      problems.push_back("bridge " + g.edge_by_id(id).label);
    }
    for (EdgeId id : ec.loops) {
      os << "not reduced: edge " << g.edge_by_id(id).label << " is a loop\n";
      problems.push_back("loop " + g.edge_by_id(id).label);
    }
  }
  os << "tait graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, signs ";
  for (const auto& e : g.edges()) os << sign_char(e.sign);
  os << "\n";
  if (f.output == "json") {
    nlohmann::json j{{"ok", problems.empty()}, {"problems", problems}, {"vertices", g.vertex_count()},
                     {"edges", g.edge_count()}, {"connected", connected}, {"plane", plane}};
    std::cout << j.dump(2) << "\n";
  } else if (f.output == "csv") {
    std::cout << "problem\n";
    for (const auto& p : problems) std::cout << "\"" << p << "\"\n";
  } else {
    std::cout << os.str() << (problems.empty() ? "all checks passed\n" : "");
  }
  return problems.empty() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tait graphs, Tutte polynomials and adequate states of link diagrams"};
  app.require_subcommand(1);

  InputFlags tutte_in, adequate_in, check_in;
  TutteFlags tutte_flags;
  AdequateFlags adequate_flags;

  CLI::App* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial of the Tait graph");
  add_input_flags(*tutte_cmd, tutte_in);
  tutte_cmd->add_flag("--diag", tutte_flags.diag, "print chi(t,t)");
  tutte_cmd->add_flag("--trees", tutte_flags.trees, "print chi(1,1), the spanning-tree count");

  CLI::App* adequate_cmd = app.add_subcommand("adequate", "enumerate adequate states");
  add_input_flags(*adequate_cmd, adequate_in);
  adequate_cmd->add_flag("--verify", adequate_flags.verify, "exit 1 unless the state sum equals chi(t,t)");
  adequate_cmd->add_flag("--homogeneous", adequate_flags.homogeneous, "keep homogeneously adequate states");
  adequate_cmd->add_flag("--ab", adequate_flags.ab, "test only the all-A and all-B states");
  adequate_cmd->add_flag("--pruned", adequate_flags.pruned, "use the pruned subset generator");
  adequate_cmd->add_option("--max-edges", adequate_flags.max_edges, "largest Tait graph to enumerate")
      ->check(CLI::Range(1, 63))
      ->capture_default_str();

  CLI::App* check_cmd = app.add_subcommand("check", "validate a diagram or graph");
  add_input_flags(*check_cmd, check_in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*tutte_cmd) return cmd_tutte(tutte_in, tutte_flags);
    if (*adequate_cmd) return cmd_adequate(adequate_in, adequate_flags);
    return cmd_check(check_in);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "; raise the limit with --max-edges\n";
    return kCapExceeded;
  } catch (const VerificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const DisconnectedError& e) {
    std::cerr << "error: connectedness: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
