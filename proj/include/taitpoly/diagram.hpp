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

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "taitpoly/error.hpp"
#include "taitpoly/signed_map.hpp"
#include "taitpoly/tutte.hpp"

namespace taitpoly {

enum class Resolution : std::uint8_t { A, B };

inline Resolution opposite(Resolution r) {
  return r == Resolution::A ? Resolution::B : Resolution::A;
}

/// A resolution choice per crossing, indexed by crossing id.
class State {
 public:
  State() = default;
  explicit State(std::vector<Resolution> r) : r_(std::move(r)) {}

  static State uniform(std::size_t n, Resolution r) {
    return State(std::vector<Resolution>(n, r));
  }
  static State from_string(std::string_view s) {
    std::vector<Resolution> r;
    for (char ch : s) {
      if (ch == 'A' || ch == 'a') r.push_back(Resolution::A);
      else if (ch == 'B' || ch == 'b') r.push_back(Resolution::B);
      else throw InputError(std::string("state letters must be A or B, got '") + ch + "'");
    }
    return State(std::move(r));
  }
  /// Bit c of `mask` set means crossing c is B-resolved.
  static State from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Resolution> r(n, Resolution::A);
    for (std::size_t c = 0; c < n; ++c)
      if (mask >> c & 1u) r[c] = Resolution::B;
    return State(std::move(r));
  }

  std::size_t size() const { return r_.size(); }
  Resolution operator[](std::size_t c) const { return r_[c]; }
  void set(std::size_t c, Resolution r) { r_[c] = r; }

  State dual() const {
    State d = *this;
    for (auto& x : d.r_) x = opposite(x);
    return d;
  }

  std::string to_string() const {
    std::string s;
    for (auto x : r_) s.push_back(x == Resolution::A ? 'A' : 'B');
    return s;
  }

  friend bool operator==(const State&, const State&) = default;

 private:
  std::vector<Resolution> r_;
};

enum class Coloring { canonical, swapped };

/// Four arc labels counterclockwise, starting at the incoming under-strand.
struct PdCrossing {
  std::array<int, 4> arcs{};
  friend bool operator==(const PdCrossing&, const PdCrossing&) = default;
};

struct DiagramOptions {
  std::optional<int> outer_arc;
  Coloring coloring = Coloring::canonical;
};

/// A connected link diagram given by its PD code, with its projection faces
/// and a checkerboard coloring.
///
/// Dart 4c+p is position p of crossing c; corner 4c+k is the angle between
/// positions k and k+1. Faces are corner cycles. The unbounded face is the
/// face to the left of `outer_arc` (default: the lowest arc label).
class LinkDiagram {
 public:
  /// The crossingless unknot diagram: two faces, one circle.
  static LinkDiagram unknot(Coloring coloring = Coloring::canonical) {
    LinkDiagram d;
    d.options_.coloring = coloring;
    return d;
  }

  explicit LinkDiagram(std::vector<PdCrossing> crossings, DiagramOptions options = {})
      : crossings_(std::move(crossings)), options_(options) {
    if (crossings_.empty()) throw InputError("PD code has no crossings");
    build();
  }

  std::size_t crossing_count() const { return crossings_.size(); }
  const std::vector<PdCrossing>& crossings() const { return crossings_; }
  const DiagramOptions& options() const { return options_; }
  Coloring coloring() const { return options_.coloring; }

  int arc_of(int dart) const { return crossings_[dart / 4].arcs[dart % 4]; }
  int twin(int dart) const { return twin_[dart]; }
  bool incoming(int dart) const { return incoming_[dart]; }

  std::vector<int> arc_labels() const {
    std::vector<int> out;
    for (const auto& [label, darts] : darts_of_arc_) out.push_back(label);
    return out;
  }

  std::size_t face_count() const {
    return crossings_.empty() ? 2 : face_corners_.size();
  }
  const std::vector<std::vector<int>>& face_corners() const { return face_corners_; }
  int face_of_corner(int crossing, int k) const {
    return face_of_corner_[4 * crossing + ((k % 4) + 4) % 4];
  }
  int outer_face() const { return outer_face_; }
  bool is_black(int face) const { return black_[face]; }

  /// Face on the left of arc `label`, walking along its orientation.
  int left_face(int label) const {
    auto it = darts_of_arc_.find(label);
    if (it == darts_of_arc_.end())
      throw InputError("arc " + std::to_string(label) + " does not occur in the PD code");
    const int head = incoming_[it->second.first] ? it->second.first : it->second.second;
    return face_of_corner(head / 4, head % 4 + 3);
  }

  /// 0 when corners 0 and 2 of crossing c are black, 1 when 1 and 3 are.
  int black_parity(std::size_t c) const { return parity_[c]; }

  /// Tait sign: + exactly when the black corners are the odd ones.
  Sign crossing_sign(std::size_t c) const {
    return parity_[c] == 1 ? Sign::plus : Sign::minus;
  }

  /// Every arc runs from an over position to an under position.
  bool is_alternating() const {
    for (const auto& [label, darts] : darts_of_arc_)
      if ((darts.first % 4) % 2 == (darts.second % 4) % 2) return false;
    return true;
  }

  LinkDiagram with_coloring(Coloring c) const {
    DiagramOptions o = options_;
    o.coloring = c;
    return rebuild(o);
  }
  LinkDiagram with_outer_arc(std::optional<int> arc) const {
    DiagramOptions o = options_;
    o.outer_arc = arc;
    return rebuild(o);
  }

  std::string to_pd_string() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < crossings_.size(); ++c) {
      const auto& a = crossings_[c].arcs;
      os << (c ? " " : "") << "X[" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << "]";
    }
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json pd = nlohmann::json::array();
    for (const auto& x : crossings_) pd.push_back(x.arcs);
    nlohmann::json j{{"pd", pd},
                     {"coloring", options_.coloring == Coloring::canonical ? "canonical" : "swapped"}};
    if (options_.outer_arc) j["outer_arc"] = *options_.outer_arc;
    return j;
  }

 private:
  LinkDiagram() = default;

  LinkDiagram rebuild(const DiagramOptions& o) const {
    if (crossings_.empty()) return unknot(o.coloring);
    return LinkDiagram(crossings_, o);
  }

  void build() {
    const int n = static_cast<int>(crossings_.size());
    for (int c = 0; c < n; ++c)
      for (int p = 0; p < 4; ++p) {
        auto [it, fresh] = darts_of_arc_.try_emplace(crossings_[c].arcs[p], 4 * c + p, -1);
        if (!fresh) {
          if (it->second.second != -1)
            throw InputError("arc " + std::to_string(it->first) +
                             " appears more than twice (crossing " + std::to_string(c) + ")");
          it->second.second = 4 * c + p;
        }
      }
    twin_.assign(4 * n, -1);
    for (const auto& [label, darts] : darts_of_arc_) {
      if (darts.second == -1)
        throw InputError("arc " + std::to_string(label) +
                         " appears only once (crossing " + std::to_string(darts.first / 4) + ")");
      twin_[darts.first] = darts.second;
      twin_[darts.second] = darts.first;
    }
    check_connected();
    orient();
    trace_faces();
    if (static_cast<int>(face_corners_.size()) != n + 2)
      throw InputError("PD code is not planar: " + std::to_string(face_corners_.size()) +
                       " faces for " + std::to_string(n) + " crossings");
    const int outer_label = options_.outer_arc ? *options_.outer_arc : darts_of_arc_.begin()->first;
    outer_face_ = left_face(outer_label);
    color_faces();
  }

  void check_connected() {
    const int n = static_cast<int>(crossings_.size());
    detail::Dsu dsu(n);
    for (int d = 0; d < 4 * n; ++d) dsu.unite(d / 4, twin_[d] / 4);
    for (int c = 1; c < n; ++c)
      if (dsu.find(c) != dsu.find(0))
        throw DisconnectedError("diagram is disconnected: crossing " + std::to_string(c) +
                                " is not reachable from crossing 0");
  }

  // Propagates orientation along strands: positions p and p+2 of a crossing
  // are the two ends of one strand, and an arc has one head and one tail.
  void orient() {
    const int darts = static_cast<int>(twin_.size());
    std::vector<int> state(darts, -1);  // 1 incoming, 0 outgoing
    std::vector<int> queue;
    auto assign = [&](int d, int in) {
      if (state[d] == -1) {
        state[d] = in;
        queue.push_back(d);
      } else if (state[d] != in) {
        throw InputError("inconsistent strand orientation at arc " + std::to_string(arc_of(d)));
      }
    };
    auto drain = [&] {
      while (!queue.empty()) {
        const int d = queue.back();
        queue.pop_back();
        assign(twin_[d], 1 - state[d]);
        assign(4 * (d / 4) + (d % 4 + 2) % 4, 1 - state[d]);
      }
    };
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
      assign(4 * c, 1);
      assign(4 * c + 2, 0);
    }
    drain();
    // components passing only over: orient so labels ascend
    for (const auto& [label, ds] : darts_of_arc_) {
      if (state[ds.first] != -1) continue;
      const int next = arc_of(4 * (ds.second / 4) + (ds.second % 4 + 2) % 4);
      const int head = next == label + 1 ? ds.second : ds.first;
      assign(head, 1);
      drain();
    }
    incoming_.assign(darts, false);
    for (int d = 0; d < darts; ++d) incoming_[d] = state[d] == 1;
  }

  // From corner (c,k) leave along position k+1 and arrive at its twin (c',p');
  // the walk continues at corner (c',p'). The face lies to the right.
  void trace_faces() {
    const int corners = static_cast<int>(twin_.size());
    face_of_corner_.assign(corners, -1);
    for (int s = 0; s < corners; ++s) {
      if (face_of_corner_[s] != -1) continue;
      const int id = static_cast<int>(face_corners_.size());
      face_corners_.emplace_back();
      int cur = s;
      do {
        face_of_corner_[cur] = id;
        face_corners_.back().push_back(cur);
        cur = twin_[4 * (cur / 4) + (cur % 4 + 1) % 4];
      } while (cur != s);
    }
  }

  // Faces across dart (c,p) are corners (c,p-1) and (c,p).
  void color_faces() {
    const int f = static_cast<int>(face_corners_.size());
    std::vector<std::vector<int>> adj(f);
    for (int d = 0; d < static_cast<int>(twin_.size()); ++d) {
      const int a = face_of_corner(d / 4, d % 4 + 3), b = face_of_corner(d / 4, d % 4);
      adj[a].push_back(b);
    }
    std::vector<int> color(f, -1);
    color[outer_face_] = options_.coloring == Coloring::canonical ? 0 : 1;
    std::vector<int> stack{outer_face_};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          stack.push_back(y);
        } else if (color[y] == color[x]) {
          throw Error("projection faces are not 2-colorable");
        }
      }
    }
    black_.assign(f, false);
    for (int i = 0; i < f; ++i) black_[i] = color[i] == 1;
    parity_.assign(crossings_.size(), 0);
    for (std::size_t c = 0; c < crossings_.size(); ++c) {
      const int ci = static_cast<int>(c);
      parity_[c] = is_black(face_of_corner(ci, 0)) ? 0 : 1;
      if (is_black(face_of_corner(ci, parity_[c] + 2)) != true ||
          is_black(face_of_corner(ci, parity_[c] + 1)))
        throw Error("checkerboard coloring is not proper at crossing " + std::to_string(c));
    }
  }

  std::vector<PdCrossing> crossings_;
  DiagramOptions options_;
  std::map<int, std::pair<int, int>> darts_of_arc_;
  std::vector<int> twin_;
  std::vector<bool> incoming_;
  std::vector<std::vector<int>> face_corners_;
  std::vector<int> face_of_corner_;
  int outer_face_ = 0;
  std::vector<bool> black_;
  std::vector<int> parity_;
};

// ---------------------------------------------------------------------------
// PD text. Accepts "X[a,b,c,d] X[...] ...", an optional "PD[...]" wrapper,
// and the bracketed list form "[[a,b,c,d],[...],...]".

namespace detail {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  std::vector<PdCrossing> parse() {
    skip_separators();
    if (at_end()) fail("empty PD input");
    bool wrapped = false;
    if (peek_word("PD")) {
      advance(2);
      skip_space();
      expect('[');
      wrapped = true;
    } else if (peek() == '[') {
      const std::size_t save = pos_, sl = line_, sc = col_;
      advance(1);
      skip_space();
      if (peek() == '[' || peek() == 'X') {
        wrapped = true;
      } else {
        pos_ = save;
        line_ = sl;
        col_ = sc;
      }
    }
    std::vector<PdCrossing> out;
    while (true) {
      skip_separators();
      if (at_end()) break;
      if (wrapped && peek() == ']') {
        advance(1);
        wrapped = false;
        skip_separators();
        if (!at_end()) fail_token("unexpected text after PD code");
        break;
      }
      out.push_back(crossing());
    }
    if (wrapped) fail("unterminated PD list");
    if (out.empty()) fail("empty PD input");
    return out;
  }

  /// Position (line, column) of the first token of each arc label entry.
  const std::vector<std::array<std::pair<std::size_t, std::size_t>, 4>>& positions() const {
    return positions_;
  }

 private:
  PdCrossing crossing() {
    if (peek() == 'X') {
      advance(1);
      skip_space();
    }
    expect('[');
    PdCrossing x;
    std::array<std::pair<std::size_t, std::size_t>, 4> pos{};
    for (int i = 0; i < 4; ++i) {
      skip_space();
      pos[i] = {line_, col_};
      x.arcs[i] = integer();
      skip_space();
      if (i < 3) expect(',');
    }
    expect(']');
    positions_.push_back(pos);
    return x;
  }

  int integer() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') advance(1);
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance(1);
    const std::string_view tok = text_.substr(start, pos_ - start);
    if (tok.empty() || tok == "-" || tok == "+") {
      fail_token("expected an arc label");
    }
    try {
      return std::stoi(std::string(tok));
    } catch (const std::exception&) {
      fail_token("arc label out of range");
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool peek_word(std::string_view w) const { return text_.substr(pos_, w.size()) == w; }

  void advance(std::size_t k) {
    for (std::size_t i = 0; i < k && !at_end(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance(1);
  }
  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == ',' ||
                         peek() == ';'))
      advance(1);
  }
  void expect(char ch) {
    if (peek() != ch) fail_token(std::string("expected '") + ch + "'");
    advance(1);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }
  [[noreturn]] void fail_token(const std::string& what) const {
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) &&
           end - pos_ < 16)
      ++end;
    const std::string tok = at_end() ? std::string("end of input")
                                     : "'" + std::string(text_.substr(pos_, end - pos_)) + "'";
    throw ParseError(what + ", found " + tok, line_, col_);
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  std::vector<std::array<std::pair<std::size_t, std::size_t>, 4>> positions_;
};

}  // namespace detail

/// Parses PD text. Arc-count and connectivity failures name the offending
/// arc or crossing; malformed text raises ParseError with line and column.
inline LinkDiagram parse_pd(std::string_view text, DiagramOptions options = {}) {
  detail::PdScanner scanner(text);
  std::vector<PdCrossing> crossings = scanner.parse();
  std::map<int, int> count;
  for (const auto& x : crossings)
    for (int a : x.arcs) ++count[a];
  for (std::size_t c = 0; c < crossings.size(); ++c)
    for (int p = 0; p < 4; ++p) {
      const int a = crossings[c].arcs[p];
      if (count[a] != 2) {
        const auto [line, col] = scanner.positions()[c][p];
        throw ParseError("arc " + std::to_string(a) + " appears " + std::to_string(count[a]) +
                             " time(s); every arc must appear exactly twice",
                         line, col);
      }
    }
  return LinkDiagram(std::move(crossings), options);
}

/// JSON diagram: {"pd": [[a,b,c,d], ...], "outer_arc": optional, "coloring": optional}.
inline LinkDiagram diagram_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("pd")) throw InputError("diagram JSON needs a \"pd\" array");
    std::vector<PdCrossing> crossings;
    for (const auto& x : j.at("pd")) {
      if (!x.is_array() || x.size() != 4) throw InputError("each PD crossing needs four arcs");
      PdCrossing pc;
      for (int p = 0; p < 4; ++p) pc.arcs[p] = x[p].get<int>();
      crossings.push_back(pc);
    }
    DiagramOptions o;
    if (j.contains("outer_arc") && !j["outer_arc"].is_null()) o.outer_arc = j["outer_arc"].get<int>();
    if (j.contains("coloring")) {
      const std::string c = j["coloring"].get<std::string>();
      if (c == "canonical") o.coloring = Coloring::canonical;
      else if (c == "swapped") o.coloring = Coloring::swapped;
      else throw InputError("coloring must be \"canonical\" or \"swapped\"");
    }
    if (crossings.empty()) throw InputError("PD code has no crossings");
    return LinkDiagram(std::move(crossings), o);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed diagram JSON: ") + e.what());
  }
}

inline LinkDiagram checkerboard(const LinkDiagram& d, Coloring convention) {
  return d.with_coloring(convention);
}

// ---------------------------------------------------------------------------
// Tait graph

struct TaitGraph {
  SignedMap graph;
  /// Projection face of each Tait vertex.
  std::vector<int> face_of_vertex;
};

/// One vertex per black face, in face order; edge id c (label "c") for
/// crossing c. A black corner k is the dart of side k/2. Rotations follow the
/// face walk, so the map face holding the dart at black corner (c,k) is the
/// white face at corner (c,k-1).
inline TaitGraph tait(const LinkDiagram& d) {
  TaitGraph t;
  if (d.crossing_count() == 0) {
    t.graph = edgeless_map(1);
    t.face_of_vertex = {0};
    return t;
  }
  std::vector<int> vertex_of_face(d.face_count(), -1);
  std::vector<std::vector<Dart>> rotations;
  for (int f = 0; f < static_cast<int>(d.face_count()); ++f) {
    if (!d.is_black(f)) continue;
    vertex_of_face[f] = static_cast<int>(rotations.size());
    t.face_of_vertex.push_back(f);
    std::vector<Dart> r;
    for (int corner : d.face_corners()[f]) r.push_back(2 * (corner / 4) + (corner % 4) / 2);
    rotations.push_back(std::move(r));
  }
  std::vector<MapEdge> edges;
  for (std::size_t c = 0; c < d.crossing_count(); ++c)
    edges.push_back({static_cast<EdgeId>(c), d.crossing_sign(c), std::to_string(c)});
  std::optional<Dart> outer;
  if (!d.is_black(d.outer_face())) {
    for (Dart x = 0; x < static_cast<Dart>(2 * d.crossing_count()); ++x) {
      const int c = x / 2, k = d.black_parity(c) + 2 * (x % 2);
      if (d.face_of_corner(c, k + 3) == d.outer_face()) {
        outer = x;
        break;
      }
    }
  }
  t.graph = SignedMap(std::move(rotations), std::move(edges), outer);
  return t;
}

inline SignedMap tait_graph(const LinkDiagram& d) { return tait(d).graph; }

namespace detail {

// Incoming over position of crossing c (1 or 3).
inline int incoming_over(const LinkDiagram& d, std::size_t c) {
  return d.incoming(static_cast<int>(4 * c + 1)) ? 1 : 3;
}

inline PdCrossing switched(const LinkDiagram& d, std::size_t c) {
  const auto& a = d.crossings()[c].arcs;
  const int s = incoming_over(d, c);
  return PdCrossing{{a[s], a[(s + 1) % 4], a[(s + 2) % 4], a[(s + 3) % 4]}};
}

}  // namespace detail

/// Swaps over and under at every crossing. Arcs, faces and the outer face
/// are unchanged; every Tait sign flips.
inline LinkDiagram mirror(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return d;
  std::vector<PdCrossing> out;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) out.push_back(detail::switched(d, c));
  return LinkDiagram(std::move(out), d.options());
}

/// Swaps over and under at crossing c only.
inline LinkDiagram change_crossing(const LinkDiagram& d, std::size_t c) {
  std::vector<PdCrossing> out = d.crossings();
  out.at(c) = detail::switched(d, c);
  return LinkDiagram(std::move(out), d.options());
}

/// Crossings meeting one face in two opposite corners.
inline std::vector<int> nugatory_crossings(const LinkDiagram& d) {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(d.crossing_count()); ++c)
    if (d.face_of_corner(c, 0) == d.face_of_corner(c, 2) ||
        d.face_of_corner(c, 1) == d.face_of_corner(c, 3))
      out.push_back(c);
  return out;
}

inline bool is_reduced(const LinkDiagram& d) { return nugatory_crossings(d).empty(); }

/// Tait edges split by sign and the resolution a state puts on them.
struct EdgePartition {
  EdgeSet plus_a, plus_b, minus_a, minus_b;

  /// (+,A) together with (-,B).
  EdgeSet e_sigma() const { return plus_a.united(minus_b); }
  /// (+,B) together with (-,A).
  EdgeSet complement() const { return plus_b.united(minus_a); }
};

inline EdgePartition classify(const SignedMap& g, const State& s) {
  EdgePartition p;
  for (const auto& e : g.edges()) {
    if (static_cast<std::size_t>(e.id) >= s.size())
      throw InputError("state has no resolution for crossing " + std::to_string(e.id));
    const bool a = s[e.id] == Resolution::A;
    if (e.sign == Sign::plus) (a ? p.plus_a : p.plus_b).insert(e.id);
    else (a ? p.minus_a : p.minus_b).insert(e.id);
  }
  return p;
}

/// The unique state whose E_sigma is `e_sigma`.
inline State state_from_partition(const SignedMap& g, const EdgeSet& e_sigma) {
  g.require_subset(e_sigma);
  std::size_t n = 0;
  for (const auto& e : g.edges()) n = std::max(n, static_cast<std::size_t>(e.id) + 1);
  State s = State::uniform(n, Resolution::A);
  for (const auto& e : g.edges()) {
    const bool in = e_sigma.contains(e.id);
    const bool a = (e.sign == Sign::plus) == in;
    s.set(e.id, a ? Resolution::A : Resolution::B);
  }
  return s;
}

/// (sigma_bl, sigma_wh): + edges B and - edges A, and its dual.
inline std::pair<State, State> checkerboard_states(const SignedMap& g) {
  const State bl = state_from_partition(g, EdgeSet{});
  return {bl, bl.dual()};
}

struct StateCircles {
  int count = 0;
  /// Circle id of every dart 4c+p.
  std::vector<int> circle_of_dart;
};

/// Arcs join twin darts; resolution A joins positions (0,1) and (2,3),
/// resolution B joins (0,3) and (1,2).
inline StateCircles state_circles(const LinkDiagram& d, const State& s) {
  StateCircles out;
  const int n = static_cast<int>(d.crossing_count());
  if (n == 0) {
    out.count = 1;
    return out;
  }
  if (static_cast<int>(s.size()) != n) throw InputError("state size does not match crossing count");
  detail::Dsu dsu(4 * n);
  for (int x = 0; x < 4 * n; ++x) dsu.unite(x, d.twin(x));
  for (int c = 0; c < n; ++c) {
    if (s[c] == Resolution::A) {
      dsu.unite(4 * c, 4 * c + 1);
      dsu.unite(4 * c + 2, 4 * c + 3);
    } else {
      dsu.unite(4 * c, 4 * c + 3);
      dsu.unite(4 * c + 1, 4 * c + 2);
    }
  }
  std::map<int, int> id;
  out.circle_of_dart.resize(4 * n);
  for (int x = 0; x < 4 * n; ++x) {
    auto [it, fresh] = id.try_emplace(dsu.find(x), static_cast<int>(id.size()));
    out.circle_of_dart[x] = it->second;
  }
  out.count = static_cast<int>(id.size());
  return out;
}

/// Crossings whose state segment has both ends on one circle.
inline EdgeSet segment_self_touch(const LinkDiagram& d, const State& s) {
  EdgeSet out;
  if (d.crossing_count() == 0) return out;
  const StateCircles sc = state_circles(d, s);
  for (int c = 0; c < static_cast<int>(d.crossing_count()); ++c)
    if (sc.circle_of_dart[4 * c] == sc.circle_of_dart[4 * c + 2]) out.insert(c);
  return out;
}

/// Definitional homogeneity test: regions of the plane minus the state
/// circles are unions of faces glued through each crossing's smoothing
/// channel (A glues corners 1 and 3, B glues 0 and 2); a region must not hold
/// both A and B segments.
inline bool state_is_homogeneous(const LinkDiagram& d, const State& s) {
  const int n = static_cast<int>(d.crossing_count());
  if (n == 0) return true;
  detail::Dsu dsu(static_cast<int>(d.face_count()));
  for (int c = 0; c < n; ++c) {
    const int k = s[c] == Resolution::A ? 1 : 0;
    dsu.unite(d.face_of_corner(c, k), d.face_of_corner(c, k + 2));
  }
  std::map<int, int> kinds;  // root -> bitmask of A (1) and B (2)
  for (int c = 0; c < n; ++c) {
    const int k = s[c] == Resolution::A ? 1 : 0;
    kinds[dsu.find(d.face_of_corner(c, k))] |= s[c] == Resolution::A ? 1 : 2;
  }
  for (const auto& [root, mask] : kinds)
    if (mask == 3) return false;
  return true;
}

}  // namespace taitpoly
