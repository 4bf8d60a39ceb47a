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

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "taitpoly/error.hpp"

namespace taitpoly {

using Integer = boost::multiprecision::cpp_int;

/// Exponent pair (i, j) of the monomial x^i y^j.
struct Exponent {
  unsigned x = 0;
  unsigned y = 0;

  auto operator<=>(const Exponent&) const = default;
};

/// Which substitution `specialize` performs.
enum class Specialization {
  x_to_zero,   // p(0, t)
  y_to_zero,   // p(t, 0)
  x_equals_y,  // p(t, t)
};

/// Sparse bivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept in canonical form: no stored coefficient is ever zero, so
/// two polynomials are equal exactly when their term maps are equal.
/// Univariate polynomials in t live on the x axis (every y exponent is 0).
class BiPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  BiPoly() = default;

  static BiPoly constant(const Integer& c) { return monomial(c, 0, 0); }
  static BiPoly one() { return constant(1); }
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }
  /// The univariate variable; an alias for x by representation choice.
  static BiPoly t() { return x(); }

  static BiPoly monomial(const Integer& c, unsigned i, unsigned j) {
    BiPoly p;
    p.add_term({i, j}, c);
    return p;
  }

  /// Univariate polynomial from coefficients c[0] + c[1] t + c[2] t^2 + ...
  static BiPoly from_t_coefficients(const std::vector<Integer>& coeffs) {
    BiPoly p;
    for (unsigned i = 0; i < coeffs.size(); ++i) p.add_term({i, 0}, coeffs[i]);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Integer coeff(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// True when every stored exponent has y == 0.
  bool is_univariate() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.first.y == 0; });
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.second > 0; });
  }

  void add_term(Exponent e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  BiPoly& operator*=(const BiPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
    return r;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// p(y, x).
  BiPoly swapped() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.add_term({e.y, e.x}, c);
    return r;
  }

  /// Sum of all coefficients, i.e. p(1, 1).
  Integer coefficient_sum() const {
    Integer s = 0;
    for (const auto& kv : terms_) s += kv.second;
    return s;
  }

  /// Terms ordered for display: by (i + j, i) descending.
  std::vector<std::pair<Exponent, Integer>> display_order() const {
    std::vector<std::pair<Exponent, Integer>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      const unsigned da = a.first.x + a.first.y;
      const unsigned db = b.first.x + b.first.y;
      if (da != db) return da > db;
      return a.first.x > b.first.x;
    });
    return out;
  }

  /// Text rendering, e.g. "x^2 + 2xy + y". The zero polynomial renders "0".
  std::string to_string(std::string_view xvar = "x",
                        std::string_view yvar = "y") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : display_order()) {
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      const bool bare = e.x == 0 && e.y == 0;
      if (mag != 1 || bare) os << mag;
      if (e.x > 0) {
        os << xvar;
        if (e.x > 1) os << "^" << e.x;
      }
      if (e.y > 0) {
        os << yvar;
        if (e.y > 1) os << "^" << e.y;
      }
    }
    return os.str();
  }

  /// Rendering of a univariate polynomial in t.
  std::string to_t_string() const {
    if (!is_univariate())
      throw InputError("to_t_string on a polynomial with y terms: " +
                       to_string());
    return to_string("t", "y");
  }

  /// JSON: [[i, j, "coefficient"], ...] in display order.
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : display_order())
      arr.push_back({e.x, e.y, c.str()});
    return arr;
  }

  static BiPoly from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InputError("polynomial JSON must be an array");
    BiPoly p;
    for (const auto& term : j) {
      if (!term.is_array() || term.size() != 3)
        throw InputError("polynomial term must be [i, j, coefficient]");
      const Integer c = term[2].is_string()
                            ? Integer(term[2].get<std::string>())
                            : Integer(term[2].get<long long>());
      p.add_term({term[0].get<unsigned>(), term[1].get<unsigned>()}, c);
    }
    return p;
  }

 private:
  Terms terms_;
};

inline BiPoly pow(BiPoly base, unsigned exp) {
  BiPoly r = BiPoly::one();
  while (exp > 0) {
    if (exp & 1u) r *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  return r;
}

/// Substitutes 0 for one variable, or identifies x and y. The result is a
/// univariate polynomial on the x axis.
inline BiPoly specialize(const BiPoly& p, Specialization mode) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) {
    switch (mode) {
      case Specialization::x_to_zero:
        if (e.x == 0) r.add_term({e.y, 0}, c);
        break;
      case Specialization::y_to_zero:
        if (e.y == 0) r.add_term({e.x, 0}, c);
        break;
      case Specialization::x_equals_y:
        r.add_term({e.x + e.y, 0}, c);
        break;
    }
  }
  return r;
}

inline Integer eval(const BiPoly& p, const Integer& x0, const Integer& y0) {
  Integer sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer term = c;
    for (unsigned k = 0; k < e.x; ++k) term *= x0;
    for (unsigned k = 0; k < e.y; ++k) term *= y0;
    sum += term;
  }
  return sum;
}

}  // namespace taitpoly
