#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zeroapn/gf2_poly.hpp"

namespace zapn {

template <std::size_t V>
using Monomial = std::array<std::uint32_t, V>;

template <std::size_t V>
constexpr std::array<char, V> default_variable_names() {
  static_assert(V >= 1 && V <= 3, "only x, y, z are named");
  std::array<char, V> names{};
  constexpr char kNames[] = {'x', 'y', 'z'};
  for (std::size_t i = 0; i < V; ++i) names[i] = kNames[i];
  return names;
}

/// Polynomial over F_2 in V variables, stored as the sorted set of monomials
/// with coefficient 1.
template <std::size_t V>
class SparsePolynomial {
 public:
  using Term = Monomial<V>;

  SparsePolynomial() = default;

  /// XOR-combines duplicate monomials.
  static SparsePolynomial from_terms(std::vector<Term> terms) {
    SparsePolynomial p;
    std::sort(terms.begin(), terms.end());
    for (std::size_t i = 0; i < terms.size();) {
      std::size_t j = i;
      while (j < terms.size() && terms[j] == terms[i]) ++j;
      if ((j - i) % 2 == 1) p.terms_.push_back(terms[i]);
      i = j;
    }
    return p;
  }
  static SparsePolynomial monomial(const Term& t) { return from_terms({t}); }
  static SparsePolynomial one() { return monomial(Term{}); }
  /// Embeds a univariate polynomial in variable `var`.
  static SparsePolynomial from_univariate(const BinaryPolynomial& p, std::size_t var = 0) {
    std::vector<Term> terms;
    if (!p.is_zero()) {
      for (std::size_t i = 0; i <= p.deg(); ++i) {
        if (!p.coefficient(i)) continue;
        Term t{};
        t[var] = static_cast<std::uint32_t>(i);
        terms.push_back(t);
      }
    }
    return from_terms(std::move(terms));
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Highest exponent of `var`; empty for the zero polynomial.
  std::optional<std::uint32_t> degree_in(std::size_t var) const {
    if (is_zero()) return std::nullopt;
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t[var]);
    return d;
  }
  std::uint32_t deg_in(std::size_t var) const { return degree_in(var).value_or(0); }

  /// Coefficients with respect to `var`: entry i holds the coefficient of
  /// var^i, with var's exponent cleared.
  std::vector<SparsePolynomial> coefficients_in(std::size_t var) const {
    std::vector<std::vector<Term>> buckets(is_zero() ? 0 : deg_in(var) + 1);
    for (auto t : terms_) {
      const auto e = t[var];
      t[var] = 0;
      buckets[e].push_back(t);
    }
    std::vector<SparsePolynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    return out;
  }

  /// The univariate polynomial in `var`; throws if other variables occur.
  BinaryPolynomial to_univariate(std::size_t var = 0) const {
    BinaryPolynomial out;
    for (const auto& t : terms_) {
      for (std::size_t v = 0; v < V; ++v) {
        if (v != var && t[v] != 0) throw std::invalid_argument("polynomial is not univariate");
      }
      out.flip(t[var]);
    }
    return out;
  }

  SparsePolynomial& operator+=(const SparsePolynomial& other) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
  }
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        Term u;
        for (std::size_t v = 0; v < V; ++v) u[v] = s[v] + t[v];
        prod.push_back(u);
      }
    }
    return from_terms(std::move(prod));
  }
  SparsePolynomial& operator*=(const SparsePolynomial& other) { return *this = *this * other; }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  /// Human-readable monomial form, e.g. "x^9y^2+x^9y+x^16".
  std::string to_string(const std::array<char, V>& names = default_variable_names<V>()) const {
    if (is_zero()) return "0";
    std::string out;
    // Highest total degree first reads closest to hand-written displays.
    auto sorted = terms_;
    std::sort(sorted.begin(), sorted.end(), [](const Term& a, const Term& b) { return a > b; });
    for (const auto& t : sorted) {
      if (!out.empty()) out += '+';
      std::string mono;
      for (std::size_t v = 0; v < V; ++v) {
        if (t[v] == 0) continue;
        mono += names[v];
        if (t[v] > 1) mono += '^' + std::to_string(t[v]);
      }
      out += mono.empty() ? "1" : mono;
    }
    return out;
  }

  /// One comma-separated exponent tuple per line, sorted ascending.
  std::string to_exponent_list() const {
    std::string out;
    for (const auto& t : terms_) {
      for (std::size_t v = 0; v < V; ++v) {
        if (v != 0) out += ',';
        out += std::to_string(t[v]);
      }
      out += '\n';
    }
    return out;
  }

  /// Inverse of to_exponent_list; blank lines and '#' comments are skipped.
  static SparsePolynomial from_exponent_list(std::string_view text) {
    std::vector<Term> terms;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      Term t{};
      std::size_t pos = 0;
      for (std::size_t v = 0; v < V; ++v) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        std::size_t end = pos;
        while (end < line.size() && std::isdigit(static_cast<unsigned char>(line[end]))) ++end;
        if (end == pos) throw std::invalid_argument("bad exponent tuple: '" + line + "'");
        t[v] = static_cast<std::uint32_t>(std::stoul(line.substr(pos, end - pos)));
        pos = end;
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (v + 1 < V) {
          if (pos >= line.size() || line[pos] != ',') throw std::invalid_argument("bad exponent tuple: '" + line + "'");
          ++pos;
        }
      }
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
      if (pos != line.size()) throw std::invalid_argument("bad exponent tuple: '" + line + "'");
      terms.push_back(t);
    }
    return from_terms(std::move(terms));
  }

 private:
  std::vector<Term> terms_;
};

using BivariatePolynomial = SparsePolynomial<2>;
using TrivariatePolynomial = SparsePolynomial<3>;

template <std::size_t V>
SparsePolynomial<V> pow(const SparsePolynomial<V>& base, unsigned e) {
  SparsePolynomial<V> result = SparsePolynomial<V>::one();
  SparsePolynomial<V> b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1;
    if (e != 0) {
      // Squaring over F_2 doubles every exponent.
      std::vector<Monomial<V>> sq = b.terms();
      for (auto& t : sq) {
        for (auto& x : t) x *= 2;
      }
      b = SparsePolynomial<V>::from_terms(std::move(sq));
    }
  }
  return result;
}

/// Maps every variable v of `p` to the monomial images[v] in the target ring
/// and XOR-combines the resulting terms.
template <std::size_t A, std::size_t B>
SparsePolynomial<B> substitute_monomials(const SparsePolynomial<A>& p, const std::array<Monomial<B>, A>& images) {
  std::vector<Monomial<B>> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial<B> m{};
    for (std::size_t v = 0; v < A; ++v) {
      for (std::size_t w = 0; w < B; ++w) m[w] += t[v] * images[v][w];
    }
    out.push_back(m);
  }
  return SparsePolynomial<B>::from_terms(std::move(out));
}

namespace detail {

/// Recursive-descent parser for polynomial expressions over F_2:
///   expr   := term ('+' term)*
///   term   := power ('*'? power)*
///   power  := atom ('^' digits)?
///   atom   := '(' expr ')' | variable | '0' | '1'
template <std::size_t V>
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::array<char, V>& names) : text_(text), names_(names) {}

  SparsePolynomial<V> parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    auto p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  SparsePolynomial<V> expr() {
    auto p = term();
    while (peek() == '+') {
      ++pos_;
      p += term();
    }
    return p;
  }

  SparsePolynomial<V> term() {
    auto p = power();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        p *= power();
      } else if (c == '(' || var_index(c).has_value() || std::isdigit(static_cast<unsigned char>(c))) {
        p *= power();
      } else {
        return p;
      }
    }
  }

  SparsePolynomial<V> power() {
    auto p = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      bool braced = false;
      if (pos_ < text_.size() && text_[pos_] == '{') {
        braced = true;
        ++pos_;
      }
      const auto e = digits();
      if (braced) {
        if (peek() != '}') fail("missing '}'");
        ++pos_;
      }
      p = zapn::pow(p, e);
    }
    return p;
  }

  SparsePolynomial<V> atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto p = expr();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return p;
    }
    if (auto v = var_index(c)) {
      ++pos_;
      Monomial<V> t{};
      t[*v] = 1;
      return SparsePolynomial<V>::monomial(t);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto value = digits();
      if (value > 1) fail("only the constants 0 and 1 exist over F_2");
      return value == 1 ? SparsePolynomial<V>::one() : SparsePolynomial<V>{};
    }
    fail(c == '\0' ? "unexpected end of expression" : "unexpected character");
  }

  unsigned digits() {
    skip_ws();
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > 1000000) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<unsigned>(value);
  }

  std::optional<std::size_t> var_index(char c) const {
    for (std::size_t i = 0; i < V; ++i)
      if (names_[i] == c) return i;
    return std::nullopt;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(text_) + "'");
  }

  std::string_view text_;
  std::array<char, V> names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the monomial form written by hand, e.g. "x^9y^2+(x+1)^3*y+1".
template <std::size_t V>
SparsePolynomial<V> parse_polynomial(std::string_view text,
                                     const std::array<char, V>& names = default_variable_names<V>()) {
  return detail::PolyParser<V>(text, names).parse();
}

inline BinaryPolynomial parse_univariate(std::string_view text, char var = 'x') {
  return parse_polynomial<1>(text, {var}).to_univariate(0);
}

/// Parses either the exponent-tuple list or, failing that, monomial form.
template <std::size_t V>
SparsePolynomial<V> parse_polynomial_block(std::string_view text) {
  bool tuples = text.find(',') != std::string_view::npos;
  bool any = false;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '+' || c == '^' || c == '(') tuples = false;
    if (!std::isspace(static_cast<unsigned char>(c))) any = true;
  }
  if (!any) return {};
  if (tuples) return SparsePolynomial<V>::from_exponent_list(text);
  std::string joined;
  for (char c : text) joined += (c == '\n' || c == '\r') ? ' ' : c;
  return parse_polynomial<V>(joined);
}

}  // namespace zapn
