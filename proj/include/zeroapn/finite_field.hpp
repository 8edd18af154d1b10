#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zeroapn/gf2_poly.hpp"

namespace zapn {

/// Element of F_{2^n} in the polynomial basis of its context; bit i is the
/// coordinate of a^i where a is a root of the modulus.
struct FieldElement {
  std::uint32_t bits = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Power-map exponent; the normalized value is the representative of the raw
/// value modulo 2^n - 1 in [0, 2^n - 2].
class Exponent {
 public:
  Exponent(std::int64_t raw, unsigned n, std::string form = {});

  static std::uint64_t normalize(std::int64_t raw, unsigned n);

  std::int64_t raw() const { return raw_; }
  std::uint64_t value() const { return value_; }
  unsigned n() const { return n_; }
  /// The expression the exponent came from, e.g. "3*2^k-7"; may be empty.
  const std::string& form() const { return form_; }

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.n_ == b.n_ && a.value_ == b.value_; }

 private:
  std::int64_t raw_;
  unsigned n_;
  std::uint64_t value_;
  std::string form_;
};

struct FieldOptions {
  /// Log/antilog tables are built only for n up to this bound.
  unsigned table_max_n = 24;
};

/// A concrete F_{2^n}. Immutable after construction, so one context may be
/// shared read-only between threads.
class FieldContext {
 public:
  static constexpr unsigned kMaxDegree = 28;

  /// Uses the smallest irreducible of degree n (coefficient bits as an
  /// integer) with nonzero constant term.
  explicit FieldContext(unsigned n, FieldOptions options = {});
  /// Uses the given modulus, which must be irreducible.
  explicit FieldContext(const BinaryPolynomial& modulus, FieldOptions options = {});

  static BinaryPolynomial default_modulus(unsigned n);
  /// Irreducibles of degree n in ascending order, excluding x.
  static std::vector<BinaryPolynomial> irreducibles(unsigned n, std::size_t limit);

  unsigned n() const { return n_; }
  /// Number of elements, 2^n.
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  /// Order of the multiplicative group, 2^n - 1.
  std::uint32_t group_order() const { return static_cast<std::uint32_t>(size() - 1); }
  const BinaryPolynomial& modulus() const { return modulus_; }
  bool has_tables() const { return !log_.empty(); }

  static FieldElement zero() { return {0}; }
  static FieldElement one() { return {1}; }
  /// Smallest primitive element by integer encoding.
  FieldElement generator() const { return generator_; }
  bool contains(FieldElement e) const { return e.bits < size(); }

  static FieldElement add(FieldElement a, FieldElement b) { return {a.bits ^ b.bits}; }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement square(FieldElement a) const { return mul(a, a); }
  /// Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const;
  /// 0^d = 0 for every d; nonzero elements use the normalized exponent.
  FieldElement pow(FieldElement e, const Exponent& d) const;
  FieldElement pow(FieldElement e, std::uint64_t d) const;
  /// Square-and-multiply, never uses the tables.
  FieldElement pow_slow(FieldElement e, std::uint64_t d) const;
  /// e^(2^m).
  FieldElement frobenius(FieldElement e, unsigned m) const;
  /// True iff e^(2^m) = e, i.e. e lies in F_{2^gcd(m,n)}.
  bool in_subfield(FieldElement e, unsigned m) const;

  /// Discrete log base generator(); requires tables and e != 0.
  std::uint32_t log(FieldElement e) const { return log_[e.bits]; }
  FieldElement antilog(std::uint32_t i) const { return {antilog_[i]}; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }
  const std::vector<std::uint32_t>& antilog_table() const { return antilog_; }

  /// Evaluates a polynomial over F_2 at e.
  FieldElement evaluate(const BinaryPolynomial& p, FieldElement e) const;

  std::string to_hex(FieldElement e) const;
  /// Polynomial-basis form in the symbol 'a', e.g. "a^3+a+1".
  std::string to_poly_string(FieldElement e) const;

 private:
  FieldElement mul_reduce(FieldElement a, FieldElement b) const;
  void init(FieldOptions options);

  unsigned n_ = 0;
  BinaryPolynomial modulus_;
  std::uint32_t modulus_low_ = 0;  // modulus without its leading term
  FieldElement generator_{};
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;
};

/// Prime divisors of v in ascending order.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace zapn
