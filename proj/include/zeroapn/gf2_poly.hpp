#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zapn {

/// Univariate polynomial over F_2, bit-packed into 64-bit words.
///
/// Bit i of the packed sequence is the coefficient of x^i. The word vector is
/// kept normalized (no trailing zero words), so the zero polynomial owns no
/// storage and has no degree.
class BinaryPolynomial {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BinaryPolynomial() = default;

  static BinaryPolynomial one() { return from_bits(1); }
  static BinaryPolynomial x() { return from_bits(2); }
  static BinaryPolynomial monomial(std::size_t exponent);
  static BinaryPolynomial from_bits(Word bits);
  static BinaryPolynomial from_words(std::vector<Word> words);
  static BinaryPolynomial from_exponents(std::initializer_list<std::size_t> exponents);

  /// Lowercase hex of the coefficient integer; "0" for the zero polynomial.
  static BinaryPolynomial from_hex(std::string_view hex);
  std::string to_hex() const;

  /// Monomial form, highest degree first, e.g. "x^9+x+1".
  std::string to_string(char var = 'x') const;

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

  /// Degree; empty for the zero polynomial.
  std::optional<std::size_t> degree() const;
  /// Degree of a polynomial known to be nonzero.
  std::size_t deg() const;

  bool coefficient(std::size_t i) const {
    const std::size_t w = i / kWordBits;
    return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1U);
  }
  void flip(std::size_t i);
  void set(std::size_t i, bool value);

  std::size_t weight() const;
  const std::vector<Word>& words() const { return words_; }

  /// p(0) and p(1) as elements of F_2.
  bool eval0() const { return coefficient(0); }
  bool eval1() const { return weight() % 2 == 1; }

  BinaryPolynomial& operator+=(const BinaryPolynomial& other);
  BinaryPolynomial& operator*=(const BinaryPolynomial& other);
  BinaryPolynomial& operator<<=(std::size_t shift);
  BinaryPolynomial& operator>>=(std::size_t shift);

  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }
  friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);
  friend BinaryPolynomial operator<<(BinaryPolynomial a, std::size_t s) { return a <<= s; }
  friend BinaryPolynomial operator>>(BinaryPolynomial a, std::size_t s) { return a >>= s; }
  friend BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& b);
  friend BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b);

  friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

  /// Canonical order: by degree, then by coefficient bits read as an integer.
  friend std::strong_ordering operator<=>(const BinaryPolynomial& a, const BinaryPolynomial& b);

  BinaryPolynomial square() const;
  /// Formal derivative.
  BinaryPolynomial derivative() const;
  /// For a polynomial with only even exponents, the unique s with s^2 = *this.
  BinaryPolynomial square_root() const;
  bool is_square() const;

 private:
  void normalize();

  std::vector<Word> words_;
};

struct DivRem {
  BinaryPolynomial quotient;
  BinaryPolynomial remainder;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error when b is zero.
DivRem divrem(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);
BinaryPolynomial pow(const BinaryPolynomial& base, std::uint64_t e);
BinaryPolynomial mul_mod(const BinaryPolynomial& a, const BinaryPolynomial& b, const BinaryPolynomial& m);
BinaryPolynomial pow_mod(const BinaryPolynomial& base, std::uint64_t e, const BinaryPolynomial& m);
/// x^(2^k) mod m.
BinaryPolynomial frobenius_x_mod(std::uint64_t k, const BinaryPolynomial& m);

/// Rabin's test. Throws std::domain_error for constant input.
bool is_irreducible(const BinaryPolynomial& p);

/// Number of distinct roots of p in F_{2^n}, as deg gcd(p, x^(2^n) + x).
std::size_t count_roots_in_field(const BinaryPolynomial& p, unsigned n);

struct FactorPower {
  BinaryPolynomial factor;
  unsigned multiplicity = 1;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Complete factorization over F_2; the unit is always 1.
struct Factorization {
  std::vector<FactorPower> factors;

  BinaryPolynomial expand() const;
  std::string to_string(char var = 'x') const;
  void canonicalize();
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Square-free decomposition: pairs (square-free part, multiplicity).
std::vector<FactorPower> square_free_decomposition(const BinaryPolynomial& p);
/// Distinct-degree factorization of a square-free polynomial: pairs (product of
/// all irreducible factors of that degree, degree).
std::vector<std::pair<BinaryPolynomial, std::size_t>> distinct_degree_factorization(BinaryPolynomial p);
/// Splits a square-free product of irreducibles that all have degree d.
std::vector<BinaryPolynomial> equal_degree_factorization(const BinaryPolynomial& p, std::size_t d);

/// Throws std::domain_error for the zero polynomial.
Factorization factor(const BinaryPolynomial& p);

}  // namespace zapn

template <>
struct std::hash<zapn::BinaryPolynomial> {
  std::size_t operator()(const zapn::BinaryPolynomial& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : p.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
