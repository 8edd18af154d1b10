#include "zeroapn/gf2_poly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace zapn {

namespace {

using Word = BinaryPolynomial::Word;
constexpr std::size_t kBits = BinaryPolynomial::kWordBits;

// 64x64 -> 128 carry-less product.
inline void clmul(Word a, Word b, Word& lo, Word& hi) {
  lo = 0;
  hi = 0;
  while (b != 0) {
    const int i = std::countr_zero(b);
    b &= b - 1;
    lo ^= a << i;
    if (i != 0) hi ^= a >> (kBits - i);
  }
}

// Spreads the low 32 bits of w so bit i lands on bit 2i.
inline Word spread32(Word w) {
  w &= 0xffffffffULL;
  w = (w | (w << 16)) & 0x0000ffff0000ffffULL;
  w = (w | (w << 8)) & 0x00ff00ff00ff00ffULL;
  w = (w | (w << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  w = (w | (w << 2)) & 0x3333333333333333ULL;
  w = (w | (w << 1)) & 0x5555555555555555ULL;
  return w;
}

// Inverse of spread32 on the even bits of w.
inline Word compress32(Word w) {
  w &= 0x5555555555555555ULL;
  w = (w | (w >> 1)) & 0x3333333333333333ULL;
  w = (w | (w >> 2)) & 0x0f0f0f0f0f0f0f0fULL;
  w = (w | (w >> 4)) & 0x00ff00ff00ff00ffULL;
  w = (w | (w >> 8)) & 0x0000ffff0000ffffULL;
  w = (w | (w >> 16)) & 0x00000000ffffffffULL;
  return w;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

BinaryPolynomial BinaryPolynomial::monomial(std::size_t exponent) {
  BinaryPolynomial p;
  p.words_.assign(exponent / kBits + 1, 0);
  p.words_.back() = Word{1} << (exponent % kBits);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_bits(Word bits) {
  BinaryPolynomial p;
  if (bits != 0) p.words_.push_back(bits);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_words(std::vector<Word> words) {
  BinaryPolynomial p;
  p.words_ = std::move(words);
  p.normalize();
  return p;
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::initializer_list<std::size_t> exponents) {
  BinaryPolynomial p;
  for (auto e : exponents) p.flip(e);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_hex(std::string_view hex) {
  if (hex.empty()) throw std::invalid_argument("empty hex polynomial");
  BinaryPolynomial p;
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    const char c = *it;
    unsigned v = 0;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw std::invalid_argument("invalid hex digit in polynomial: '" + std::string(1, c) + "'");
    }
    for (unsigned j = 0; j < 4; ++j)
      if ((v >> j) & 1U) p.flip(bit + j);
  }
  return p;
}

std::string BinaryPolynomial::to_hex() const {
  if (is_zero()) return "0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const std::size_t top = deg();
  for (std::size_t nib = top / 4 + 1; nib-- > 0;) {
    unsigned v = 0;
    for (unsigned j = 0; j < 4; ++j)
      if (coefficient(nib * 4 + j)) v |= 1U << j;
    out.push_back(kDigits[v]);
  }
  return out;
}

std::string BinaryPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = deg() + 1; i-- > 0;) {
    if (!coefficient(i)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else {
      out += var;
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

std::optional<std::size_t> BinaryPolynomial::degree() const {
  if (is_zero()) return std::nullopt;
  return deg();
}

std::size_t BinaryPolynomial::deg() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial");
  return (words_.size() - 1) * kBits + (kBits - 1 - static_cast<std::size_t>(std::countl_zero(words_.back())));
}

void BinaryPolynomial::flip(std::size_t i) {
  const std::size_t w = i / kBits;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= Word{1} << (i % kBits);
  normalize();
}

void BinaryPolynomial::set(std::size_t i, bool value) {
  if (coefficient(i) != value) flip(i);
}

std::size_t BinaryPolynomial::weight() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void BinaryPolynomial::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  normalize();
  return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Word> out(a.words_.size() + b.words_.size(), 0);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (a.words_[i] == 0) continue;
    for (std::size_t j = 0; j < b.words_.size(); ++j) {
      Word lo = 0;
      Word hi = 0;
      clmul(a.words_[i], b.words_[j], lo, hi);
      out[i + j] ^= lo;
      out[i + j + 1] ^= hi;
    }
  }
  return BinaryPolynomial::from_words(std::move(out));
}

BinaryPolynomial& BinaryPolynomial::operator*=(const BinaryPolynomial& other) { return *this = *this * other; }

BinaryPolynomial& BinaryPolynomial::operator<<=(std::size_t shift) {
  if (is_zero() || shift == 0) return *this;
  const std::size_t ws = shift / kBits;
  const std::size_t bs = shift % kBits;
  std::vector<Word> out(words_.size() + ws + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out[i + ws] ^= words_[i] << bs;
    if (bs != 0) out[i + ws + 1] ^= words_[i] >> (kBits - bs);
  }
  words_ = std::move(out);
  normalize();
  return *this;
}

BinaryPolynomial& BinaryPolynomial::operator>>=(std::size_t shift) {
  const std::size_t ws = shift / kBits;
  const std::size_t bs = shift % kBits;
  if (ws >= words_.size()) {
    words_.clear();
    return *this;
  }
  std::vector<Word> out(words_.size() - ws, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = words_[i + ws] >> bs;
    if (bs != 0 && i + ws + 1 < words_.size()) out[i] |= words_[i + ws + 1] << (kBits - bs);
  }
  words_ = std::move(out);
  normalize();
  return *this;
}

BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& b) { return divrem(a, b).quotient; }
BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b) { return divrem(a, b).remainder; }

std::strong_ordering operator<=>(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

BinaryPolynomial BinaryPolynomial::square() const {
  std::vector<Word> out(2 * words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out[2 * i] = spread32(words_[i]);
    out[2 * i + 1] = spread32(words_[i] >> 32);
  }
  return from_words(std::move(out));
}

BinaryPolynomial BinaryPolynomial::derivative() const {
  // d/dx x^i = x^(i-1) for odd i, 0 for even i.
  BinaryPolynomial odd;
  odd.words_ = words_;
  for (auto& w : odd.words_) w &= 0xaaaaaaaaaaaaaaaaULL;
  odd.normalize();
  return odd >> 1;
}

bool BinaryPolynomial::is_square() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return (w & 0xaaaaaaaaaaaaaaaaULL) == 0; });
}

BinaryPolynomial BinaryPolynomial::square_root() const {
  if (!is_square()) throw std::domain_error("square_root of a polynomial with odd exponents");
  std::vector<Word> out((words_.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word half = compress32(words_[i]);
    out[i / 2] |= (i % 2 == 0) ? half : (half << 32);
  }
  return from_words(std::move(out));
}

DivRem divrem(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero() || a.deg() < b.deg()) return {BinaryPolynomial{}, a};
  const std::size_t db = b.deg();
  std::vector<Word> rem = a.words();
  std::vector<Word> quo(a.deg() / BinaryPolynomial::kWordBits + 1, 0);
  const auto& bw = b.words();
  for (std::size_t i = a.deg() + 1; i-- > db;) {
    if (((rem[i / kBits] >> (i % kBits)) & 1U) == 0) continue;
    const std::size_t shift = i - db;
    quo[shift / kBits] |= Word{1} << (shift % kBits);
    const std::size_t ws = shift / kBits;
    const std::size_t bs = shift % kBits;
    for (std::size_t j = 0; j < bw.size(); ++j) {
      rem[j + ws] ^= bw[j] << bs;
      if (bs != 0 && j + ws + 1 < rem.size()) rem[j + ws + 1] ^= bw[j] >> (kBits - bs);
    }
  }
  return {BinaryPolynomial::from_words(std::move(quo)), BinaryPolynomial::from_words(std::move(rem))};
}

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
  while (!b.is_zero()) {
    BinaryPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BinaryPolynomial pow(const BinaryPolynomial& base, std::uint64_t e) {
  BinaryPolynomial result = BinaryPolynomial::one();
  BinaryPolynomial b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1;
    if (e != 0) b = b.square();
  }
  return result;
}

BinaryPolynomial mul_mod(const BinaryPolynomial& a, const BinaryPolynomial& b, const BinaryPolynomial& m) {
  return (a * b) % m;
}

BinaryPolynomial pow_mod(const BinaryPolynomial& base, std::uint64_t e, const BinaryPolynomial& m) {
  BinaryPolynomial result = BinaryPolynomial::one() % m;
  BinaryPolynomial b = base % m;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, b, m);
    e >>= 1;
    if (e != 0) b = b.square() % m;
  }
  return result;
}

BinaryPolynomial frobenius_x_mod(std::uint64_t k, const BinaryPolynomial& m) {
  BinaryPolynomial r = BinaryPolynomial::x() % m;
  for (std::uint64_t i = 0; i < k; ++i) r = r.square() % m;
  return r;
}

bool is_irreducible(const BinaryPolynomial& p) {
  if (p.is_zero() || p.deg() == 0) throw std::domain_error("is_irreducible: constant polynomial");
  const std::size_t n = p.deg();
  if (n == 1) return true;
  if (!p.eval0() || !p.eval1()) return false;
  const BinaryPolynomial x = BinaryPolynomial::x();
  if (frobenius_x_mod(n, p) != x) return false;
  for (auto q : prime_divisors(n)) {
    if (!gcd(p, frobenius_x_mod(n / q, p) + x).is_one()) return false;
  }
  return true;
}

std::size_t count_roots_in_field(const BinaryPolynomial& p, unsigned n) {
  if (p.is_zero()) throw std::domain_error("count_roots_in_field: zero polynomial");
  if (n == 0) throw std::domain_error("count_roots_in_field: n must be positive");
  if (p.deg() == 0) return 0;
  const BinaryPolynomial g = gcd(p, frobenius_x_mod(n, p) + BinaryPolynomial::x());
  return g.deg();
}

BinaryPolynomial Factorization::expand() const {
  BinaryPolynomial out = BinaryPolynomial::one();
  for (const auto& f : factors) out *= pow(f.factor, f.multiplicity);
  return out;
}

std::string Factorization::to_string(char var) const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    const bool bare = f.factor.weight() == 1;
    if (bare) {
      out += f.factor.to_string(var);
    } else {
      out += "(" + f.factor.to_string(var) + ")";
    }
    if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out;
}

void Factorization::canonicalize() {
  std::map<BinaryPolynomial, unsigned> merged;
  for (auto& f : factors) merged[f.factor] += f.multiplicity;
  factors.clear();
  for (auto& [poly, mult] : merged) factors.push_back({poly, mult});
}

std::vector<FactorPower> square_free_decomposition(const BinaryPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square_free_decomposition: zero polynomial");
  std::vector<FactorPower> out;
  // Yun's loop handles multiplicities prime to 2; the leftover is a perfect
  // square and is handled by taking its square root.
  BinaryPolynomial current = p;
  unsigned scale = 1;
  while (!current.is_zero() && current.deg() > 0) {
    BinaryPolynomial c = gcd(current, current.derivative());
    BinaryPolynomial w = current / c;
    unsigned i = 1;
    while (!w.is_one()) {
      BinaryPolynomial y = gcd(w, c);
      BinaryPolynomial z = w / y;
      if (!z.is_one()) out.push_back({z, i * scale});
      ++i;
      w = std::move(y);
      c = c / w;
    }
    current = c.square_root();
    scale *= 2;
  }
  return out;
}

std::vector<std::pair<BinaryPolynomial, std::size_t>> distinct_degree_factorization(BinaryPolynomial p) {
  std::vector<std::pair<BinaryPolynomial, std::size_t>> out;
  const BinaryPolynomial x = BinaryPolynomial::x();
  BinaryPolynomial h = x % p;
  std::size_t d = 0;
  while (!p.is_one() && 2 * (d + 1) <= p.deg()) {
    ++d;
    h = h.square() % p;
    BinaryPolynomial g = gcd(p, h + x);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      p = p / g;
      h = h % p;
    }
  }
  if (!p.is_one()) out.emplace_back(p, p.deg());
  return out;
}

std::vector<BinaryPolynomial> equal_degree_factorization(const BinaryPolynomial& p, std::size_t d) {
  if (p.deg() == d) return {p};
  // Deterministic per input so results never depend on call order.
  std::mt19937_64 rng(std::hash<BinaryPolynomial>{}(p) ^ d);
  const std::size_t n = p.deg();
  while (true) {
    std::vector<Word> words(n / BinaryPolynomial::kWordBits + 1);
    for (auto& w : words) w = rng();
    BinaryPolynomial a = BinaryPolynomial::from_words(std::move(words)) % p;
    if (a.is_zero() || a.deg() == 0) continue;
    // Absolute trace F_{2^d} -> F_2 applied in every residue field.
    BinaryPolynomial t = a;
    BinaryPolynomial power = a;
    for (std::size_t i = 1; i < d; ++i) {
      power = power.square() % p;
      t += power;
    }
    BinaryPolynomial g = gcd(p, t);
    if (!g.is_one() && g.deg() < n) {
      auto left = equal_degree_factorization(g, d);
      auto right = equal_degree_factorization(p / g, d);
      left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
      return left;
    }
  }
}

Factorization factor(const BinaryPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("factor: zero polynomial");
  Factorization out;
  for (const auto& sf : square_free_decomposition(p)) {
    for (const auto& [block, d] : distinct_degree_factorization(sf.factor)) {
      for (auto& f : equal_degree_factorization(block, d)) out.factors.push_back({std::move(f), sf.multiplicity});
    }
  }
  out.canonicalize();
  return out;
}

}  // namespace zapn
