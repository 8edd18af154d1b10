#include "zeroapn/finite_field.hpp"

#include <numeric>
#include <stdexcept>

namespace zapn {

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

Exponent::Exponent(std::int64_t raw, unsigned n, std::string form)
    : raw_(raw), n_(n), value_(normalize(raw, n)), form_(std::move(form)) {}

std::uint64_t Exponent::normalize(std::int64_t raw, unsigned n) {
  if (n == 0 || n > 62) throw std::out_of_range("exponent normalization: bad n");
  const auto modulus = static_cast<std::int64_t>((std::uint64_t{1} << n) - 1);
  std::int64_t r = raw % modulus;
  if (r < 0) r += modulus;
  return static_cast<std::uint64_t>(r);
}

BinaryPolynomial FieldContext::default_modulus(unsigned n) {
  if (n < 1 || n > kMaxDegree) throw std::out_of_range("field degree out of range: " + std::to_string(n));
  return irreducibles(n, 1).front();
}

std::vector<BinaryPolynomial> FieldContext::irreducibles(unsigned n, std::size_t limit) {
  std::vector<BinaryPolynomial> out;
  const std::uint64_t lo = std::uint64_t{1} << n;
  const std::uint64_t hi = std::uint64_t{1} << (n + 1);
  for (std::uint64_t bits = lo | 1U; bits < hi && out.size() < limit; bits += 2) {
    auto p = BinaryPolynomial::from_bits(bits);
    if (is_irreducible(p)) out.push_back(p);
  }
  return out;
}

FieldContext::FieldContext(unsigned n, FieldOptions options) : n_(n), modulus_(default_modulus(n)) {
  init(options);
}

FieldContext::FieldContext(const BinaryPolynomial& modulus, FieldOptions options) : modulus_(modulus) {
  if (modulus.is_zero() || modulus.deg() < 1 || modulus.deg() > kMaxDegree)
    throw std::out_of_range("field modulus degree out of range");
  if (!is_irreducible(modulus)) throw std::invalid_argument("field modulus is not irreducible: " + modulus.to_string());
  n_ = static_cast<unsigned>(modulus.deg());
  init(options);
}

void FieldContext::init(FieldOptions options) {
  modulus_low_ = static_cast<std::uint32_t>(modulus_.words()[0] & ((std::uint64_t{1} << n_) - 1));

  // Smallest element whose order is the full group order.
  const std::uint32_t order = group_order();
  const auto primes = prime_factors(order);
  for (std::uint32_t g = 1; g < size(); ++g) {
    bool primitive = true;
    for (auto p : primes) {
      if (pow_slow({g}, order / p) == one() && order != 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = {g};
      break;
    }
  }

  if (n_ <= options.table_max_n) {
    log_.assign(size(), 0);
    antilog_.assign(size(), 0);
    FieldElement e = one();
    for (std::uint32_t i = 0; i < order; ++i) {
      antilog_[i] = e.bits;
      log_[e.bits] = i;
      e = mul_reduce(e, generator_);
    }
    // Wrap-around entry so antilog[order] is defined.
    antilog_[order] = 1;
  }
}

FieldElement FieldContext::mul_reduce(FieldElement a, FieldElement b) const {
  std::uint64_t prod = 0;
  std::uint64_t x = a.bits;
  std::uint32_t y = b.bits;
  while (y != 0) {
    if (y & 1U) prod ^= x;
    x <<= 1;
    y >>= 1;
  }
  for (unsigned i = 2 * n_; i-- > n_;) {
    if ((prod >> i) & 1U) prod ^= (static_cast<std::uint64_t>(modulus_low_) | (std::uint64_t{1} << n_)) << (i - n_);
  }
  return {static_cast<std::uint32_t>(prod)};
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
  if (a.bits == 0 || b.bits == 0) return zero();
  if (has_tables()) {
    std::uint32_t s = log_[a.bits] + log_[b.bits];
    if (s >= group_order()) s -= group_order();
    return {antilog_[s]};
  }
  return mul_reduce(a, b);
}

FieldElement FieldContext::inv(FieldElement a) const {
  if (a.bits == 0) throw std::domain_error("inverse of zero field element");
  if (has_tables()) return {antilog_[(group_order() - log_[a.bits]) % group_order()]};
  return pow_slow(a, group_order() - 1);
}

FieldElement FieldContext::pow_slow(FieldElement e, std::uint64_t d) const {
  if (e.bits == 0) return zero();
  d %= group_order();
  FieldElement result = one();
  FieldElement base = e;
  while (d != 0) {
    if (d & 1U) result = mul_reduce(result, base);
    d >>= 1;
    if (d != 0) base = mul_reduce(base, base);
  }
  return result;
}

FieldElement FieldContext::pow(FieldElement e, std::uint64_t d) const {
  if (e.bits == 0) return zero();
  if (has_tables()) {
    const std::uint64_t idx = (static_cast<std::uint64_t>(log_[e.bits]) * (d % group_order())) % group_order();
    return {antilog_[idx]};
  }
  return pow_slow(e, d);
}

FieldElement FieldContext::pow(FieldElement e, const Exponent& d) const {
  if (d.n() != n_) throw std::invalid_argument("exponent normalized for a different field degree");
  return pow(e, d.value());
}

FieldElement FieldContext::frobenius(FieldElement e, unsigned m) const {
  for (unsigned i = 0; i < m % n_; ++i) e = mul(e, e);
  return e;
}

bool FieldContext::in_subfield(FieldElement e, unsigned m) const {
  if (m == 0) throw std::invalid_argument("subfield degree must be positive");
  return frobenius(e, m) == e;
}

FieldElement FieldContext::evaluate(const BinaryPolynomial& p, FieldElement e) const {
  if (p.is_zero()) return zero();
  FieldElement acc = zero();
  for (std::size_t i = p.deg() + 1; i-- > 0;) {
    acc = mul(acc, e);
    if (p.coefficient(i)) acc.bits ^= 1U;
  }
  return acc;
}

std::string FieldContext::to_hex(FieldElement e) const { return BinaryPolynomial::from_bits(e.bits).to_hex(); }

std::string FieldContext::to_poly_string(FieldElement e) const {
  return BinaryPolynomial::from_bits(e.bits).to_string('a');
}

}  // namespace zapn
