#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zeroapn/gf2_poly.hpp"
#include "zeroapn/sparse_poly.hpp"

using namespace zapn;

namespace {

BinaryPolynomial random_poly(std::mt19937_64& rng, std::size_t max_deg) {
  BinaryPolynomial p;
  const std::size_t d = rng() % (max_deg + 1);
  for (std::size_t i = 0; i <= d; ++i)
    if (rng() & 1U) p.flip(i);
  return p;
}

BinaryPolynomial P(const char* s) { return parse_univariate(s); }

// Irreducibility by trial division, for small degrees only.
bool irreducible_by_trial(const BinaryPolynomial& p) {
  const std::size_t d = p.deg();
  if (d == 0) return false;
  for (std::uint64_t q = 2; q < (std::uint64_t{1} << (d / 2 + 1)); ++q) {
    const auto t = BinaryPolynomial::from_bits(q);
    if (t.deg() == 0 || t.deg() > d / 2) continue;
    if ((p % t).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hex round trip and the digit convention") {
  CHECK(BinaryPolynomial::from_hex("7") == P("x^2+x+1"));
  CHECK(BinaryPolynomial::from_hex("13") == P("x^4+x+1"));
  CHECK(P("x^9+x+1").to_hex() == "203");
  CHECK(BinaryPolynomial{}.to_hex() == "0");
  CHECK(BinaryPolynomial::from_hex("0").is_zero());
  CHECK(BinaryPolynomial::from_hex("00a") == BinaryPolynomial::from_hex("A"));
  CHECK_THROWS_AS(BinaryPolynomial::from_hex("xyz"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryPolynomial::from_hex(""), std::invalid_argument);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng, 300);
    CHECK(BinaryPolynomial::from_hex(p.to_hex()) == p);
  }
}

TEST_CASE("degree and printing") {
  CHECK_FALSE(BinaryPolynomial{}.degree().has_value());
  CHECK_THROWS(BinaryPolynomial{}.deg());
  CHECK(BinaryPolynomial::monomial(200).deg() == 200);
  CHECK(P("x^9+x^8+1").to_string() == "x^9+x^8+1");
  CHECK(BinaryPolynomial::one().to_string() == "1");
  CHECK(BinaryPolynomial{}.to_string() == "0");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng, 200);
    const auto b = random_poly(rng, 200);
    const auto c = random_poly(rng, 130);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + a == BinaryPolynomial{});
    CHECK(a.square() == a * a);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).deg() == a.deg() + b.deg());
  }
}

TEST_CASE("division with remainder") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng, 250);
    auto b = random_poly(rng, 90);
    if (b.is_zero()) b = BinaryPolynomial::one();
    const auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(r.deg() < b.deg());
  }
  CHECK_THROWS_AS(divrem(P("x+1"), BinaryPolynomial{}), std::domain_error);
}

TEST_CASE("gcd divides both inputs and is maximal") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto h = random_poly(rng, 20) + BinaryPolynomial::monomial(21);
    const auto a = random_poly(rng, 60) * h;
    const auto b = random_poly(rng, 60) * h;
    const auto g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) continue;
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK(((g % h).is_zero() || a.is_zero() || b.is_zero()));
  }
  CHECK(gcd(P("x^2+1"), P("x^2+x")) == P("x+1"));
}

TEST_CASE("shifts, derivative and square roots") {
  const auto p = P("x^5+x^2+1");
  CHECK((p << 3) == p * BinaryPolynomial::monomial(3));
  CHECK(((p << 70) >> 70) == p);
  CHECK(P("x^5+x^4+x^2+x+1").derivative() == P("x^4+1"));
  CHECK(p.square().is_square());
  CHECK(p.square().square_root() == p);
  CHECK_FALSE(p.is_square());
}

TEST_CASE("modular powering matches repeated multiplication") {
  const auto m = P("x^13+x^4+x^3+x+1");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto b = random_poly(rng, 12);
    const unsigned e = static_cast<unsigned>(rng() % 40);
    BinaryPolynomial slow = BinaryPolynomial::one();
    for (unsigned j = 0; j < e; ++j) slow = (slow * b) % m;
    CHECK(pow_mod(b, e, m) == slow);
  }
  CHECK(frobenius_x_mod(13, m) == BinaryPolynomial::x());
}

TEST_CASE("Rabin irreducibility agrees with trial division up to degree 12") {
  for (std::uint64_t bits = 2; bits < (1U << 13); ++bits) {
    const auto p = BinaryPolynomial::from_bits(bits);
    if (p.deg() == 0) continue;
    CHECK_MESSAGE(is_irreducible(p) == irreducible_by_trial(p), p.to_string());
  }
  CHECK_THROWS(is_irreducible(BinaryPolynomial::one()));
}

TEST_CASE("number of irreducibles of degree d follows the necklace count") {
  // (1/d) sum_{e | d} mu(e) 2^{d/e}
  const std::size_t expected[] = {0, 2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186};
  for (std::size_t d = 1; d <= 11; ++d) {
    std::size_t count = 0;
    for (std::uint64_t bits = std::uint64_t{1} << d; bits < (std::uint64_t{2} << d); ++bits)
      if (is_irreducible(BinaryPolynomial::from_bits(bits))) ++count;
    CHECK(count == expected[d]);
  }
}

TEST_CASE("factorization expands back and has irreducible factors") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 150; ++i) {
    auto p = random_poly(rng, 120);
    if (p.is_zero()) continue;
    // Force some repeated factors.
    if (i % 3 == 0) p = p * p * P("x^3+x+1");
    if (i % 5 == 0) p = p * BinaryPolynomial::monomial(7);
    const auto f = factor(p);
    CHECK(f.expand() == p);
    for (std::size_t j = 0; j < f.factors.size(); ++j) {
      CHECK(is_irreducible(f.factors[j].factor));
      if (j > 0) CHECK(f.factors[j - 1].factor < f.factors[j].factor);
    }
  }
  CHECK_THROWS_AS(factor(BinaryPolynomial{}), std::domain_error);
  CHECK(factor(BinaryPolynomial::one()).factors.empty());
}

TEST_CASE("factor: known small cases") {
  CHECK(factor(P("x^2+x+1")).to_string() == "(x^2+x+1)");
  CHECK(factor(P("x^9+(x+1)^9+x^9(x+1)^9")).to_string() == "(x^9+x+1)(x^9+x^8+1)");
  CHECK(factor(P("x^8+x")).to_string() == "x(x+1)(x^3+x+1)(x^3+x^2+1)");
  CHECK(factor(P("(x+1)^12 x^3")).to_string() == "x^3(x+1)^12");
}

TEST_CASE("square-free decomposition multiplies back") {
  const auto p = P("x^3 (x+1)^4 (x^2+x+1)^6 (x^3+x+1)");
  BinaryPolynomial prod = BinaryPolynomial::one();
  for (const auto& fp : square_free_decomposition(p)) prod *= pow(fp.factor, fp.multiplicity);
  CHECK(prod == p);
}

TEST_CASE("distinct-degree then equal-degree splitting") {
  const auto p = P("(x^2+x+1)(x^3+x+1)(x^3+x^2+1)(x^4+x+1)");
  const auto dd = distinct_degree_factorization(p);
  REQUIRE(dd.size() == 3);
  CHECK(dd[1].first == P("(x^3+x+1)(x^3+x^2+1)"));
  CHECK(dd[1].second == 3);
  auto parts = equal_degree_factorization(dd[1].first, 3);
  std::sort(parts.begin(), parts.end());
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == P("x^3+x+1"));
  CHECK(parts[1] == P("x^3+x^2+1"));
}

TEST_CASE("root counts match brute-force evaluation") {
  // An irreducible factor of degree e contributes e distinct roots iff e | n.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    auto p = random_poly(rng, 30);
    if (p.is_zero()) continue;
    for (unsigned n = 1; n <= 8; ++n) {
      std::size_t expect = 0;
      for (const auto& fp : factor(p).factors)
        if (n % fp.factor.deg() == 0) expect += fp.factor.deg();
      CHECK(count_roots_in_field(p, n) == expect);
    }
  }
  CHECK(count_roots_in_field(P("x^9+x+1"), 9) == 9);
  CHECK(count_roots_in_field(P("x^9+x+1"), 11) == 0);
}
