#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "zeroapn/finite_field.hpp"
#include "zeroapn/sparse_poly.hpp"

using namespace zapn;

TEST_CASE("default moduli") {
  CHECK(FieldContext::default_modulus(1) == parse_univariate("x+1"));
  CHECK(FieldContext::default_modulus(2) == parse_univariate("x^2+x+1"));
  CHECK(FieldContext::default_modulus(4) == parse_univariate("x^4+x+1"));
  CHECK(FieldContext::default_modulus(9) == parse_univariate("x^9+x+1"));
  for (unsigned n = 1; n <= 20; ++n) {
    const auto m = FieldContext::default_modulus(n);
    CHECK(m.deg() == n);
    CHECK(is_irreducible(m));
    CHECK(m.eval0());
  }
  CHECK_THROWS(FieldContext(0));
  CHECK_THROWS(FieldContext(FieldContext::kMaxDegree + 1));
  CHECK_THROWS(FieldContext(parse_univariate("x^4+1")));
}

TEST_CASE("field axioms, tables and slow path agree") {
  for (unsigned n : {1U, 2U, 3U, 5U, 8U, 10U}) {
    const FieldContext with(n);
    const FieldContext without(n, FieldOptions{0});
    CHECK(with.has_tables());
    CHECK_FALSE(without.has_tables());
    std::mt19937_64 rng(n);
    for (int i = 0; i < 400; ++i) {
      const FieldElement a{static_cast<std::uint32_t>(rng() % with.size())};
      const FieldElement b{static_cast<std::uint32_t>(rng() % with.size())};
      const FieldElement c{static_cast<std::uint32_t>(rng() % with.size())};
      CHECK(with.mul(a, b) == without.mul(a, b));
      CHECK(with.mul(a, b) == with.mul(b, a));
      CHECK(with.mul(with.mul(a, b), c) == with.mul(a, with.mul(b, c)));
      CHECK(with.mul(a, FieldContext::add(b, c)) == FieldContext::add(with.mul(a, b), with.mul(a, c)));
      if (a.bits != 0) {
        CHECK(with.mul(a, with.inv(a)) == FieldContext::one());
        CHECK(without.mul(a, without.inv(a)) == FieldContext::one());
      }
      const std::uint64_t e = rng() % 5000;
      CHECK(with.pow(a, e) == with.pow_slow(a, e));
      CHECK(without.pow(a, e) == with.pow_slow(a, e));
    }
    CHECK_THROWS(with.inv(FieldContext::zero()));
  }
}

TEST_CASE("generator is primitive and smallest such") {
  for (unsigned n = 2; n <= 12; ++n) {
    const FieldContext ctx(n);
    const auto g = ctx.generator();
    std::set<std::uint32_t> seen;
    FieldElement x = FieldContext::one();
    for (std::uint32_t i = 0; i < ctx.group_order(); ++i) {
      seen.insert(x.bits);
      x = ctx.mul(x, g);
    }
    CHECK(seen.size() == ctx.group_order());
    for (std::uint32_t e = 2; e < g.bits; ++e) {
      FieldElement y = FieldContext::one();
      std::uint32_t order = 0;
      do {
        y = ctx.mul(y, {e});
        ++order;
      } while (y != FieldContext::one());
      CHECK(order < ctx.group_order());
    }
  }
}

TEST_CASE("log and antilog are inverse") {
  const FieldContext ctx(11);
  for (std::uint32_t v = 1; v < ctx.size(); ++v) {
    CHECK(ctx.antilog(ctx.log({v})).bits == v);
  }
}

TEST_CASE("exponent normalization and the zero convention") {
  CHECK(Exponent(-9, 10).value() == 1014);
  CHECK(Exponent(-9, 9).value() == 502);
  CHECK(Exponent(1023, 10).value() == 0);
  CHECK(Exponent(2047, 10).value() == 1);
  const FieldContext ctx(5);
  CHECK(ctx.pow(FieldContext::zero(), std::uint64_t{0}) == FieldContext::zero());
  CHECK(ctx.pow(FieldContext::zero(), std::uint64_t{7}) == FieldContext::zero());
  CHECK(ctx.pow(FieldElement{5}, Exponent(-1, 5)) == ctx.inv({5}));
  CHECK(ctx.pow(FieldElement{5}, Exponent(0, 5)) == FieldContext::one());
}

TEST_CASE("frobenius and subfields") {
  const FieldContext ctx(12);
  std::size_t in_f4 = 0;
  std::size_t in_f8 = 0;
  std::size_t in_f64 = 0;
  for (std::uint32_t v = 0; v < ctx.size(); ++v) {
    const FieldElement e{v};
    CHECK(ctx.frobenius(e, 12) == e);
    CHECK(ctx.frobenius(e, 1) == ctx.square(e));
    in_f4 += ctx.in_subfield(e, 2);
    in_f8 += ctx.in_subfield(e, 3);
    in_f64 += ctx.in_subfield(e, 6);
  }
  CHECK(in_f4 == 4);
  CHECK(in_f8 == 8);
  CHECK(in_f64 == 64);
  CHECK_THROWS(ctx.in_subfield(FieldContext::one(), 0));
}

TEST_CASE("evaluating the modulus at the generator of the basis gives zero") {
  for (unsigned n = 2; n <= 16; ++n) {
    const FieldContext ctx(n);
    CHECK(ctx.evaluate(ctx.modulus(), {2}) == FieldContext::zero());
  }
  const FieldContext ctx(4);
  CHECK(ctx.to_hex({0xb}) == "b");
  CHECK(ctx.to_poly_string({0xb}) == "a^3+a+1");
}

TEST_CASE("a different modulus gives an isomorphic field") {
  const auto mods = FieldContext::irreducibles(8, 3);
  REQUIRE(mods.size() == 3);
  for (const auto& m : mods) {
    const FieldContext ctx(m);
    CHECK(ctx.modulus() == m);
    CHECK(ctx.mul(ctx.generator(), ctx.inv(ctx.generator())) == FieldContext::one());
  }
}

TEST_CASE("prime factors") {
  CHECK(prime_factors(1023) == std::vector<std::uint64_t>{3, 11, 31});
  CHECK(prime_factors(2047) == std::vector<std::uint64_t>{23, 89});
  CHECK(prime_factors(1).empty());
}
