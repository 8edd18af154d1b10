#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "zeroapn/diff_analysis.hpp"
#include "zeroapn/kernels.hpp"
#include "zeroapn/sparse_poly.hpp"

using namespace zapn;

namespace {

// (x+1)^d + x^d + 1 over all x outside F_2, straight from the definition.
std::optional<FieldElement> first_solution(const FieldContext& ctx, std::uint64_t d) {
  for (std::uint32_t v = 2; v < ctx.size(); ++v) {
    const FieldElement x{v};
    const auto s = FieldContext::add(FieldContext::add(ctx.pow_slow(FieldContext::add(x, FieldContext::one()), d),
                                                       ctx.pow_slow(x, d)),
                                     FieldContext::one());
    if (s.bits == 0) return x;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("single exponents") {
  const FieldContext f9(9);
  CHECK(is_zero_apn_power(f9, Exponent(45, 9)).zero_apn);
  CHECK_FALSE(is_apn(f9, Exponent(45, 9)));
  const auto r = is_zero_apn_power(f9, Exponent(-9, 9));
  CHECK_FALSE(r.zero_apn);
  REQUIRE(r.witness);
  // The witness is a root of one of the two degree-9 factors.
  CHECK((f9.evaluate(parse_univariate("x^9+x+1"), *r.witness).bits == 0 ||
         f9.evaluate(parse_univariate("x^9+x^8+1"), *r.witness).bits == 0));
  const FieldContext f4(4);
  const auto lin = is_zero_apn_power(f4, Exponent(1, 4));
  CHECK_FALSE(lin.zero_apn);
  CHECK(lin.witness->bits == 2);
  CHECK(is_apn(FieldContext(5), Exponent(3, 5)));
  CHECK_FALSE(is_apn(f4, Exponent(1, 4)));
}

TEST_CASE("x0-APN definition on raw tables") {
  const FieldContext f5(5);
  CHECK(is_x0_apn(f5, power_table(f5, Exponent(3, 5)), {0}));
  for (unsigned n = 2; n <= 6; ++n) {
    const FieldContext ctx(n);
    CHECK_FALSE(is_x0_apn(ctx, power_table(ctx, Exponent(1, n)), {0}));
  }
  const FieldContext f9(9);
  CHECK(is_x0_apn(f9, power_table(f9, Exponent(45, 9)), {0}));
  std::vector<std::uint32_t> short_table(10);
  CHECK_THROWS_AS(is_x0_apn(f5, short_table, {0}), std::invalid_argument);
}

TEST_CASE("criterion scan agrees with the definition-level check, n <= 10") {
  std::mt19937_64 rng(31);
  int mismatches = 0;
  for (unsigned n = 1; n <= 10; ++n) {
    const FieldContext ctx(n);
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t d = rng() % ctx.group_order();
      const bool fast = is_zero_apn_power(ctx, Exponent(static_cast<std::int64_t>(d), n)).zero_apn;
      const bool slow = is_x0_apn(ctx, power_table(ctx, Exponent(static_cast<std::int64_t>(d), n)), {0});
      mismatches += fast != slow;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("1-APN from the spectrum agrees with the definition at x0 = 1") {
  for (unsigned n = 2; n <= 8; ++n) {
    const FieldContext ctx(n);
    for (std::uint64_t d = 0; d < ctx.group_order(); ++d) {
      const Exponent e(static_cast<std::int64_t>(d), n);
      const auto s = differential_spectrum(ctx, e);
      CHECK_MESSAGE(is_one_apn(ctx, e, s) == is_x0_apn(ctx, power_table(ctx, e), {1}), "n=" << n << " d=" << d);
    }
  }
}

TEST_CASE("serial and parallel kernels agree exactly") {
  std::mt19937_64 rng(32);
  for (unsigned n : {3U, 7U, 10U, 13U}) {
    const FieldContext ctx(n);
    const FieldContext no_tables(n, FieldOptions{0});
    for (int i = 0; i < 25; ++i) {
      const std::uint64_t d = rng() % ctx.group_order();
      const auto a = kernels::serial::zero_apn_scan(ctx, d);
      const auto b = kernels::parallel::zero_apn_scan(ctx, d);
      const auto c = kernels::parallel::zero_apn_scan(no_tables, d);
      CHECK(a.holds == b.holds);
      CHECK(a.witness == b.witness);
      CHECK(a.witness == c.witness);
      CHECK(a.witness == first_solution(ctx, d));
      CHECK(kernels::serial::derivative_histogram(ctx, d) == kernels::parallel::derivative_histogram(ctx, d));
      CHECK(kernels::serial::power_table(ctx, d) == kernels::parallel::power_table(ctx, d));
      if (n <= 10) {
        const auto t = kernels::serial::power_table(ctx, d);
        CHECK(kernels::serial::x0_apn(t, 0) == kernels::parallel::x0_apn(t, 0));
        CHECK(kernels::serial::x0_apn(t, 1) == kernels::parallel::x0_apn(t, 1));
      }
    }
  }
}

TEST_CASE("spectrum invariants: doubling, total, parity") {
  for (unsigned n = 1; n <= 10; ++n) {
    const FieldContext ctx(n);
    for (std::uint64_t d = 0; d < ctx.group_order(); ++d) {
      const auto s = differential_spectrum(ctx, Exponent(static_cast<std::int64_t>(d), n));
      const auto sum = std::accumulate(s.counts.begin(), s.counts.end(), std::uint64_t{0});
      CHECK(sum == ctx.size());
      CHECK(std::all_of(s.counts.begin(), s.counts.end(), [](std::uint32_t c) { return c % 2 == 0; }));
      const auto twice = Exponent(static_cast<std::int64_t>(2 * d), n);
      CHECK(differential_spectrum(ctx, twice).multiset() == s.multiset());
      CHECK(is_zero_apn_power(ctx, twice).zero_apn == is_zero_apn_power(ctx, Exponent(static_cast<std::int64_t>(d), n)).zero_apn);
    }
  }
}

TEST_CASE("cyclotomic classes") {
  const auto c = cyclotomic_class(4, 3);
  CHECK(c.members == std::vector<std::uint64_t>{3, 6, 9, 12});
  CHECK(c.canonical == 3);
  CHECK(cyclotomic_class(7, 0).members == std::vector<std::uint64_t>{0});
  const auto l = cyclotomic_class(10, 447);
  CHECK(l.contains(1014));
  CHECK(l.contains(507));
  CHECK(l.canonical == 447);
  CHECK(cyclotomic_canonical(10, 1014) == 447);
  CHECK(inverse_mod_group_order(5, 3) == std::optional<std::uint64_t>{21});
  CHECK_FALSE(inverse_mod_group_order(11, 89).has_value());
  std::size_t covered = 0;
  for (auto r : cyclotomic_representatives(10)) covered += cyclotomic_class(10, r).members.size();
  CHECK(covered == 1023);
}

TEST_CASE("classification: APN implies 0-APN, rows ordered, serial equals parallel") {
  for (unsigned n = 1; n <= 9; ++n) {
    const FieldContext ctx(n);
    const auto par = classify_all_exponents(ctx);
    const auto ser = classify_all_exponents(ctx, {false, 16});
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].d == ser[i].d);
      CHECK(par[i].is_zero_apn == ser[i].is_zero_apn);
      CHECK(par[i].is_one_apn == ser[i].is_one_apn);
      CHECK(par[i].delta == ser[i].delta);
      CHECK(par[i].witness == ser[i].witness);
      if (par[i].is_apn) CHECK(par[i].is_zero_apn);
      CHECK(par[i].witness.has_value() == !par[i].is_zero_apn);
      if (i > 0) CHECK(par[i - 1].d < par[i].d);
    }
  }
  CHECK_THROWS_AS(classify_all_exponents(FieldContext(17)), std::out_of_range);
}

TEST_CASE("classification does not depend on the modulus") {
  const auto mods = FieldContext::irreducibles(9, 4);
  const auto base = classify_all_exponents(FieldContext(9));
  for (const auto& m : mods) {
    const auto other = classify_all_exponents(FieldContext(m));
    REQUIRE(other.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(other[i].is_zero_apn == base[i].is_zero_apn);
      CHECK(other[i].is_apn == base[i].is_apn);
      CHECK(other[i].delta == base[i].delta);
    }
  }
}

TEST_CASE("n = 3 by hand") {
  // Classes mod 7: {0}, {1,2,4}, {3,6,5}. x^3 is APN (Gold); x^1 is linear.
  const auto rows = classify_all_exponents(FieldContext(3));
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].d == 1);
  CHECK_FALSE(rows[1].is_zero_apn);
  CHECK(rows[2].d == 3);
  CHECK(rows[2].is_apn);
  CHECK(rows[2].is_zero_apn);
  CHECK(rows[2].class_size == 3);
}
