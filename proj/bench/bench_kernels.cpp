// Serial reference kernels versus the OpenMP kernels.
//
//   bench_kernels [n ...]        default: 10 12 14 16

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "zeroapn/diff_analysis.hpp"
#include "zeroapn/kernels.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<unsigned> ns;
  for (int i = 1; i < argc; ++i) ns.push_back(static_cast<unsigned>(std::atoi(argv[i])));
  if (ns.empty()) ns = {10, 12, 14, 16};

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-22s %4s %12s %12s %8s %6s\n", "kernel", "n", "serial s", "parallel s", "speedup", "agree");
  for (unsigned n : ns) {
    const zapn::FieldContext ctx(n);
    // A fixed odd exponent away from the trivial classes.
    const std::uint64_t d = (std::uint64_t{1} << (n / 2)) * 3 - 7 + ctx.group_order();
    const std::uint64_t e = d % ctx.group_order();

    zapn::kernels::CriterionScan a;
    zapn::kernels::CriterionScan b;
    const double s1 = seconds([&] { a = zapn::kernels::serial::zero_apn_scan(ctx, e); });
    const double p1 = seconds([&] { b = zapn::kernels::parallel::zero_apn_scan(ctx, e); });
    std::printf("%-22s %4u %12.4f %12.4f %8.2f %6s\n", "zero_apn_scan", n, s1, p1, s1 / p1,
                a.holds == b.holds && a.witness == b.witness ? "yes" : "NO");

    std::vector<std::uint32_t> h1;
    std::vector<std::uint32_t> h2;
    const double s2 = seconds([&] { h1 = zapn::kernels::serial::derivative_histogram(ctx, e); });
    const double p2 = seconds([&] { h2 = zapn::kernels::parallel::derivative_histogram(ctx, e); });
    std::printf("%-22s %4u %12.4f %12.4f %8.2f %6s\n", "derivative_histogram", n, s2, p2, s2 / p2,
                h1 == h2 ? "yes" : "NO");

    if (n <= 11) {
      const auto table = zapn::kernels::parallel::power_table(ctx, e);
      bool x1 = false;
      bool x2 = false;
      const double s3 = seconds([&] { x1 = zapn::kernels::serial::x0_apn(table, 0); });
      const double p3 = seconds([&] { x2 = zapn::kernels::parallel::x0_apn(table, 0); });
      std::printf("%-22s %4u %12.4f %12.4f %8.2f %6s\n", "x0_apn", n, s3, p3, s3 / p3, x1 == x2 ? "yes" : "NO");
    }

    if (n <= 12) {
      std::vector<zapn::ApnClassification> r1;
      std::vector<zapn::ApnClassification> r2;
      const double s4 = seconds([&] { r1 = zapn::classify_all_exponents(ctx, {false, 16}); });
      const double p4 = seconds([&] { r2 = zapn::classify_all_exponents(ctx, {true, 16}); });
      bool same = r1.size() == r2.size();
      for (std::size_t i = 0; same && i < r1.size(); ++i)
        same = r1[i].d == r2[i].d && r1[i].is_zero_apn == r2[i].is_zero_apn && r1[i].delta == r2[i].delta &&
               r1[i].witness == r2[i].witness;
      std::printf("%-22s %4u %12.4f %12.4f %8.2f %6s\n", "classify_all", n, s4, p4, s4 / p4, same ? "yes" : "NO");
    }
  }
  return 0;
}
