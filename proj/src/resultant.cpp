#include "zeroapn/resultant.hpp"

#include <algorithm>
#include <stdexcept>

#include "zeroapn/finite_field.hpp"

namespace zapn {

namespace {

// Degree of the zero polynomial contributes nothing to a bound.
template <std::size_t V>
std::uint32_t max_degree(const std::vector<SparsePolynomial<V>>& coeffs, std::size_t var) {
  std::uint32_t d = 0;
  for (const auto& c : coeffs) d = std::max(d, c.deg_in(var));
  return d;
}

// Determinant over F_{2^t}; `m` is consumed. Signs vanish in characteristic 2.
FieldElement determinant(const FieldContext& ctx, std::vector<FieldElement>& m, std::size_t order) {
  FieldElement det = FieldContext::one();
  for (std::size_t col = 0; col < order; ++col) {
    std::size_t pivot = col;
    while (pivot < order && m[pivot * order + col].bits == 0) ++pivot;
    if (pivot == order) return FieldContext::zero();
    if (pivot != col) {
      for (std::size_t j = col; j < order; ++j) std::swap(m[pivot * order + j], m[col * order + j]);
    }
    const FieldElement p = m[col * order + col];
    det = ctx.mul(det, p);
    const FieldElement p_inv = ctx.inv(p);
    for (std::size_t r = col + 1; r < order; ++r) {
      const FieldElement lead = m[r * order + col];
      if (lead.bits == 0) continue;
      const FieldElement factor = ctx.mul(lead, p_inv);
      for (std::size_t j = col; j < order; ++j) {
        m[r * order + j] = FieldContext::add(m[r * order + j], ctx.mul(factor, m[col * order + j]));
      }
    }
  }
  return det;
}

// Coefficients (ascending) of the polynomial of degree < points.size() taking
// values[i] at points[i]; Newton divided differences, then expansion.
void interpolate_in_place(const FieldContext& ctx, const std::vector<FieldElement>& points,
                          std::vector<FieldElement>& values) {
  const std::size_t count = points.size();
  for (std::size_t j = 1; j < count; ++j) {
    for (std::size_t i = count; i-- > j;) {
      const FieldElement num = FieldContext::add(values[i], values[i - 1]);
      const FieldElement den = FieldContext::add(points[i], points[i - j]);
      values[i] = ctx.mul(num, ctx.inv(den));
    }
  }
  std::vector<FieldElement> poly(count, FieldContext::zero());
  poly[0] = values[count - 1];
  std::size_t len = 1;
  for (std::size_t i = count - 1; i-- > 0;) {
    // poly <- poly * (X + points[i]) + values[i]
    for (std::size_t k = len; k > 0; --k) {
      poly[k] = FieldContext::add(poly[k - 1], ctx.mul(poly[k], points[i]));
    }
    poly[0] = FieldContext::add(ctx.mul(poly[0], points[i]), values[i]);
    ++len;
  }
  values = std::move(poly);
}

}  // namespace

template <std::size_t V>
std::array<std::uint32_t, V> resultant_degree_bounds(const SparsePolynomial<V>& f, const SparsePolynomial<V>& g,
                                                     std::size_t var) {
  const auto fc = f.coefficients_in(var);
  const auto gc = g.coefficients_in(var);
  const std::uint32_t m = f.deg_in(var);
  const std::uint32_t l = g.deg_in(var);
  std::array<std::uint32_t, V> bounds{};
  for (std::size_t r = 0; r < V; ++r) {
    if (r == var) continue;
    // l rows carry f's coefficients, m rows carry g's.
    bounds[r] = l * max_degree(fc, r) + m * max_degree(gc, r);
  }
  return bounds;
}

template <std::size_t V>
SparsePolynomial<V> resultant(const SparsePolynomial<V>& f, const SparsePolynomial<V>& g, std::size_t var,
                              const ResultantOptions& options) {
  if (var >= V) throw std::invalid_argument("resultant: variable index out of range");
  if (f.deg_in(var) == 0 || g.deg_in(var) == 0)
    throw std::invalid_argument("resultant: both polynomials need positive degree in the eliminated variable");

  const std::size_t m = f.deg_in(var);
  const std::size_t l = g.deg_in(var);
  const std::size_t order = m + l;
  const auto fc = f.coefficients_in(var);
  const auto gc = g.coefficients_in(var);
  const auto bounds = resultant_degree_bounds(f, g, var);

  std::vector<std::size_t> axes;
  for (std::size_t r = 0; r < V; ++r)
    if (r != var) axes.push_back(r);

  std::uint32_t widest = 1;
  for (auto r : axes) widest = std::max(widest, bounds[r] + 1);
  unsigned t = 1;
  while ((std::uint64_t{1} << t) < widest) ++t;
  const FieldContext ctx(t);

  std::vector<std::size_t> extent(axes.size());
  std::size_t total = 1;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    extent[a] = bounds[axes[a]] + 1;
    total *= extent[a];
  }

  // powers[a][i][e] = (point i on axis a)^e
  std::vector<std::vector<std::vector<FieldElement>>> powers(axes.size());
  for (std::size_t a = 0; a < axes.size(); ++a) {
    const std::uint32_t top = std::max(f.deg_in(axes[a]), g.deg_in(axes[a]));
    powers[a].resize(extent[a]);
    for (std::size_t i = 0; i < extent[a]; ++i) {
      auto& row = powers[a][i];
      row.resize(top + 1);
      row[0] = FieldContext::one();
      for (std::uint32_t e = 1; e <= top; ++e) row[e] = ctx.mul(row[e - 1], {static_cast<std::uint32_t>(i)});
    }
  }

  std::vector<FieldElement> values(total);
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t flat = 0; flat < count; ++flat) {
    std::vector<std::size_t> index(axes.size());
    std::size_t rest = static_cast<std::size_t>(flat);
    for (std::size_t a = axes.size(); a-- > 0;) {
      index[a] = rest % extent[a];
      rest /= extent[a];
    }
    auto eval = [&](const SparsePolynomial<V>& p) {
      FieldElement acc = FieldContext::zero();
      for (const auto& term : p.terms()) {
        FieldElement v = FieldContext::one();
        for (std::size_t a = 0; a < axes.size(); ++a) v = ctx.mul(v, powers[a][index[a]][term[axes[a]]]);
        acc = FieldContext::add(acc, v);
      }
      return acc;
    };
    std::vector<FieldElement> fv(m + 1);
    std::vector<FieldElement> gv(l + 1);
    for (std::size_t i = 0; i <= m; ++i) fv[i] = eval(fc[i]);
    for (std::size_t i = 0; i <= l; ++i) gv[i] = eval(gc[i]);

    std::vector<FieldElement> mat(order * order, FieldContext::zero());
    for (std::size_t row = 0; row < l; ++row)
      for (std::size_t k = 0; k <= m; ++k) mat[row * order + row + k] = fv[m - k];
    for (std::size_t row = 0; row < m; ++row)
      for (std::size_t k = 0; k <= l; ++k) mat[(l + row) * order + row + k] = gv[l - k];
    values[static_cast<std::size_t>(flat)] = determinant(ctx, mat, order);
  }

  // Interpolate axis by axis; the grid layout is row-major over `axes`.
  for (std::size_t a = 0; a < axes.size(); ++a) {
    std::size_t stride = 1;
    for (std::size_t b = a + 1; b < axes.size(); ++b) stride *= extent[b];
    const std::size_t span = extent[a] * stride;
    std::vector<FieldElement> points(extent[a]);
    for (std::size_t i = 0; i < extent[a]; ++i) points[i] = {static_cast<std::uint32_t>(i)};
    std::vector<FieldElement> line(extent[a]);
    for (std::size_t block = 0; block < total; block += span) {
      for (std::size_t offset = 0; offset < stride; ++offset) {
        for (std::size_t i = 0; i < extent[a]; ++i) line[i] = values[block + offset + i * stride];
        interpolate_in_place(ctx, points, line);
        for (std::size_t i = 0; i < extent[a]; ++i) values[block + offset + i * stride] = line[i];
      }
    }
  }

  std::vector<Monomial<V>> terms;
  for (std::size_t flat = 0; flat < total; ++flat) {
    const auto c = values[flat].bits;
    if (c == 0) continue;
    if (c != 1) throw std::logic_error("resultant interpolation produced a coefficient outside F_2");
    Monomial<V> term{};
    std::size_t rest = flat;
    for (std::size_t a = axes.size(); a-- > 0;) {
      term[axes[a]] = static_cast<std::uint32_t>(rest % extent[a]);
      rest /= extent[a];
    }
    terms.push_back(term);
  }
  auto result = SparsePolynomial<V>::from_terms(std::move(terms));

  if constexpr (V == 2) {
    if (options.cross_check) {
      BivariatePolynomial ff = f;
      BivariatePolynomial gg = g;
      if (var == 0) {
        const std::array<Monomial<2>, 2> swap{Monomial<2>{0, 1}, Monomial<2>{1, 0}};
        ff = substitute_monomials(f, swap);
        gg = substitute_monomials(g, swap);
      }
      const auto direct = SparsePolynomial<2>::from_univariate(resultant_y_sylvester(ff, gg), var == 0 ? 1 : 0);
      if (direct != result) throw std::logic_error("resultant cross-check failed: interpolation and Sylvester disagree");
    }
  } else {
    if (options.cross_check) throw std::invalid_argument("resultant cross-check supports bivariate inputs only");
  }
  return result;
}

template std::array<std::uint32_t, 2> resultant_degree_bounds(const SparsePolynomial<2>&, const SparsePolynomial<2>&,
                                                              std::size_t);
template std::array<std::uint32_t, 3> resultant_degree_bounds(const SparsePolynomial<3>&, const SparsePolynomial<3>&,
                                                              std::size_t);
template SparsePolynomial<2> resultant(const SparsePolynomial<2>&, const SparsePolynomial<2>&, std::size_t,
                                       const ResultantOptions&);
template SparsePolynomial<3> resultant(const SparsePolynomial<3>&, const SparsePolynomial<3>&, std::size_t,
                                       const ResultantOptions&);

std::vector<BinaryPolynomial> y_coefficients(const BivariatePolynomial& p) {
  std::vector<BinaryPolynomial> out;
  for (const auto& c : p.coefficients_in(1)) out.push_back(c.to_univariate(0));
  return out;
}

BinaryPolynomial resultant_y(const BivariatePolynomial& f, const BivariatePolynomial& g,
                             const ResultantOptions& options) {
  return resultant(f, g, 1, options).to_univariate(0);
}

std::vector<std::vector<BinaryPolynomial>> sylvester_matrix_y(const BivariatePolynomial& f,
                                                              const BivariatePolynomial& g) {
  if (f.deg_in(1) == 0 || g.deg_in(1) == 0)
    throw std::invalid_argument("Sylvester matrix: both polynomials need positive y-degree");
  const auto fc = y_coefficients(f);
  const auto gc = y_coefficients(g);
  const std::size_t m = fc.size() - 1;
  const std::size_t l = gc.size() - 1;
  std::vector<std::vector<BinaryPolynomial>> mat(m + l, std::vector<BinaryPolynomial>(m + l));
  for (std::size_t row = 0; row < l; ++row)
    for (std::size_t k = 0; k <= m; ++k) mat[row][row + k] = fc[m - k];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= l; ++k) mat[l + row][row + k] = gc[l - k];
  return mat;
}

BinaryPolynomial resultant_y_sylvester(const BivariatePolynomial& f, const BivariatePolynomial& g) {
  auto mat = sylvester_matrix_y(f, g);
  const std::size_t order = mat.size();
  BinaryPolynomial prev = BinaryPolynomial::one();
  for (std::size_t k = 0; k + 1 < order; ++k) {
    if (mat[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < order && mat[swap][k].is_zero()) ++swap;
      if (swap == order) return {};
      std::swap(mat[k], mat[swap]);
    }
    for (std::size_t i = k + 1; i < order; ++i) {
      for (std::size_t j = k + 1; j < order; ++j) {
        mat[i][j] = (mat[i][j] * mat[k][k] + mat[i][k] * mat[k][j]) / prev;
      }
      mat[i][k] = BinaryPolynomial{};
    }
    prev = mat[k][k];
  }
  return mat[order - 1][order - 1];
}

}  // namespace zapn
