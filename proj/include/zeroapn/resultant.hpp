#pragma once

#include <cstddef>
#include <vector>

#include "zeroapn/gf2_poly.hpp"
#include "zeroapn/sparse_poly.hpp"

namespace zapn {

struct ResultantOptions {
  /// Also run the direct Sylvester elimination and throw std::logic_error on
  /// disagreement. Bivariate inputs only.
  bool cross_check = false;
};

/// Per-variable degree bounds of Res(f, g, var) from Sylvester row sums.
template <std::size_t V>
std::array<std::uint32_t, V> resultant_degree_bounds(const SparsePolynomial<V>& f, const SparsePolynomial<V>& g,
                                                     std::size_t var);

/// Sylvester resultant of f and g viewed as polynomials in `var`, computed by
/// evaluating the remaining variables on a grid in an extension field and
/// interpolating. Throws std::invalid_argument if either input is constant in
/// `var`.
template <std::size_t V>
SparsePolynomial<V> resultant(const SparsePolynomial<V>& f, const SparsePolynomial<V>& g, std::size_t var,
                              const ResultantOptions& options = {});

/// Res(F, G, y) as a polynomial in x.
BinaryPolynomial resultant_y(const BivariatePolynomial& f, const BivariatePolynomial& g,
                             const ResultantOptions& options = {});

/// Determinant of the Sylvester matrix of f, g in y with entries in F_2[x],
/// by fraction-free (Bareiss) elimination.
BinaryPolynomial resultant_y_sylvester(const BivariatePolynomial& f, const BivariatePolynomial& g);

/// Sylvester matrix of f, g in y; rows of f first.
std::vector<std::vector<BinaryPolynomial>> sylvester_matrix_y(const BivariatePolynomial& f,
                                                              const BivariatePolynomial& g);

/// Coefficients of a bivariate polynomial in y, each a polynomial in x.
std::vector<BinaryPolynomial> y_coefficients(const BivariatePolynomial& p);

}  // namespace zapn
