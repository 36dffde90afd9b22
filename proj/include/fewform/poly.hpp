#pragma once

#include <vector>

#include "fewform/rational.hpp"

namespace fewform {

// Dense univariate polynomial with exact rational coefficients,
// stored highest-degree first: p[0]*t^n + ... + p[n].
using RatPoly = std::vector<Rat>;

int poly_degree(const RatPoly& p);  // -1 for the zero polynomial
RatPoly poly_trim(RatPoly p);
RatPoly poly_add(const RatPoly& a, const RatPoly& b);
RatPoly poly_scale(const RatPoly& a, const Rat& c);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
RatPoly poly_derivative(const RatPoly& p);
Rat poly_eval(const RatPoly& p, const Rat& x);

// Resultant of a and b with formal degrees m >= deg a, n >= deg b
// (Sylvester determinant; formal degrees matter for binary-form resultants).
Rat poly_resultant(const RatPoly& a, const RatPoly& b, int m, int n);

// Discriminant of a degree-d polynomial with nonzero leading coefficient:
// (-1)^(d(d-1)/2) Res(p, p') / lc(p).
Rat poly_discriminant(const RatPoly& p);

// Exact determinant of a square rational matrix (fraction-free Bareiss
// after per-row denominator clearing).
Rat rat_det(std::vector<std::vector<Rat>> m);

// Lagrange interpolation through (x_i, y_i) with distinct x_i.
RatPoly poly_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// All rational roots of a polynomial with rational coefficients
// (clears denominators, then p/q candidate scan over factored ends).
std::vector<Rat> poly_rational_roots(const RatPoly& p);

}  // namespace fewform
