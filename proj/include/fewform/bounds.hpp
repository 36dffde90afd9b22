#pragma once

#include "fewform/forms.hpp"
#include "fewform/poly.hpp"

namespace fewform {

// C = 2^79 * 3^15, the linear-forms-in-logarithms constant.
const Int& lfl_constant();

struct LflParams {
    long field_degree;    // D >= 1
    Int b1, b2;           // positive exponents
    double log_a1, log_a2;  // each >= max{1/D, h(alpha_j)}
    double big_b;         // B >= max{e, b1, b2}

    LflParams(long d, Int b1_, Int b2_, double la1, double la2, double b);
};

// h(p/q) = log max{|p|, q}; zero is excluded.
double log_height_rational(const Rat& x);

// |lc(f)| * prod max(1, |rho|) over the numeric roots of f, error <= tol.
double mahler_measure(const RatPoly& f, double tol);

// E = -C (log B)(log A1)(log A2) D^4 max{1, log D}; the caller compares
// log|a1^b1 a2^b2 - 1| >= E.
double lfl_lower_bound(const LflParams& p);

struct FewnomialBoundReport {
    int d = 0;               // r * k
    double log_astar = 0.0;  // log A*(F)
    double exponent = 0.0;   // d - C r^(4r) (log d)(log A*), so |F| >= X^exponent
    double anchored = 0.0;   // log max{|a0 x^d|, |ar y^d|} - C r^(4r)(log d)(log A*) log X
};

// F must be the fewnomial built from an (r, k) block; X = max{|x|,|y|} >= 2
// and F(x, y) != 0 are required.
FewnomialBoundReport fewnomial_lower_bound(const BinaryForm& f, int r, int k,
                                           const Int& x, const Int& y);

struct Thresholds {
    Rat eta;     // epsilon / (2^80 3^15 r^(4r))
    Rat mu_max;  // (lambda - 2) / (C r^(4r) lambda), needs lambda > 2
    long m0;     // floor(theta log|m| / (r log 2))
};

Thresholds thresholds(const Rat& eps, int r, const Rat& lambda, const Int& m, double theta);

struct GrowthReport {
    bool pass = true;
    int first_violation = -1;       // degree, -1 when none
    double astar_at_violation = 0.0;
    double bound_at_violation = 0.0;
};

// Checks max A*(F) <= exp(eta d / log d) for every family degree d >= d0;
// equality counts as a pass.
GrowthReport family_growth_check(const FewnomialFamily& fam, double eta, int d0);

}  // namespace fewform
