#pragma once

#include <optional>
#include <vector>

#include "fewform/forms.hpp"
#include "fewform/isomorphy.hpp"

namespace fewform {

struct RepresentationTriple {
    long long x = 0, y = 0;
    int form_index = 0;
    Rat m;  // F(x, y)
};

struct CountReport {
    Int n;                       // the box bound N
    long long count = 0;         // # distinct represented m in [-N, N]
    double predicted = 0.0;      // sum of C_F * N^(2/d) over degree-d members
    double ratio = 0.0;          // count / predicted when predicted > 0
    double error_exponent = 0.0; // max{theta_d + eps, 2/d-dagger}
};

// All integer (x, y) with |F(x, y)| <= N and max{|x|, |y|} >= 2. Without a
// cap the search box is bounded through the minimum of |F| on the unit
// circle, which requires F to have no real projective root; with a cap the
// region is truncated to max{|x|, |y|} <= cap. Sorted by (x, y).
std::vector<RepresentationTriple> representations_in_region(
    const BinaryForm& f, const Int& n, std::optional<long long> cap = std::nullopt,
    int form_index = 0);

// Deduplicated count of represented m in [-N, N] across family members of
// degree >= d. predicted/ratio stay zero; see asymptotic_table.
CountReport r_count(const FewnomialFamily& fam, int d, const Int& n,
                    std::optional<long long> cap = std::nullopt);

// All (x, y, F) with F(x, y) = m over family members of degree >= d;
// |m| >= 2 required.
std::vector<RepresentationTriple> g_set(const FewnomialFamily& fam, int d, const Int& m,
                                        std::optional<long long> cap = std::nullopt);

// A_F = area of {|F(x,y)| <= 1} = 1/2 * int_0^{2pi} |F(cos, sin)|^(-2/d),
// by adaptive quadrature with a power-law substitution at the angular zeros.
double area_AF(const BinaryForm& f, double tol);

// Stratified-jittered rejection sampling oracle; definite forms only.
double mc_area(const BinaryForm& f, long long samples, unsigned seed);

// C_F = A_F * W_F.
double c_constant(const BinaryForm& f, double tol = 1e-8, const IsomOptions& opts = {});

// The three-branch error-exponent constant vartheta_d.
double theta_d(int d);

// Next family degree strictly above d; empty means infinity.
std::optional<int> d_dagger(const FewnomialFamily& fam, int d);

std::vector<CountReport> asymptotic_table(const FewnomialFamily& fam, int d,
                                          const std::vector<Int>& ns, double eps,
                                          std::optional<long long> cap = std::nullopt,
                                          double tol = 1e-8);

}  // namespace fewform
