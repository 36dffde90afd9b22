#pragma once

#include <complex>
#include <vector>

#include "fewform/forms.hpp"

namespace fewform {

/// Arbitrary-precision complex value (rectangular, mpf-backed).
struct HPComplex {
    mpf_class re, im;

    HPComplex() = default;
    HPComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}

    std::complex<double> to_double() const { return {re.get_d(), im.get_d()}; }
};

HPComplex hp_add(const HPComplex& a, const HPComplex& b);
HPComplex hp_sub(const HPComplex& a, const HPComplex& b);
HPComplex hp_mul(const HPComplex& a, const HPComplex& b);
HPComplex hp_div(const HPComplex& a, const HPComplex& b);
mpf_class hp_norm(const HPComplex& a);  // re^2 + im^2

/// One zero of F in P^1: either the finite root t of F(t,1) or (1:0).
struct ProjectiveRoot {
    bool at_infinity = false;
    HPComplex value;

    // Max-modulus-1 representative (x, t) with the larger coordinate of
    // modulus 1.
    std::pair<std::complex<double>, std::complex<double>> normalized() const;
};

struct RootSet {
    int degree = 0;
    long precision_bits = 0;
    double separation = 0.0;  // min pairwise chordal distance
    std::vector<ProjectiveRoot> roots;
};

// All d projective roots of F, Newton-polished to precision_bits.
// Requires nonzero discriminant; roots are sorted lexicographically by the
// normalized (x, t) representative.
RootSet projective_roots(const BinaryForm& f, long precision_bits);

// Chordal distance between two projective points given as normalized pairs.
double chordal_distance(const std::pair<std::complex<double>, std::complex<double>>& a,
                        const std::pair<std::complex<double>, std::complex<double>>& b);

// Best rational approximation with denominator <= denom_cap (continued
// fractions); empty if no convergent lands within tol of x.
std::optional<Rat> rationalize(const mpf_class& x, const Int& denom_cap, const mpf_class& tol);

}  // namespace fewform
