#pragma once

#include <variant>
#include <vector>

#include "fewform/forms.hpp"

namespace fewform {

/// Affine homography t -> q t + r (q != 0).
struct AffineHomography {
    Rat q, r;
    bool operator==(const AffineHomography&) const = default;
};

/// Non-affine homography t -> q + r / (t - s) (r != 0).
struct NonAffineHomography {
    Rat q, r, s;
    bool operator==(const NonAffineHomography&) const = default;
};

class Homography {
  public:
    static Homography affine(Rat q, Rat r);
    static Homography non_affine(Rat q, Rat r, Rat s);

    bool is_affine() const { return std::holds_alternative<AffineHomography>(v_); }
    const AffineHomography& as_affine() const { return std::get<AffineHomography>(v_); }
    const NonAffineHomography& as_non_affine() const { return std::get<NonAffineHomography>(v_); }

    bool operator==(const Homography&) const = default;

    Homography inverse() const;

  private:
    std::variant<AffineHomography, NonAffineHomography> v_;
};

/// Invertible 2x2 rational matrix (u1, u2; u3, u4) acting on P^1.
struct ProjectiveMap {
    Rat u1, u2, u3, u4;

    ProjectiveMap(Rat a, Rat b, Rat c, Rat d);
    Rat det() const { return u1 * u4 - u2 * u3; }
    ProjectiveMap inverse() const;
    ProjectiveMap compose(const ProjectiveMap& o) const;  // this * o
    Homography to_homography() const;

    bool operator==(const ProjectiveMap&) const = default;
};

/// The signed/unsigned binomial transition matrices of dimension d+1,
/// lower-triangular, exact inverses of each other.
struct TransitionMatrices {
    int dimension;  // d+1
    std::vector<std::vector<Rat>> a;
    std::vector<std::vector<Rat>> a_inv;
};

struct FirstStepResult {
    MonicPolynomial f;
    MonicPolynomial g;
    Rat kappa;
    Rat beta_dm1;
    Rat beta_d;
};

// The unique monic g with h(f) = g. For non-affine h requires f(s) != 0.
MonicPolynomial apply(const Homography& h, const MonicPolynomial& f);

// (F o gamma)(X,Y) = F(u1 X + u2 Y, u3 X + u4 Y), exact.
BinaryForm act_on_form(const BinaryForm& f, const ProjectiveMap& gamma);

// c(gamma, g) = u3^d g(u1/u3), or u1^d when u3 = 0; links a0/b0 across
// the form-level and polynomial-level relations.
Rat scale_factor(const ProjectiveMap& gamma, const MonicPolynomial& g);

TransitionMatrices transition_matrices(int d);

// Coefficients of h_{q,r,s}(f) from the Taylor expansion of f at s.
std::vector<Rat> coeffs_from_derivatives(const MonicPolynomial& f, const Rat& q,
                                         const Rat& r, const Rat& s);

// The y-vector y_j = (r/q)^j f^(j)(s)/(j! f(s)) recovered from the
// coefficients of g = h_{q,r,s}(f); inverse of coeffs_from_derivatives.
// The q = 0 branch returns r^j f^(j)(s)/(j! f(s)) = beta_j instead.
std::vector<Rat> derivatives_from_coeffs(const std::vector<Rat>& g_coeffs, const Rat& q,
                                         const Rat& r, const Rat& s);

// Unique (f, g) with lambda+(f)=3, lambda+(g)=d-1 and h_{q,r,s}(f)=g.
FirstStepResult first_step_solve(int d, const Rat& q, const Rat& r, const Rat& s);

// The quotient Q of the four consecutive binomial-ratio products;
// closed forms per the gap case nu = 0, 1, 2; never equal to 1.
Rat quotient_q(long lambda_prime, int nu);

// The A*_l products themselves, for l = l0 .. l0+3 (l0 = 1 unless nu = 2).
std::vector<Rat> a_star_values(long lambda_prime, int nu);

// g = h_{0,r,0}(f) via the closed coefficient relation beta_j = alpha_{d-j} r^j / alpha_d.
MonicPolynomial inversion_pair(const MonicPolynomial& f, const Rat& r);

}  // namespace fewform
