#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fewform/poly.hpp"
#include "fewform/rational.hpp"

namespace fewform {

enum class GapSide { Plus, Minus };

/// Homogeneous binary form a0 X^d + a1 X^(d-1) Y + ... + ad Y^d.
class BinaryForm {
  public:
    BinaryForm(int degree, std::vector<Rat> coeffs);

    int degree() const { return degree_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }

    bool operator==(const BinaryForm& o) const = default;

    Rat evaluate(const Rat& x, const Rat& y) const;
    BinaryForm reciprocal() const;  // F(Y, X)
    bool is_binomial() const;       // only a0, ad nonzero
    bool has_integer_coeffs() const;

    // F(t, 1) as a rational polynomial (degree <= d).
    RatPoly dehomogenized() const;

  private:
    int degree_;
    std::vector<Rat> coeffs_;
};

/// Monic polynomial t^d + alpha_1 t^(d-1) + ... + alpha_d.
class MonicPolynomial {
  public:
    MonicPolynomial(int degree, std::vector<Rat> coeffs);
    static MonicPolynomial from_poly(const RatPoly& p);

    int degree() const { return degree_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }

    bool operator==(const MonicPolynomial& o) const = default;

    Rat evaluate(const Rat& t) const;
    Rat discriminant() const;
    // Run of zero coefficients just after the leading term; in [1, d].
    int lambda_plus() const;
    // Homogenization with a0 = 1.
    BinaryForm homogenize() const;

  private:
    int degree_;
    std::vector<Rat> coeffs_;  // alpha_0 = 1 .. alpha_d
};

/// Fewnomial family data: step count r and coefficient tuples per k.
struct FewnomialFamily {
    int r = 1;
    std::map<int, std::vector<std::vector<Int>>> blocks;  // k -> tuples (a0..ar)

    void validate() const;
    std::vector<int> degrees() const;  // sorted distinct k*r present
};

struct HeightReport {
    Rat height;       // A(F): max |a_i| over the block tuple
    Rat height_star;  // max{2, A(F)}
};

Rat discriminant(const BinaryForm& f);
int lambda_gap(const BinaryForm& f, GapSide side);
MonicPolynomial associated_polynomial(const BinaryForm& f);
BinaryForm build_fewnomial(const FewnomialFamily& fam, int k, int tuple_index);
HeightReport heights(const std::vector<Int>& tuple);
// Family-size bound (2 A* + 1)^(r+1).
Int family_size_bound(const Rat& height_star, int r);
// H with F(X,Y) = H(X^2,Y^2), when F has squared arguments.
std::optional<BinaryForm> squared_arguments(const BinaryForm& f);

}  // namespace fewform
