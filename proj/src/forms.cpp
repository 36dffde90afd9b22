#include "fewform/forms.hpp"

#include <algorithm>

namespace fewform {

BinaryForm::BinaryForm(int degree, std::vector<Rat> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 1) throw DomainError("binary form: degree must be >= 1");
    if (coeffs_.size() != static_cast<size_t>(degree_) + 1)
        throw DomainError("binary form: expected degree+1 coefficients");
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; }))
        throw DomainError("binary form: all coefficients are zero");
}

Rat BinaryForm::evaluate(const Rat& x, const Rat& y) const {
    // Horner in x with running powers of y.
    Rat acc = coeff(0);
    Rat ypow(1);
    for (int i = 1; i <= degree_; ++i) {
        ypow *= y;
        acc = acc * x + coeff(i) * ypow;
    }
    return acc;
}

BinaryForm BinaryForm::reciprocal() const {
    std::vector<Rat> rev(coeffs_.rbegin(), coeffs_.rend());
    return BinaryForm(degree_, std::move(rev));
}

bool BinaryForm::is_binomial() const {
    for (int i = 1; i < degree_; ++i)
        if (coeff(i) != 0) return false;
    return coeff(0) != 0 && coeff(degree_) != 0;
}

bool BinaryForm::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return c.get_den() == 1; });
}

RatPoly BinaryForm::dehomogenized() const { return poly_trim(coeffs_); }

MonicPolynomial::MonicPolynomial(int degree, std::vector<Rat> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 1) throw DomainError("monic polynomial: degree must be >= 1");
    if (coeffs_.size() != static_cast<size_t>(degree_) + 1)
        throw DomainError("monic polynomial: expected degree+1 coefficients");
    if (coeffs_[0] != 1) throw DomainError("monic polynomial: leading coefficient must be 1");
}

MonicPolynomial MonicPolynomial::from_poly(const RatPoly& p) {
    RatPoly q = poly_trim(p);
    int d = poly_degree(q);
    if (d < 1) throw DomainError("monic polynomial: degree must be >= 1");
    Rat lead = q[0];
    for (auto& c : q) c /= lead;
    return MonicPolynomial(d, std::move(q));
}

Rat MonicPolynomial::evaluate(const Rat& t) const { return poly_eval(coeffs_, t); }

Rat MonicPolynomial::discriminant() const { return poly_discriminant(coeffs_); }

int MonicPolynomial::lambda_plus() const {
    for (int i = 1; i <= degree_; ++i)
        if (coeff(i) != 0) return i;
    return degree_;
}

BinaryForm MonicPolynomial::homogenize() const { return BinaryForm(degree_, coeffs_); }

void FewnomialFamily::validate() const {
    if (r < 1) throw DomainError("family: r must be >= 1");
    for (const auto& [k, tuples] : blocks) {
        if (k * r < 3) throw DomainError("family: every k must satisfy k*r >= 3");
        for (const auto& tuple : tuples) {
            if (tuple.size() != static_cast<size_t>(r) + 1)
                throw DomainError("family: tuple length must be r+1");
            if (tuple.front() == 0 || tuple.back() == 0)
                throw DomainError("family: tuple must have a0*ar != 0");
            RatPoly h(tuple.begin(), tuple.end());
            if (r >= 1 && poly_degree(h) >= 1 && poly_discriminant(h) == 0)
                throw DomainError("family: tuple polynomial has zero discriminant");
        }
    }
}

std::vector<int> FewnomialFamily::degrees() const {
    std::vector<int> ds;
    for (const auto& [k, tuples] : blocks)
        if (!tuples.empty()) ds.push_back(k * r);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

Rat discriminant(const BinaryForm& f) {
    const int d = f.degree();
    if (d < 2) throw DomainError("discriminant: degree must be >= 2");
    if (f.coeff(0) != 0) {
        // disc(F) = (-1)^(d(d-1)/2) Res(f, f') / a0 with f = F(t,1) of degree d.
        RatPoly p = f.coeffs();
        RatPoly dp = poly_derivative(p);
        Rat res = poly_resultant(p, dp, d, d - 1);
        Rat sign = (((static_cast<long>(d) * (d - 1)) / 2) % 2 == 0) ? Rat(1) : Rat(-1);
        return sign * res / f.coeff(0);
    }
    // General route: resultant of the two partial derivatives,
    // disc(F) = (-1)^(d(d-1)/2) Res(F_X, F_Y) / d^(d-2).
    RatPoly fx(static_cast<size_t>(d), Rat(0));  // degree d-1 binary form, coeffs in t
    RatPoly fy(static_cast<size_t>(d), Rat(0));
    for (int i = 0; i < d; ++i) fx[static_cast<size_t>(i)] = f.coeff(i) * (d - i);
    for (int i = 1; i <= d; ++i) fy[static_cast<size_t>(i - 1)] = f.coeff(i) * i;
    Rat res = poly_resultant(fx, fy, d - 1, d - 1);
    Rat sign = (((static_cast<long>(d) * (d - 1)) / 2) % 2 == 0) ? Rat(1) : Rat(-1);
    return sign * res / rat_pow(Rat(d), d - 2);
}

int lambda_gap(const BinaryForm& f, GapSide side) {
    const int d = f.degree();
    if (f.coeff(0) == 0 || f.coeff(d) == 0)
        throw DomainError("lambda gap: requires a0 and ad nonzero");
    if (side == GapSide::Minus) return lambda_gap(f.reciprocal(), GapSide::Plus);
    for (int i = 1; i <= d; ++i)
        if (f.coeff(i) != 0) return i;
    return d;  // unreachable: ad != 0
}

MonicPolynomial associated_polynomial(const BinaryForm& f) {
    if (f.coeff(0) == 0) throw DomainError("associated polynomial: a0 = 0");
    std::vector<Rat> c = f.coeffs();
    for (auto& x : c) x /= f.coeff(0);
    return MonicPolynomial(f.degree(), std::move(c));
}

BinaryForm build_fewnomial(const FewnomialFamily& fam, int k, int tuple_index) {
    auto it = fam.blocks.find(k);
    if (it == fam.blocks.end()) throw DomainError("family: no block for this k");
    if (tuple_index < 0 || static_cast<size_t>(tuple_index) >= it->second.size())
        throw DomainError("family: tuple index out of range");
    if (k * fam.r < 3) throw DomainError("family: k*r must be >= 3");
    const auto& tuple = it->second[static_cast<size_t>(tuple_index)];
    const int d = k * fam.r;
    std::vector<Rat> coeffs(static_cast<size_t>(d) + 1, Rat(0));
    for (int j = 0; j <= fam.r; ++j)
        coeffs[static_cast<size_t>(j * k)] = Rat(tuple[static_cast<size_t>(j)]);
    return BinaryForm(d, std::move(coeffs));
}

HeightReport heights(const std::vector<Int>& tuple) {
    Rat h(0);
    for (const auto& a : tuple) {
        Rat v(abs(a));
        if (v > h) h = v;
    }
    HeightReport rep;
    rep.height = h;
    rep.height_star = std::max(h, Rat(2));
    return rep;
}

Int family_size_bound(const Rat& height_star, int r) {
    Rat b = 2 * height_star + 1;
    Rat p = rat_pow(b, r + 1);
    if (p.get_den() != 1) {
        // round up to an integer bound
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), p.get_num().get_mpz_t(), p.get_den().get_mpz_t());
        return q;
    }
    return p.get_num();
}

std::optional<BinaryForm> squared_arguments(const BinaryForm& f) {
    const int d = f.degree();
    if (d % 2 != 0) return std::nullopt;
    for (int i = 1; i <= d; i += 2)
        if (f.coeff(i) != 0) return std::nullopt;
    std::vector<Rat> h;
    for (int i = 0; i <= d; i += 2) h.push_back(f.coeff(i));
    return BinaryForm(d / 2, std::move(h));
}

}  // namespace fewform
