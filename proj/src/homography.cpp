#include "fewform/homography.hpp"

namespace fewform {

namespace {

// (t + c)^n as a RatPoly via Pascal row.
RatPoly binomial_power(const Rat& c, int n) {
    RatPoly p{Rat(1)};
    RatPoly lin{Rat(1), c};
    for (int i = 0; i < n; ++i) p = poly_mul(p, lin);
    return p;
}

Rat binom(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    Rat b(1);
    for (long i = 0; i < k; ++i) b *= Rat(n - i) / Rat(i + 1);
    return b;
}

}  // namespace

Homography Homography::affine(Rat q, Rat r) {
    if (q == 0) throw DomainError("affine homography: q must be nonzero");
    Homography h;
    h.v_ = AffineHomography{std::move(q), std::move(r)};
    return h;
}

Homography Homography::non_affine(Rat q, Rat r, Rat s) {
    if (r == 0) throw DomainError("non-affine homography: r must be nonzero");
    Homography h;
    h.v_ = NonAffineHomography{std::move(q), std::move(r), std::move(s)};
    return h;
}

Homography Homography::inverse() const {
    if (is_affine()) {
        const auto& a = as_affine();
        return affine(1 / a.q, -a.r / a.q);
    }
    const auto& n = as_non_affine();
    return non_affine(n.s, n.r, n.q);
}

ProjectiveMap::ProjectiveMap(Rat a, Rat b, Rat c, Rat d)
    : u1(std::move(a)), u2(std::move(b)), u3(std::move(c)), u4(std::move(d)) {
    if (det() == 0) throw DomainError("projective map: singular matrix");
}

ProjectiveMap ProjectiveMap::inverse() const {
    return ProjectiveMap(u4, -u2, -u3, u1);
}

ProjectiveMap ProjectiveMap::compose(const ProjectiveMap& o) const {
    return ProjectiveMap(u1 * o.u1 + u2 * o.u3, u1 * o.u2 + u2 * o.u4,
                         u3 * o.u1 + u4 * o.u3, u3 * o.u2 + u4 * o.u4);
}

Homography ProjectiveMap::to_homography() const {
    if (u3 == 0) return Homography::affine(u1 / u4, u2 / u4);
    return Homography::non_affine(u1 / u3, (u2 * u3 - u1 * u4) / (u3 * u3), -u4 / u3);
}

MonicPolynomial apply(const Homography& h, const MonicPolynomial& f) {
    const int d = f.degree();
    if (h.is_affine()) {
        // g(z) = q^d f((z - r)/q)
        const auto& a = h.as_affine();
        RatPoly arg{Rat(1) / a.q, -a.r / a.q};  // (z - r)/q
        RatPoly g{Rat(0)};
        for (int i = 0; i <= d; ++i) g = poly_add(poly_mul(g, arg), RatPoly{f.coeff(i)});
        return MonicPolynomial::from_poly(poly_scale(g, rat_pow(a.q, d)));
    }
    const auto& n = h.as_non_affine();
    Rat fs = f.evaluate(n.s);
    if (fs == 0) throw DomainError("non-affine homography: root sent to infinity (f(s) = 0)");
    // g(z) = (z - q)^d f(s + r/(z - q)) / f(s)
    //      = sum_k r^k f^(k)(s)/k! (z - q)^(d-k) / f(s)
    RatPoly g{Rat(0)};
    RatPoly p = f.coeffs();
    Rat rk(1), kfact(1);
    for (int k = 0; k <= d; ++k) {
        if (k > 0) {
            rk *= n.r;
            kfact *= k;
            p = poly_derivative(p);
        }
        Rat coeff = rk * poly_eval(p, n.s) / (kfact * fs);
        g = poly_add(g, poly_scale(binomial_power(-n.q, d - k), coeff));
    }
    return MonicPolynomial::from_poly(g);
}

BinaryForm act_on_form(const BinaryForm& f, const ProjectiveMap& gamma) {
    const int d = f.degree();
    RatPoly x_part{gamma.u1, gamma.u2};  // u1 X + u2 Y, as poly in X with Y-weight by position
    RatPoly y_part{gamma.u3, gamma.u4};
    // Work in the dehomogenized variable: coefficient vectors indexed by Y-degree.
    std::vector<Rat> acc(static_cast<size_t>(d) + 1, Rat(0));
    std::vector<RatPoly> xpows(static_cast<size_t>(d) + 1);
    std::vector<RatPoly> ypows(static_cast<size_t>(d) + 1);
    xpows[0] = ypows[0] = RatPoly{Rat(1)};
    for (int i = 1; i <= d; ++i) {
        xpows[static_cast<size_t>(i)] = poly_mul(xpows[static_cast<size_t>(i - 1)], x_part);
        ypows[static_cast<size_t>(i)] = poly_mul(ypows[static_cast<size_t>(i - 1)], y_part);
    }
    for (int i = 0; i <= d; ++i) {
        if (f.coeff(i) == 0) continue;
        RatPoly term = poly_mul(xpows[static_cast<size_t>(d - i)], ypows[static_cast<size_t>(i)]);
        // term has exactly d+1 entries: coefficients of X^d..Y^d
        for (int j = 0; j <= d; ++j)
            acc[static_cast<size_t>(j)] += f.coeff(i) * term[static_cast<size_t>(j)];
    }
    return BinaryForm(d, std::move(acc));
}

Rat scale_factor(const ProjectiveMap& gamma, const MonicPolynomial& g) {
    const int d = g.degree();
    Rat c;
    if (gamma.u3 == 0) {
        c = rat_pow(gamma.u1, d);
    } else {
        c = rat_pow(gamma.u3, d) * g.evaluate(gamma.u1 / gamma.u3);
    }
    if (c == 0) throw DomainError("scale factor: degenerate (c = 0)");
    return c;
}

TransitionMatrices transition_matrices(int d) {
    if (d < 1) throw DomainError("transition matrices: d must be >= 1");
    TransitionMatrices tm;
    tm.dimension = d + 1;
    tm.a.assign(static_cast<size_t>(d) + 1, std::vector<Rat>(static_cast<size_t>(d) + 1, Rat(0)));
    tm.a_inv = tm.a;
    for (int j = 0; j <= d; ++j)
        for (int i = 0; i <= j; ++i) {
            Rat b = binom(d - i, j - i);
            tm.a_inv[static_cast<size_t>(j)][static_cast<size_t>(i)] = b;
            tm.a[static_cast<size_t>(j)][static_cast<size_t>(i)] = ((i + j) % 2 == 0) ? b : -b;
        }
    return tm;
}

std::vector<Rat> coeffs_from_derivatives(const MonicPolynomial& f, const Rat& q, const Rat& r,
                                         const Rat& s) {
    if (r == 0) throw DomainError("coeffs_from_derivatives: r must be nonzero");
    const int d = f.degree();
    Rat fs = f.evaluate(s);
    if (fs == 0) throw DomainError("coeffs_from_derivatives: f(s) = 0");
    // Taylor coefficients f^(i)(s)/i!
    std::vector<Rat> taylor(static_cast<size_t>(d) + 1);
    RatPoly p = f.coeffs();
    Rat ifact(1);
    for (int i = 0; i <= d; ++i) {
        if (i > 0) {
            ifact *= i;
            p = poly_derivative(p);
        }
        taylor[static_cast<size_t>(i)] = poly_eval(p, s) / ifact;
    }
    std::vector<Rat> beta(static_cast<size_t>(d) + 1, Rat(0));
    for (int j = 0; j <= d; ++j) {
        Rat sum(0);
        for (int i = 0; i <= j; ++i) {
            Rat term = rat_pow(q, j - i) * rat_pow(r, i) * binom(d - i, j - i) *
                       taylor[static_cast<size_t>(i)];
            sum += (i % 2 == 0) ? term : -term;
        }
        beta[static_cast<size_t>(j)] = ((j % 2 == 0) ? sum : -sum) / fs;
    }
    return beta;
}

std::vector<Rat> derivatives_from_coeffs(const std::vector<Rat>& g_coeffs, const Rat& q,
                                         const Rat& r, const Rat& s) {
    (void)s;
    if (r == 0) throw DomainError("derivatives_from_coeffs: r must be nonzero");
    const int d = static_cast<int>(g_coeffs.size()) - 1;
    if (d < 1) throw DomainError("derivatives_from_coeffs: need degree >= 1");
    std::vector<Rat> y(static_cast<size_t>(d) + 1, Rat(0));
    if (q == 0) {
        // r^j f^(j)(s)/(j! f(s)) = beta_j
        return g_coeffs;
    }
    for (int j = 0; j <= d; ++j) {
        Rat sum(0);
        for (int i = 0; i <= j; ++i)
            sum += binom(d - i, j - i) * g_coeffs[static_cast<size_t>(i)] / rat_pow(q, i);
        // (r/q)^j f^(j)(s)/(j! f(s)) = sum
        y[static_cast<size_t>(j)] = sum;
    }
    return y;
}

FirstStepResult first_step_solve(int d, const Rat& q, const Rat& r, const Rat& s) {
    if (d < 3) throw DomainError("first step: d must be >= 3");
    if (q == 0 || r == 0 || s == 0) throw DomainError("first step: q, r, s must be nonzero");
    if (r == q * s || r == Rat(d - 1) * q * s)
        throw DomainError("first step: degenerate system (r = qs or r = (d-1)qs)");
    Rat rs = r / s;
    Rat beta_dm1 = Rat(d) * rat_pow(q, d - 2) * (rs - q);
    Rat beta_d = rat_pow(q, d - 2) * (rs - q) * (rs - Rat(d - 1) * q);
    Rat kappa = rat_pow(q, d - 2) * rs * rs;

    std::vector<Rat> gc(static_cast<size_t>(d) + 1, Rat(0));
    gc[0] = 1;
    gc[static_cast<size_t>(d - 1)] = beta_dm1;
    gc[static_cast<size_t>(d)] = beta_d;
    MonicPolynomial g(d, std::move(gc));

    // kappa f(t) = (qt + r - qs)^d + beta_{d-1} (qt + r - qs)(t - s)^(d-1) + beta_d (t - s)^d
    RatPoly lin1{q, r - q * s};
    RatPoly lin2{Rat(1), -s};
    RatPoly p1{Rat(1)}, p2{Rat(1)};
    for (int i = 0; i < d; ++i) p1 = poly_mul(p1, lin1);
    for (int i = 0; i < d - 1; ++i) p2 = poly_mul(p2, lin2);
    RatPoly acc = poly_add(p1, poly_scale(poly_mul(lin1, p2), beta_dm1));
    acc = poly_add(acc, poly_scale(poly_mul(lin2, p2), beta_d));
    acc = poly_scale(acc, 1 / kappa);
    MonicPolynomial f = MonicPolynomial::from_poly(acc);

    return FirstStepResult{std::move(f), std::move(g), std::move(kappa), std::move(beta_dm1),
                           std::move(beta_d)};
}

std::vector<Rat> a_star_values(long lambda_prime, int nu) {
    if (lambda_prime < 1) throw DomainError("quotient Q: lambda' must be >= 1");
    if (nu < 0 || nu > 2) throw DomainError("quotient Q: nu must be 0, 1 or 2");
    const int l0 = (nu == 2) ? 2 : 1;
    std::vector<Rat> vals;
    for (int l = l0; l <= l0 + 3; ++l) {
        Rat prod(1);
        for (int i = 2; i <= l; ++i) {
            long denom = std::max(static_cast<long>(i - nu), 1L);
            prod *= Rat(lambda_prime + i - nu) / Rat(denom);
        }
        vals.push_back(prod);
    }
    return vals;
}

Rat quotient_q(long lambda_prime, int nu) {
    if (lambda_prime < 1) throw DomainError("quotient Q: lambda' must be >= 1");
    switch (nu) {
        case 0:
            return Rat(lambda_prime + 3) / (3 * Rat(lambda_prime + 2));
        case 1:
            return Rat(lambda_prime + 2) / (2 * Rat(lambda_prime + 1));
        case 2:
            return Rat(lambda_prime + 2) / 2;
        default:
            throw DomainError("quotient Q: nu must be 0, 1 or 2");
    }
}

MonicPolynomial inversion_pair(const MonicPolynomial& f, const Rat& r) {
    if (r == 0) throw DomainError("inversion pair: r must be nonzero");
    const int d = f.degree();
    if (f.coeff(d) == 0) throw DomainError("inversion pair: alpha_d = 0");
    std::vector<Rat> g(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j)
        g[static_cast<size_t>(j)] = f.coeff(d - j) * rat_pow(r, j) / f.coeff(d);
    return MonicPolynomial(d, std::move(g));
}

}  // namespace fewform
