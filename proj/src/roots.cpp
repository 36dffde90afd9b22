#include "fewform/roots.hpp"

#include <algorithm>
#include <cmath>

namespace fewform {

HPComplex hp_add(const HPComplex& a, const HPComplex& b) { return {a.re + b.re, a.im + b.im}; }
HPComplex hp_sub(const HPComplex& a, const HPComplex& b) { return {a.re - b.re, a.im - b.im}; }

HPComplex hp_mul(const HPComplex& a, const HPComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

HPComplex hp_div(const HPComplex& a, const HPComplex& b) {
    mpf_class n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

mpf_class hp_norm(const HPComplex& a) { return a.re * a.re + a.im * a.im; }

std::pair<std::complex<double>, std::complex<double>> ProjectiveRoot::normalized() const {
    if (at_infinity) return {{1.0, 0.0}, {0.0, 0.0}};
    std::complex<double> x = value.to_double();
    double ax = std::abs(x);
    if (ax <= 1.0) return {x, {1.0, 0.0}};
    return {x / ax, std::complex<double>(1.0, 0.0) / ax};
}

double chordal_distance(const std::pair<std::complex<double>, std::complex<double>>& a,
                        const std::pair<std::complex<double>, std::complex<double>>& b) {
    return std::abs(a.first * b.second - b.first * a.second);
}

namespace {

// Aberth-Ehrlich in double precision on a monic complex polynomial given by
// coefficients c[0..n] (c[0] = 1), highest degree first.
std::vector<std::complex<double>> aberth(const std::vector<std::complex<double>>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    auto eval = [&](std::complex<double> z, std::complex<double>& deriv) {
        std::complex<double> p = c[0], dp = 0.0;
        for (int i = 1; i <= n; ++i) {
            dp = dp * z + p;
            p = p * z + c[static_cast<size_t>(i)];
        }
        deriv = dp;
        return p;
    };
    double radius = 0.0;
    for (int i = 1; i <= n; ++i)
        radius = std::max(radius, std::pow(std::abs(c[static_cast<size_t>(i)]), 1.0 / i));
    radius = 1.0 + 2.0 * radius;
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * i / n + 0.43;
        z[static_cast<size_t>(i)] = std::polar(radius * (1.0 + 0.05 * i / n), ang);
    }
    for (int iter = 0; iter < 800; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> dp;
            std::complex<double> p = eval(z[static_cast<size_t>(i)], dp);
            if (p == 0.0) continue;
            std::complex<double> ratio = (dp == 0.0) ? std::complex<double>(1e-16, 0) : p / dp;
            std::complex<double> sum = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            std::complex<double> corr = ratio / (1.0 - ratio * sum);
            z[static_cast<size_t>(i)] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

HPComplex newton_polish(const RatPoly& p, const RatPoly& dp, std::complex<double> z0,
                        long prec) {
    std::vector<HPComplex> pc, dpc;
    for (const auto& c : p) pc.push_back({mpf_class(c.get_num(), prec) / mpf_class(c.get_den(), prec), mpf_class(0, prec)});
    for (const auto& c : dp) dpc.push_back({mpf_class(c.get_num(), prec) / mpf_class(c.get_den(), prec), mpf_class(0, prec)});
    auto eval = [&](const std::vector<HPComplex>& cs, const HPComplex& z) {
        HPComplex acc{mpf_class(0, prec), mpf_class(0, prec)};
        for (const auto& c : cs) acc = hp_add(hp_mul(acc, z), c);
        return acc;
    };
    HPComplex z{mpf_class(z0.real(), prec), mpf_class(z0.imag(), prec)};
    int steps = 4;
    for (long b = 64; b < prec; b *= 2) ++steps;
    for (int i = 0; i < steps + 2; ++i) {
        HPComplex fz = eval(pc, z);
        HPComplex dfz = eval(dpc, z);
        if (hp_norm(dfz) == 0) break;
        z = hp_sub(z, hp_div(fz, dfz));
    }
    return z;
}

}  // namespace

RootSet projective_roots(const BinaryForm& f, long precision_bits) {
    const int d = f.degree();
    if (d < 1) throw DomainError("projective roots: degree must be >= 1");
    if (d >= 2 && discriminant(f) == 0)
        throw DomainError("projective roots: zero discriminant");
    if (precision_bits < 53) precision_bits = 53;

    RootSet rs;
    rs.degree = d;
    rs.precision_bits = precision_bits;

    RatPoly p = f.dehomogenized();
    int dp_deg = poly_degree(p);
    // a0 = 0 contributes the point at infinity; nonzero discriminant keeps
    // its multiplicity at one.
    for (int i = 0; i < d - dp_deg; ++i) {
        ProjectiveRoot r;
        r.at_infinity = true;
        rs.roots.push_back(r);
    }
    if (dp_deg >= 1) {
        std::vector<std::complex<double>> monic(p.size());
        for (size_t i = 0; i < p.size(); ++i) monic[i] = to_double(p[i] / p[0]);
        auto zs = aberth(monic);
        RatPoly deriv = poly_derivative(p);
        for (const auto& z : zs) {
            ProjectiveRoot r;
            r.value = newton_polish(p, deriv, z, precision_bits);
            rs.roots.push_back(r);
        }
    }

    std::sort(rs.roots.begin(), rs.roots.end(), [](const ProjectiveRoot& a, const ProjectiveRoot& b) {
        auto na = a.normalized(), nb = b.normalized();
        auto key = [](const std::pair<std::complex<double>, std::complex<double>>& n) {
            return std::tuple<double, double, double, double>(n.first.real(), n.first.imag(),
                                                              n.second.real(), n.second.imag());
        };
        return key(na) < key(nb);
    });

    double sep = 2.0;
    for (size_t i = 0; i < rs.roots.size(); ++i)
        for (size_t j = i + 1; j < rs.roots.size(); ++j)
            sep = std::min(sep, chordal_distance(rs.roots[i].normalized(), rs.roots[j].normalized()));
    rs.separation = sep;
    return rs;
}

std::optional<Rat> rationalize(const mpf_class& x, const Int& denom_cap, const mpf_class& tol) {
    if (denom_cap < 1) throw DomainError("rationalize: denominator cap must be >= 1");
    Rat exact(x);  // exact binary value of the float
    Int p0(1), q0(0);  // convergents p/q
    Int p1, q1(1);
    mpz_fdiv_q(p1.get_mpz_t(), exact.get_num().get_mpz_t(), exact.get_den().get_mpz_t());
    Rat frac = exact - Rat(p1);
    while (q1 <= denom_cap) {
        if (frac == 0) break;
        Rat inv = 1 / frac;
        Int a;
        mpz_fdiv_q(a.get_mpz_t(), inv.get_num().get_mpz_t(), inv.get_den().get_mpz_t());
        Int p2 = a * p1 + p0;
        Int q2 = a * q1 + q0;
        if (q2 > denom_cap) break;
        p0 = p1; q0 = q1;
        p1 = p2; q1 = q2;
        frac = inv - Rat(a);
    }
    Rat cand = Rat(p1) / Rat(q1);
    // measure the residual exactly through rationals to dodge double rounding
    Rat diff = exact - cand;
    mpf_class adiff(abs(diff), x.get_prec());
    if (adiff <= tol) return cand;
    return std::nullopt;
}

}  // namespace fewform
