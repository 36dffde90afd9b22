#include "fewform/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace fewform {

const Int& lfl_constant() {
    static const Int c = int_pow(2, 79) * int_pow(3, 15);
    return c;
}

LflParams::LflParams(long d, Int b1_, Int b2_, double la1, double la2, double b)
    : field_degree(d), b1(std::move(b1_)), b2(std::move(b2_)), log_a1(la1), log_a2(la2),
      big_b(b) {
    if (field_degree < 1) throw DomainError("lfl: D must be >= 1");
    if (b1 < 1 || b2 < 1) throw DomainError("lfl: b1, b2 must be positive");
    double floor_a = 1.0 / static_cast<double>(field_degree) - 1e-12;
    if (log_a1 < floor_a || log_a2 < floor_a)
        throw DomainError("lfl: log A_j must be >= 1/D");
    double floor_b = std::max({std::exp(1.0), b1.get_d(), b2.get_d()});
    if (big_b < floor_b - 1e-12) throw DomainError("lfl: B must be >= max{e, b1, b2}");
}

double log_height_rational(const Rat& x) {
    if (x == 0) throw DomainError("height: zero has no logarithmic height");
    Int p = abs(x.get_num());
    const Int& q = x.get_den();
    const Int& big = p >= q ? p : q;
    // log via mantissa + exponent so huge integers stay in range
    long exp2;
    double mant = mpz_get_d_2exp(&exp2, big.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

namespace {

// Aberth-Ehrlich in double precision; adequate for Mahler products, where a
// root error eps moves the answer by O(d * eps).
std::vector<std::complex<double>> aberth_roots(const std::vector<double>& c) {
    const int n = static_cast<int>(c.size()) - 1;  // c[0] = lc
    double radius = 0.0;
    for (int i = 1; i <= n; ++i) radius = std::max(radius, std::abs(c[static_cast<size_t>(i)] / c[0]));
    radius = 1.0 + radius;
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        z[static_cast<size_t>(i)] = std::polar(radius * (0.5 + 0.5 * (i + 1.0) / n),
                                               2.0 * M_PI * i / n + 0.4);
    auto horner = [&](std::complex<double> t) {
        std::complex<double> p = c[0], dp = 0.0;
        for (int i = 1; i <= n; ++i) {
            dp = dp * t + p;
            p = p * t + c[static_cast<size_t>(i)];
        }
        return std::pair{p, dp};
    };
    for (int it = 0; it < 400; ++it) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            auto [p, dp] = horner(z[static_cast<size_t>(i)]);
            std::complex<double> w = dp == 0.0 ? std::complex<double>(1e-12) : p / dp;
            std::complex<double> s = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            std::complex<double> corr = w / (1.0 - w * s);
            z[static_cast<size_t>(i)] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

}  // namespace

double mahler_measure(const RatPoly& f, double tol) {
    RatPoly p = poly_trim(f);
    int n = poly_degree(p);
    if (n < 0) throw DomainError("mahler: zero polynomial");
    if (tol <= 0) throw DomainError("mahler: tol must be positive");
    if (n == 0) return std::abs(to_double(p[0]));

    std::vector<double> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) c[i] = to_double(p[i]);
    auto roots = aberth_roots(c);

    // cross-check: the root product must reproduce |c_n / c_0|
    double prod_roots = 1.0, measure = std::abs(c[0]);
    for (const auto& z : roots) {
        double m = std::abs(z);
        prod_roots *= m;
        measure *= std::max(1.0, m);
    }
    double want = std::abs(c[c.size() - 1] / c[0]);
    double scale = std::max(1.0, std::max(prod_roots, want));
    if (std::abs(prod_roots - want) > std::max(tol, 1e-9) * scale)
        throw InconclusiveError("mahler: root product check failed at this precision");
    return measure;
}

double lfl_lower_bound(const LflParams& p) {
    double d = static_cast<double>(p.field_degree);
    return -lfl_constant().get_d() * std::log(p.big_b) * p.log_a1 * p.log_a2 * d * d * d * d *
           std::max(1.0, std::log(d));
}

FewnomialBoundReport fewnomial_lower_bound(const BinaryForm& f, int r, int k, const Int& x,
                                           const Int& y) {
    if (r < 1 || k < 1) throw DomainError("fewnomial bound: r, k must be >= 1");
    const int d = r * k;
    if (f.degree() != d) throw DomainError("fewnomial bound: degree is not r*k");
    Int big_x = abs(x) >= abs(y) ? abs(x) : abs(y);
    if (big_x < 2) throw DomainError("fewnomial bound: max{|x|,|y|} must be >= 2");
    if (f.evaluate(Rat(x), Rat(y)) == 0) throw DomainError("fewnomial bound: F(x,y) = 0");

    std::vector<Int> tuple;
    for (int i = 0; i <= r; ++i) {
        const Rat& a = f.coeff(i * k);
        if (a.get_den() != 1) throw DomainError("fewnomial bound: integer coefficients required");
        tuple.push_back(a.get_num());
    }
    HeightReport h = heights(tuple);

    FewnomialBoundReport rep;
    rep.d = d;
    rep.log_astar = std::log(to_double(h.height_star));
    Int factor_int = lfl_constant() * int_pow(r, 4ul * static_cast<unsigned long>(r));
    double factor = factor_int.get_d();
    double penalty = factor * std::max(1.0, std::log(static_cast<double>(d))) * rep.log_astar;
    rep.exponent = d - penalty;

    double log_x = log_height_rational(Rat(big_x));
    auto log_term = [&](const Int& a, const Int& v) {
        if (a == 0 || v == 0) return -HUGE_VAL;
        return log_height_rational(Rat(abs(a))) + d * log_height_rational(Rat(abs(v)));
    };
    double anchor = std::max(log_term(tuple[0], x), log_term(tuple[static_cast<size_t>(r)], y));
    rep.anchored = (std::isinf(anchor) ? 0.0 : anchor) - penalty * log_x;
    return rep;
}

Thresholds thresholds(const Rat& eps, int r, const Rat& lambda, const Int& m, double theta) {
    if (eps <= 0) throw DomainError("thresholds: epsilon must be positive");
    if (r < 1) throw DomainError("thresholds: r must be >= 1");
    if (m == 0) throw DomainError("thresholds: m must be nonzero");
    Int rp = int_pow(r, 4ul * static_cast<unsigned long>(r));
    Thresholds t;
    t.eta = eps / Rat(2 * lfl_constant() * rp);
    if (lambda <= 2) throw DomainError("thresholds: lambda must exceed 2");
    t.mu_max = (lambda - 2) / (Rat(lfl_constant() * rp) * lambda);
    double logm = log_height_rational(Rat(abs(m)));
    t.m0 = static_cast<long>(std::floor(theta * logm / (r * std::log(2.0)) + 1e-9));
    return t;
}

GrowthReport family_growth_check(const FewnomialFamily& fam, double eta, int d0) {
    fam.validate();
    GrowthReport rep;
    for (const auto& [k, tuples] : fam.blocks) {
        int d = k * fam.r;
        if (d < std::max(d0, 2)) continue;
        Rat max_astar = 0;
        for (const auto& tuple : tuples)
            max_astar = std::max(max_astar, heights(tuple).height_star);
        double bound = std::exp(eta * d / std::log(static_cast<double>(d)));
        double val = to_double(max_astar);
        if (val > bound * (1.0 + 1e-12)) {
            rep.pass = false;
            rep.first_violation = d;
            rep.astar_at_violation = val;
            rep.bound_at_violation = bound;
            return rep;
        }
    }
    return rep;
}

}  // namespace fewform
