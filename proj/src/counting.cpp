#include "fewform/counting.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "fewform/kernels.hpp"

namespace fewform {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct CircleEval {
    int d;
    std::vector<double> a;    // coefficients of F
    std::vector<double> ax;   // of dF/dX
    std::vector<double> ay;   // of dF/dY

    explicit CircleEval(const BinaryForm& f) : d(f.degree()) {
        for (int i = 0; i <= d; ++i) a.push_back(to_double(f.coeff(i)));
        for (int i = 0; i < d; ++i) ax.push_back((d - i) * a[static_cast<size_t>(i)]);
        for (int i = 1; i <= d; ++i) ay.push_back(i * a[static_cast<size_t>(i)]);
    }

    static double eval(const std::vector<double>& c, int deg, double ct, double st) {
        // sum c[i] ct^(deg-i) st^i
        double acc = 0.0, sp = 1.0;
        std::vector<double> cp(static_cast<size_t>(deg) + 1);
        cp[0] = 1.0;
        for (int j = 1; j <= deg; ++j) cp[static_cast<size_t>(j)] = cp[static_cast<size_t>(j - 1)] * ct;
        for (int i = 0; i <= deg; ++i) {
            acc += c[static_cast<size_t>(i)] * cp[static_cast<size_t>(deg - i)] * sp;
            sp *= st;
        }
        return acc;
    }

    double operator()(double theta) const {
        return eval(a, d, std::cos(theta), std::sin(theta));
    }

    double derivative(double theta) const {
        double ct = std::cos(theta), st = std::sin(theta);
        return -st * eval(ax, d - 1, ct, st) + ct * eval(ay, d - 1, ct, st);
    }
};

std::vector<double> angular_zeros(const CircleEval& phi) {
    const int n = 8192;
    std::vector<double> zeros;
    double prev = phi(0.0);
    for (int i = 1; i <= n; ++i) {
        double th = 2.0 * kPi * i / n;
        double cur = phi(th);
        if ((prev < 0) != (cur < 0) || prev == 0.0) {
            double lo = 2.0 * kPi * (i - 1) / n, hi = th;
            double flo = prev;
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = phi(mid);
                if ((flo < 0) != (fm < 0)) hi = mid;
                else { lo = mid; flo = fm; }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

double circle_min_abs(const CircleEval& phi) {
    const int n = 8192;
    double best = std::abs(phi(0.0));
    double best_th = 0.0;
    for (int i = 1; i < n; ++i) {
        double th = 2.0 * kPi * i / n;
        double v = std::abs(phi(th));
        if (v < best) { best = v; best_th = th; }
    }
    // local ternary refinement around the best sample
    double lo = best_th - 2.0 * kPi / n, hi = best_th + 2.0 * kPi / n;
    for (int it = 0; it < 200; ++it) {
        double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if (std::abs(phi(m1)) < std::abs(phi(m2))) hi = m2; else lo = m1;
    }
    return std::min(best, std::abs(phi(0.5 * (lo + hi))));
}

struct Quadrature {
    double tol_floor;
    int max_depth = 40;

    template <typename F>
    double recurse(const F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) const {
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        double flm = f(lm), frm = f(rm);
        double left = (m - a) / 6 * (fa + 4 * flm + fm);
        double right = (b - m) / 6 * (fm + 4 * frm + fb);
        double delta = left + right - whole;
        if (std::abs(delta) <= 15 * tol || (b - a) < 1e-14)
            return left + right + delta / 15;
        if (depth >= max_depth)
            throw InconclusiveError("quadrature: tolerance unreachable within panel budget");
        return recurse(f, a, m, fa, flm, fm, left, tol / 2, depth + 1) +
               recurse(f, m, b, fm, frm, fb, right, tol / 2, depth + 1);
    }

    template <typename F>
    double integrate(const F& f, double a, double b, double tol) const {
        // 13 seed panels so periodic integrands cannot alias the first
        // Simpson stencil (13 is coprime to any small symmetry period)
        const int seed = 13;
        double tol_eff = std::max(tol, tol_floor);
        double h = (b - a) / seed, total = 0.0;
        for (int i = 0; i < seed; ++i) {
            double lo = a + i * h, hi = lo + h;
            double flo = f(lo), fhi = f(hi), fm = f(0.5 * (lo + hi));
            double whole = h / 6 * (flo + 4 * fm + fhi);
            total += recurse(f, lo, hi, flo, fm, fhi, whole, tol_eff / seed, 0);
        }
        return total;
    }
};

}  // namespace

std::vector<RepresentationTriple> representations_in_region(const BinaryForm& f, const Int& n,
                                                            std::optional<long long> cap,
                                                            int form_index) {
    const int d = f.degree();
    if (d < 1) throw DomainError("representations: degree must be >= 1");
    if (n < 1) throw DomainError("representations: N must be >= 1");
    if (d >= 2 && discriminant(f) == 0)
        throw DomainError("representations: zero discriminant");

    CircleEval phi(f);
    long long bound;
    if (cap) {
        if (*cap < 1) throw DomainError("representations: cap must be >= 1");
        bound = *cap;
    } else {
        if (!angular_zeros(phi).empty())
            throw DomainError(
                "representations: cap required, region is unbounded (F has a real zero)");
        double mu = circle_min_abs(phi) / 2;  // halved as a sampling safety margin
        bound = static_cast<long long>(std::ceil(std::pow(n.get_d() / mu, 1.0 / d))) + 1;
    }
    if (bound < 2) bound = 2;

    RowEvalFn kern = row_eval_kernel();
    const double nd = n.get_d() * (1.0 + 1e-12);
    const double eps = 2.220446049250313e-16;
    const int nrow = static_cast<int>(2 * bound + 1);
    std::vector<double> cy(static_cast<size_t>(d) + 1), acy(static_cast<size_t>(d) + 1);
    std::vector<double> vals(static_cast<size_t>(nrow)), svals(static_cast<size_t>(bound) + 1);

    std::vector<RepresentationTriple> out;
    for (long long x = -bound; x <= bound; ++x) {
        for (int i = 0; i <= d; ++i) {
            cy[static_cast<size_t>(i)] =
                to_double(f.coeff(i) * rat_pow(Rat(static_cast<long>(x)), d - i));
            acy[static_cast<size_t>(i)] = std::abs(cy[static_cast<size_t>(i)]);
        }
        kern(cy.data(), d, static_cast<double>(-bound), 1.0, nrow, vals.data());
        kern(acy.data(), d, 0.0, 1.0, static_cast<int>(bound) + 1, svals.data());
        for (long long y = -bound; y <= bound; ++y) {
            if (std::max(std::llabs(x), std::llabs(y)) < 2) continue;
            double magnitude = svals[static_cast<size_t>(std::llabs(y))];
            double err = (2.0 * d + 6.0) * eps * magnitude + 1e-300;
            if (std::abs(vals[static_cast<size_t>(y + bound)]) > nd + err + 1.0) continue;
            Rat m = f.evaluate(Rat(static_cast<long>(x)), Rat(static_cast<long>(y)));
            if (m <= n && -m <= n)
                out.push_back({x, y, form_index, m});
        }
    }
    return out;
}

namespace {

std::vector<std::pair<int, BinaryForm>> family_members(const FewnomialFamily& fam) {
    std::vector<std::pair<int, BinaryForm>> out;
    for (const auto& [k, tuples] : fam.blocks)
        for (size_t i = 0; i < tuples.size(); ++i)
            out.emplace_back(k * fam.r, build_fewnomial(fam, k, static_cast<int>(i)));
    return out;
}

}  // namespace

CountReport r_count(const FewnomialFamily& fam, int d, const Int& n,
                    std::optional<long long> cap) {
    fam.validate();
    std::set<Rat> ms;
    int idx = 0;
    for (const auto& [deg, f] : family_members(fam)) {
        int form_index = idx++;
        if (deg < d) continue;
        for (const auto& t : representations_in_region(f, n, cap, form_index)) ms.insert(t.m);
    }
    CountReport rep;
    rep.n = n;
    rep.count = static_cast<long long>(ms.size());
    auto dd = d_dagger(fam, d);
    rep.error_exponent = std::max(theta_d(d), dd ? 2.0 / *dd : 0.0);
    return rep;
}

std::vector<RepresentationTriple> g_set(const FewnomialFamily& fam, int d, const Int& m,
                                        std::optional<long long> cap) {
    fam.validate();
    if (m <= 1 && m >= -1) throw DomainError("g_set: |m| must be >= 2");
    Int am = abs(m);
    std::vector<RepresentationTriple> out;
    int idx = 0;
    for (const auto& [deg, f] : family_members(fam)) {
        int form_index = idx++;
        if (deg < d) continue;
        for (const auto& t : representations_in_region(f, am, cap, form_index))
            if (t.m == Rat(m)) out.push_back(t);
    }
    return out;
}

double area_AF(const BinaryForm& f, double tol) {
    const int d = f.degree();
    if (d < 3) throw DomainError("area: degree must be >= 3");
    if (discriminant(f) == 0) throw DomainError("area: zero discriminant");
    if (tol <= 0) throw DomainError("area: tol must be positive");

    CircleEval phi(f);
    const double beta = 2.0 / d;
    std::vector<double> zeros = angular_zeros(phi);
    Quadrature quad{tol * 1e-3};

    auto plain = [&](double th) { return std::pow(std::abs(phi(th)), -beta); };

    if (zeros.empty()) return 0.5 * quad.integrate(plain, 0.0, 2.0 * kPi, tol);

    // between consecutive zeros, absorb the power-law singularity at each end
    // with theta = z +- u^(1/(1-beta))
    double total = 0.0;
    const double share = tol / (2.0 * static_cast<double>(zeros.size()) + 1.0);
    const double expo = 1.0 / (1.0 - beta);
    for (size_t i = 0; i < zeros.size(); ++i) {
        double z0 = zeros[i];
        double z1 = (i + 1 < zeros.size()) ? zeros[i + 1] : zeros[0] + 2.0 * kPi;
        double mid = 0.5 * (z0 + z1);
        for (int side = 0; side < 2; ++side) {
            double z = side == 0 ? z0 : z1;
            double dir = side == 0 ? 1.0 : -1.0;
            double len = std::abs(mid - z);
            auto g = [&](double u) {
                double off = std::pow(u, expo);
                double th = z + dir * off;
                double w = off < 1e-9 ? std::abs(phi.derivative(z))
                                      : std::abs(phi(th)) / off;
                return std::pow(w, -beta) / (1.0 - beta);
            };
            total += quad.integrate(g, 0.0, std::pow(len, 1.0 - beta), share);
        }
    }
    return 0.5 * total;
}

double mc_area(const BinaryForm& f, long long samples, unsigned seed) {
    const int d = f.degree();
    if (d < 3) throw DomainError("mc area: degree must be >= 3");
    if (discriminant(f) == 0) throw DomainError("mc area: zero discriminant");
    CircleEval phi(f);
    if (!angular_zeros(phi).empty())
        throw DomainError("mc area: definite forms only (F has a real zero)");
    double mu = circle_min_abs(phi) / 2;
    double radius = std::pow(1.0 / mu, 1.0 / d);

    long long nside = std::max<long long>(8, static_cast<long long>(std::sqrt(static_cast<double>(samples))));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double cell = 2.0 * radius / static_cast<double>(nside);
    long long hits = 0;
    std::vector<double> a = phi.a;
    for (long long i = 0; i < nside; ++i)
        for (long long j = 0; j < nside; ++j) {
            double x = -radius + (static_cast<double>(i) + unit(rng)) * cell;
            double y = -radius + (static_cast<double>(j) + unit(rng)) * cell;
            double acc = 0.0, xp = 1.0;
            for (int t = d; t >= 0; --t) {
                acc += a[static_cast<size_t>(t)] * xp * std::pow(y, t);
                xp *= x;
            }
            if (std::abs(acc) <= 1.0) ++hits;
        }
    return static_cast<double>(hits) * cell * cell;
}

double c_constant(const BinaryForm& f, double tol, const IsomOptions& opts) {
    Rat w = w_constant(f, opts);
    return area_AF(f, tol) * to_double(w);
}

double theta_d(int d) {
    if (d < 3) throw DomainError("theta_d: degree must be >= 3");
    if (d == 3) return (24.0 * std::sqrt(3.0) + 73.0) / (60.0 * std::sqrt(3.0) + 73.0);
    if (d <= 20) {
        double s = std::sqrt(static_cast<double>(d));
        return (2.0 * s + 9.0) / (4.0 * d * s - 6.0 * s + 9.0);
    }
    return 1.0 / (d - 1);
}

std::optional<int> d_dagger(const FewnomialFamily& fam, int d) {
    for (int deg : fam.degrees())
        if (deg > d) return deg;
    return std::nullopt;
}

std::vector<CountReport> asymptotic_table(const FewnomialFamily& fam, int d,
                                          const std::vector<Int>& ns, double eps,
                                          std::optional<long long> cap, double tol) {
    fam.validate();
    double c_sum = 0.0;
    for (const auto& [deg, f] : family_members(fam))
        if (deg == d) c_sum += c_constant(f, tol);
    auto dd = d_dagger(fam, d);
    double expo = std::max(theta_d(d) + eps, dd ? 2.0 / *dd : 0.0);

    std::vector<CountReport> out;
    for (const Int& n : ns) {
        CountReport rep = r_count(fam, d, n, cap);
        rep.predicted = c_sum * std::pow(n.get_d(), 2.0 / d);
        if (rep.predicted > 0) rep.ratio = static_cast<double>(rep.count) / rep.predicted;
        rep.error_exponent = expo;
        out.push_back(rep);
    }
    return out;
}

}  // namespace fewform
