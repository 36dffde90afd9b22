#include "fewform/poly.hpp"

#include <algorithm>

namespace fewform {

int poly_degree(const RatPoly& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return static_cast<int>(p.size() - 1 - i);
    return -1;
}

RatPoly poly_trim(RatPoly p) {
    size_t i = 0;
    while (i + 1 < p.size() && p[i] == 0) ++i;
    p.erase(p.begin(), p.begin() + static_cast<long>(i));
    return p;
}

RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[r.size() - a.size() + i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[r.size() - b.size() + i] += b[i];
    return r;
}

RatPoly poly_scale(const RatPoly& a, const Rat& c) {
    RatPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

RatPoly poly_derivative(const RatPoly& p) {
    int d = static_cast<int>(p.size()) - 1;
    if (d <= 0) return {Rat(0)};
    RatPoly r(static_cast<size_t>(d), Rat(0));
    for (int i = 0; i < d; ++i) r[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] * (d - i);
    return r;
}

Rat poly_eval(const RatPoly& p, const Rat& x) {
    Rat acc(0);
    for (const auto& c : p) acc = acc * x + c;
    return acc;
}

Rat rat_det(std::vector<std::vector<Rat>> m) {
    const size_t n = m.size();
    if (n == 0) return Rat(1);
    // Clear denominators row by row, do Bareiss over integers.
    Rat scale(1);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i) {
        Int l(1);
        for (size_t j = 0; j < n; ++j) l = lcm(l, Int(m[i][j].get_den()));
        scale /= Rat(l);
        for (size_t j = 0; j < n; ++j) {
            Rat v = m[i][j] * Rat(l);
            a[i][j] = v.get_num();
        }
    }
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return Rat(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        prev = a[k][k];
    }
    return Rat(sign * a[n - 1][n - 1]) * scale;
}

Rat poly_resultant(const RatPoly& a, const RatPoly& b, int m, int n) {
    if (m < 0 || n < 0) throw DomainError("resultant: negative formal degree");
    if (m == 0 && n == 0) return Rat(1);
    auto coeff = [](const RatPoly& p, int formal_deg, int k) -> Rat {
        // coefficient of t^(formal_deg - k); p stored highest first with
        // size() - 1 = its written degree
        int idx = k - (formal_deg - (static_cast<int>(p.size()) - 1));
        if (idx < 0 || idx >= static_cast<int>(p.size())) return Rat(0);
        return p[static_cast<size_t>(idx)];
    };
    const size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<Rat>> s(dim, std::vector<Rat>(dim, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s[static_cast<size_t>(i)][static_cast<size_t>(i + k)] = coeff(a, m, k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s[static_cast<size_t>(n + i)][static_cast<size_t>(i + k)] = coeff(b, n, k);
    return rat_det(std::move(s));
}

Rat poly_discriminant(const RatPoly& p) {
    int d = poly_degree(p);
    if (d < 1) throw DomainError("discriminant: degree < 1");
    RatPoly q = poly_trim(p);
    RatPoly dq = poly_derivative(q);
    Rat res = poly_resultant(q, dq, d, d - 1);
    Rat sign = (((static_cast<long>(d) * (d - 1)) / 2) % 2 == 0) ? Rat(1) : Rat(-1);
    return sign * res / q[0];
}

RatPoly poly_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw DomainError("interpolation: bad point set");
    const size_t n = xs.size();
    RatPoly acc{Rat(0)};
    for (size_t i = 0; i < n; ++i) {
        RatPoly basis{Rat(1)};
        Rat denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis = poly_mul(basis, RatPoly{Rat(1), -xs[j]});
            denom *= xs[i] - xs[j];
        }
        acc = poly_add(acc, poly_scale(basis, ys[i] / denom));
    }
    return poly_trim(acc);
}

std::vector<Rat> poly_rational_roots(const RatPoly& p0) {
    RatPoly p = poly_trim(p0);
    int d = poly_degree(p);
    if (d < 0) throw DomainError("rational roots of the zero polynomial");
    std::vector<Rat> roots;
    // strip roots at 0
    while (p.back() == 0 && p.size() > 1) {
        if (roots.empty() || roots.back() != 0) roots.emplace_back(0);
        p.pop_back();
    }
    if (poly_degree(p) < 1) return roots;
    Int l(1);
    for (const auto& c : p) l = lcm(l, Int(c.get_den()));
    std::vector<Int> ic;
    for (const auto& c : p) ic.push_back(Int(c * Rat(l)));
    Int lead = ic.front(), tail = ic.back();
    auto divisors = [](const Int& n) {
        std::vector<Int> divs{Int(1)};
        for (const auto& [pr, e] : factor(n)) {
            size_t base = divs.size();
            Int pe(1);
            for (unsigned i = 1; i <= e; ++i) {
                pe *= pr;
                for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
            }
        }
        return divs;
    };
    auto evalq = [&](const Rat& x) {
        Rat acc(0);
        for (const auto& c : ic) acc = acc * x + Rat(c);
        return acc;
    };
    for (const auto& pn : divisors(tail))
        for (const auto& qd : divisors(lead)) {
            if (gcd(pn, qd) != 1) continue;
            for (int s : {1, -1}) {
                Rat cand = Rat(s * pn) / Rat(qd);
                if (evalq(cand) == 0) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace fewform
