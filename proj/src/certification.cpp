#include "fewform/certification.hpp"

#include <algorithm>

namespace fewform {

void FormSet::validate() const {
    for (const auto& f : members)
        if (f.degree() != degree) throw DomainError("form set: mixed degrees");
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (members[i] == members[j]) throw DomainError("form set: duplicate members");
}

std::vector<std::pair<Rat, Rat>> dilation_solutions(const BinaryForm& f, const BinaryForm& g) {
    const int d = f.degree();
    if (g.degree() != d) throw DomainError("dilation solutions: degrees differ");
    if (f.coeff(0) == 0 || g.coeff(0) == 0)
        throw DomainError("dilation solutions: a0 b0 must be nonzero");

    int pivot = 0;  // smallest positive index with a nonzero coefficient
    for (int i = 1; i <= d; ++i) {
        if ((f.coeff(i) != 0) != (g.coeff(i) != 0)) return {};
        if (pivot == 0 && f.coeff(i) != 0) pivot = i;
    }
    if (pivot == 0) throw DomainError("dilation solutions: no lower coefficient to pin v");

    std::vector<std::pair<Rat, Rat>> out;
    for (const Rat& u : rational_nth_roots(g.coeff(0) / f.coeff(0), static_cast<unsigned long>(d))) {
        Rat u_pow = rat_pow(u, d - pivot);
        for (const Rat& v : rational_nth_roots(g.coeff(pivot) / (f.coeff(pivot) * u_pow),
                                               static_cast<unsigned long>(pivot))) {
            bool ok = true;
            for (int i = 0; i <= d; ++i)
                if (f.coeff(i) * rat_pow(u, d - i) * rat_pow(v, i) != g.coeff(i)) {
                    ok = false;
                    break;
                }
            if (ok) out.emplace_back(u, v);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Certificate is_dilation_free(const FormSet& s) {
    s.validate();
    Certificate c;
    c.route = Route::RootSearch;
    for (size_t i = 0; i < s.members.size(); ++i)
        for (size_t j = 0; j < s.members.size(); ++j) {
            if (i == j) continue;
            const BinaryForm& f = s.members[i];
            const BinaryForm& g = s.members[j];
            std::vector<std::pair<Rat, Rat>> sols;
            if (f.coeff(0) != 0 && g.coeff(0) != 0) {
                sols = dilation_solutions(f, g);
            } else if (f.coeff(s.degree) != 0 && g.coeff(s.degree) != 0) {
                // work through the reciprocals; (u, v) swaps
                for (auto& [v, u] : dilation_solutions(f.reciprocal(), g.reciprocal()))
                    sols.emplace_back(u, v);
            } else {
                c.verdict = Verdict::Inconclusive;
                c.detail = "member with a0 = ad = 0: dilation solver not applicable";
                return c;
            }
            if (!sols.empty()) {
                c.verdict = Verdict::Refuted;
                c.detail = "dilation found";
                c.dilation_witness = DilationWitness{i, j, sols[0].first, sols[0].second};
                c.pair = {i, j};
                return c;
            }
        }
    c.verdict = Verdict::Certified;
    c.detail = "no dilation between any distinct pair";
    return c;
}

Certificate is_reduced(const FormSet& s) {
    s.validate();
    Certificate c;
    c.route = Route::RootSearch;
    for (size_t i = 0; i < s.members.size(); ++i)
        if (s.members[i].coeff(0) == 0 || s.members[i].coeff(s.degree) == 0) {
            c.verdict = Verdict::Refuted;
            c.detail = "member " + std::to_string(i) + " has a0 ad = 0";
            return c;
        }
    Certificate dil = is_dilation_free(s);
    if (dil.verdict != Verdict::Certified) {
        dil.detail = "dilation clause: " + dil.detail;
        return dil;
    }
    std::vector<size_t> binomials;
    for (size_t i = 0; i < s.members.size(); ++i)
        if (s.members[i].is_binomial()) binomials.push_back(i);
    if (binomials.size() >= 2) {
        // two distinct binomials are always linked by F(vY, uX) = G over C
        c.verdict = Verdict::Refuted;
        c.detail = "two distinct binomial forms (antidiagonal link)";
        c.pair = {binomials[0], binomials[1]};
        const BinaryForm& f = s.members[binomials[0]];
        const BinaryForm& g = s.members[binomials[1]];
        auto us = rational_nth_roots(g.coeff(0) / f.coeff(s.degree),
                                     static_cast<unsigned long>(s.degree));
        auto vs = rational_nth_roots(g.coeff(s.degree) / f.coeff(0),
                                     static_cast<unsigned long>(s.degree));
        if (!us.empty() && !vs.empty())
            c.dilation_witness = DilationWitness{binomials[0], binomials[1], us[0], vs[0]};
        return c;
    }
    c.verdict = Verdict::Certified;
    c.detail = "reduced";
    return c;
}

namespace {

std::optional<int> smallest_odd_support(const BinaryForm& f) {
    for (int k = 1; k <= f.degree(); k += 2)
        if (f.coeff(k) != 0) return k;
    return std::nullopt;
}

bool zero_run_after_lambda(const BinaryForm& f, int lambda, int len) {
    for (int k = lambda + 1; k <= lambda + len && k <= f.degree(); ++k)
        if (f.coeff(k) != 0) return false;
    return true;
}

bool is_balanced_trinomial(const BinaryForm& f) {
    const int d = f.degree();
    if (d % 2 != 0) return false;
    if (f.coeff(d / 2) == 0) return false;
    for (int k = 1; k < d; ++k)
        if (k != d / 2 && f.coeff(k) != 0) return false;
    return true;
}

}  // namespace

MembershipResult membership(const BinaryForm& f, SetName which) {
    const int d = f.degree();
    if (d < 3) return {false, "degree below 3"};
    if (discriminant(f) == 0) return {false, "zero discriminant"};
    const int lambda = lambda_gap(f, GapSide::Plus);

    auto integral = [&] {
        if (!f.has_integer_coeffs()) return std::optional<std::string>("non-integer coefficients");
        return std::optional<std::string>();
    };
    auto dfree_ends = [&] {
        if (!is_k_free(f.coeff(0), static_cast<unsigned long>(d)))
            return std::optional<std::string>("a0 not d-free");
        if (!is_k_free(f.coeff(d), static_cast<unsigned long>(d)))
            return std::optional<std::string>("ad not d-free");
        return std::optional<std::string>();
    };
    auto sign_rule = [&] {
        auto k = smallest_odd_support(f);
        if (k && f.coeff(*k) < 0)
            return std::optional<std::string>("smallest odd-index coefficient negative");
        return std::optional<std::string>();
    };

    switch (which) {
        case SetName::U1:
            if (f.coeff(0) == 0) return {false, "a0 = 0"};
            if (2 * lambda < d + 3) return {false, "lambda+ below (d+3)/2"};
            if (f.coeff(d - 1) != 1 || f.coeff(d) != 1)
                return {false, "a_{d-1} = a_d = 1 fails"};
            return {true, "member"};
        case SetName::U2: {
            if (auto r = integral()) return {false, *r};
            if (f.coeff(0) <= 0) return {false, "a0 <= 0"};
            if (f.coeff(d) == 0) return {false, "ad = 0"};
            if (2 * lambda < d + 3) return {false, "lambda+ below (d+3)/2"};
            if (lambda > d - 1) return {false, "lambda+ above d-1"};
            if (auto r = dfree_ends()) return {false, *r};
            if (auto r = sign_rule()) return {false, *r};
            return {true, "member"};
        }
        case SetName::V1:
            if (f.coeff(0) == 0) return {false, "a0 = 0"};
            if (2 * lambda < d) return {false, "lambda+ below d/2"};
            if (lambda > d - 6) return {false, "lambda+ above d-6"};
            if (f.coeff(d - 1) != 1 || f.coeff(d) != 1)
                return {false, "a_{d-1} = a_d = 1 fails"};
            if (!zero_run_after_lambda(f, lambda, 4))
                return {false, "four-zero run after lambda+ fails"};
            return {true, "member"};
        case SetName::V2: {
            if (auto r = integral()) return {false, *r};
            if (f.coeff(0) <= 0) return {false, "a0 <= 0"};
            if (f.coeff(d) == 0) return {false, "ad = 0"};
            if (2 * lambda < d) return {false, "lambda+ below d/2"};
            if (lambda > d - 5) return {false, "lambda+ above d-5"};
            if (!zero_run_after_lambda(f, lambda, 4))
                return {false, "four-zero run after lambda+ fails"};
            if (auto r = dfree_ends()) return {false, *r};
            if (auto r = sign_rule()) return {false, *r};
            if (is_balanced_trinomial(f)) return {false, "balanced trinomial excluded"};
            return {true, "member"};
        }
    }
    return {false, "unknown set"};
}

namespace {

std::vector<Homography> homotheties_between(const MonicPolynomial& f, const MonicPolynomial& g) {
    const int d = f.degree();
    int pivot = 0;
    for (int i = 1; i <= d; ++i) {
        if ((f.coeff(i) != 0) != (g.coeff(i) != 0)) return {};
        if (pivot == 0 && f.coeff(i) != 0) pivot = i;
    }
    if (pivot == 0) return {};
    std::vector<Homography> out;
    for (const Rat& q : rational_nth_roots(g.coeff(pivot) / f.coeff(pivot),
                                           static_cast<unsigned long>(pivot))) {
        Homography h = Homography::affine(q, Rat(0));
        if (apply(h, f) == g) out.push_back(h);
    }
    return out;
}

std::vector<Homography> inversions_between(const MonicPolynomial& f, const MonicPolynomial& g) {
    const int d = f.degree();
    if (f.coeff(d) == 0 || g.coeff(d) == 0) return {};
    std::vector<Homography> out;
    for (const Rat& r : rational_nth_roots(f.coeff(d) * g.coeff(d),
                                           static_cast<unsigned long>(d))) {
        Homography h = Homography::non_affine(Rat(0), r, Rat(0));
        if (apply(h, f) == g) out.push_back(h);
    }
    return out;
}

bool trinomial_shape(const MonicPolynomial& f, int lambda) {
    for (int i = 1; i <= f.degree(); ++i)
        if (i != lambda && i != f.degree() && f.coeff(i) != 0) return false;
    return true;
}

}  // namespace

PairClassification classify_pair_homographies(const MonicPolynomial& f, const MonicPolynomial& g) {
    PairClassification res;
    const int d = f.degree();
    if (g.degree() != d) {
        res.reason = "degrees differ";
        return res;
    }
    if (f.discriminant() == 0 || g.discriminant() == 0) {
        res.reason = "zero discriminant";
        return res;
    }
    const int lam = f.lambda_plus();
    const int lam2 = g.lambda_plus();

    auto zero_run = [](const MonicPolynomial& p, int lambda) {
        for (int k = lambda + 1; k <= lambda + 4 && k <= p.degree(); ++k)
            if (p.coeff(k) != 0) return false;
        return true;
    };

    bool route724 = d >= 3 && lam + lam2 >= d + 3;
    bool route_central = d >= 10 && lam + lam2 >= d && lam <= d - 5 && lam2 <= d - 5 &&
                         zero_run(f, lam) && zero_run(g, lam2);
    if (!route724 && !route_central) {
        res.reason = "gap hypotheses unmet (need lambda sum >= d+3, or the four-zero-run pattern)";
        return res;
    }
    res.applicable = true;
    res.route = route724 ? "central724" : "central";

    for (auto& h : homotheties_between(f, g)) res.homographies.push_back(h);

    bool inversion_possible;
    if (route724) {
        inversion_possible = lam == d && lam2 == d;  // both pure binomials t^d + alpha_d
    } else {
        inversion_possible = lam + lam2 == d && trinomial_shape(f, lam) && trinomial_shape(g, lam2);
    }
    if (inversion_possible)
        for (auto& h : inversions_between(f, g)) res.homographies.push_back(h);
    return res;
}

Certificate check_theorem(const FormSet& s, int which) {
    s.validate();
    Certificate c;
    c.route = which == 486 ? Route::Theorem486 : Route::Theorem527;
    if (which != 486 && which != 527) throw DomainError("check theorem: which must be 486 or 527");
    const int d = s.degree;
    if (which == 486 && d < 3) {
        c.detail = "requires d >= 3";
        return c;
    }
    if (which == 527 && d < 11) {
        c.detail = "requires d >= 11";
        return c;
    }
    for (const auto& f : s.members)
        if (discriminant(f) == 0) {
            c.detail = "member with zero discriminant";
            return c;
        }
    for (const auto& f : s.members) {
        int lambda = lambda_gap(f, GapSide::Plus);
        if (which == 486) {
            if (2 * lambda < d + 3) {
                c.detail = "lambda+ >= (d+3)/2 fails";
                return c;
            }
        } else {
            if (2 * lambda < d) {
                c.detail = "lambda+ >= d/2 fails";
                return c;
            }
            if (lambda > d - 4) {
                c.detail = "lambda+ <= d-4 fails";
                return c;
            }
            if (!zero_run_after_lambda(f, lambda, 4)) {
                c.detail = "four-zero run after lambda+ fails";
                return c;
            }
            if (d % 2 == 0 && is_balanced_trinomial(f)) {
                c.detail = "balanced trinomial present";
                return c;
            }
        }
    }
    Certificate red = is_reduced(s);
    if (red.verdict != Verdict::Certified) {
        c.detail = "set not reduced: " + red.detail;
        return c;
    }
    c.verdict = Verdict::Certified;
    c.detail = which == 486 ? "theorem 486 hypotheses hold" : "theorem 527 hypotheses hold";
    return c;
}

Certificate homography_free(const FormSet& s, size_t budget_pairs, const IsomOptions& opts) {
    s.validate();
    Certificate c;
    c.route = Route::RootSearch;
    if (s.members.size() < 2) {
        c.verdict = Verdict::Certified;
        c.detail = "fewer than two members";
        return c;
    }

    Certificate dil = is_dilation_free(s);
    if (dil.verdict == Verdict::Refuted && dil.dilation_witness) {
        const auto& w = *dil.dilation_witness;
        c.verdict = Verdict::Refuted;
        c.detail = "dilation witness";
        c.dilation_witness = w;
        c.pair = {w.i, w.j};
        c.map_witness = IsomorphismCertificate{ProjectiveMap(w.u, Rat(0), Rat(0), w.v), Rat(1)};
        return c;
    }

    for (int which : {486, 527}) {
        Certificate th = check_theorem(s, which);
        if (th.verdict == Verdict::Certified) return th;
    }

    size_t used = 0;
    for (size_t i = 0; i < s.members.size(); ++i)
        for (size_t j = i + 1; j < s.members.size(); ++j) {
            if (used++ >= budget_pairs) {
                c.verdict = Verdict::Inconclusive;
                c.detail = "pair budget exhausted";
                return c;
            }
            try {
                auto certs = isomorphisms(s.members[i], s.members[j], false, opts);
                if (!certs.empty()) {
                    c.verdict = Verdict::Refuted;
                    c.detail = "isomorphism witness";
                    c.map_witness = certs[0];
                    c.pair = {i, j};
                    return c;
                }
            } catch (const InconclusiveError& e) {
                c.verdict = Verdict::Inconclusive;
                c.detail = e.what();
                return c;
            }
        }
    c.verdict = Verdict::Certified;
    c.detail = "root search found no isomorphism on any pair";
    return c;
}

}  // namespace fewform
