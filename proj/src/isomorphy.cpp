#include "fewform/isomorphy.hpp"

#include <algorithm>
#include <cmath>

namespace fewform {

namespace {

HPComplex line_at(const PPoint& through, const PPoint& p) {
    // The linear form vanishing at `through`, evaluated at p.
    return hp_sub(hp_mul(p.x, through.t), hp_mul(through.x, p.t));
}

PPoint root_point(const ProjectiveRoot& r, long prec) {
    if (r.at_infinity)
        return {{mpf_class(1, prec), mpf_class(0, prec)}, {mpf_class(0, prec), mpf_class(0, prec)}};
    return {r.value, {mpf_class(1, prec), mpf_class(0, prec)}};
}

std::array<HPComplex, 4> to_standard(const std::array<PPoint, 3>& p) {
    // Matrix sending (p1, p2, p3) to ((0:1), (1:1), (1:0)).
    HPComplex l3p2 = line_at(p[2], p[1]);
    HPComplex l1p2 = line_at(p[0], p[1]);
    return {hp_mul(l3p2, p[0].t), hp_mul(l3p2, HPComplex{-p[0].x.re, -p[0].x.im}),
            hp_mul(l1p2, p[2].t), hp_mul(l1p2, HPComplex{-p[2].x.re, -p[2].x.im})};
}

struct MatrixKey {
    std::vector<Rat> entries;
    bool operator<(const MatrixKey& o) const { return entries < o.entries; }
    bool operator==(const MatrixKey& o) const { return entries == o.entries; }
};

MatrixKey key_of(const ProjectiveMap& m) { return MatrixKey{{m.u1, m.u2, m.u3, m.u4}}; }

// Scale to a primitive integer matrix with positive first nonzero entry.
ProjectiveMap canonicalize_map(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    Int l = lcm(lcm(Int(a.get_den()), Int(b.get_den())),
                lcm(Int(c.get_den()), Int(d.get_den())));
    Int na = Int(a * Rat(l)), nb = Int(b * Rat(l)), nc = Int(c * Rat(l)), nd = Int(d * Rat(l));
    Int g = gcd(gcd(na, nb), gcd(nc, nd));
    if (g == 0) throw DomainError("degenerate candidate matrix");
    na /= g; nb /= g; nc /= g; nd /= g;
    Int first = na != 0 ? na : nb != 0 ? nb : nc != 0 ? nc : nd;
    if (first < 0) { na = -na; nb = -nb; nc = -nc; nd = -nd; }
    return ProjectiveMap(Rat(na), Rat(nb), Rat(nc), Rat(nd));
}

std::optional<Rat> exact_scalar(const BinaryForm& composed, const BinaryForm& g) {
    int i0 = 0;
    while (g.coeff(i0) == 0) ++i0;
    if (composed.coeff(i0) == 0) return std::nullopt;
    Rat nu = composed.coeff(i0) / g.coeff(i0);
    for (int i = 0; i <= g.degree(); ++i)
        if (composed.coeff(i) != nu * g.coeff(i)) return std::nullopt;
    return nu;
}

std::vector<IsomorphismCertificate> isomorphisms_at(const BinaryForm& f, const BinaryForm& g,
                                                    bool allow_scalar, long prec,
                                                    const Int& denom_cap, bool& separated) {
    const int d = f.degree();
    RootSet zf = projective_roots(f, prec);
    RootSet zg = projective_roots(g, prec);
    double min_sep = std::min(zf.separation, zg.separation);
    separated = min_sep > 1e-9;
    if (!separated) return {};
    double match_tol = std::min(1e-7, min_sep / 4);

    std::array<PPoint, 3> src{root_point(zf.roots[0], prec), root_point(zf.roots[1], prec),
                              root_point(zf.roots[2], prec)};
    std::array<HPComplex, 4> m_src = to_standard(src);

    std::vector<std::pair<std::complex<double>, std::complex<double>>> zg_norm;
    for (const auto& r : zg.roots) zg_norm.push_back(r.normalized());

    mpf_class rat_tol(1, prec);
    mpf_div_2exp(rat_tol.get_mpf_t(), rat_tol.get_mpf_t(), static_cast<unsigned long>(prec / 3));

    std::vector<IsomorphismCertificate> out;
    std::vector<MatrixKey> seen;
    auto emit = [&](const ProjectiveMap& gamma) {
        BinaryForm composed = act_on_form(f, gamma);
        auto nu = exact_scalar(composed, g);
        if (!nu) return;
        if (allow_scalar) {
            MatrixKey k = key_of(gamma);
            if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
                seen.push_back(k);
                out.push_back({gamma, *nu});
            }
            return;
        }
        // rescale gamma -> c*gamma so that the scalar becomes exactly 1
        for (const Rat& c : rational_nth_roots(1 / *nu, static_cast<unsigned long>(d))) {
            ProjectiveMap scaled(gamma.u1 * c, gamma.u2 * c, gamma.u3 * c, gamma.u4 * c);
            MatrixKey k = key_of(scaled);
            if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
                seen.push_back(k);
                out.push_back({scaled, Rat(1)});
            }
        }
    };

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            for (int k = 0; k < d; ++k) {
                if (k == i || k == j) continue;
                std::array<PPoint, 3> dst{root_point(zg.roots[static_cast<size_t>(i)], prec),
                                          root_point(zg.roots[static_cast<size_t>(j)], prec),
                                          root_point(zg.roots[static_cast<size_t>(k)], prec)};
                std::array<HPComplex, 4> m_dst = to_standard(dst);
                // M = adj(m_dst) * m_src maps Z(f) onto Z(g) candidates
                std::array<HPComplex, 4> adj{m_dst[3], HPComplex{-m_dst[1].re, -m_dst[1].im},
                                             HPComplex{-m_dst[2].re, -m_dst[2].im}, m_dst[0]};
                std::array<HPComplex, 4> m{
                    hp_add(hp_mul(adj[0], m_src[0]), hp_mul(adj[1], m_src[2])),
                    hp_add(hp_mul(adj[0], m_src[1]), hp_mul(adj[1], m_src[3])),
                    hp_add(hp_mul(adj[2], m_src[0]), hp_mul(adj[3], m_src[2])),
                    hp_add(hp_mul(adj[2], m_src[1]), hp_mul(adj[3], m_src[3]))};

                // whole-root-set filter: every root of f must land on Z(g)
                bool all_match = true;
                for (const auto& r : zf.roots) {
                    auto n = r.normalized();
                    std::complex<double> ix = m[0].to_double() * n.first + m[1].to_double() * n.second;
                    std::complex<double> it = m[2].to_double() * n.first + m[3].to_double() * n.second;
                    double mag = std::max(std::abs(ix), std::abs(it));
                    if (!(mag > 0)) { all_match = false; break; }
                    std::pair<std::complex<double>, std::complex<double>> img;
                    if (std::abs(ix) >= std::abs(it)) img = {ix / std::abs(ix), it / std::abs(ix)};
                    else img = {ix / std::abs(it), it / std::abs(it)};
                    bool found = false;
                    for (const auto& q : zg_norm)
                        if (chordal_distance(img, q) < match_tol) { found = true; break; }
                    if (!found) { all_match = false; break; }
                }
                if (!all_match) continue;

                // gamma maps Z(g) back to Z(f): gamma = adj(M), normalized by
                // its largest entry, which must come out (close to) rational
                std::array<HPComplex, 4> cand{m[3], HPComplex{-m[1].re, -m[1].im},
                                              HPComplex{-m[2].re, -m[2].im}, m[0]};
                int big = 0;
                for (int e = 1; e < 4; ++e)
                    if (hp_norm(cand[static_cast<size_t>(e)]) > hp_norm(cand[static_cast<size_t>(big)])) big = e;
                if (hp_norm(cand[static_cast<size_t>(big)]) == 0) continue;
                std::array<Rat, 4> entries;
                bool ok = true;
                for (int e = 0; e < 4; ++e) {
                    HPComplex v = hp_div(cand[static_cast<size_t>(e)], cand[static_cast<size_t>(big)]);
                    if (abs(v.im) > rat_tol) { ok = false; break; }
                    auto r = rationalize(v.re, denom_cap, rat_tol);
                    if (!r) { ok = false; break; }
                    entries[static_cast<size_t>(e)] = *r;
                }
                if (!ok) continue;
                if (entries[0] * entries[3] - entries[1] * entries[2] == 0) continue;
                try {
                    emit(canonicalize_map(entries[0], entries[1], entries[2], entries[3]));
                } catch (const DomainError&) {
                }
            }
        }
    std::sort(out.begin(), out.end(), [](const IsomorphismCertificate& a,
                                         const IsomorphismCertificate& b) {
        return key_of(a.gamma) < key_of(b.gamma);
    });
    return out;
}

}  // namespace

std::array<HPComplex, 4> map_from_three_pairs(const std::array<PPoint, 3>& src,
                                              const std::array<PPoint, 3>& dst) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (hp_norm(line_at(src[static_cast<size_t>(i)], src[static_cast<size_t>(j)])) == 0)
                throw DomainError("map from three pairs: coincident source points");
            if (hp_norm(line_at(dst[static_cast<size_t>(i)], dst[static_cast<size_t>(j)])) == 0)
                throw DomainError("map from three pairs: coincident target points");
        }
    std::array<HPComplex, 4> a = to_standard(src);
    std::array<HPComplex, 4> b = to_standard(dst);
    std::array<HPComplex, 4> adj{b[3], HPComplex{-b[1].re, -b[1].im},
                                 HPComplex{-b[2].re, -b[2].im}, b[0]};
    return {hp_add(hp_mul(adj[0], a[0]), hp_mul(adj[1], a[2])),
            hp_add(hp_mul(adj[0], a[1]), hp_mul(adj[1], a[3])),
            hp_add(hp_mul(adj[2], a[0]), hp_mul(adj[3], a[2])),
            hp_add(hp_mul(adj[2], a[1]), hp_mul(adj[3], a[3]))};
}

std::vector<IsomorphismCertificate> isomorphisms(const BinaryForm& f, const BinaryForm& g,
                                                 bool allow_scalar, const IsomOptions& opts) {
    if (f.degree() != g.degree()) throw DomainError("isomorphisms: degrees differ");
    if (f.degree() < 3) throw DomainError("isomorphisms: degree must be >= 3");
    if (discriminant(f) == 0 || discriminant(g) == 0)
        throw DomainError("isomorphisms: zero discriminant");
    for (long prec = opts.precision_bits; prec <= opts.max_precision_bits; prec *= 2) {
        bool separated = false;
        auto out = isomorphisms_at(f, g, allow_scalar, prec, opts.denom_cap, separated);
        if (separated) return out;
    }
    throw InconclusiveError("isomorphisms: root separation not achieved at max precision");
}

AutGroup automorphism_group(const BinaryForm& f, const IsomOptions& opts) {
    const int d = f.degree();
    auto certs = isomorphisms(f, f, true, opts);
    AutGroup aut;
    std::vector<MatrixKey> seen;
    auto add = [&](const ProjectiveMap& m) {
        MatrixKey k = key_of(m);
        if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
            seen.push_back(k);
            aut.elements.push_back(m);
        }
    };
    for (const auto& cert : certs) {
        for (const Rat& c : rational_nth_roots(1 / cert.nu, static_cast<unsigned long>(d)))
            add(ProjectiveMap(cert.gamma.u1 * c, cert.gamma.u2 * c, cert.gamma.u3 * c,
                              cert.gamma.u4 * c));
    }
    std::sort(aut.elements.begin(), aut.elements.end(),
              [](const ProjectiveMap& a, const ProjectiveMap& b) { return key_of(a) < key_of(b); });

    const ProjectiveMap id(Rat(1), Rat(0), Rat(0), Rat(1));
    const ProjectiveMap neg_id(Rat(-1), Rat(0), Rat(0), Rat(-1));
    auto contains = [&](const ProjectiveMap& m) {
        return std::find(aut.elements.begin(), aut.elements.end(), m) != aut.elements.end();
    };
    size_t n = aut.elements.size();
    bool involutions_only = true;
    for (const auto& m : aut.elements)
        if (!(m.compose(m) == id)) involutions_only = false;
    if (n == 1 && contains(id)) {
        aut.classification = AutClass::Id;
    } else if (n == 2 && contains(id) && contains(neg_id)) {
        aut.classification = AutClass::PlusMinusId;
    } else if (n == 4 && contains(id) && contains(neg_id) && involutions_only) {
        aut.classification = AutClass::D2;
    } else {
        aut.classification = AutClass::Other;
    }
    return aut;
}

Rat w_constant(const AutGroup& aut) {
    switch (aut.classification) {
        case AutClass::Id: return Rat(1);
        case AutClass::PlusMinusId: return Rat(1, 2);
        case AutClass::D2: return Rat(1, 4);
        default: throw DomainError("W_F outside supported table (automorphism group too rich)");
    }
}

Rat w_constant(const BinaryForm& f, const IsomOptions& opts) {
    return w_constant(automorphism_group(f, opts));
}

bool is_rigid(const BinaryForm& f, const IsomOptions& opts) {
    AutGroup aut = automorphism_group(f, opts);
    if (squared_arguments(f)) return aut.classification == AutClass::D2;
    if (f.degree() % 2 == 0) return aut.classification == AutClass::PlusMinusId;
    return aut.classification == AutClass::Id;
}

}  // namespace fewform
