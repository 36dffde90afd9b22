#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fewform/forms.hpp"
#include "fewform/homography.hpp"
#include "fewform/isomorphy.hpp"

namespace fewform {

/// Finite set of degree-d forms with pairwise-distinct coefficient vectors.
struct FormSet {
    int degree = 0;
    std::vector<BinaryForm> members;

    void validate() const;
};

enum class Verdict { Certified, Refuted, Inconclusive };
enum class Route { Theorem486, Theorem527, RootSearch };

struct DilationWitness {
    size_t i = 0, j = 0;  // member indices, F_i(uX, vY) = F_j
    Rat u, v;
};

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    Route route = Route::RootSearch;
    std::string detail;  // failed clause or refutation note
    std::optional<DilationWitness> dilation_witness;
    std::optional<IsomorphismCertificate> map_witness;  // F_i o gamma = F_j
    std::optional<std::pair<size_t, size_t>> pair;
};

// All rational (u, v) with F(uX, vY) = G(X, Y). Requires equal degrees and
// a0 b0 != 0, plus a nonzero lower coefficient to pin v.
std::vector<std::pair<Rat, Rat>> dilation_solutions(const BinaryForm& f, const BinaryForm& g);

Certificate is_dilation_free(const FormSet& s);

// The three clauses of a reduced set: a0 ad != 0 throughout, dilation-free,
// and at most one binomial (two distinct binomials are always antidiagonally
// linked over C).
Certificate is_reduced(const FormSet& s);

enum class SetName { U1, U2, V1, V2 };

struct MembershipResult {
    bool member = false;
    std::string reason;  // first violated clause, or "member"
};

MembershipResult membership(const BinaryForm& f, SetName which);

struct PairClassification {
    bool applicable = false;
    std::string route;   // "central724" or "central"
    std::string reason;  // why refused, when not applicable
    std::vector<Homography> homographies;  // complete list when applicable
};

// Complete list of homographies h with h(f) = g under the hypotheses of the
// gap propositions: lambda+(f) + lambda+(g) >= d+3, or the four-zero-run
// pattern with lambda + lambda' >= d. Only homotheties and inversions
// h_{0,r,0} can occur; both are solved coefficientwise.
PairClassification classify_pair_homographies(const MonicPolynomial& f, const MonicPolynomial& g);

// which = 486 or 527; certified implies s is homography-free. A failed
// hypothesis yields inconclusive, never refuted.
Certificate check_theorem(const FormSet& s, int which);

// Theorem fast paths, then pairwise root search within budget_pairs.
Certificate homography_free(const FormSet& s, size_t budget_pairs = 1000,
                            const IsomOptions& opts = {});

}  // namespace fewform
