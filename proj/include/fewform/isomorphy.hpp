#pragma once

#include <array>

#include "fewform/homography.hpp"
#include "fewform/roots.hpp"

namespace fewform {

/// Projective point with high-precision homogeneous coordinates (x : t).
struct PPoint {
    HPComplex x, t;
};

struct IsomorphismCertificate {
    ProjectiveMap gamma;  // exact; F o gamma = nu * G
    Rat nu;
};

enum class AutClass { Id, PlusMinusId, D2, Other };

struct AutGroup {
    std::vector<ProjectiveMap> elements;  // every element satisfies F o g = F exactly
    AutClass classification = AutClass::Id;
};

struct IsomOptions {
    long precision_bits = 128;
    long max_precision_bits = 1024;
    Int denom_cap = Int("1000000000000");
};

// The projective map sending src[i] to dst[i], as a complex 2x2 matrix
// (row-major, up to scalar). Points within each triple must be distinct.
std::array<HPComplex, 4> map_from_three_pairs(const std::array<PPoint, 3>& src,
                                              const std::array<PPoint, 3>& dst);

// All exact rational gamma with F o gamma = G (allow_scalar = false) or
// F o gamma = nu G for some rational nu (true). Triple search over numeric
// root sets, continued-fraction rationalization, exact verification gate.
// Deterministic output, sorted by matrix entries.
std::vector<IsomorphismCertificate> isomorphisms(const BinaryForm& f, const BinaryForm& g,
                                                 bool allow_scalar,
                                                 const IsomOptions& opts = {});

AutGroup automorphism_group(const BinaryForm& f, const IsomOptions& opts = {});

// W_F = 1, 1/2, 1/4 for classifications Id, {+-Id}, D2.
Rat w_constant(const AutGroup& aut);
Rat w_constant(const BinaryForm& f, const IsomOptions& opts = {});

bool is_rigid(const BinaryForm& f, const IsomOptions& opts = {});

}  // namespace fewform
