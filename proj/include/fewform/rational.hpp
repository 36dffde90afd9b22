#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fewform {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an operation's precondition is violated (CLI exit code 1).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a search exhausts its budget without a verdict (CLI exit code 2).
struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p", "p/q" or a decimal-free integer string into an exact rational.
Rat parse_rational(const std::string& s);

// Canonical "p" or "p/q" rendering.
std::string rat_to_string(const Rat& x);

Rat rat_pow(const Rat& base, long exp);
Int int_pow(const Int& base, unsigned long exp);

// Exact n-th root of an integer, if it exists (sign-aware: negative inputs
// admit odd roots only).
std::optional<Int> exact_nth_root(const Int& x, unsigned long n);

// Exact n-th root of a rational, if one exists in Q.
std::optional<Rat> exact_nth_root(const Rat& x, unsigned long n);

// All rational solutions u of u^n = x (zero, one, or two of them).
std::vector<Rat> rational_nth_roots(const Rat& x, unsigned long n);

// Prime factorization of |n| as (prime, exponent) pairs, n != 0.
// Trial division below 10^6, then deterministic Miller-Rabin with Pollard rho.
std::vector<std::pair<Int, unsigned>> factor(Int n);

bool is_probable_prime(const Int& n);

// True iff no prime power p^k divides num(x)*den(x); x nonzero, k >= 2.
bool is_k_free(const Rat& x, unsigned long k);

double to_double(const Rat& x);

}  // namespace fewform
