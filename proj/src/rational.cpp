#include "fewform/rational.hpp"

#include <algorithm>
#include <cstdlib>

namespace fewform {

Rat parse_rational(const std::string& s) {
    std::string t = s;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    Rat x;
    if (x.set_str(t, 10) != 0)
        throw DomainError("cannot parse rational: '" + s + "'");
    if (x.get_den() == 0)
        throw DomainError("zero denominator in rational: '" + s + "'");
    x.canonicalize();
    return x;
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    if (exp < 0) {
        if (base == 0) throw DomainError("zero to a negative power");
        Rat inv = Rat(base.get_den()) / Rat(base.get_num());
        return rat_pow(inv, -exp);
    }
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
    r.canonicalize();
    return r;
}

std::optional<Int> exact_nth_root(const Int& x, unsigned long n) {
    if (n == 0) throw DomainError("zeroth root");
    if (x < 0 && n % 2 == 0) return std::nullopt;
    Int ax = abs(x);
    Int r;
    int exact = mpz_root(r.get_mpz_t(), ax.get_mpz_t(), n);
    if (!exact) return std::nullopt;
    if (x < 0) r = -r;
    return r;
}

std::optional<Rat> exact_nth_root(const Rat& x, unsigned long n) {
    auto p = exact_nth_root(Int(x.get_num()), n);
    if (!p) return std::nullopt;
    auto q = exact_nth_root(Int(x.get_den()), n);
    if (!q) return std::nullopt;
    return Rat(*p) / Rat(*q);
}

std::vector<Rat> rational_nth_roots(const Rat& x, unsigned long n) {
    std::vector<Rat> out;
    if (x == 0) {
        out.emplace_back(0);
        return out;
    }
    auto r = exact_nth_root(x, n);
    if (r) {
        out.push_back(*r);
        if (n % 2 == 0) out.push_back(-*r);
    } else if (n % 2 == 0 && x > 0) {
        // nothing: even root of positive non-power
    }
    return out;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eedbeefUL);
    while (true) {
        Int x = rng.get_z_range(n - 2) + 2;
        Int y = x;
        Int c = rng.get_z_range(n - 1) + 1;
        Int d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::vector<Int>& primes) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factor(Int n) {
    if (n == 0) throw DomainError("cannot factor zero");
    n = abs(n);
    std::vector<std::pair<Int, unsigned>> out;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= static_cast<unsigned long>(p);
            ++e;
        }
        if (e) out.emplace_back(Int(static_cast<unsigned long>(p)), e);
    }
    for (unsigned long p = 7; p < 1000000ul && Int(p) * p <= n; p += 2) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                n /= p;
                ++e;
            }
            out.emplace_back(Int(p), e);
        }
    }
    if (n > 1) {
        std::vector<Int> primes;
        factor_into(n, primes);
        std::sort(primes.begin(), primes.end());
        for (size_t i = 0; i < primes.size();) {
            size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            out.emplace_back(primes[i], static_cast<unsigned>(j - i));
            i = j;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_k_free(const Rat& x, unsigned long k) {
    if (x == 0) throw DomainError("is_k_free: zero input");
    if (k < 2) throw DomainError("is_k_free: k must be >= 2");
    Int ab = x.get_num() * x.get_den();
    for (const auto& [p, e] : factor(ab))
        if (e >= k) return false;
    return true;
}

double to_double(const Rat& x) { return x.get_d(); }

}  // namespace fewform
