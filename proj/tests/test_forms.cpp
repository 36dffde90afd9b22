#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "fewform/forms.hpp"

using namespace fewform;

namespace {

std::mt19937 rng(771230);

BinaryForm degree10_fixture() {
    std::vector<Rat> c(11, Rat(0));
    c[0] = Rat(Int("-34359738368"));
    c[6] = Rat(Int("49565859840"));
    c[7] = Rat(Int("-74095902720"));
    c[8] = Rat(Int("42402890880"));
    c[9] = Rat(Int("-10956131760"));
    c[10] = Rat(Int("1074852609"));
    return BinaryForm(10, c);
}

BinaryForm random_form(int d, int bound) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    do {
        c[0] = Rat(coeff(rng));
    } while (c[0] == 0);
    for (size_t i = 1; i < c.size(); ++i) c[i] = Rat(coeff(rng));
    return BinaryForm(d, std::move(c));
}

}  // namespace

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(BinaryForm(2, {Rat(1), Rat(1)}), DomainError);
    CHECK_THROWS_AS(BinaryForm(2, {Rat(0), Rat(0), Rat(0)}), DomainError);
    CHECK_THROWS_AS(MonicPolynomial(2, {Rat(2), Rat(0), Rat(1)}), DomainError);
}

TEST_CASE("discriminant") {
    CHECK(discriminant(BinaryForm(2, {Rat(1), Rat(3), Rat(2)})) == 1);
    CHECK(discriminant(BinaryForm(3, {Rat(1), Rat(0), Rat(0), Rat(1)})) == -27);
    CHECK(discriminant(degree10_fixture()) != 0);
    CHECK_THROWS_AS(discriminant(BinaryForm(1, {Rat(1), Rat(2)})), DomainError);
    // a0 = 0 path: XY(X+Y) has three distinct roots
    CHECK(discriminant(BinaryForm(3, {Rat(0), Rat(1), Rat(1), Rat(0)})) != 0);
    // repeated root: X^2 Y
    CHECK(discriminant(BinaryForm(3, {Rat(0), Rat(1), Rat(0), Rat(0)})) == 0);
}

TEST_CASE("evaluate") {
    BinaryForm cubic(3, {Rat(32), Rat(0), Rat(-30), Rat(11)});
    CHECK(cubic.evaluate(Rat(5), Rat(8)) == 32);
    CHECK(cubic.evaluate(Rat(1), Rat(0)) == 32);
    BinaryForm quartic(4, {Rat(256), Rat(0), Rat(0), Rat(-240), Rat(111)});
    CHECK(quartic.evaluate(Rat(5), Rat(8)) == 256);
    CHECK(quartic.evaluate(Rat(1), Rat(0)) == 256);
}

TEST_CASE("lambda gaps") {
    // trinomial a X^d + X^e Y^(d-e) + Y^d has Lambda+ = d-e
    for (int d = 3; d <= 8; ++d)
        for (int e = 1; e < d; ++e) {
            std::vector<Rat> c(static_cast<size_t>(d) + 1, Rat(0));
            c[0] = Rat(7);
            c[static_cast<size_t>(d - e)] = Rat(1);
            c[static_cast<size_t>(d)] = Rat(1);
            BinaryForm f(d, c);
            CHECK(lambda_gap(f, GapSide::Plus) == d - e);
            CHECK(lambda_gap(f, GapSide::Minus) == e);
        }
    BinaryForm binom(5, {Rat(2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(3)});
    CHECK(lambda_gap(binom, GapSide::Plus) == 5);
    CHECK(lambda_gap(binom, GapSide::Minus) == 5);
    BinaryForm f5(5, {Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(lambda_gap(f5, GapSide::Plus) == 1);
    CHECK_THROWS_AS(lambda_gap(BinaryForm(2, {Rat(0), Rat(1), Rat(1)}), GapSide::Plus),
                    DomainError);
}

TEST_CASE("reciprocal") {
    BinaryForm f(5, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(1), Rat(1)});
    CHECK(f.reciprocal() == BinaryForm(5, {Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}));
    CHECK(f.reciprocal().reciprocal() == f);
    for (int t = 0; t < 20; ++t) {
        BinaryForm g = random_form(3 + t % 5, 9);
        CHECK(g.reciprocal().reciprocal() == g);
        if (g.coeff(0) != 0 && g.coeff(g.degree()) != 0)
            CHECK(lambda_gap(g, GapSide::Minus) == lambda_gap(g.reciprocal(), GapSide::Plus));
    }
}

TEST_CASE("associated polynomial") {
    BinaryForm cubic(3, {Rat(32), Rat(0), Rat(-30), Rat(11)});
    MonicPolynomial f = associated_polynomial(cubic);
    CHECK(f.coeffs() == std::vector<Rat>{Rat(1), Rat(0), Rat(-15, 16), Rat(11, 32)});
    CHECK(associated_polynomial(BinaryForm(3, {Rat(2), Rat(0), Rat(0), Rat(4)})).coeffs() ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(2)});
    CHECK_THROWS_AS(associated_polynomial(BinaryForm(2, {Rat(0), Rat(1), Rat(1)})), DomainError);
    CHECK(f.lambda_plus() == 2);
}

TEST_CASE("fewnomial families") {
    FewnomialFamily fam;
    fam.r = 2;
    fam.blocks[3] = {{Int(2), Int(5), Int(3)}};
    fam.validate();
    BinaryForm f = build_fewnomial(fam, 3, 0);
    CHECK(f == BinaryForm(6, {Rat(2), Rat(0), Rat(0), Rat(5), Rat(0), Rat(0), Rat(3)}));

    FewnomialFamily binoms;
    binoms.r = 1;
    binoms.blocks[5] = {{Int(1), Int(4)}};
    binoms.validate();
    CHECK(build_fewnomial(binoms, 5, 0) ==
          BinaryForm(5, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(4)}));

    FewnomialFamily middle_zero;
    middle_zero.r = 2;
    middle_zero.blocks[2] = {{Int(1), Int(0), Int(1)}};
    middle_zero.validate();
    CHECK(build_fewnomial(middle_zero, 2, 0) ==
          BinaryForm(4, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}));

    // tuple polynomial with zero discriminant rejected
    FewnomialFamily bad;
    bad.r = 2;
    bad.blocks[2] = {{Int(1), Int(2), Int(1)}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    // k*r < 3 rejected
    FewnomialFamily small;
    small.r = 1;
    small.blocks[2] = {{Int(1), Int(1)}};
    CHECK_THROWS_AS(small.validate(), DomainError);

    // associated polynomial of a built fewnomial matches h(t^k)/a0
    for (int t = 0; t < 10; ++t) {
        std::uniform_int_distribution<int> coeff(-9, 9);
        FewnomialFamily g;
        g.r = 2;
        int a = 0, b = 0, c = 0;
        while (a == 0) a = coeff(rng);
        while (b == 0) b = coeff(rng);
        c = coeff(rng);
        if (c * c == 4 * a * b) continue;
        int k = 2 + t % 3;
        g.blocks[k] = {{Int(a), Int(c), Int(b)}};
        g.validate();
        BinaryForm built = build_fewnomial(g, k, 0);
        MonicPolynomial p = associated_polynomial(built);
        for (int x = -3; x <= 3; ++x) {
            Rat tk = rat_pow(Rat(x), k);
            CHECK(p.evaluate(Rat(x)) == (Rat(a) * tk * tk + Rat(c) * tk + Rat(b)) / Rat(a));
        }
    }
}

TEST_CASE("heights") {
    auto h1 = heights({Int(1), Int(0), Int(1)});
    CHECK(h1.height == 1);
    CHECK(h1.height_star == 2);
    auto h2 = heights({Int(3), Int(-7), Int(2)});
    CHECK(h2.height == 7);
    CHECK(h2.height_star == 7);
    CHECK(family_size_bound(Rat(2), 1) == 25);
}

TEST_CASE("squared arguments") {
    auto h = squared_arguments(BinaryForm(4, {Rat(1), Rat(0), Rat(3), Rat(0), Rat(1)}));
    REQUIRE(h.has_value());
    CHECK(*h == BinaryForm(2, {Rat(1), Rat(3), Rat(1)}));
    CHECK_FALSE(squared_arguments(BinaryForm(4, {Rat(1), Rat(0), Rat(0), Rat(1), Rat(1)})));
    CHECK_FALSE(squared_arguments(BinaryForm(3, {Rat(1), Rat(0), Rat(0), Rat(1)})));
}

TEST_CASE("trinomial discriminants never vanish") {
    for (int d = 3; d <= 12; ++d)
        for (int e = 1; e < d; ++e)
            for (int a = -20; a <= 20; ++a) {
                if (a == 0) continue;
                std::vector<Rat> c(static_cast<size_t>(d) + 1, Rat(0));
                c[0] = Rat(a);
                c[static_cast<size_t>(d - e)] = Rat(1);
                c[static_cast<size_t>(d)] = Rat(1);
                CHECK(discriminant(BinaryForm(d, c)) != 0);
            }
    // the underlying identity a^e = (-1)^d e^e (d-e)^(d-e) / d^d has no
    // integer solution when gcd(e, d) = 1
    for (int d = 3; d <= 12; ++d)
        for (int e = 1; e < d; ++e) {
            if (std::gcd(e, d) != 1) continue;
            Rat rhs = rat_pow(Rat(e), e) * rat_pow(Rat(d - e), d - e) / rat_pow(Rat(d), d);
            if (d % 2 != 0) rhs = -rhs;
            for (int a = -20; a <= 20; ++a) {
                if (a == 0) continue;
                CHECK(rat_pow(Rat(a), e) != rhs);
            }
        }
}

TEST_CASE("discriminant covariance under substitution") {
    // disc(F(uX, vY) style checks via direct coefficient substitution of
    // gamma = (u1,u2;u3,u4): disc(F o gamma) = det(gamma)^(d(d-1)) disc(F)
    std::uniform_int_distribution<int> small(-4, 4);
    for (int t = 0; t < 15; ++t) {
        int d = 2 + t % 4;
        BinaryForm f = random_form(d, 6);
        Rat u1(small(rng)), u2(small(rng)), u3(small(rng)), u4(small(rng));
        if (u1 * u4 - u2 * u3 == 0) continue;
        // substitute by evaluating at d+1 points and interpolating F(t,1)
        std::vector<Rat> cs(static_cast<size_t>(d) + 1, Rat(0));
        // build composed coefficients directly: expand (u1 t + u2)^(d-i) (u3 t + u4)^i
        std::vector<Rat> acc(static_cast<size_t>(d) + 1, Rat(0));
        for (int i = 0; i <= d; ++i) {
            if (f.coeff(i) == 0) continue;
            std::vector<Rat> term{Rat(1)};
            auto mul_lin = [&](const Rat& p, const Rat& q) {
                std::vector<Rat> next(term.size() + 1, Rat(0));
                for (size_t j = 0; j < term.size(); ++j) {
                    next[j] += term[j] * p;
                    next[j + 1] += term[j] * q;
                }
                term = next;
            };
            for (int j = 0; j < d - i; ++j) mul_lin(u1, u2);
            for (int j = 0; j < i; ++j) mul_lin(u3, u4);
            for (size_t j = 0; j < term.size(); ++j) acc[j] += f.coeff(i) * term[j];
        }
        BinaryForm composed(d, acc);
        Rat det = u1 * u4 - u2 * u3;
        CHECK(discriminant(composed) ==
              rat_pow(det, static_cast<long>(d) * (d - 1)) * discriminant(f));
    }
}
