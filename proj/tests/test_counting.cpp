#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "fewform/counting.hpp"

using namespace fewform;

namespace {

BinaryForm form(int d, std::vector<Rat> c) { return BinaryForm(d, std::move(c)); }

FewnomialFamily quartic_family() {
    FewnomialFamily fam;
    fam.r = 1;
    fam.blocks[4] = {{Int(1), Int(1)}};
    return fam;
}

}  // namespace

TEST_CASE("representations of X^4 + Y^4 up to 100") {
    BinaryForm f = form(4, {1, 0, 0, 0, 1});
    auto reps = representations_in_region(f, 100);
    std::set<Rat> ms;
    for (const auto& t : reps) {
        CHECK(std::max(std::llabs(t.x), std::llabs(t.y)) >= 2);
        CHECK(t.m == f.evaluate(Rat(static_cast<long>(t.x)), Rat(static_cast<long>(t.y))));
        ms.insert(t.m);
    }
    std::set<Rat> want = {Rat(16), Rat(17), Rat(32), Rat(81), Rat(82), Rat(97)};
    CHECK(ms == want);
    // same answer when the box is truncated explicitly
    auto capped = representations_in_region(f, 100, 10);
    CHECK(capped.size() == reps.size());
}

TEST_CASE("indefinite forms require a cap") {
    BinaryForm f = form(3, {1, 0, 0, 2});
    CHECK_THROWS_AS(representations_in_region(f, 50), DomainError);
    auto reps = representations_in_region(f, 50, 6);
    // brute force over the same box
    long long brute = 0;
    for (long x = -6; x <= 6; ++x)
        for (long y = -6; y <= 6; ++y) {
            if (std::max(std::llabs(x), std::llabs(y)) < 2) continue;
            Rat m = f.evaluate(Rat(x), Rat(y));
            if (m <= 50 && -m <= 50) ++brute;
        }
    CHECK(static_cast<long long>(reps.size()) == brute);
}

TEST_CASE("prescreen agrees with exact brute force on random forms") {
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<int> deg(3, 6), coeff(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        int d = deg(rng);
        std::vector<Rat> c(static_cast<size_t>(d) + 1);
        for (auto& v : c) v = Rat(coeff(rng));
        BinaryForm f(d, c);
        if (d >= 2 && discriminant(f) == 0) continue;
        Int n = 500 + trial * 37;
        auto reps = representations_in_region(f, n, 15);
        std::set<std::pair<long long, long long>> got;
        for (const auto& t : reps) got.emplace(t.x, t.y);
        std::set<std::pair<long long, long long>> want;
        for (long x = -15; x <= 15; ++x)
            for (long y = -15; y <= 15; ++y) {
                if (std::max(std::llabs(x), std::llabs(y)) < 2) continue;
                Rat m = f.evaluate(Rat(x), Rat(y));
                if (m <= n && -m <= n) want.emplace(x, y);
            }
        CHECK(got == want);
    }
}

TEST_CASE("r_count and g_set for the X^4 + Y^4 family") {
    FewnomialFamily fam = quartic_family();
    CountReport rep = r_count(fam, 4, 100);
    CHECK(rep.count == 6);
    CHECK(rep.n == 100);
    CHECK(rep.error_exponent == doctest::Approx(theta_d(4)));

    auto g17 = g_set(fam, 4, 17);
    CHECK(g17.size() == 8);
    for (const auto& t : g17) CHECK(t.m == 17);

    CHECK(g_set(fam, 4, 2).empty());  // only (+-1, +-1), below the max >= 2 floor
    CHECK_THROWS_AS(g_set(fam, 4, 1), DomainError);
    CHECK_THROWS_AS(g_set(fam, 4, 0), DomainError);
    CHECK(g_set(fam, 4, -17).size() == 0);  // F is positive definite

    // counts are monotone in N
    CHECK(r_count(fam, 4, 50).count <= rep.count);
    CHECK(rep.count <= r_count(fam, 4, 200).count);
}

TEST_CASE("area of the quartic lemniscate-like region matches elliptic K") {
    BinaryForm f = form(4, {1, 0, 0, 0, 1});
    double a = area_AF(f, 1e-8);
    double want = 2.0 * std::comp_ellint_1(1.0 / std::sqrt(2.0));
    CHECK(a == doctest::Approx(want).epsilon(1e-8));
    // scaling law: area(cF) = c^(-2/d) area(F)
    BinaryForm g = form(4, {16, 0, 0, 0, 16});
    CHECK(area_AF(g, 1e-8) == doctest::Approx(a / 4.0).epsilon(1e-8));
}

TEST_CASE("area with angular zeros: X^3 + Y^3 against a 1-d slicing oracle") {
    BinaryForm f = form(3, {1, 0, 0, 1});
    double a = area_AF(f, 1e-7);
    // |x^3 + y^3| <= 1 sliced along x, tail ~ 2/(3x^2)
    auto len = [](double x) { return std::cbrt(1.0 + x * x * x) + std::cbrt(1.0 - x * x * x); };
    const double T = 50.0;
    const int panels = 400000;
    double h = T / panels, I = len(0.0) + len(T);
    for (int i = 1; i < panels; ++i) I += (i % 2 ? 4.0 : 2.0) * len(i * h);
    I *= h / 3.0;
    double want = 2.0 * (I + 2.0 / (3.0 * T));
    CHECK(a == doctest::Approx(want).epsilon(2e-3));
    // tightening the tolerance should not move the answer
    CHECK(area_AF(f, 1e-5) == doctest::Approx(a).epsilon(1e-4));
}

TEST_CASE("monte carlo area agrees with quadrature for definite forms") {
    BinaryForm f = form(4, {1, 0, 0, 0, 1});
    double mc = mc_area(f, 4000000, 42);
    CHECK(mc == doctest::Approx(area_AF(f, 1e-8)).epsilon(0.01));
    CHECK_THROWS_AS(mc_area(form(3, {1, 0, 0, 1}), 1000, 1), DomainError);
}

TEST_CASE("C_F halves the area for a +-Id stabilizer") {
    BinaryForm f = form(4, {1, 1, 0, 0, 2});
    double a = area_AF(f, 1e-8);
    CHECK(c_constant(f, 1e-8) == doctest::Approx(a / 2.0).epsilon(1e-10));
}

TEST_CASE("theta_d branches") {
    double s3 = std::sqrt(3.0);
    CHECK(theta_d(3) == doctest::Approx((24.0 * s3 + 73.0) / (60.0 * s3 + 73.0)));
    CHECK(theta_d(4) == doctest::Approx(13.0 / 29.0));
    CHECK(theta_d(20) == doctest::Approx((2.0 * std::sqrt(20.0) + 9.0) /
                                         (80.0 * std::sqrt(20.0) - 6.0 * std::sqrt(20.0) + 9.0)));
    CHECK(theta_d(21) == doctest::Approx(1.0 / 20.0));
    CHECK(theta_d(50) == doctest::Approx(1.0 / 49.0));
    CHECK_THROWS_AS(theta_d(2), DomainError);
}

TEST_CASE("d_dagger walks the family degrees") {
    FewnomialFamily fam;
    fam.r = 2;
    fam.blocks[2] = {{Int(1), Int(0), Int(1)}};
    fam.blocks[3] = {{Int(1), Int(1), Int(1)}};
    auto next = d_dagger(fam, 4);
    REQUIRE(next.has_value());
    CHECK(*next == 6);
    CHECK(!d_dagger(fam, 6).has_value());
    CHECK(*d_dagger(fam, 3) == 4);
}

TEST_CASE("asymptotic table for a definite quartic with +-Id stabilizer") {
    // X^4 + X^3 Y + 2 Y^4 as the single member of an r = 4 family
    FewnomialFamily fam;
    fam.r = 4;
    fam.blocks[1] = {{Int(1), Int(1), Int(0), Int(0), Int(2)}};
    std::vector<Int> ns = {Int(100), Int(10000)};
    auto table = asymptotic_table(fam, 4, ns, 0.01);
    REQUIRE(table.size() == 2);
    CHECK(table[0].count <= table[1].count);
    double cf = c_constant(BinaryForm(4, {1, 1, 0, 0, 2}), 1e-8);
    for (size_t i = 0; i < table.size(); ++i) {
        const auto& rep = table[i];
        CHECK(rep.predicted == doctest::Approx(cf * std::sqrt(ns[i].get_d())).epsilon(1e-6));
        CHECK(rep.error_exponent == doctest::Approx(theta_d(4) + 0.01));
        CHECK(rep.ratio == doctest::Approx(rep.count / rep.predicted));
        CHECK(rep.ratio > 0.0);
    }
}

TEST_CASE("w_constant refuses the order-8 stabilizer of X^4 + Y^4") {
    CHECK_THROWS_AS(c_constant(form(4, {1, 0, 0, 0, 1}), 1e-6), DomainError);
}
