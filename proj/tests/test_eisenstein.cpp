#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "em/eisenstein.hpp"
#include "em/sieve.hpp"

#include <random>
#include <set>

using namespace em;

TEST_CASE("norm values") {
    CHECK(EisensteinInt{0, 0}.norm64() == 0);
    CHECK(EisensteinInt{1, 3}.norm64() == 7);      // 1 - 3 + 9
    CHECK(EisensteinInt{1, -1}.norm64() == 3);     // the ramified prime
    CHECK(kLambda.norm64() == 3);
}

TEST_CASE("norm overflow is reported") {
    EisensteinInt big{std::int64_t(1) << 40, (std::int64_t(1) << 40) - 5};
    CHECK_THROWS_AS(big * big, overflow_error);
}

TEST_CASE("primary associates") {
    auto one = primary_associate({1, 0});
    CHECK(one.unit == EisensteinInt{1, 0});
    CHECK(one.lambda_exp == 0);
    CHECK(one.primary == EisensteinInt{1, 0});

    auto two = primary_associate({2, 0});
    CHECK(two.lambda_exp == 0);
    CHECK(two.primary == EisensteinInt{-2, 0});
    CHECK(two.unit == EisensteinInt{-1, 0});

    auto three = primary_associate({3, 0});
    CHECK(three.lambda_exp == 2);  // 3 = -w^2 lambda^2
    CHECK(three.unit * pow(kLambda, 2) * three.primary == EisensteinInt{3, 0});

    CHECK_THROWS_AS(primary_associate({0, 0}), std::domain_error);
}

TEST_CASE("divmod remainder is small") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> d(-500, 500);
    for (int i = 0; i < 2000; ++i) {
        EisensteinInt a{d(rng), d(rng)}, b{d(rng), d(rng)};
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(4 * r.norm() <= 3 * b.norm());
    }
}

TEST_CASE("factorization examples") {
    auto f1 = factor({1, 0});
    CHECK(f1.factors.empty());
    CHECK(f1.lambda_exp == 0);
    CHECK(f1.unit == EisensteinInt{1, 0});

    auto f7 = factor({7, 0});  // 7 splits
    REQUIRE(f7.factors.size() == 2);
    CHECK(f7.factors[0].first.norm64() == 7);
    CHECK(f7.factors[1].first.norm64() == 7);
    CHECK(f7.recompose() == EisensteinInt{7, 0});

    auto f2 = factor({-2, 0});  // 2 is inert; -2 is its primary associate
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first == EisensteinInt{-2, 0});
    CHECK(f2.factors[0].second == 1);
}

TEST_CASE("unique primary decomposition under refactoring") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> d(-2000, 2000);
    for (int i = 0; i < 10000; ++i) {
        EisensteinInt z{d(rng), d(rng)};
        if (z.is_zero()) continue;
        auto f = factor(z);
        CHECK(f.recompose() == z);
        CHECK(factor(f.recompose()) == f);
    }
}

TEST_CASE("gcd") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> d(-200, 200);
    for (int i = 0; i < 200; ++i) {
        EisensteinInt z{d(rng), d(rng)};
        if (z.is_zero()) continue;
        CHECK(gcd(z, {1, 0}) == EisensteinInt{1, 0});
    }
    // gcd(p, p^2 u) is the primary associate of p
    EisensteinInt p{1, 3};
    auto g = gcd(p * kUnits[4], p * p * kUnits[2]);
    CHECK(g == primary_associate(p).primary);
    // distinct primary primes are coprime
    auto [a7, b7] = split_prime_above(7);
    auto [a13, b13] = split_prime_above(13);
    CHECK(gcd(a7, a13) == EisensteinInt{1, 0});
    CHECK(gcd(a7, b7) == EisensteinInt{1, 0});
    CHECK(gcd(b13, a13) == EisensteinInt{1, 0});
    CHECK_THROWS_AS(gcd({0, 0}, {0, 0}), std::domain_error);
}

TEST_CASE("moebius and sigma") {
    CHECK(moebius({1, 0}) == 1);
    CHECK(sigma_primary({1, 0}) == 1);
    auto [pi, pib] = split_prime_above(13);
    (void)pib;
    CHECK(moebius(pi) == -1);
    CHECK(sigma_primary(pi) == 14);
    CHECK(sigma_primary(pi * pi) == 1 + 13 + 169);
    CHECK(moebius(pi * pi) == 0);
}

TEST_CASE("enumerate_primary box oracle") {
    auto one = enumerate_primary(1.0);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == EisensteinInt{1, 0});

    // X = 7: brute-force coordinate scan
    std::set<std::pair<std::int64_t, std::int64_t>> brute;
    for (std::int64_t a = -5; a <= 5; ++a)
        for (std::int64_t b = -5; b <= 5; ++b) {
            EisensteinInt m{a, b};
            if (m.is_zero() || !is_primary(m)) continue;
            if (m.norm64() <= 7) brute.insert({a, b});
        }
    auto got = enumerate_primary(7.0);
    CHECK(got.size() == brute.size());
    for (const auto& m : got) CHECK(brute.count({m.a, m.b}) == 1);

    // asymptotic density: count/X stabilizes near 2pi/(9 sqrt(3))
    double c1 = double(enumerate_primary(20000.0).size()) / 20000.0;
    double c2 = double(enumerate_primary(80000.0).size()) / 80000.0;
    CHECK(std::abs(c1 - c2) < 0.01);
    CHECK(std::abs(c2 - 0.40307) < 0.005);
}

TEST_CASE("enumerate_family") {
    CHECK(enumerate_family(1.0).empty());  // q = 1 excluded
    // Q = 100: brute-force scan with the three membership tests
    std::set<std::pair<std::int64_t, std::int64_t>> brute;
    for (std::int64_t a = -20; a <= 20; ++a)
        for (std::int64_t b = -20; b <= 20; ++b) {
            EisensteinInt q{a, b};
            if (q.is_zero()) continue;
            if (((a - 1) % 9 + 9) % 9 != 0 || (b % 9 + 9) % 9 != 0) continue;
            auto n = q.norm64();
            if (n <= 1 || n > 100) continue;
            if (moebius(q) == 0) continue;
            brute.insert({a, b});
        }
    auto fam = enumerate_family(100.0);
    CHECK(fam.size() == brute.size());
    for (const auto& q : fam) {
        CHECK(brute.count({q.a, q.b}) == 1);
        CHECK(moebius(q) != 0);
    }
    // deterministic order: sorted by (norm, a, b)
    for (std::size_t i = 1; i < fam.size(); ++i) {
        auto n0 = fam[i - 1].norm64(), n1 = fam[i].norm64();
        CHECK((n0 < n1 || (n0 == n1 && (fam[i - 1].a < fam[i].a ||
                                        (fam[i - 1].a == fam[i].a && fam[i - 1].b < fam[i].b)))));
    }
}

TEST_CASE("primary count envelope used by tail bounds") {
    for (double X : {100.0, 1000.0, 30000.0, 300000.0}) {
        double count = double(enumerate_primary(X).size());
        CHECK(count <= 1.15 * 0.4031 * X + 4.0 * std::sqrt(X) + 4.0);
    }
}

TEST_CASE("PrimaryTable links") {
    PrimaryTable tab(4000);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 300; ++t) {
        std::size_t i = rng() % tab.size();
        auto fac = tab.factor_indices(i);
        EisensteinInt prod{1, 0};
        for (auto [pidx, e] : fac) {
            CHECK(tab.is_prime(std::size_t(pidx)));
            prod = prod * pow(tab.elem(std::size_t(pidx)), unsigned(e));
        }
        CHECK(prod == tab.elem(i));
    }
}
