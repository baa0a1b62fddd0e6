#include "primal/montecarlo.hpp"

#include "primal/arith.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace primal;

TEST_SUITE_BEGIN("montecarlo");

namespace {

const TestConfig kCfg{30, 1};

// liar sets computed straight from the defining congruences
bool fermat_liar(std::uint64_t n, std::uint64_t a) {
    return std::gcd(a, n) == 1 && mod_pow(a, n - 1, n) == 1;
}

bool euler_liar(std::uint64_t n, std::uint64_t a) {
    if (std::gcd(a, n) != 1) return false;
    int symbol = jacobi(a, n);
    Natural expected = symbol == 1 ? Natural(1) : Natural(n - 1);
    return mod_pow(a, (n - 1) / 2, n) == expected;
}

bool strong_liar(std::uint64_t n, std::uint64_t a) {
    return std::gcd(a, n) == 1 && strong_probable_prime(n, a);
}

}  // namespace

TEST_CASE("table 2 verdicts under the three Monte-Carlo tests") {
    const std::pair<const char*, bool> table2[] = {
        {"11621", true},        {"11611", false},
        {"2860486327", true},   {"2860486317", false},
        {"12764787846358441471", true}, {"12764787846358441481", false},
    };
    for (auto [text, is_prime] : table2) {
        Natural n(text);
        CAPTURE(text);
        CHECK(fermat_test(n, kCfg).prime_class() == is_prime);
        CHECK(solovay_strassen(n, kCfg).prime_class() == is_prime);
        CHECK(miller_rabin(n, kCfg).prime_class() == is_prime);
    }
}

TEST_CASE("composite verdicts are never wrong below 10^5") {
    auto primes = sieve(100000);
    std::set<std::uint64_t> prime_set(primes.begin(), primes.end());
    RandomSource rng(8);
    for (int i = 0; i < 3000; ++i) {
        std::uint64_t n = 3 + 2 * (rng() % 50000);
        TestConfig cfg{5, rng()};
        bool actually_prime = prime_set.count(n) > 0;
        CAPTURE(n);
        if (fermat_test(n, cfg).outcome == Outcome::Composite) CHECK_FALSE(actually_prime);
        if (solovay_strassen(n, cfg).outcome == Outcome::Composite) CHECK_FALSE(actually_prime);
        if (miller_rabin(n, cfg).outcome == Outcome::Composite) CHECK_FALSE(actually_prime);
        // primes always pass
        if (actually_prime) {
            CHECK(fermat_test(n, cfg).prime_class());
            CHECK(solovay_strassen(n, cfg).prime_class());
            CHECK(miller_rabin(n, cfg).prime_class());
        }
    }
}

TEST_CASE("561 fools Fermat on every coprime base but not Miller-Rabin") {
    // Carmichael number 561 = 3 * 11 * 17: a^560 = 1 (mod 561) for all
    // coprime a. Exhaustive over all 320 of them.
    int coprime_bases = 0;
    for (std::uint64_t a = 1; a < 561; ++a) {
        if (std::gcd(a, std::uint64_t(561)) != 1) continue;
        ++coprime_bases;
        CHECK(mod_pow(a, 560, 561) == 1);
    }
    CHECK(coprime_bases == 320);

    for (std::uint64_t seed : {1, 2, 3, 99}) {
        CHECK(miller_rabin(561, TestConfig{20, seed}).outcome == Outcome::Composite);
        CHECK(solovay_strassen(561, TestConfig{20, seed}).outcome == Outcome::Composite);
    }
}

TEST_CASE("2047 is a strong pseudoprime to base 2 only") {
    CHECK(mod_pow(2, 1023, 2047) == 1);  // 2047 - 1 = 2 * 1023
    CHECK(strong_probable_prime(2047, 2));
    CHECK(miller_rabin(2047, TestConfig{20, 1}).outcome == Outcome::Composite);
}

TEST_CASE("liar hierarchy: strong within Euler within Fermat") {
    // sampled odd composites below 10^4, every base checked
    RandomSource rng(123);
    int composites = 0;
    while (composites < 60) {
        std::uint64_t n = 9 + 2 * (rng() % 4995);
        if (oracles::trial_prime(n)) continue;
        ++composites;
        for (std::uint64_t a = 2; a < n - 1; ++a) {
            if (strong_liar(n, a)) CHECK(euler_liar(n, a));
            if (euler_liar(n, a)) CHECK(fermat_liar(n, a));
        }
    }
}

TEST_CASE("verdicts are deterministic in (n, cfg)") {
    const Natural n("2860486317");
    for (unsigned rounds : {1u, 7u}) {
        for (std::uint64_t seed : {3u, 4u}) {
            TestConfig cfg{rounds, seed};
            Verdict a = miller_rabin(n, cfg);
            Verdict b = miller_rabin(n, cfg);
            CHECK(a.outcome == b.outcome);
            CHECK(a.witness == b.witness);
            Verdict c = fermat_test(n, cfg);
            Verdict d = fermat_test(n, cfg);
            CHECK(c.outcome == d.outcome);
            CHECK(c.witness == d.witness);
        }
    }
}

TEST_CASE("error bounds are exact rationals") {
    TestConfig cfg{10, 1};
    Verdict f = fermat_test(11621, cfg);
    REQUIRE(f.outcome == Outcome::ProbablePrime);
    CHECK(*f.error_bound == 1);  // Fermat guarantees nothing

    Verdict s = solovay_strassen(11621, cfg);
    REQUIRE(s.outcome == Outcome::ProbablePrime);
    CHECK(*s.error_bound == Rational(1, 1024));  // (1/2)^10

    Verdict m = miller_rabin(11621, cfg);
    REQUIRE(m.outcome == Outcome::ProbablePrime);
    CHECK(*m.error_bound == Rational(1, 1048576));  // (1/4)^10
}

TEST_CASE("witnesses certify compositeness") {
    RandomSource rng(5);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t n = 9 + 2 * (rng() % 20000);
        if (oracles::trial_prime(n)) continue;
        TestConfig cfg{20, rng()};
        for (Verdict v : {fermat_test(n, cfg), solovay_strassen(n, cfg), miller_rabin(n, cfg)}) {
            if (v.outcome != Outcome::Composite || !v.witness) continue;
            const Natural& w = *v.witness;
            // the witness is either a nontrivial factor or a base failing
            // the test's congruence
            Natural g = gcd(w, n);
            bool is_factor = g > 1 && g < n && n % w == 0;
            bool fails_fermat = mod_pow(w, n - 1, n) != 1;
            bool fails_strong = !strong_probable_prime(n, w);
            CHECK((is_factor || fails_fermat || fails_strong));
        }
    }
}

TEST_CASE("even or tiny inputs are inapplicable") {
    for (auto n : {0, 1, 2, 4, 100}) {
        CHECK(fermat_test(n, kCfg).outcome == Outcome::Inapplicable);
        CHECK(solovay_strassen(n, kCfg).outcome == Outcome::Inapplicable);
        CHECK(miller_rabin(n, kCfg).outcome == Outcome::Inapplicable);
    }
    // n = 3 is the smallest admissible input
    CHECK(fermat_test(3, kCfg).prime_class());
    CHECK(solovay_strassen(3, kCfg).prime_class());
    CHECK(miller_rabin(3, kCfg).prime_class());
}

TEST_SUITE_END();
