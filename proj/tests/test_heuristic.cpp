#include "primal/heuristic.hpp"

#include "primal/arith.hpp"
#include "primal/montecarlo.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace primal;

TEST_SUITE_BEGIN("heuristic");

TEST_CASE("selfridge_params picks the first D with symbol -1") {
    // (5/11) = (9/11) = 1 and (-7/11) = 1, (-11/11) = 0, so D = 13
    LucasParams p11 = selfridge_params(11);
    CHECK(p11.d == 13);
    CHECK(p11.p == 1);
    CHECK(p11.q == -3);

    LucasParams p2047 = selfridge_params(2047);
    CHECK(jacobi(Natural(((p2047.d % 2047) + 2047) % 2047), 2047) == -1);
    CHECK(p2047.p == 1);
    CHECK(p2047.d == p2047.p * p2047.p - 4 * p2047.q);

    // D = P^2 - 4Q by construction, and (D/n) = -1, for a spread of n
    RandomSource rng(21);
    for (int i = 0; i < 1000; ++i) {
        Natural n = 5 + 2 * sample_below(100000, rng);
        if (is_perfect_square(n)) continue;
        LucasParams params;
        try {
            params = selfridge_params(n);
        } catch (const std::domain_error&) {
            continue;  // n shared a factor with the D sequence
        }
        CHECK(params.d == params.p * params.p - 4 * params.q);
        CHECK(jacobi(Natural(((params.d % n) + n) % n), n) == -1);
    }
}

TEST_CASE("selfridge_params rejects perfect squares") {
    CHECK_THROWS_AS(selfridge_params(25), std::domain_error);
    CHECK_THROWS_AS(selfridge_params(1018081), std::domain_error);  // 1009^2
}

TEST_CASE("lucas_uv seeds") {
    LucasParams fib{5, 1, -1};  // U_k = Fibonacci, V_k = Lucas numbers
    LucasPair uv = lucas_uv(97, fib, 0);
    CHECK(uv.u == 0);
    CHECK(uv.v == 2);
    uv = lucas_uv(97, fib, 1);
    CHECK(uv.u == 1);
    CHECK(uv.v == 1);  // P mod n

    // F_10 = 55, L_10 = 123, reduced mod 23
    uv = lucas_uv(23, fib, 10);
    CHECK(uv.u == 9);
    CHECK(uv.v == 8);
}

TEST_CASE("lucas_uv doubling chain equals the direct recurrence") {
    RandomSource rng(33);
    for (int i = 0; i < 1000; ++i) {
        Natural n = 3 + 2 * sample_below(1000000, rng);
        Natural p = 1 + sample_below(30, rng);
        Integer q = Integer(sample_below(30, rng)) - 15;
        if (q == 0) q = 1;
        Integer d = p * p - 4 * q;
        std::uint64_t k = to_u64(sample_below(1000, rng));
        LucasParams params{d, p, q};
        LucasPair chain = lucas_uv(n, params, k);
        auto direct = oracles::lucas_direct(n, p, q, k);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(chain.u == direct.u);
        CHECK(chain.v == direct.v);
    }
}

TEST_CASE("strong_lucas known verdicts") {
    // 2047 passes Miller-Rabin base 2; the Lucas stage has to kill it
    CHECK(strong_probable_prime(2047, 2));
    CHECK(strong_lucas_probable_prime(2047).outcome == Outcome::Composite);

    CHECK(strong_lucas_probable_prime(11621).outcome == Outcome::ProbablePrime);

    Verdict sq = strong_lucas_probable_prime(49);
    CHECK(sq.outcome == Outcome::Composite);
    CHECK(*sq.witness == 7);  // perfect-square screen reports the root
}

TEST_CASE("strong Lucas pseudoprimes pass the Lucas stage but fail BPSW") {
    // OEIS A217255: strong Lucas pseudoprimes with Selfridge parameters
    for (std::uint64_t n : {5459, 5777, 10877, 16109, 18971, 22499, 24569, 25199, 40309, 58519}) {
        CAPTURE(n);
        CHECK_FALSE(oracles::trial_prime(n));
        CHECK(strong_lucas_probable_prime(n).outcome == Outcome::ProbablePrime);
        CHECK(baillie_psw(n).outcome == Outcome::Composite);  // Miller-Rabin base 2 catches them
    }
}

TEST_CASE("strong_lucas never rejects an actual prime below 10^5") {
    for (std::uint64_t p : sieve(100000)) {
        if (p < 5) continue;
        CAPTURE(p);
        CHECK(strong_lucas_probable_prime(p).outcome == Outcome::ProbablePrime);
    }
}

TEST_CASE("baillie_psw known verdicts") {
    CHECK(baillie_psw(Natural("12764787846358441471")).prime_class());
    CHECK(baillie_psw(Natural("12764787846358441481")).outcome == Outcome::Composite);
    CHECK(baillie_psw(2047).outcome == Outcome::Composite);
    CHECK(baillie_psw(997).outcome == Outcome::Prime);  // stage-1 hit on itself
    CHECK(baillie_psw(2).outcome == Outcome::Prime);
    CHECK(baillie_psw(4).outcome == Outcome::Composite);
    CHECK(baillie_psw(1).outcome == Outcome::Inapplicable);
    CHECK(baillie_psw(0).outcome == Outcome::Inapplicable);

    // 1009^2: survives stage 1, caught later
    CHECK(baillie_psw(1018081).outcome == Outcome::Composite);

    // strong pseudoprimes to base 2 (OEIS A001262) all die in the Lucas stage
    for (std::uint64_t n : {3277, 4033, 4681, 8321, 15841, 29341, 42799, 49141, 52633}) {
        CAPTURE(n);
        Verdict v = baillie_psw(n);
        CHECK(v.outcome == Outcome::Composite);
    }
}

TEST_CASE("baillie_psw error bounds by size") {
    Verdict small = baillie_psw(Natural("12764787846358441471"));  // < 2^64
    REQUIRE(small.outcome == Outcome::ProbablePrime);
    CHECK(*small.error_bound == 0);

    Verdict big = baillie_psw(9 * (Natural(1) << 1305) + 1);
    REQUIRE(big.outcome == Outcome::ProbablePrime);
    CHECK(*big.error_bound == 1);
    CHECK_FALSE(big.reason.empty());  // annotated as unquantified
}

TEST_CASE("baillie_psw matches the sieve on [2, 3*10^4]") {
    auto primes = sieve(30000);
    std::size_t next = 0;
    for (std::uint64_t n = 2; n <= 30000; ++n) {
        bool is_prime = next < primes.size() && primes[next] == n;
        if (is_prime) ++next;
        CAPTURE(n);
        CHECK(baillie_psw(n).prime_class() == is_prime);
    }
}

TEST_CASE("baillie_psw verdicts for primes below 10^6 are certain") {
    CHECK(baillie_psw(999983).outcome == Outcome::Prime);
    CHECK(baillie_psw(1009).outcome == Outcome::Prime);
    // above the certification cutoff only probable prime is claimed
    CHECK(baillie_psw(1000003).outcome == Outcome::ProbablePrime);
}

TEST_CASE("baillie_psw is deterministic") {
    for (const char* text : {"2047", "11621", "12764787846358441471"}) {
        Natural n(text);
        Verdict a = baillie_psw(n);
        Verdict b = baillie_psw(n);
        CHECK(a.outcome == b.outcome);
        CHECK(a.witness == b.witness);
    }
}

TEST_SUITE_END();
