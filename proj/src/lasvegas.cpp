#include "primal/lasvegas.hpp"

#include "primal/forms.hpp"
#include "primal/montecarlo.hpp"

#include <vector>

namespace primal {

namespace {

// Sequential scans stay bounded below this; beyond it the base search is
// budget-limited and exhaustion is reported instead of looping forever.
const Natural kScanCeiling = Natural(1) << 24;

}  // namespace

Verdict proth_test(const Natural& n, const TestConfig& cfg) {
    auto proth = as_proth(n);
    if (!proth) return Verdict::inapplicable("not a Proth number k*2^e + 1 with odd k < 2^e");
    const Natural nm1 = n - 1;
    const Natural half = nm1 >> 1;
    auto certifies = [&](const Natural& a) { return mod_pow(a, half, n) == nm1; };

    if (n >= 4) {
        RandomSource rng(cfg.seed);
        for (unsigned round = 0; round < cfg.rounds; ++round) {
            Natural a = sample_base(n, rng);
            if (certifies(a)) return Verdict::prime(a);
        }
    }
    if (n < kScanCeiling) {
        for (Natural a = 2; a <= nm1; ++a)
            if (certifies(a)) return Verdict::prime(a);
        // full coverage of [2, n-1] with no witness: absolutely composite
        return Verdict::composite();
    }
    // Budget spent without coverage. A Miller-Rabin composite verdict is
    // still certain; otherwise stay honest and report the budget.
    Verdict cross = miller_rabin(n, TestConfig{30, cfg.seed});
    if (cross.outcome == Outcome::Composite) return cross;
    return Verdict::inapplicable("undecided within budget");
}

Verdict lucas_test(const Natural& n, const Factorization& factors, const TestConfig& cfg) {
    if (n < 3 || is_even(n)) return Verdict::inapplicable("requires odd n >= 3");
    if (!factors.complete) return Verdict::inapplicable("incomplete factorization of n-1");
    if (factors.recompose() != n - 1)
        return Verdict::inapplicable("factorization does not recompose n-1");

    const Natural nm1 = n - 1;
    std::vector<Natural> cofactor_exponents;
    cofactor_exponents.reserve(factors.factors.size());
    for (const auto& [q, exp] : factors.factors) cofactor_exponents.push_back(nm1 / q);

    // nullopt: a is not primitive; Verdict: decided
    auto try_base = [&](const Natural& a) -> std::optional<Verdict> {
        if (mod_pow(a, nm1, n) != 1) return Verdict::composite(a);
        for (const Natural& e : cofactor_exponents)
            if (mod_pow(a, e, n) == 1) return std::nullopt;
        return Verdict::prime(a);
    };

    if (n >= 4) {
        RandomSource rng(cfg.seed);
        for (unsigned round = 0; round < cfg.rounds; ++round) {
            if (auto decided = try_base(sample_base(n, rng))) return *decided;
        }
    }
    if (n < kScanCeiling) {
        for (Natural a = 2; a <= nm1; ++a)
            if (auto decided = try_base(a)) return *decided;
        return Verdict::composite();  // unreachable: primes have primitive roots,
                                      // composites fail the Fermat congruence for some a
    }
    return Verdict::inapplicable("no witness within budget");
}

Verdict pocklington_test(const Natural& n, const Factorization& factors, const TestConfig& cfg) {
    if (n < 3 || is_even(n)) return Verdict::inapplicable("requires odd n >= 3");

    // qualifying q: certified prime divisor of n-1 above isqrt(n) - 1
    const Natural nm1 = n - 1;
    const Natural threshold = isqrt(n) - 1;
    std::optional<Natural> q;
    for (auto it = factors.factors.rbegin(); it != factors.factors.rend(); ++it) {
        if (it->first > threshold && nm1 % it->first == 0) {
            q = it->first;
            break;
        }
    }

    auto condition1 = [&](const Natural& a) { return mod_pow(a, nm1, n) == 1; };

    RandomSource rng(cfg.seed);
    auto next_base = [&]() { return n >= 4 ? sample_base(n, rng) : Natural(2); };

    if (!q) {
        // No qualifying q: primality cannot be certified, but a condition-(1)
        // failure is still a certain compositeness witness.
        for (unsigned round = 0; round < cfg.rounds; ++round) {
            Natural a = next_base();
            if (!condition1(a)) return Verdict::composite(a);
        }
        return Verdict::inapplicable("no prime factor q of n-1 with q > sqrt(n)-1");
    }

    const Natural cofactor = nm1 / *q;
    for (unsigned round = 0; round < cfg.rounds; ++round) {
        Natural a = next_base();
        if (!condition1(a)) return Verdict::composite(a);
        Natural x = mod_pow(a, cofactor, n);
        Natural g = gcd((x + nm1) % n, n);  // gcd(a^((n-1)/q) - 1, n)
        if (g == 1) return Verdict::prime(a);
        // condition (2) failed: resample
    }
    return Verdict::inapplicable("probable composite: budget exhausted");
}

}  // namespace primal
