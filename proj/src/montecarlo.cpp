#include "primal/montecarlo.hpp"

#include "primal/arith.hpp"

namespace primal {

namespace {

bool applicable(const Natural& n) { return n >= 3 && is_odd(n); }

Rational power_of_half(unsigned bits) { return Rational(1, Natural(1) << bits); }

bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t a) {
    const std::uint64_t nm1 = n - 1;
    a %= n;
    if (a == 0) return false;
    if (a == 1 || a == nm1) return true;
    std::uint64_t t = nm1;
    unsigned s = 0;
    while ((t & 1) == 0) {
        t >>= 1;
        ++s;
    }
    std::uint64_t x = 1;
    std::uint64_t b = a;
    for (std::uint64_t e = t; e > 0; e >>= 1) {
        if (e & 1) x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * b % n);
        b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % n);
    }
    if (x == 1 || x == nm1) return true;
    for (unsigned j = 1; j < s; ++j) {
        x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
        if (x == nm1) return true;
    }
    return false;
}

}  // namespace

bool strong_probable_prime(const Natural& n, const Natural& base) {
    if (fits_u64(n)) return strong_probable_prime_u64(to_u64(n), to_u64(base % n));
    const Natural nm1 = n - 1;
    Natural a = base % n;
    if (a == 0) return false;
    if (a == 1 || a == nm1) return true;
    TwoAdicSplit split = split_power_of_two(nm1);
    Natural x = mod_pow(a, split.t, n);
    if (x == 1 || x == nm1) return true;
    for (std::uint64_t j = 1; j < split.s; ++j) {
        x = x * x % n;
        if (x == nm1) return true;
    }
    return false;
}

namespace {

/// a failing base with gcd(a, n) > 1 yields the gcd as witness: an explicit
/// factor is worth more than the base that exposed it
Verdict composite_with_best_witness(const Natural& n, const Natural& a) {
    Natural g = gcd(a, n);
    return Verdict::composite(g > 1 ? g : a);
}

}  // namespace

Verdict fermat_test(const Natural& n, const TestConfig& cfg) {
    if (!applicable(n)) return Verdict::inapplicable("requires odd n >= 3");
    if (n == 3) return Verdict::probable_prime(1);
    RandomSource rng(cfg.seed);
    for (unsigned round = 0; round < cfg.rounds; ++round) {
        Natural a = sample_base(n, rng);
        if (mod_pow(a, n - 1, n) != 1) return composite_with_best_witness(n, a);
    }
    return Verdict::probable_prime(1);
}

Verdict solovay_strassen(const Natural& n, const TestConfig& cfg) {
    if (!applicable(n)) return Verdict::inapplicable("requires odd n >= 3");
    if (n == 3) return Verdict::probable_prime(power_of_half(cfg.rounds));
    const Natural half = (n - 1) >> 1;
    RandomSource rng(cfg.seed);
    for (unsigned round = 0; round < cfg.rounds; ++round) {
        Natural a = sample_base(n, rng);
        int symbol = jacobi(a, n);
        if (symbol == 0) return Verdict::composite(gcd(a, n));
        Natural expected = symbol == 1 ? Natural(1) : n - 1;
        if (mod_pow(a, half, n) != expected) return Verdict::composite(a);
    }
    return Verdict::probable_prime(power_of_half(cfg.rounds));
}

Verdict miller_rabin(const Natural& n, const TestConfig& cfg) {
    if (!applicable(n)) return Verdict::inapplicable("requires odd n >= 3");
    if (n == 3) return Verdict::probable_prime(power_of_half(2 * cfg.rounds));
    RandomSource rng(cfg.seed);
    for (unsigned round = 0; round < cfg.rounds; ++round) {
        Natural a = sample_base(n, rng);
        if (!strong_probable_prime(n, a)) return composite_with_best_witness(n, a);
    }
    return Verdict::probable_prime(power_of_half(2 * cfg.rounds));
}

}  // namespace primal
