#pragma once

#include "primal/natural.hpp"

#include <map>
#include <optional>
#include <vector>

namespace primal {

/// base^exponent mod modulus by square-and-multiply. modulus must be >= 1.
Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus);

/// Greatest common divisor; gcd(a, 0) = a. (0, 0) is a domain error.
Natural gcd(const Natural& a, const Natural& b);

/// Jacobi symbol (a/n) for odd n >= 1, via binary reciprocity — no
/// factorization of either argument.
int jacobi(const Natural& a, const Natural& n);

/// Largest r with r*r <= n.
Natural isqrt(const Natural& n);

inline bool is_perfect_square(const Natural& n) {
    if (n < 0) return false;
    Natural r = isqrt(n);
    return r * r == n;
}

struct PerfectPower {
    Natural base;
    unsigned exponent;  // >= 2, maximal
};

/// Decomposes n = base^exponent with the exponent maximal, or nullopt when n
/// is not a perfect power. n must be >= 2.
std::optional<PerfectPower> is_perfect_power(const Natural& n);

/// All primes <= limit, ascending (Eratosthenes with the sqrt cutoff).
/// limit < 2 yields an empty list. Desk-scale only: the bitmap is O(limit).
std::vector<std::uint64_t> sieve(std::uint64_t limit);

/// Prime factorization as certified-prime -> exponent. When `complete` is
/// false, `residual` holds the unfactored (composite) cofactor; it is 1
/// otherwise.
struct Factorization {
    std::map<Natural, unsigned> factors;
    bool complete = true;
    Natural residual = 1;

    /// product of prime^exponent times residual
    Natural recompose() const;
    /// largest prime factor, or nullopt when empty
    std::optional<Natural> largest_prime() const;
};

inline constexpr std::uint64_t kDefaultFactorEffort = 1u << 20;

/// Factorizes n >= 2: trial division by sieve primes up to 10^6, then
/// Pollard rho (Brent) capped at effort_bound iterations per split attempt.
/// Every emitted prime is certified by 30 Miller-Rabin rounds. Failure to
/// finish is reported via complete=false, never an error.
Factorization factorize(const Natural& n, std::uint64_t effort_bound = kDefaultFactorEffort);

struct TwoAdicSplit {
    std::uint64_t s = 0;
    Natural t;  // odd
};

/// m = 2^s * t with t odd; m must be >= 1.
TwoAdicSplit split_power_of_two(const Natural& m);

/// Uniform base in [2, n-2] for n >= 4, by rejection sampling on the
/// supplied generator. Identical seeds give identical sequences.
Natural sample_base(const Natural& n, RandomSource& source);

/// Uniform value in [0, bound) for bound >= 1.
Natural sample_below(const Natural& bound, RandomSource& source);

/// Smallest e >= 1 with n^e = 1 (mod r), or nullopt when gcd(n, r) > 1.
/// r must be >= 2.
std::optional<Natural> multiplicative_order(const Natural& n, const Natural& r);

/// Euler's totient, computed through factorize().
Natural euler_phi(const Natural& n);

}  // namespace primal
