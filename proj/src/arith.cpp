#include "primal/arith.hpp"

#include "primal/montecarlo.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace primal {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod_u64(u64 base, const Natural& exponent, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    u64 b = base % m;
    if (exponent == 0) return 1;
    for (std::size_t i = bit_length(exponent); i-- > 0;) {
        result = mulmod_u64(result, result, m);
        if (boost::multiprecision::bit_test(exponent, static_cast<unsigned>(i)))
            result = mulmod_u64(result, b, m);
    }
    return result;
}

int jacobi_u64(u64 a, u64 n) {
    a %= n;
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            u64 m8 = n & 7;
            if (m8 == 3 || m8 == 5) result = -result;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace

Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
    if (modulus == 0) throw std::domain_error("mod_pow: modulus must be >= 1");
    if (modulus == 1) return 0;
    if (fits_u64(modulus)) {
        u64 m = to_u64(modulus);
        u64 b = to_u64(base % modulus);
        return powmod_u64(b, exponent, m);
    }
    Natural result = 1;
    Natural b = base % modulus;
    if (exponent == 0) return result;
    for (std::size_t i = bit_length(exponent); i-- > 0;) {
        result = result * result % modulus;
        if (boost::multiprecision::bit_test(exponent, static_cast<unsigned>(i)))
            result = result * b % modulus;
    }
    return result;
}

Natural gcd(const Natural& a, const Natural& b) {
    if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
    return boost::multiprecision::gcd(a, b);
}

int jacobi(const Natural& a, const Natural& n) {
    if (n == 0 || is_even(n)) throw std::domain_error("jacobi: modulus must be odd and >= 1");
    if (fits_u64(n)) return jacobi_u64(to_u64(a % n), to_u64(n));
    Natural x = a % n;
    Natural m = n;
    int result = 1;
    while (x != 0) {
        u64 twos = boost::multiprecision::lsb(x);
        x >>= twos;
        if (twos & 1) {
            u64 m8 = to_u64(m & 7);
            if (m8 == 3 || m8 == 5) result = -result;
        }
        x.swap(m);
        if (to_u64(x & 3) == 3 && to_u64(m & 3) == 3) result = -result;
        x %= m;
    }
    return m == 1 ? result : 0;
}

Natural isqrt(const Natural& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    return boost::multiprecision::sqrt(n);
}

std::optional<PerfectPower> is_perfect_power(const Natural& n) {
    if (n < 2) throw std::domain_error("is_perfect_power: n must be >= 2");
    const std::size_t bits = bit_length(n);
    // b >= 2 forces e <= log2(n); scanning e downward makes the first hit
    // the maximal exponent.
    for (std::size_t e = bits; e >= 2; --e) {
        Natural lo = 2;
        Natural hi = (Natural(1) << (bits / e + 1)) + 1;
        while (lo <= hi) {
            Natural mid = (lo + hi) >> 1;
            Natural p = boost::multiprecision::pow(mid, static_cast<unsigned>(e));
            if (p == n) return PerfectPower{mid, static_cast<unsigned>(e)};
            if (p < n)
                lo = mid + 1;
            else
                hi = mid - 1;
        }
    }
    return std::nullopt;
}

std::vector<std::uint64_t> sieve(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 p = 2; p * p <= limit; ++p) {
        if (composite[p]) continue;
        for (u64 m = p * p; m <= limit; m += p) composite[m] = true;
    }
    for (u64 p = 2; p <= limit; ++p)
        if (!composite[p]) primes.push_back(p);
    return primes;
}

Natural Factorization::recompose() const {
    Natural product = residual;
    for (const auto& [prime, exp] : factors)
        product *= boost::multiprecision::pow(prime, exp);
    return product;
}

std::optional<Natural> Factorization::largest_prime() const {
    if (factors.empty()) return std::nullopt;
    return factors.rbegin()->first;
}

namespace {

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<u64>& trial_primes() {
    static const std::vector<u64> primes = sieve(kTrialLimit);
    return primes;
}

/// Miller-Rabin certification used for factor keys (30 sampled rounds,
/// fixed seed so factorize stays a pure function of its inputs).
bool certified_prime(const Natural& n) {
    if (n < 4) return n == 2 || n == 3;
    if (is_even(n)) return false;
    RandomSource rng(0x9e3779b97f4a7c15ull);
    for (int i = 0; i < 30; ++i) {
        Natural a = sample_base(n, rng);
        if (!strong_probable_prime(n, a)) return false;
    }
    return true;
}

u64 pollard_brent_u64(u64 n, u64 budget, u64& used, RandomSource& rng) {
    // Brent's cycle variant of Pollard rho; returns 0 when the budget runs
    // out before a nontrivial factor appears.
    for (u64 c = 1; used < budget; ++c) {
        u64 y = 2 + rng() % (n - 3);
        u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
        const u64 batch = 128;
        while (g == 1 && used < budget) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            for (u64 k = 0; k < r && g == 1 && used < budget; k += batch) {
                ys = y;
                u64 steps = std::min(batch, r - k);
                for (u64 i = 0; i < steps; ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                    ++used;
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            // backtrack one step at a time from the last checkpoint
            g = 1;
            while (g == 1) {
                ys = (mulmod_u64(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

Natural pollard_brent_big(const Natural& n, u64 budget, u64& used, RandomSource& rng) {
    for (u64 c = 1; used < budget; ++c) {
        Natural y = 2 + sample_below(n - 3, rng);
        Natural g = 1, q = 1, x = 0, ys = 0;
        u64 r = 1;
        const u64 batch = 128;
        while (g == 1 && used < budget) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (y * y + c) % n;
            for (u64 k = 0; k < r && g == 1 && used < budget; k += batch) {
                ys = y;
                u64 steps = std::min(batch, r - k);
                for (u64 i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                    ++used;
                }
                g = boost::multiprecision::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

}  // namespace

Factorization factorize(const Natural& n, std::uint64_t effort_bound) {
    if (n < 2) throw std::domain_error("factorize: n must be >= 2");
    Factorization result;
    Natural m = n;
    for (u64 p : trial_primes()) {
        if (Natural(p) * p > m) break;
        if (m % p == 0) {
            unsigned count = 0;
            do {
                m /= p;
                ++count;
            } while (m % p == 0);
            result.factors[Natural(p)] = count;
        }
    }
    if (m == 1) return result;

    // m now has no prime factor below 10^6.
    std::vector<Natural> pending{m};
    u64 used = 0;
    RandomSource rng(0xb5ad4eceda1ce2a9ull);
    while (!pending.empty()) {
        Natural x = std::move(pending.back());
        pending.pop_back();
        if (x < Natural(kTrialLimit) * kTrialLimit || certified_prime(x)) {
            // below 10^12 primality follows from the trial division above
            ++result.factors[x];
            continue;
        }
        Natural d = fits_u64(x) ? Natural(pollard_brent_u64(to_u64(x), effort_bound, used, rng))
                                : pollard_brent_big(x, effort_bound, used, rng);
        if (d == 0) {
            result.complete = false;
            result.residual *= x;
            continue;
        }
        pending.push_back(x / d);
        pending.push_back(std::move(d));
    }
    return result;
}

TwoAdicSplit split_power_of_two(const Natural& m) {
    if (m == 0) throw std::domain_error("split_power_of_two: m must be >= 1");
    TwoAdicSplit split;
    split.s = boost::multiprecision::lsb(m);
    split.t = m >> split.s;
    return split;
}

Natural sample_below(const Natural& bound, RandomSource& source) {
    if (bound < 1) throw std::domain_error("sample_below: bound must be >= 1");
    if (bound == 1) return 0;
    const std::size_t bits = bit_length(bound - 1);
    const std::size_t words = (bits + 63) / 64;
    while (true) {
        Natural v = 0;
        for (std::size_t w = 0; w < words; ++w) {
            u64 chunk = source();
            if (w + 1 == words && bits % 64 != 0) chunk &= (u64(1) << (bits % 64)) - 1;
            v |= Natural(chunk) << (64 * w);
        }
        if (v < bound) return v;
    }
}

Natural sample_base(const Natural& n, RandomSource& source) {
    if (n < 4) throw std::domain_error("sample_base: n must be >= 4");
    return 2 + sample_below(n - 3, source);
}

std::optional<Natural> multiplicative_order(const Natural& n, const Natural& r) {
    if (r < 2) throw std::domain_error("multiplicative_order: r must be >= 2");
    if (fits_u64(r)) {
        u64 rr = to_u64(r);
        u64 nr = to_u64(n % r);
        if (std::gcd(nr, rr) != 1) return std::nullopt;
        u64 e = 1;
        u64 cur = nr;
        while (cur != 1) {
            cur = mulmod_u64(cur, nr, rr);
            ++e;
        }
        return Natural(e);
    }
    Natural nr = n % r;
    if (boost::multiprecision::gcd(nr, r) != 1) return std::nullopt;
    Natural e = 1;
    Natural cur = nr;
    while (cur != 1) {
        cur = cur * nr % r;
        ++e;
    }
    return e;
}

Natural euler_phi(const Natural& n) {
    if (n < 1) throw std::domain_error("euler_phi: n must be >= 1");
    if (n == 1) return 1;
    Factorization f = factorize(n);
    if (!f.complete) throw std::runtime_error("euler_phi: factorization incomplete");
    Natural phi = 1;
    for (const auto& [p, e] : f.factors) phi *= boost::multiprecision::pow(p, e - 1) * (p - 1);
    return phi;
}

}  // namespace primal
