#include "primal/deterministic.hpp"

#include "primal/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace primal {

PolyMod::PolyMod(Natural modulus, std::size_t ring_exponent)
    : n(std::move(modulus)), r(ring_exponent), c(ring_exponent, Natural(0)) {
    if (n < 2) throw std::domain_error("PolyMod: coefficient modulus must be >= 2");
    if (r < 1) throw std::domain_error("PolyMod: ring exponent must be >= 1");
}

PolyMod PolyMod::x_plus_a(const Natural& modulus, std::size_t ring_exponent, const Natural& a) {
    PolyMod p(modulus, ring_exponent);
    p.c[0] = a % modulus;
    if (ring_exponent >= 2)
        p.c[1] = 1;
    else
        p.c[0] = (p.c[0] + 1) % modulus;  // X = 1 in the degenerate r = 1 ring
    return p;
}

PolyMod PolyMod::one(const Natural& modulus, std::size_t ring_exponent) {
    PolyMod p(modulus, ring_exponent);
    p.c[0] = 1 % modulus;
    return p;
}

PolyMod poly_mul(const PolyMod& a, const PolyMod& b) {
    if (a.n != b.n || a.r != b.r)
        throw std::domain_error("poly_mul: mismatched ring parameters");
    const std::size_t r = a.r;
    std::vector<Natural> acc(2 * r, Natural(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (b.c[j] == 0) continue;
            acc[i + j] += a.c[i] * b.c[j];
        }
    }
    PolyMod out(a.n, r);
    for (std::size_t k = 0; k < r; ++k) out.c[k] = (acc[k] + acc[k + r]) % a.n;
    return out;
}

PolyMod poly_pow_mod(const PolyMod& base, const Natural& exponent) {
    PolyMod result = PolyMod::one(base.n, base.r);
    if (exponent == 0) return result;
    for (std::size_t i = bit_length(exponent); i-- > 0;) {
        result = poly_mul(result, result);
        if (boost::multiprecision::bit_test(exponent, static_cast<unsigned>(i)))
            result = poly_mul(result, base);
    }
    return result;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Z_n[X]/(X^r - 1) with word-sized coefficients, specialized for the AKS
/// witness chain: only squaring and multiplication by X + a occur. Products
/// are accumulated with reduction delayed to the fold, in u64 when
/// r * n^2 fits and in u128 otherwise (n < 2^57 keeps that path exact).
class FastAksRing {
public:
    FastAksRing(u64 n, std::size_t r)
        : n_(n), r_(r), cur_(r), next_(r) {
        u64_safe_ = u128(r) * n * n <= std::numeric_limits<u64>::max();
        if (u64_safe_)
            acc64_.assign(2 * r, 0);
        else
            acc128_.assign(2 * r, 0);
    }

    /// (X + a)^exponent == X^x_exp + a in the ring?
    bool witness_passes(u64 a, const Natural& exponent, std::size_t x_exp) {
        std::fill(cur_.begin(), cur_.end(), 0);
        cur_[0] = a % n_;
        cur_[1] = 1;
        for (std::size_t i = bit_length(exponent) - 1; i-- > 0;) {
            sqr();
            if (boost::multiprecision::bit_test(exponent, static_cast<unsigned>(i)))
                mul_x_plus_a(a % n_);
        }
        for (std::size_t k = 0; k < r_; ++k) {
            u64 want = (k == x_exp ? 1 : 0) + (k == 0 ? a % n_ : 0);
            if (cur_[k] != want % n_) return false;
        }
        return true;
    }

private:
    void sqr() {
        if (u64_safe_) {
            std::fill(acc64_.begin(), acc64_.end(), 0);
            for (std::size_t i = 0; i < r_; ++i) {
                const u64 ai = cur_[i];
                if (!ai) continue;
                acc64_[2 * i] += ai * ai;
                const u64 twice = 2 * ai;
                const u64* src = cur_.data() + i + 1;
                u64* dst = acc64_.data() + 2 * i + 1;
                for (std::size_t j = 0, m = r_ - i - 1; j < m; ++j) dst[j] += twice * src[j];
            }
            for (std::size_t k = 0; k < r_; ++k) cur_[k] = (acc64_[k] + acc64_[k + r_]) % n_;
        } else {
            std::fill(acc128_.begin(), acc128_.end(), 0);
            for (std::size_t i = 0; i < r_; ++i) {
                const u64 ai = cur_[i];
                if (!ai) continue;
                acc128_[2 * i] += u128(ai) * ai;
                const u128 twice = u128(2) * ai;
                const u64* src = cur_.data() + i + 1;
                u128* dst = acc128_.data() + 2 * i + 1;
                for (std::size_t j = 0, m = r_ - i - 1; j < m; ++j) dst[j] += twice * src[j];
            }
            for (std::size_t k = 0; k < r_; ++k)
                cur_[k] = static_cast<u64>((acc128_[k] + acc128_[k + r_]) % n_);
        }
    }

    // (X + a) * P: rotate one degree up and add a*P, in place via next_
    void mul_x_plus_a(u64 a) {
        for (std::size_t k = 0; k < r_; ++k) {
            const u64 rotated = cur_[(k + r_ - 1) % r_];
            next_[k] = static_cast<u64>((u128(a) * cur_[k] + rotated) % n_);
        }
        cur_.swap(next_);
    }

    u64 n_;
    std::size_t r_;
    bool u64_safe_;
    std::vector<u64> cur_, next_;
    std::vector<u64> acc64_;
    std::vector<u128> acc128_;
};

}  // namespace

Verdict aks(const Natural& n) {
    if (n < 2) return Verdict::inapplicable("requires n >= 2");
    if (n == 2 || n == 3) return Verdict::prime();
    if (auto pp = is_perfect_power(n)) return Verdict::composite(pp->base);

    // threshold ceil(bitlength^2) >= (log2 n)^2, so r is never undersized
    const std::size_t bits = bit_length(n);
    const Natural threshold = Natural(bits) * bits;
    Natural r = 2;
    while (true) {
        Natural g = gcd(n, r);
        if (g > 1) {
            if (g < n) return Verdict::composite(g);
            // g == n: r is a multiple of n, no order to speak of
        } else if (auto ord = multiplicative_order(n, r); ord && *ord > threshold) {
            break;
        }
        ++r;
    }

    const Natural screen_max = std::min(r, Natural(n - 1));
    if (fits_u64(n)) {
        const u64 nn = to_u64(n);
        for (u64 a = 2, amax = to_u64(screen_max); a <= amax; ++a) {
            u64 g = std::gcd(a, nn);
            if (g > 1 && g < nn) return Verdict::composite(g);
        }
    } else {
        for (Natural a = 2; a <= screen_max; ++a) {
            Natural g = gcd(a, n);
            if (g > 1 && g < n) return Verdict::composite(g);
        }
    }
    if (n <= r) return Verdict::prime();

    const Natural witness_bound = isqrt(euler_phi(r) * threshold) + 1;
    const std::size_t rr = static_cast<std::size_t>(to_u64(r));
    const std::size_t x_exp = static_cast<std::size_t>(to_u64(n % r));

    if (bits <= 57) {
        FastAksRing ring(to_u64(n), rr);
        const u64 bound = to_u64(witness_bound);
        for (u64 a = 1; a <= bound; ++a)
            if (!ring.witness_passes(a, n, x_exp)) return Verdict::composite(a);
        return Verdict::prime();
    }
    for (Natural a = 1; a <= witness_bound; ++a) {
        PolyMod lhs = poly_pow_mod(PolyMod::x_plus_a(n, rr, a), n);
        PolyMod want(n, rr);
        want.c[x_exp] = (want.c[x_exp] + 1) % n;
        want.c[0] = (want.c[0] + a) % n;
        if (!(lhs == want)) return Verdict::composite(a);
    }
    return Verdict::prime();
}

}  // namespace primal
