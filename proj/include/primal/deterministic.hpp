#pragma once

#include "primal/natural.hpp"
#include "primal/verdict.hpp"

#include <vector>

namespace primal {

/// Divides by 2 and odd candidates up to isqrt(n). Certain both ways; the
/// witness of a Composite verdict is the smallest prime factor.
Verdict trial_division(const Natural& n);

/// Pepin's criterion for Fermat numbers F_m = 2^(2^m) + 1 with m >= 1:
/// prime iff 3^((F_m - 1)/2) = -1 (mod F_m). Non-Fermat inputs (and F_0 = 3,
/// where base 3 is useless) are refused: on other numbers the criterion
/// produces false verdicts.
Verdict pepin_test(const Natural& f);

/// Lucas-Lehmer test of M_p = 2^p - 1 for odd prime p (p checked by trial
/// division; p = 2 gives M_2 = 3, prime). s := 4, then s := (s^2 - 2) mod M_p
/// exactly p - 2 times; M_p is prime iff the final s is 0.
Verdict lucas_lehmer(const Natural& p);

/// AKS deterministic test, v6 formulation: perfect-power screen, smallest r
/// with ord_r(n) > log2(n)^2, gcd screen over a <= min(r, n-1), then the
/// polynomial identity (X+a)^n = X^n + a in Z_n[X]/(X^r - 1) for
/// a = 1 .. floor(sqrt(phi(r)) log2 n).
Verdict aks(const Natural& n);

/// Element of Z_n[X] / (X^r - 1): dense coefficient array of length r,
/// every entry reduced below n.
struct PolyMod {
    Natural n;               // coefficient modulus, >= 2
    std::size_t r = 1;       // ring exponent
    std::vector<Natural> c;  // length r

    PolyMod(Natural modulus, std::size_t ring_exponent);
    /// builds X + a (reduced mod n); needs r >= 2 for the X term to survive
    static PolyMod x_plus_a(const Natural& modulus, std::size_t ring_exponent, const Natural& a);
    static PolyMod one(const Natural& modulus, std::size_t ring_exponent);

    bool operator==(const PolyMod& other) const = default;
};

/// Schoolbook product with degree folded modulo X^r - 1 and coefficients
/// modulo n. Mismatched ring parameters are a domain error.
PolyMod poly_mul(const PolyMod& a, const PolyMod& b);

/// Square-and-multiply in the ring.
PolyMod poly_pow_mod(const PolyMod& base, const Natural& exponent);

}  // namespace primal
