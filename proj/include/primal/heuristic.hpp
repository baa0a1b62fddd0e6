#pragma once

#include "primal/natural.hpp"
#include "primal/verdict.hpp"

namespace primal {

/// Parameters of a Lucas sequence U_k, V_k: U_0=0, U_1=1, V_0=2, V_1=P,
/// X_{k+1} = P*X_k - Q*X_{k-1}, with discriminant D = P^2 - 4Q.
struct LucasParams {
    Integer d;  // discriminant, sign-carrying
    Natural p;
    Integer q;
};

/// Selfridge's Method A: first D in 5, -7, 9, -11, 13, ... with Jacobi
/// (D/n) = -1; P = 1, Q = (1-D)/4. Perfect squares admit no such D and are
/// a domain error — callers screen them first.
LucasParams selfridge_params(const Natural& n);

struct LucasPair {
    Natural u;
    Natural v;
};

/// (U_k mod n, V_k mod n) by the binary doubling chain
/// U_2m = U_m*V_m, V_2m = V_m^2 - 2Q^m. n must be odd >= 3.
LucasPair lucas_uv(const Natural& n, const LucasParams& params, const Natural& k);

/// Strong Lucas probable prime test with Selfridge parameters: writing
/// n + 1 = 2^s * d (d odd), n passes iff U_d = 0 or V_(d*2^j) = 0 (mod n)
/// for some 0 <= j < s. Composite verdicts are certain; perfect squares are
/// screened to Composite with their root as witness.
Verdict strong_lucas_probable_prime(const Natural& n);

/// Baillie-PSW pipeline: trial division by the primes below 1000, then
/// Miller-Rabin to base 2, then the strong Lucas test. Deterministic.
/// Survivors below 2^64 carry error bound 0 (no counterexample exists
/// there); above, the bound is unquantified.
Verdict baillie_psw(const Natural& n);

}  // namespace primal
