#pragma once

#include "primal/natural.hpp"
#include "primal/verdict.hpp"

namespace primal {

// Compositeness tests: Composite verdicts are certain, prime verdicts only
// probable. All three require odd n >= 3 and return Inapplicable otherwise.
// Bases sharing a factor with n short-circuit to Composite with that factor
// as the witness.

/// k rounds of a^(n-1) = 1 (mod n). Passing yields ProbablePrime with error
/// bound 1: Carmichael numbers fool every coprime base, so no universal
/// bound exists.
Verdict fermat_test(const Natural& n, const TestConfig& cfg);

/// k rounds of the Euler criterion a^((n-1)/2) = (a/n) (mod n), Jacobi
/// symbol on the right. Error bound (1/2)^k.
Verdict solovay_strassen(const Natural& n, const TestConfig& cfg);

/// k rounds of the strong pseudoprime criterion on n-1 = 2^s*t.
/// Error bound (1/4)^k.
Verdict miller_rabin(const Natural& n, const TestConfig& cfg);

/// Single-base strong pseudoprime check: with n-1 = 2^s*t (t odd), true iff
/// base^t = 1 or base^(2^j*t) = -1 (mod n) for some j < s. This is one
/// Miller-Rabin round with a chosen base; Baillie-PSW uses it with base 2.
bool strong_probable_prime(const Natural& n, const Natural& base);

}  // namespace primal
