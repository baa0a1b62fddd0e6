#pragma once

#include "primal/arith.hpp"
#include "primal/natural.hpp"
#include "primal/verdict.hpp"

namespace primal {

// Primality-proving tests: Prime verdicts are certain and carry the
// certifying base as witness. Runtime varies with the luck of the base
// search; exhausted budgets surface as Inapplicable, never as a guess.

/// Proth's theorem on n = k*2^e + 1 (k odd < 2^e): any base a with
/// a^((n-1)/2) = -1 (mod n) proves primality. Bases are sampled for
/// cfg.rounds tries, then scanned exhaustively when n < 2^24 (full coverage
/// with no witness proves compositeness). For larger n an exhausted budget
/// falls back to a 30-round Miller-Rabin cross-check: a composite result
/// there is still certain, anything else is reported undecided.
Verdict proth_test(const Natural& n, const TestConfig& cfg);

/// Lucas primality test: a base a with a^(n-1) = 1 (mod n) and
/// a^((n-1)/q) != 1 (mod n) for every prime q | n-1 proves primality.
/// `factors` must be a complete factorization of n-1. Any base failing the
/// first congruence is a compositeness witness.
Verdict lucas_test(const Natural& n, const Factorization& factors, const TestConfig& cfg);

/// Pocklington's theorem: with a prime q | n-1, q > sqrt(n)-1, a base
/// satisfying a^(n-1) = 1 (mod n) and gcd(a^((n-1)/q)-1, n) = 1 proves
/// primality. Condition-(1) failures prove compositeness even without a
/// qualifying q; with no qualifying q and no such failure the test is
/// inapplicable.
Verdict pocklington_test(const Natural& n, const Factorization& factors, const TestConfig& cfg);

}  // namespace primal
