#pragma once

#include "primal/natural.hpp"

#include <optional>
#include <string>

namespace primal {

enum class Outcome {
    Composite,      ///< certainly composite
    ProbablePrime,  ///< prime up to the attached error bound
    Prime,          ///< certainly prime
    Inapplicable,   ///< the test does not apply to this input
};

/// Outcome of a primality test.
///
/// `witness` carries a compositeness certificate (a factor or a failing
/// base) for Composite verdicts, and the certifying base for Prime verdicts
/// from the primality-proving tests. `error_bound` is only present on
/// ProbablePrime and is exact: (1/2)^k, (1/4)^k, 1 (no guarantee) or 0
/// (Baillie-PSW below 2^64).
struct Verdict {
    Outcome outcome = Outcome::Inapplicable;
    std::optional<Natural> witness;
    std::optional<Rational> error_bound;
    std::string reason;

    static Verdict composite() { return {Outcome::Composite, std::nullopt, std::nullopt, {}}; }
    static Verdict composite(Natural w) {
        return {Outcome::Composite, std::move(w), std::nullopt, {}};
    }
    static Verdict probable_prime(Rational bound) {
        return {Outcome::ProbablePrime, std::nullopt, std::move(bound), {}};
    }
    static Verdict probable_prime(Rational bound, std::string note) {
        return {Outcome::ProbablePrime, std::nullopt, std::move(bound), std::move(note)};
    }
    static Verdict prime() { return {Outcome::Prime, std::nullopt, std::nullopt, {}}; }
    static Verdict prime(Natural certifying_base) {
        return {Outcome::Prime, std::move(certifying_base), std::nullopt, {}};
    }
    static Verdict inapplicable(std::string why) {
        return {Outcome::Inapplicable, std::nullopt, std::nullopt, std::move(why)};
    }

    /// Prime and ProbablePrime collapse to "prime" when comparing against
    /// reference tables.
    bool prime_class() const {
        return outcome == Outcome::Prime || outcome == Outcome::ProbablePrime;
    }
};

const char* to_string(Outcome o);

/// Rounds / certainty parameter k plus the seed for the base sampler.
struct TestConfig {
    unsigned rounds = 30;
    std::uint64_t seed = 1;
};

}  // namespace primal
