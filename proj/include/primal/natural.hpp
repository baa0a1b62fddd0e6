#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>

namespace primal {

/// Arbitrary-precision non-negative integer. All library operations treat
/// negative values as precondition violations; the signed representation is
/// shared with Integer so expressions like n - 1 stay cheap.
using Natural = boost::multiprecision::cpp_int;

/// Sign-carrying companion of Natural (Lucas parameters D and Q need it).
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, used for verdict error bounds such as (1/4)^k.
using Rational = boost::multiprecision::cpp_rational;

/// Deterministic seedable generator. The library never reads ambient
/// entropy: every randomized test takes a caller-provided seed.
using RandomSource = std::mt19937_64;

inline bool is_even(const Natural& n) { return !boost::multiprecision::bit_test(n, 0); }
inline bool is_odd(const Natural& n) { return boost::multiprecision::bit_test(n, 0); }

/// Number of bits in n (0 for n = 0).
inline std::size_t bit_length(const Natural& n) {
    return n == 0 ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(n)) + 1;
}

inline bool fits_u64(const Natural& n) {
    return n >= 0 && bit_length(n) <= 64;
}

inline std::uint64_t to_u64(const Natural& n) { return n.convert_to<std::uint64_t>(); }

}  // namespace primal
