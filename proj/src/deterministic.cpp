#include "primal/deterministic.hpp"

#include "primal/arith.hpp"
#include "primal/forms.hpp"

namespace primal {

namespace {

Verdict trial_division_u64(std::uint64_t n) {
    if (n % 2 == 0) return n == 2 ? Verdict::prime() : Verdict::composite(2);
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return Verdict::composite(d);
    return Verdict::prime();
}

}  // namespace

Verdict trial_division(const Natural& n) {
    if (n < 2) return Verdict::inapplicable("requires n >= 2");
    if (fits_u64(n)) return trial_division_u64(to_u64(n));
    if (is_even(n)) return Verdict::composite(2);
    const Natural bound = isqrt(n);
    for (Natural d = 3; d <= bound; d += 2)
        if (n % d == 0) return Verdict::composite(d);
    return Verdict::prime();
}

Verdict pepin_test(const Natural& f) {
    auto fermat = as_fermat(f);
    if (!fermat) return Verdict::inapplicable("not a Fermat number 2^(2^m) + 1");
    if (fermat->m == 0) return Verdict::inapplicable("F_0 = 3: Pepin's base 3 is not usable");
    return mod_pow(3, (f - 1) >> 1, f) == f - 1 ? Verdict::prime() : Verdict::composite();
}

Verdict lucas_lehmer(const Natural& p) {
    if (p == 2) return Verdict::prime();  // M_2 = 3; the recurrence needs odd p
    Verdict exponent_check = trial_division(p);
    if (exponent_check.outcome != Outcome::Prime)
        return Verdict::inapplicable("exponent p must be prime");
    if (bit_length(p) > 32) return Verdict::inapplicable("exponent too large for desk scale");
    const std::uint64_t pu = to_u64(p);
    const Natural m = (Natural(1) << pu) - 1;
    Natural s = 4;
    for (std::uint64_t i = 0; i + 2 < pu; ++i) s = (s * s - 2) % m;
    return s == 0 ? Verdict::prime() : Verdict::composite();
}

}  // namespace primal
