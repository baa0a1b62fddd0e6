#include "primal/forms.hpp"

#include "primal/arith.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace primal;

TEST_SUITE_BEGIN("forms");

TEST_CASE("parse_number grammar") {
    CHECK(parse_number("8191") == 8191);
    CHECK(parse_number("2^13-1") == 8191);
    CHECK(parse_number("2^16+1") == 65537);
    CHECK(parse_number("9*2^11+1") == 18433);
    CHECK(parse_number("11*2^12+1") == 45057);
    CHECK(parse_number("  42 ") == 42);
    CHECK(parse_number("2^0+1") == 2);
    CHECK(parse_number("2^1279-1") == (Natural(1) << 1279) - 1);
}

TEST_CASE("parse_number rejects malformed input with a position") {
    auto position_of = [](const char* text) -> std::size_t {
        try {
            parse_number(text);
        } catch (const ParseError& err) {
            return err.position;
        }
        FAIL("expected ParseError for ", text);
        return 0;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("x12") == 0);
    CHECK(position_of("3^5+1") == 1);    // only base 2
    CHECK(position_of("2^5*3") == 3);    // must end +1/-1
    CHECK(position_of("9*3^4+1") == 2);  // K*2^E+1 needs the 2
    CHECK(position_of("9*2^4-1") == 5);  // K*2^E-1 is outside the grammar
    CHECK(position_of("12 34") == 2);    // no inner whitespace
    CHECK(position_of("2^7+1junk") == 5);
    CHECK_THROWS_AS(parse_number("2^99999999999"), ParseError);
}

TEST_CASE("parse_number rejects zero") {
    CHECK_THROWS_AS(parse_number("2^0-1"), std::domain_error);
}

TEST_CASE("detect_form picks the most specific form") {
    NumberForm f = detect_form(65537);
    REQUIRE(f.is<Fermat>());
    CHECK(f.as<Fermat>().m == 4);
    CHECK_FALSE(f.warning);

    f = detect_form(8191);
    REQUIRE(f.is<Mersenne>());
    CHECK(f.as<Mersenne>().p == 13);

    f = detect_form(45057);
    REQUIRE(f.is<Proth>());
    CHECK(f.as<Proth>().k == 11);
    CHECK(f.as<Proth>().e == 12);

    CHECK(detect_form(11611).is<Generic>());

    // 2^15+1: 15 is no power of two, so not Fermat; falls to Proth(1, 15)
    f = detect_form(32769);
    REQUIRE(f.is<Proth>());
    CHECK(f.as<Proth>().k == 1);
    CHECK(f.as<Proth>().e == 15);

    // 3 = 2^(2^0)+1 = 2^2-1: Fermat preference wins
    f = detect_form(3);
    REQUIRE(f.is<Fermat>());
    CHECK(f.as<Fermat>().m == 0);

    f = detect_form(7);
    REQUIRE(f.is<Mersenne>());
    CHECK(f.as<Mersenne>().p == 3);
}

TEST_CASE("out-of-domain inputs classify Generic with a warning") {
    CHECK(detect_form(0).warning);
    CHECK(detect_form(1).warning);
    CHECK(detect_form(2).warning);
    CHECK(detect_form(4).warning);
    CHECK(detect_form(65536).warning);
    CHECK(detect_form(0).is<Generic>());
    CHECK(detect_form(65536).is<Generic>());
    CHECK_FALSE(detect_form(9).warning);
}

TEST_CASE("Mersenne classification requires a prime exponent") {
    // 2^9-1 = 511 and 2^11-1 = 2047: exponent 9 is composite, 11 is prime
    CHECK(detect_form(511).is<Generic>());
    CHECK(detect_form(2047).is<Mersenne>());
    // e = 2 is the lone exception: 2^2-1 = 3 = F_0 and Fermat wins
    for (std::uint64_t e = 3; e <= 64; ++e) {
        NumberForm f = detect_form((Natural(1) << e) - 1);
        CHECK(f.is<Mersenne>() == oracles::trial_prime(e));
    }
}

TEST_CASE("every Fermat number from F_1 up is Proth with k = 1") {
    for (unsigned m = 1; m <= 8; ++m) {
        Natural f = (Natural(1) << (1u << m)) + 1;
        auto proth = as_proth(f);
        REQUIRE(proth.has_value());
        CHECK(proth->k == 1);
        CHECK(proth->e == (1u << m));
        CHECK(detect_form(f).is<Fermat>());  // detect_form still prefers Fermat
    }
}

TEST_CASE("form round-trips through its defining expression") {
    RandomSource rng(17);
    for (int i = 0; i < 1000; ++i) {
        Natural k = 1 + 2 * sample_below(1 << 20, rng);  // odd
        std::uint64_t e = 1 + to_u64(sample_below(40, rng));
        std::string expr = k.str() + "*2^" + std::to_string(e) + "+1";
        Natural value = parse_number(expr);
        CHECK(value == k * (Natural(1) << e) + 1);
        NumberForm form = detect_form(value);
        if (form.is<Proth>()) {
            const auto& p = form.as<Proth>();
            CHECK(p.k * (Natural(1) << to_u64(p.e)) + 1 == value);
        } else if (form.is<Fermat>()) {
            std::uint64_t m = to_u64(form.as<Fermat>().m);
            CHECK((Natural(1) << (std::uint64_t(1) << m)) + 1 == value);
        } else if (form.is<Mersenne>()) {
            CHECK((Natural(1) << to_u64(form.as<Mersenne>().p)) - 1 == value);
        } else {
            // k*2^e+1 with k too large for the Proth condition
            CHECK(bit_length(k) > e);
        }
    }
}

TEST_SUITE_END();
