#include "primal/forms.hpp"

#include "primal/arith.hpp"
#include "primal/deterministic.hpp"

#include <cctype>

namespace primal {

namespace {

constexpr std::uint64_t kMaxExponent = 100'000'000;  // ~12.5 MB values

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }
};

Natural parse_decimal(Cursor& cur, const char* what) {
    if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
        cur.fail(std::string("expected ") + what);
    Natural value = 0;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        value = value * 10 + (cur.peek() - '0');
        ++cur.pos;
    }
    return value;
}

std::uint64_t parse_exponent(Cursor& cur) {
    Natural e = parse_decimal(cur, "exponent");
    if (e > kMaxExponent) cur.fail("exponent too large");
    return to_u64(e);
}

}  // namespace

Natural parse_number(std::string_view expr) {
    // trim surrounding whitespace only; the grammar itself has no spaces
    std::size_t begin = expr.find_first_not_of(" \t");
    std::size_t end = expr.find_last_not_of(" \t");
    if (begin == std::string_view::npos) throw ParseError("empty expression", 0);
    Cursor cur{expr.substr(0, end + 1), begin};

    Natural value;
    Natural head = parse_decimal(cur, "number");
    if (cur.done()) {
        value = head;  // plain decimal literal
    } else if (cur.peek() == '*') {
        // K*2^E+1
        ++cur.pos;
        if (cur.done() || cur.peek() != '2') cur.fail("expected 2");
        ++cur.pos;
        if (cur.done() || cur.peek() != '^') cur.fail("expected ^");
        ++cur.pos;
        std::uint64_t e = parse_exponent(cur);
        if (cur.done() || cur.peek() != '+') cur.fail("expected +1");
        ++cur.pos;
        if (cur.done() || cur.peek() != '1') cur.fail("expected +1");
        ++cur.pos;
        if (!cur.done()) cur.fail("trailing characters");
        value = head * (Natural(1) << e) + 1;
    } else if (cur.peek() == '^') {
        // 2^E-1 or 2^E+1
        if (head != 2) cur.fail("only base 2 is supported");
        ++cur.pos;
        std::uint64_t e = parse_exponent(cur);
        if (cur.done() || (cur.peek() != '+' && cur.peek() != '-')) cur.fail("expected +1 or -1");
        char sign = cur.peek();
        ++cur.pos;
        if (cur.done() || cur.peek() != '1') cur.fail("expected 1");
        ++cur.pos;
        if (!cur.done()) cur.fail("trailing characters");
        value = Natural(1) << e;
        if (sign == '+')
            value += 1;
        else
            value -= 1;
    } else {
        cur.fail("unexpected character");
    }
    if (value == 0) throw std::domain_error("expression evaluates to 0");
    return value;
}

std::optional<Fermat> as_fermat(const Natural& n) {
    if (n < 3) return std::nullopt;
    Natural e = n - 1;
    // n - 1 must be 2^(2^m): a power of two whose exponent is a power of two
    if ((e & (e - 1)) != 0) return std::nullopt;
    std::uint64_t exp = boost::multiprecision::lsb(e);
    if (exp == 0) return std::nullopt;  // n = 2
    if ((exp & (exp - 1)) != 0) return std::nullopt;
    std::uint64_t m = 0;
    while (exp > 1) {
        exp >>= 1;
        ++m;
    }
    return Fermat{Natural(m)};
}

std::optional<Mersenne> as_mersenne(const Natural& n) {
    if (n < 3) return std::nullopt;
    Natural e = n + 1;
    if ((e & (e - 1)) != 0) return std::nullopt;
    Natural p = boost::multiprecision::lsb(e);
    if (trial_division(p).outcome != Outcome::Prime) return std::nullopt;
    return Mersenne{p};
}

std::optional<Proth> as_proth(const Natural& n) {
    if (n < 3 || is_even(n)) return std::nullopt;
    TwoAdicSplit split = split_power_of_two(n - 1);
    if (split.s == 0) return std::nullopt;
    // k = t odd; k < 2^s is exactly bit_length(k) <= s
    if (bit_length(split.t) > split.s) return std::nullopt;
    return Proth{split.t, Natural(split.s)};
}

NumberForm detect_form(const Natural& n) {
    if (n < 3 || is_even(n)) return NumberForm{Generic{}, true};
    if (auto f = as_fermat(n)) return NumberForm{*f, false};
    if (auto m = as_mersenne(n)) return NumberForm{*m, false};
    if (auto p = as_proth(n)) return NumberForm{*p, false};
    return NumberForm{Generic{}, false};
}

const char* form_name(const NumberForm& form) {
    if (form.is<Mersenne>()) return "mersenne";
    if (form.is<Fermat>()) return "fermat";
    if (form.is<Proth>()) return "proth";
    return "generic";
}

}  // namespace primal
