#pragma once

#include "primal/natural.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace primal {

struct Generic {};
struct Mersenne {
    Natural p;  // value = 2^p - 1, p prime
};
struct Fermat {
    Natural m;  // value = 2^(2^m) + 1
};
struct Proth {
    Natural k;  // odd, k < 2^e
    Natural e;  // value = k * 2^e + 1
};

/// Classification of a number into the special forms the specialized tests
/// require. `warning` is set when the input was even or below 3 (such
/// inputs are classified Generic instead of being rejected).
struct NumberForm {
    std::variant<Generic, Mersenne, Fermat, Proth> variant;
    bool warning = false;

    template <typename T>
    bool is() const {
        return std::holds_alternative<T>(variant);
    }
    template <typename T>
    const T& as() const {
        return std::get<T>(variant);
    }
};

const char* form_name(const NumberForm& form);

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position(position) {}
    std::size_t position;
};

/// Evaluates an input expression: decimal literal | 2^E-1 | 2^E+1 | K*2^E+1
/// (K, E decimal). Malformed text raises ParseError with the offending
/// position; an expression evaluating to 0 is a domain error.
Natural parse_number(std::string_view expr);

/// Most specific form of n, preference Fermat > Mersenne > Proth > Generic.
NumberForm detect_form(const Natural& n);

/// Direct Proth decomposition n = k*2^e + 1 with k odd and k < 2^e. Unlike
/// detect_form this also accepts Fermat numbers (k = 1).
std::optional<Proth> as_proth(const Natural& n);

/// Direct Fermat decomposition n = 2^(2^m) + 1.
std::optional<Fermat> as_fermat(const Natural& n);

/// Direct Mersenne decomposition n = 2^p - 1 with p prime.
std::optional<Mersenne> as_mersenne(const Natural& n);

}  // namespace primal
