#include "primal/verdict.hpp"

namespace primal {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Composite: return "composite";
        case Outcome::ProbablePrime: return "probable-prime";
        case Outcome::Prime: return "prime";
        case Outcome::Inapplicable: return "inapplicable";
    }
    return "?";
}

}  // namespace primal
