#include "primal/bench.hpp"

namespace primal::bench {

namespace {

std::vector<Suite> make_builtin_suites() {
    std::vector<Suite> suites;

    // Generic numbers, 5/10/20 digits, prime/composite pairs.
    suites.push_back(Suite{
        "table2",
        {
            {"11621", "generic", true},
            {"11611", "generic", false},
            {"2860486327", "generic", true},
            {"2860486317", "generic", false},
            {"12764787846358441471", "generic", true},
            {"12764787846358441481", "generic", false},
        },
        {Algo::Fermat, Algo::Solovay, Algo::Miller},
    });

    // Proth numbers.
    suites.push_back(Suite{
        "table3",
        {
            {"9*2^11+1", "proth", true},
            {"11*2^12+1", "proth", false},
            {"17*2^27+1", "proth", true},
            {"25*2^28+1", "proth", false},
        },
        {Algo::Proth, Algo::Lucas, Algo::Pocklington},
    });

    // Fermat-form inputs. 2^15+1 is not a Fermat number (15 is no power of
    // two); it classifies as Proth(1, 15) and Pepin refuses it, so trial
    // division supplies its composite verdict.
    suites.push_back(Suite{
        "table4",
        {
            {"2^16+1", "fermat", true},
            {"2^15+1", "proth", false},
            {"2^32+1", "fermat", false},
            {"2^64+1", "fermat", false},
        },
        {Algo::Pepin, Algo::Trial, Algo::Aks},
    });

    // Mersenne numbers.
    suites.push_back(Suite{
        "table5",
        {
            {"2^13-1", "mersenne", true},
            {"2^11-1", "mersenne", false},
            {"2^31-1", "mersenne", true},
            {"2^37-1", "mersenne", false},
        },
        {Algo::LucasLehmer, Algo::Trial, Algo::Aks},
    });

    // Big Mersenne pair (1279/1278 bits). 2^1278-1 is not a Mersenne number
    // in the strict sense (1278 is composite), hence the generic tag.
    suites.push_back(Suite{
        "mersenne-big",
        {
            {"2^1279-1", "mersenne", true},
            {"2^1278-1", "generic", false},
        },
        {Algo::Fermat, Algo::Solovay, Algo::Miller, Algo::Bpsw, Algo::LucasLehmer},
    });

    // Big Proth pair (~1309 bits).
    suites.push_back(Suite{
        "proth-big",
        {
            {"9*2^1305+1", "proth", true},
            {"9*2^1303+1", "proth", false},
        },
        {Algo::Fermat, Algo::Solovay, Algo::Miller, Algo::Bpsw, Algo::Proth},
    });

    return suites;
}

}  // namespace

const std::vector<Suite>& builtin_suites() {
    static const std::vector<Suite> suites = make_builtin_suites();
    return suites;
}

const Suite* find_suite(std::string_view name) {
    for (const Suite& suite : builtin_suites())
        if (suite.name == name) return &suite;
    return nullptr;
}

}  // namespace primal::bench
