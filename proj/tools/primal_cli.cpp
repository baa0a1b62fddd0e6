#include "primal/arith.hpp"
#include "primal/bench.hpp"
#include "primal/deterministic.hpp"
#include "primal/forms.hpp"
#include "primal/heuristic.hpp"
#include "primal/lasvegas.hpp"
#include "primal/montecarlo.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace primal;

constexpr int kExitPrime = 0;
constexpr int kExitComposite = 1;
constexpr int kExitError = 2;

std::string describe_form(const NumberForm& form) {
    std::ostringstream out;
    out << form_name(form);
    if (form.is<Mersenne>()) out << " p=" << form.as<Mersenne>().p;
    if (form.is<Fermat>()) out << " m=" << form.as<Fermat>().m;
    if (form.is<Proth>())
        out << " k=" << form.as<Proth>().k << " e=" << form.as<Proth>().e;
    if (form.warning) out << " (outside the odd n >= 3 domain)";
    return out.str();
}

bench::Algo auto_dispatch(const NumberForm& form) {
    if (form.is<Mersenne>()) return bench::Algo::LucasLehmer;
    if (form.is<Fermat>()) return bench::Algo::Pepin;
    if (form.is<Proth>()) return bench::Algo::Proth;
    return bench::Algo::Bpsw;
}

void print_verdict(const Verdict& verdict, std::uint64_t elapsed_ns) {
    std::cout << "verdict: " << to_string(verdict.outcome) << "\n";
    if (verdict.witness) std::cout << "witness: " << *verdict.witness << "\n";
    if (verdict.error_bound) {
        std::cout << "error-bound: " << *verdict.error_bound;
        if (!verdict.reason.empty()) std::cout << " (" << verdict.reason << ")";
        std::cout << "\n";
    }
    std::cout << "elapsed-ns: " << elapsed_ns << "\n";
}

int run_test(const std::string& expr, const std::string& algo_name, unsigned rounds,
             std::uint64_t seed, std::uint64_t effort) {
    Natural value;
    try {
        value = parse_number(expr);
    } catch (const ParseError& err) {
        std::cerr << "parse error at position " << err.position << ": " << err.what() << "\n";
        return kExitError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitError;
    }

    NumberForm form = detect_form(value);
    std::cout << "input: " << expr << " = " << value << " (" << value.str().size()
              << " digits)\n";
    std::cout << "form: " << describe_form(form) << "\n";

    bench::Algo algo;
    bool automatic = algo_name == "auto";
    if (automatic) {
        algo = auto_dispatch(form);
    } else if (auto parsed = bench::parse_algo(algo_name)) {
        algo = *parsed;
    } else {
        std::cerr << "unknown algorithm: " << algo_name << "\n";
        return kExitError;
    }

    bench::PreparedInput input;
    input.id = expr;
    input.value = value;
    input.form = form;
    input.digits = value.str().size();
    if (algo == bench::Algo::Lucas || algo == bench::Algo::Pocklington) {
        std::cerr << "factorizing n-1 (not counted in elapsed time)...\n";
        input.nm1_factors = factorize(value - 1, effort);
    }

    TestConfig cfg{rounds, seed};
    auto timed = [&](bench::Algo a) {
        auto start = std::chrono::steady_clock::now();
        Verdict v = bench::run_verdict(a, input, cfg);
        auto stop = std::chrono::steady_clock::now();
        auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
        return std::pair<Verdict, std::uint64_t>(v, ns > 0 ? ns : 1);
    };

    std::cout << "algorithm: " << bench::to_string(algo) << "\n";
    auto [verdict, elapsed] = timed(algo);
    if (automatic && verdict.outcome == Outcome::Inapplicable) {
        // the specialized test refused the input; fall back to the
        // general-purpose pipeline
        std::cerr << "note: " << bench::to_string(algo) << " inapplicable (" << verdict.reason
                  << "); falling back to bpsw\n";
        algo = bench::Algo::Bpsw;
        std::cout << "algorithm: bpsw\n";
        std::tie(verdict, elapsed) = timed(algo);
    }
    print_verdict(verdict, elapsed);

    switch (verdict.outcome) {
        case Outcome::Prime:
        case Outcome::ProbablePrime: return kExitPrime;
        case Outcome::Composite: return kExitComposite;
        case Outcome::Inapplicable:
            std::cerr << "inapplicable: " << verdict.reason << "\n";
            return kExitError;
    }
    return kExitError;
}

int run_bench(const std::string& suite_name, const std::string& algos_csv, unsigned reps,
              std::uint64_t seed, unsigned rounds, bool include_slow,
              const std::string& out_path) {
    std::vector<const bench::Suite*> suites;
    if (suite_name == "all") {
        for (const auto& suite : bench::builtin_suites()) suites.push_back(&suite);
    } else if (const bench::Suite* suite = bench::find_suite(suite_name)) {
        suites.push_back(suite);
    } else {
        std::cerr << "unknown suite: " << suite_name << " (try table2, table3, table4, "
                  << "table5, mersenne-big, proth-big, all)\n";
        return kExitError;
    }

    bench::RunOptions options;
    options.repetitions = reps;
    options.seed = seed;
    options.rounds = rounds;
    options.include_slow = include_slow;
    options.log = &std::cerr;
    if (!algos_csv.empty()) {
        std::stringstream stream(algos_csv);
        std::string token;
        while (std::getline(stream, token, ',')) {
            auto algo = bench::parse_algo(token);
            if (!algo) {
                std::cerr << "unknown algorithm: " << token << "\n";
                return kExitError;
            }
            options.algos.push_back(*algo);
        }
    }

    std::vector<bench::BenchRecord> records;
    try {
        for (const bench::Suite* suite : suites) {
            std::cerr << "running suite " << suite->name << "\n";
            auto part = bench::run_suite(*suite, options);
            records.insert(records.end(), part.begin(), part.end());
        }
    } catch (const bench::SuiteMismatch& err) {
        std::cerr << "correctness failure: " << err.what() << "\n";
        return kExitError;
    }

    if (out_path.empty()) {
        bench::emit_csv(records, std::cout);
        bench::emit_summary(records, std::cerr);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitError;
        }
        bench::emit_csv(records, out);
        std::ofstream summary(out_path + ".summary.csv");
        if (!summary) {
            std::cerr << "cannot write " << out_path << ".summary.csv\n";
            return kExitError;
        }
        bench::emit_summary(records, summary);
        std::cerr << "wrote " << records.size() << " records to " << out_path << "\n";
    }
    return 0;
}

int run_sieve(std::uint64_t limit) {
    for (std::uint64_t p : sieve(limit)) std::cout << p << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"primality testing toolkit: eleven tests, form-aware dispatch, benchmarks"};
    app.require_subcommand(1);

    std::string expr, algo = "auto";
    unsigned rounds = 30;
    std::uint64_t seed = 1, effort = primal::kDefaultFactorEffort;
    auto* test = app.add_subcommand("test", "classify a number and run a primality test");
    test->add_option("expr", expr,
                     "number: decimal, 2^E-1, 2^E+1 or K*2^E+1")->required();
    test->add_option("--algo", algo,
                     "fermat|solovay|miller|proth|lucas|pocklington|trial|pepin|"
                     "lucas-lehmer|aks|bpsw|auto");
    test->add_option("--rounds", rounds, "certainty parameter k");
    test->add_option("--seed", seed, "base-sampler seed");
    test->add_option("--effort", effort, "rho iteration cap for n-1 factorization");

    std::string suite_name, algos_csv, out_path;
    unsigned reps = 5;
    bool include_slow = false;
    auto* bench_cmd = app.add_subcommand("bench", "time algorithms on the built-in corpora");
    bench_cmd->add_option("--suite", suite_name,
                          "table2|table3|table4|table5|mersenne-big|proth-big|all")
        ->required();
    bench_cmd->add_option("--algos", algos_csv, "comma-separated algorithms (default: suite's)");
    bench_cmd->add_option("--reps", reps, "repetitions per measurement");
    bench_cmd->add_option("--seed", seed, "base-sampler seed");
    bench_cmd->add_option("--rounds", rounds, "certainty parameter k");
    bench_cmd->add_flag("--include-slow", include_slow,
                        "run trial division and AKS on inputs above 64 bits");
    bench_cmd->add_option("--out", out_path, "CSV destination (summary goes to FILE.summary.csv)");

    std::uint64_t limit = 0;
    auto* sieve_cmd = app.add_subcommand("sieve", "print all primes up to a limit");
    sieve_cmd->add_option("--limit", limit, "inclusive upper bound")->required();

    CLI11_PARSE(app, argc, argv);

    if (test->parsed()) return run_test(expr, algo, rounds, seed, effort);
    if (bench_cmd->parsed()) return run_bench(suite_name, algos_csv, reps, seed, rounds,
                                              include_slow, out_path);
    if (sieve_cmd->parsed()) return run_sieve(limit);
    return kExitError;
}
