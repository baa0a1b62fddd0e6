#pragma once

#include "primal/arith.hpp"
#include "primal/forms.hpp"
#include "primal/natural.hpp"
#include "primal/verdict.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace primal::bench {

enum class Algo {
    Fermat,
    Solovay,
    Miller,
    Proth,
    Lucas,
    Pocklington,
    Trial,
    Pepin,
    LucasLehmer,
    Aks,
    Bpsw,
};

const char* to_string(Algo a);
std::optional<Algo> parse_algo(std::string_view name);

/// Input with everything the timed call needs precomputed: parsing and the
/// n-1 factorization (Lucas/Pocklington's input) never pollute timings.
struct PreparedInput {
    std::string id;  // source expression
    Natural value;
    NumberForm form;
    std::size_t digits = 0;
    std::optional<Factorization> nm1_factors;
};

PreparedInput prepare_input(const std::string& expr, bool with_factors,
                            std::uint64_t factor_effort = kDefaultFactorEffort);

/// Runs one algorithm on one prepared input. This is the region benchmarks
/// time.
Verdict run_verdict(Algo algo, const PreparedInput& input, const TestConfig& cfg);

/// One timing measurement.
struct BenchRecord {
    std::string algorithm;
    std::string input_id;
    std::size_t digits = 0;
    std::string form;
    std::string verdict;
    std::uint64_t elapsed_ns = 1;
    unsigned repetition = 1;

    bool operator==(const BenchRecord&) const = default;
};

struct SuiteEntry {
    std::string expr;
    const char* expected_form;  // detect_form tag
    bool expected_prime;        // reference verdict class
};

struct Suite {
    std::string name;
    std::vector<SuiteEntry> entries;
    std::vector<Algo> default_algos;
};

/// Built-in corpora: table2, table3, table4, table5, mersenne-big,
/// proth-big.
const std::vector<Suite>& builtin_suites();
const Suite* find_suite(std::string_view name);

struct SuiteMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    std::vector<Algo> algos;  // empty: the suite's defaults
    unsigned repetitions = 5;
    std::uint64_t seed = 1;
    unsigned rounds = 30;
    bool include_slow = false;  // run trial/aks on inputs above 64 bits
    std::ostream* log = nullptr;
};

/// Times every applicable (algorithm, entry) pair `repetitions` times.
/// A verdict disagreeing with the suite's expected class aborts with
/// SuiteMismatch — timings of wrong answers are worthless. Inapplicable
/// pairs are skipped and logged.
std::vector<BenchRecord> run_suite(const Suite& suite, const RunOptions& options);

/// CSV with header algorithm,input_id,digits,form,verdict,elapsed_ns,repetition.
void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out);

/// Companion summary: mean and median per algorithm x input.
void emit_summary(const std::vector<BenchRecord>& records, std::ostream& out);

/// Inverse of emit_csv (summary blocks are not parsed).
std::vector<BenchRecord> parse_csv(std::istream& in);

}  // namespace primal::bench
