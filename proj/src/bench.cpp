#include "primal/bench.hpp"

#include "primal/deterministic.hpp"
#include "primal/heuristic.hpp"
#include "primal/lasvegas.hpp"
#include "primal/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace primal::bench {

const char* to_string(Algo a) {
    switch (a) {
        case Algo::Fermat: return "fermat";
        case Algo::Solovay: return "solovay";
        case Algo::Miller: return "miller";
        case Algo::Proth: return "proth";
        case Algo::Lucas: return "lucas";
        case Algo::Pocklington: return "pocklington";
        case Algo::Trial: return "trial";
        case Algo::Pepin: return "pepin";
        case Algo::LucasLehmer: return "lucas-lehmer";
        case Algo::Aks: return "aks";
        case Algo::Bpsw: return "bpsw";
    }
    return "?";
}

std::optional<Algo> parse_algo(std::string_view name) {
    static const std::pair<std::string_view, Algo> table[] = {
        {"fermat", Algo::Fermat},       {"solovay", Algo::Solovay},
        {"miller", Algo::Miller},       {"proth", Algo::Proth},
        {"lucas", Algo::Lucas},         {"pocklington", Algo::Pocklington},
        {"trial", Algo::Trial},         {"pepin", Algo::Pepin},
        {"lucas-lehmer", Algo::LucasLehmer}, {"aks", Algo::Aks},
        {"bpsw", Algo::Bpsw},
    };
    for (auto& [key, algo] : table)
        if (key == name) return algo;
    return std::nullopt;
}

PreparedInput prepare_input(const std::string& expr, bool with_factors,
                            std::uint64_t factor_effort) {
    PreparedInput input;
    input.id = expr;
    input.value = parse_number(expr);
    input.form = detect_form(input.value);
    input.digits = input.value.str().size();
    if (with_factors && input.value >= 3) {
        input.nm1_factors = factorize(input.value - 1, factor_effort);
    }
    return input;
}

namespace {

const Factorization& factors_or_throw(const PreparedInput& input) {
    if (!input.nm1_factors)
        throw std::logic_error("input prepared without the n-1 factorization");
    return *input.nm1_factors;
}

}  // namespace

Verdict run_verdict(Algo algo, const PreparedInput& input, const TestConfig& cfg) {
    const Natural& n = input.value;
    switch (algo) {
        case Algo::Fermat: return fermat_test(n, cfg);
        case Algo::Solovay: return solovay_strassen(n, cfg);
        case Algo::Miller: return miller_rabin(n, cfg);
        case Algo::Proth: return proth_test(n, cfg);
        case Algo::Lucas: return lucas_test(n, factors_or_throw(input), cfg);
        case Algo::Pocklington: return pocklington_test(n, factors_or_throw(input), cfg);
        case Algo::Trial: return trial_division(n);
        case Algo::Pepin: return pepin_test(n);
        case Algo::LucasLehmer:
            if (!input.form.is<Mersenne>())
                return Verdict::inapplicable("not a Mersenne number 2^p - 1");
            return lucas_lehmer(input.form.as<Mersenne>().p);
        case Algo::Aks: return aks(n);
        case Algo::Bpsw: return baillie_psw(n);
    }
    return Verdict::inapplicable("unknown algorithm");
}

namespace {

bool needs_factors(const std::vector<Algo>& algos) {
    return std::find(algos.begin(), algos.end(), Algo::Lucas) != algos.end() ||
           std::find(algos.begin(), algos.end(), Algo::Pocklington) != algos.end();
}

bool gated_slow(Algo algo, const PreparedInput& input) {
    return (algo == Algo::Trial || algo == Algo::Aks) && bit_length(input.value) > 64;
}

std::uint64_t time_call_ns(Algo algo, const PreparedInput& input, const TestConfig& cfg,
                           Verdict& verdict_out) {
    auto start = std::chrono::steady_clock::now();
    verdict_out = run_verdict(algo, input, cfg);
    auto stop = std::chrono::steady_clock::now();
    auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    return ns > 0 ? static_cast<std::uint64_t>(ns) : 1;
}

}  // namespace

std::vector<BenchRecord> run_suite(const Suite& suite, const RunOptions& options) {
    const std::vector<Algo>& algos = options.algos.empty() ? suite.default_algos : options.algos;
    const TestConfig cfg{options.rounds, options.seed};
    std::vector<BenchRecord> records;

    for (const SuiteEntry& entry : suite.entries) {
        PreparedInput input = prepare_input(entry.expr, needs_factors(algos));
        if (std::string_view(form_name(input.form)) != entry.expected_form)
            throw SuiteMismatch("suite " + suite.name + ": " + entry.expr +
                                " classified as " + form_name(input.form) + ", expected " +
                                entry.expected_form);
        for (Algo algo : algos) {
            if (gated_slow(algo, input) && !options.include_slow) {
                if (options.log)
                    *options.log << "skip " << to_string(algo) << " on " << entry.expr
                                 << ": input above 64 bits (use --include-slow)\n";
                continue;
            }
            // untimed probe settles applicability and checks correctness
            Verdict probe = run_verdict(algo, input, cfg);
            if (probe.outcome == Outcome::Inapplicable) {
                if (options.log)
                    *options.log << "skip " << to_string(algo) << " on " << entry.expr << ": "
                                 << probe.reason << "\n";
                continue;
            }
            if (probe.prime_class() != entry.expected_prime)
                throw SuiteMismatch("suite " + suite.name + ": " + to_string(algo) + " on " +
                                    entry.expr + " returned " + to_string(probe.outcome) +
                                    ", expected " +
                                    (entry.expected_prime ? "prime" : "composite"));
            for (unsigned rep = 1; rep <= options.repetitions; ++rep) {
                Verdict v;
                std::uint64_t ns = time_call_ns(algo, input, cfg, v);
                records.push_back(BenchRecord{to_string(algo), input.id, input.digits,
                                              form_name(input.form), to_string(v.outcome), ns,
                                              rep});
            }
        }
    }
    return records;
}

namespace {

bool needs_quotes(const std::string& field) {
    return field.find_first_of(",\"\n") != std::string::npos;
}

void write_field(std::ostream& out, const std::string& field) {
    if (!needs_quotes(field)) {
        out << field;
        return;
    }
    out << '"';
    for (char ch : field) {
        if (ch == '"') out << '"';
        out << ch;
    }
    out << '"';
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "algorithm,input_id,digits,form,verdict,elapsed_ns,repetition\n";
    for (const BenchRecord& rec : records) {
        write_field(out, rec.algorithm);
        out << ',';
        write_field(out, rec.input_id);
        out << ',' << rec.digits << ',' << rec.form << ',' << rec.verdict << ','
            << rec.elapsed_ns << ',' << rec.repetition << '\n';
    }
}

void emit_summary(const std::vector<BenchRecord>& records, std::ostream& out) {
    struct Key {
        std::string algorithm, input_id;
        bool operator<(const Key& o) const {
            return std::tie(algorithm, input_id) < std::tie(o.algorithm, o.input_id);
        }
    };
    struct Group {
        std::size_t digits = 0;
        std::string form, verdict;
        std::vector<std::uint64_t> times;
    };
    std::map<Key, Group> groups;
    std::vector<Key> order;
    for (const BenchRecord& rec : records) {
        Key key{rec.algorithm, rec.input_id};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.digits = rec.digits;
        it->second.form = rec.form;
        it->second.verdict = rec.verdict;
        it->second.times.push_back(rec.elapsed_ns);
    }
    out << "algorithm,input_id,digits,form,verdict,reps,mean_ns,median_ns\n";
    for (const Key& key : order) {
        Group& g = groups[key];
        std::sort(g.times.begin(), g.times.end());
        unsigned long long total = 0;
        for (auto t : g.times) total += t;
        std::uint64_t mean = total / g.times.size();
        std::uint64_t median = g.times.size() % 2 == 1
                                   ? g.times[g.times.size() / 2]
                                   : (g.times[g.times.size() / 2 - 1] +
                                      g.times[g.times.size() / 2]) / 2;
        write_field(out, key.algorithm);
        out << ',';
        write_field(out, key.input_id);
        out << ',' << g.digits << ',' << g.form << ',' << g.verdict << ',' << g.times.size()
            << ',' << mean << ',' << median << '\n';
    }
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
    std::vector<BenchRecord> records;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        auto fields = split_csv_line(line);
        if (fields.size() != 7)
            throw std::runtime_error("parse_csv: expected 7 fields, got " +
                                     std::to_string(fields.size()));
        BenchRecord rec;
        rec.algorithm = fields[0];
        rec.input_id = fields[1];
        rec.digits = std::stoull(fields[2]);
        rec.form = fields[3];
        rec.verdict = fields[4];
        rec.elapsed_ns = std::stoull(fields[5]);
        rec.repetition = static_cast<unsigned>(std::stoul(fields[6]));
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace primal::bench
