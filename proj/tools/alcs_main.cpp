// Command-line front end: build, query, oracle, gen, bench, stats.
// Reports are key=value lines, or a single JSON document with --json.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alcs/corpus.hpp"
#include "alcs/index_builder.hpp"
#include "alcs/index_io.hpp"
#include "alcs/oracle.hpp"
#include "alcs/query_engine.hpp"

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("failed to read " + path);
    return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw std::runtime_error("failed to write " + path);
}

// One raw-byte pattern per '\n'-terminated line; a trailing newline does not
// add an empty pattern.
std::vector<std::string> split_lines(const std::string& bytes) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start <= bytes.size()) {
        const size_t nl = bytes.find('\n', start);
        if (nl == std::string::npos) {
            if (start < bytes.size()) lines.push_back(bytes.substr(start));
            break;
        }
        lines.push_back(bytes.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::string hex_encode(std::string_view bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(9);
    os << v;
    return os.str();
}

// --seed wins, then ALCS_SEED, then the provided fallback (nullopt = let
// the library draw one).
std::optional<uint64_t> resolve_seed(const std::optional<uint64_t>& flag,
                                     std::optional<uint64_t> fallback) {
    if (flag) return flag;
    if (const char* env = std::getenv("ALCS_SEED")) {
        char* end = nullptr;
        errno = 0;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (errno != 0 || end == env || *end != '\0') {
            throw std::runtime_error("invalid ALCS_SEED value");
        }
        return static_cast<uint64_t>(v);
    }
    return fallback;
}

void emit_kv(const std::vector<std::pair<std::string, std::string>>& fields) {
    for (const auto& [key, value] : fields) std::cout << key << '=' << value << '\n';
}

struct PatternSource {
    std::optional<std::string> single;
    std::string file;

    std::vector<std::string> load() const {
        if (single) return {*single};
        return split_lines(read_file(file));
    }
};

void add_pattern_flags(CLI::App* cmd, PatternSource& src) {
    auto* one = cmd->add_option("--pattern", src.single, "Query pattern given inline");
    auto* many = cmd->add_option("--patterns-file", src.file, "File with one pattern per line");
    one->excludes(many);
    many->excludes(one);
}

void require_pattern_source(const CLI::App* cmd, const PatternSource& src) {
    if (!src.single && src.file.empty()) {
        throw CLI::RequiredError(cmd->get_name() + " requires --pattern or --patterns-file");
    }
}

int cmd_build(const std::string& text_path, double epsilon, const std::string& out_path,
              const std::optional<uint64_t>& seed, const std::optional<uint64_t>& max_pattern_len,
              bool as_json) {
    const std::string text = read_file(text_path);
    alcs::BuildOptions options;
    options.seed = resolve_seed(seed, std::nullopt);
    options.max_pattern_len = max_pattern_len;
    const auto start = Clock::now();
    const alcs::AlcsIndex index = alcs::build_index(text, epsilon, options);
    const double build_seconds = seconds_since(start);
    const uint64_t bytes = alcs::save_index_file(index, out_path);
    if (as_json) {
        std::cout << json{{"n", index.n},
                          {"z", index.z},
                          {"lengths", index.lengths.values.size()},
                          {"left_entries", index.map_left.entry_count()},
                          {"right_entries", index.map_right.entry_count()},
                          {"bytes", bytes},
                          {"seed", index.build_seed},
                          {"build_seconds", build_seconds}}
                         .dump()
                  << '\n';
    } else {
        emit_kv({{"n", std::to_string(index.n)},
                 {"z", std::to_string(index.z)},
                 {"lengths", std::to_string(index.lengths.values.size())},
                 {"left_entries", std::to_string(index.map_left.entry_count())},
                 {"right_entries", std::to_string(index.map_right.entry_count())},
                 {"bytes", std::to_string(bytes)},
                 {"seed", std::to_string(index.build_seed)},
                 {"build_seconds", format_double(build_seconds)}});
    }
    return 0;
}

int cmd_query(const std::string& index_path, const PatternSource& src, const std::string& algo,
              bool verify, const std::string& text_path, int threads, bool as_json) {
    if (verify && text_path.empty()) {
        throw std::runtime_error("--verify requires --text");
    }
    const alcs::AlcsIndex index = alcs::load_index_file(index_path);
    const std::vector<std::string> patterns = src.load();
    const std::string text = text_path.empty() ? std::string() : read_file(text_path);
    const bool naive = algo == "naive";

    std::vector<alcs::QueryResult> results(patterns.size());
    const size_t workers =
        std::min<size_t>(std::max(threads, 1), std::max<size_t>(patterns.size(), 1));
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (;;) {
            const size_t q = next.fetch_add(1);
            if (q >= patterns.size()) return;
            results[q] = naive ? alcs::query_naive(index, patterns[q])
                               : alcs::query_pruned(index, patterns[q]);
        }
    };
    std::vector<std::thread> pool;
    for (size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();

    int exit_code = 0;
    json rows = json::array();
    for (size_t q = 0; q < results.size(); ++q) {
        const alcs::QueryResult& r = results[q];
        if (verify && !alcs::verify_result(r, patterns[q], text)) {
            std::cerr << "verify failed: pattern " << q + 1 << '\n';
            exit_code = 2;
        }
        const std::string sub =
            r.length == 0 ? std::string() : patterns[q].substr(r.p_start - 1, r.length);
        if (as_json) {
            json row{{"ordinal", q + 1}, {"length", r.length}};
            if (r.length == 0) {
                row["p_start"] = nullptr;
                row["p_end"] = nullptr;
                row["t_pos"] = nullptr;
                row["substring_hex"] = nullptr;
            } else {
                row["p_start"] = r.p_start;
                row["p_end"] = r.p_end;
                row["t_pos"] = *r.t_pos;
                row["substring_hex"] = hex_encode(sub);
            }
            rows.push_back(std::move(row));
        } else {
            std::cout << q + 1 << '\t' << r.length;
            if (r.length == 0) {
                std::cout << "\t-\t-\t-\t-\n";
            } else {
                std::cout << '\t' << r.p_start << '\t' << r.p_end << '\t' << *r.t_pos << '\t'
                          << hex_encode(sub) << '\n';
            }
        }
    }
    if (as_json) std::cout << rows.dump() << '\n';
    return exit_code;
}

int cmd_oracle(const std::string& text_path, const PatternSource& src, bool as_json) {
    const std::string text = read_file(text_path);
    const std::vector<std::string> patterns = src.load();
    json rows = json::array();
    for (size_t q = 0; q < patterns.size(); ++q) {
        const alcs::LcsAnswer ans = alcs::exact_lcs(patterns[q], text);
        if (as_json) {
            json row{{"ordinal", q + 1}, {"length", ans.length}};
            if (ans.length == 0) {
                row["p_start"] = nullptr;
                row["p_end"] = nullptr;
                row["t_start"] = nullptr;
                row["t_end"] = nullptr;
            } else {
                row["p_start"] = ans.p_start;
                row["p_end"] = ans.p_end;
                row["t_start"] = ans.t_start;
                row["t_end"] = ans.t_end;
            }
            rows.push_back(std::move(row));
        } else {
            std::cout << q + 1 << '\t' << ans.length;
            if (ans.length == 0) {
                std::cout << "\t-\t-\t-\t-\n";
            } else {
                std::cout << '\t' << ans.p_start << '\t' << ans.p_end << '\t' << ans.t_start
                          << '\t' << ans.t_end << '\n';
            }
        }
    }
    if (as_json) std::cout << rows.dump() << '\n';
    return 0;
}

int cmd_gen(const std::string& out_path, const alcs::CorpusSpec& spec, bool as_json) {
    const std::string text = alcs::generate_corpus(spec);
    write_file(out_path, text);
    if (as_json) {
        std::cout << json{{"bytes", text.size()}, {"seed", spec.seed}}.dump() << '\n';
    } else {
        emit_kv({{"bytes", std::to_string(text.size())}, {"seed", std::to_string(spec.seed)}});
    }
    return 0;
}

int cmd_bench(const std::string& text_path, double epsilon, const std::optional<uint64_t>& seed,
              const std::optional<uint64_t>& max_pattern_len, const std::string& patterns_path,
              const std::string& algo, bool as_json) {
    const std::string text = read_file(text_path);
    alcs::BuildOptions options;
    options.seed = resolve_seed(seed, std::nullopt);
    options.max_pattern_len = max_pattern_len;
    const auto build_start = Clock::now();
    const alcs::AlcsIndex index = alcs::build_index(text, epsilon, options);
    const double build_seconds = seconds_since(build_start);
    const uint64_t index_bytes = alcs::serialize_index(index).size();

    const std::vector<std::string> patterns = split_lines(read_file(patterns_path));
    const bool naive = algo == "naive";
    std::vector<double> latencies;
    latencies.reserve(patterns.size());
    alcs::QueryStats totals;
    for (const std::string& pattern : patterns) {
        alcs::QueryStats stats;
        const auto start = Clock::now();
        if (naive) {
            alcs::query_naive(index, pattern, &stats);
        } else {
            alcs::query_pruned(index, pattern, &stats);
        }
        latencies.push_back(seconds_since(start));
        totals += stats;
    }
    std::sort(latencies.begin(), latencies.end());
    const size_t count = latencies.size();
    auto quantile = [&](double q) {
        if (count == 0) return 0.0;
        const size_t rank = std::min(count - 1, static_cast<size_t>(q * static_cast<double>(count)));
        return latencies[rank];
    };
    double total_seconds = 0;
    for (double v : latencies) total_seconds += v;
    const double denom = count == 0 ? 1.0 : static_cast<double>(count);

    if (as_json) {
        std::cout << json{{"algo", naive ? "naive" : "pruned"},
                          {"build_seconds", build_seconds},
                          {"index_bytes", index_bytes},
                          {"text_bytes", text.size()},
                          {"patterns", count},
                          {"mean_query_seconds", total_seconds / denom},
                          {"median_query_seconds", quantile(0.5)},
                          {"p99_query_seconds", quantile(0.99)},
                          {"total_grid_checks", totals.grid_checks},
                          {"mean_grid_checks",
                           static_cast<double>(totals.grid_checks) / denom},
                          {"total_map_lookups", totals.map_lookups}}
                         .dump()
                  << '\n';
    } else {
        emit_kv({{"algo", naive ? "naive" : "pruned"},
                 {"build_seconds", format_double(build_seconds)},
                 {"index_bytes", std::to_string(index_bytes)},
                 {"text_bytes", std::to_string(text.size())},
                 {"patterns", std::to_string(count)},
                 {"mean_query_seconds", format_double(total_seconds / denom)},
                 {"median_query_seconds", format_double(quantile(0.5))},
                 {"p99_query_seconds", format_double(quantile(0.99))},
                 {"total_grid_checks", std::to_string(totals.grid_checks)},
                 {"mean_grid_checks",
                  format_double(static_cast<double>(totals.grid_checks) / denom)},
                 {"total_map_lookups", std::to_string(totals.map_lookups)}});
    }
    return 0;
}

int cmd_stats(const std::string& index_path, bool as_json) {
    const std::string bytes = read_file(index_path);
    const alcs::AlcsIndex index = alcs::deserialize_index(bytes);
    if (as_json) {
        std::cout << json{{"version", 1},
                          {"epsilon", index.epsilon},
                          {"n", index.n},
                          {"z", index.z},
                          {"base", index.kr.base},
                          {"seed", index.build_seed},
                          {"max_len", index.lengths.max_len},
                          {"lengths", index.lengths.values.size()},
                          {"left_entries", index.map_left.entry_count()},
                          {"right_entries", index.map_right.entry_count()},
                          {"file_bytes", bytes.size()}}
                         .dump()
                  << '\n';
    } else {
        emit_kv({{"version", "1"},
                 {"epsilon", format_double(index.epsilon)},
                 {"n", std::to_string(index.n)},
                 {"z", std::to_string(index.z)},
                 {"base", std::to_string(index.kr.base)},
                 {"seed", std::to_string(index.build_seed)},
                 {"max_len", std::to_string(index.lengths.max_len)},
                 {"lengths", std::to_string(index.lengths.values.size())},
                 {"left_entries", std::to_string(index.map_left.entry_count())},
                 {"right_entries", std::to_string(index.map_right.entry_count())},
                 {"file_bytes", std::to_string(bytes.size())}});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximately-longest-common-substring index over the LZ77 parse"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit reports as JSON")->configurable(false);

    auto* build = app.add_subcommand("build", "Build an index from a text file");
    std::string build_text;
    std::string build_out;
    double build_epsilon = 0.1;
    std::optional<uint64_t> build_seed;
    std::optional<uint64_t> build_max_len;
    build->add_option("--text", build_text, "Text file to index")->required();
    build->add_option("--out", build_out, "Index file to write")->required();
    build->add_option("--epsilon", build_epsilon, "Approximation parameter in (0,1)");
    build->add_option("--seed", build_seed, "Fingerprint seed");
    build->add_option("--max-pattern-len", build_max_len, "Cap on supported pattern length");

    auto* query = app.add_subcommand("query", "Query an index");
    std::string query_index;
    std::string query_algo = "pruned";
    std::string query_text;
    bool query_verify = false;
    int query_threads = 1;
    PatternSource query_patterns;
    query->add_option("--index", query_index, "Index file")->required();
    add_pattern_flags(query, query_patterns);
    query->add_option("--algo", query_algo, "Query algorithm")
        ->check(CLI::IsMember({"naive", "pruned"}));
    query->add_flag("--verify", query_verify, "Re-check answers against --text");
    query->add_option("--text", query_text, "Original text file (for --verify)");
    query->add_option("--threads", query_threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* oracle = app.add_subcommand("oracle", "Exact LCS against a text file");
    std::string oracle_text;
    PatternSource oracle_patterns;
    oracle->add_option("--text", oracle_text, "Text file")->required();
    add_pattern_flags(oracle, oracle_patterns);

    auto* gen = app.add_subcommand("gen", "Generate a repetitive corpus");
    std::string gen_out;
    alcs::CorpusSpec gen_spec;
    std::optional<uint64_t> gen_seed;
    gen->add_option("--out", gen_out, "Corpus file to write")->required();
    gen->add_option("--base-len", gen_spec.base_len, "Base block length");
    gen->add_option("--repeats", gen_spec.repeats, "Number of block copies");
    gen->add_option("--mut-rate", gen_spec.mut_rate, "Per-position mutation probability");
    gen->add_option("--alphabet", gen_spec.alphabet, "Alphabet size (1..26)");
    gen->add_option("--seed", gen_seed, "Generator seed");

    auto* bench = app.add_subcommand("bench", "Build and time queries");
    std::string bench_text;
    std::string bench_patterns;
    std::string bench_algo = "pruned";
    double bench_epsilon = 0.1;
    std::optional<uint64_t> bench_seed;
    std::optional<uint64_t> bench_max_len;
    bench->add_option("--text", bench_text, "Text file to index")->required();
    bench->add_option("--patterns-file", bench_patterns, "File with one pattern per line")
        ->required();
    bench->add_option("--epsilon", bench_epsilon, "Approximation parameter in (0,1)");
    bench->add_option("--seed", bench_seed, "Fingerprint seed");
    bench->add_option("--max-pattern-len", bench_max_len, "Cap on supported pattern length");
    bench->add_option("--algo", bench_algo, "Query algorithm")
        ->check(CLI::IsMember({"naive", "pruned"}));

    auto* stats = app.add_subcommand("stats", "Print index file header fields");
    std::string stats_index;
    stats->add_option("--index", stats_index, "Index file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            return cmd_build(build_text, build_epsilon, build_out, build_seed, build_max_len,
                             as_json);
        }
        if (query->parsed()) {
            require_pattern_source(query, query_patterns);
            return cmd_query(query_index, query_patterns, query_algo, query_verify, query_text,
                             query_threads, as_json);
        }
        if (oracle->parsed()) {
            require_pattern_source(oracle, oracle_patterns);
            return cmd_oracle(oracle_text, oracle_patterns, as_json);
        }
        if (gen->parsed()) {
            gen_spec.seed = resolve_seed(gen_seed, gen_spec.seed).value();
            return cmd_gen(gen_out, gen_spec, as_json);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_text, bench_epsilon, bench_seed, bench_max_len, bench_patterns,
                             bench_algo, as_json);
        }
        if (stats->parsed()) {
            return cmd_stats(stats_index, as_json);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "alcs: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "alcs: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
