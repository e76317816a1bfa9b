// Command-line front end: analyze | sweep | verify | generate.
// Exit codes: 0 success, 1 parameter/usage errors, 2 oracle disagreement or
// a failed verdict on a claim with a sound published proof.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dhseq/analyzer.hpp"
#include "dhseq/report_io.hpp"

namespace {

using namespace dhseq;

struct CommonOpts {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::string pairs_file;
    std::uint64_t max_n = 0;
    std::string format = "text";
    bool emit_sequence = false;
    std::string output;
};

int write_out(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 1;
    }
    out << body;
    return out ? 0 : 1;
}

std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>> read_pairs_file(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open pairs file: " << path << "\n";
        return std::nullopt;
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::uint64_t p = 0, q = 0;
        if (!(fields >> p)) continue;  // blank or comment-only line
        std::string trailing;
        if (!(fields >> q) || (fields >> trailing)) {
            std::cerr << "error: " << path << ":" << lineno
                      << ": expected exactly two integers per line\n";
            return std::nullopt;
        }
        pairs.emplace_back(p, q);
    }
    return pairs;
}

int exit_code_for(const AnalysisReport& rep) {
    return rep.hard_failure() ? 2 : 0;
}

int run_analyze_like(const CommonOpts& opts, bool verify_only) {
    const auto format = format_from_string(opts.format);
    if (!format) {
        std::cerr << "error: unknown format: " << opts.format << "\n";
        return 1;
    }
    AnalysisReport rep;
    try {
        rep = analyze(opts.p, opts.q);
    } catch (const OracleDisagreementError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    if (verify_only) {
        std::ostringstream brief;
        brief << "pair (" << rep.params.p << ", " << rep.params.q << "): lc = " << rep.lc_gcd
              << ", bound = " << rep.theorem_bound << ", theorem "
              << (rep.theorem_holds ? "holds" : "VIOLATED") << "\n";
        for (const LemmaVerdict& v : rep.verdicts) {
            brief << "  " << to_string(v.claim) << " [" << to_string(v.reading)
                  << "]: " << to_string(v.status) << "\n";
        }
        const int rc = write_out(opts.output, brief.str());
        return rc != 0 ? rc : exit_code_for(rep);
    }
    const int rc = write_out(opts.output, render_report(rep, *format, opts.emit_sequence));
    return rc != 0 ? rc : exit_code_for(rep);
}

int run_sweep(const CommonOpts& opts) {
    const auto format = format_from_string(opts.format);
    if (!format) {
        std::cerr << "error: unknown format: " << opts.format << "\n";
        return 1;
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    if (!opts.pairs_file.empty()) {
        auto loaded = read_pairs_file(opts.pairs_file);
        if (!loaded) return 1;
        pairs = std::move(*loaded);
    }
    if (opts.max_n != 0) {
        auto ranged = pairs_up_to(opts.max_n);
        pairs.insert(pairs.end(), ranged.begin(), ranged.end());
    }
    if (pairs.empty()) {
        std::cerr << "error: sweep needs --pairs-file or --max-n with at least one pair\n";
        return 1;
    }
    const std::vector<SweepItem> items = sweep(pairs);
    const int rc = write_out(opts.output, render_sweep(items, *format, opts.emit_sequence));
    if (rc != 0) return rc;
    for (const SweepItem& item : items) {
        if (!item.report) continue;
        if (item.report->hard_failure()) return 2;
    }
    // A pair that failed to analyze at all is a parameter-level problem.
    for (const SweepItem& item : items) {
        if (!item.report) return 1;
    }
    return 0;
}

int run_generate(const CommonOpts& opts) {
    try {
        const Params params = derive_params(opts.p, opts.q);
        const CyclotomicPartition part = build_partition(params);
        const BinarySequence seq = generate(part);
        std::string body = bit_string(seq) + "\n" + hex_string(seq) + "\n";
        return write_out(opts.output, body);
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}

void add_pair_options(CLI::App* cmd, CommonOpts& opts, bool required) {
    cmd->add_option("--p", opts.p, "smaller odd prime")->required(required);
    cmd->add_option("--q", opts.q, "larger odd prime")->required(required);
}

void add_output_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format: json, csv or text")
        ->default_val("text");
    cmd->add_option("--output", opts.output, "write to this file instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ding-Helleseth generalized cyclotomic sequence analyzer"};
    app.require_subcommand(1);
    CommonOpts opts;

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "full report (three LC oracles + all claim verdicts)");
    add_pair_options(analyze_cmd, opts, true);
    add_output_options(analyze_cmd, opts);
    analyze_cmd->add_flag("--emit-sequence", opts.emit_sequence,
                          "attach one full period of the sequence");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "analyze many pairs");
    sweep_cmd->add_option("--pairs-file", opts.pairs_file,
                          "file with one 'p q' pair per line, # starts a comment");
    sweep_cmd->add_option("--max-n", opts.max_n, "include all odd prime pairs with pq <= max-n");
    add_output_options(sweep_cmd, opts);
    sweep_cmd->add_flag("--emit-sequence", opts.emit_sequence,
                        "attach one full period per pair");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "claim verdict summary with exit status");
    add_pair_options(verify_cmd, opts, true);
    verify_cmd->add_option("--output", opts.output,
                           "write to this file instead of standard output");

    CLI::App* generate_cmd =
        app.add_subcommand("generate", "print one period as bits and packed hex");
    add_pair_options(generate_cmd, opts, true);
    generate_cmd->add_option("--output", opts.output,
                             "write to this file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // usage problems map to exit 1
    }

    try {
        if (app.got_subcommand(analyze_cmd)) return run_analyze_like(opts, false);
        if (app.got_subcommand(verify_cmd)) return run_analyze_like(opts, true);
        if (app.got_subcommand(sweep_cmd)) return run_sweep(opts);
        if (app.got_subcommand(generate_cmd)) return run_generate(opts);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand selected\n";
    return 1;
}
