// Command-line driver: runs the verification suite or named subsets and emits
// deterministic JSON / Markdown reports.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modcubic/checks.hpp"

#ifndef MODCUBIC_DATA_DIR
#define MODCUBIC_DATA_DIR "data"
#endif

namespace {

int run_verify(const modcubic::checks::Options& opt, const std::vector<std::string>& patterns,
               int jobs, long long timeout_ms) {
    auto registry = modcubic::checks::build_registry(opt);
    std::vector<modcubic::checks::CheckResult> results;
    for (const auto& pattern : patterns) {
        auto part = modcubic::checks::run_checks(registry, pattern, jobs, timeout_ms);
        if (part.empty())
            std::cerr << "warning: filter '" << pattern << "' matches no checks\n";
        for (auto& r : part) results.push_back(std::move(r));
    }
    std::size_t pass = 0, fail = 0, inconclusive = 0;
    for (const auto& r : results) {
        if (r.status == "pass") ++pass;
        else if (r.status == "inconclusive") ++inconclusive;
        else ++fail;
        std::cout << (r.status == "pass" ? "[pass] " : r.status == "fail" ? "[FAIL] "
                                                                          : "[inc.] ")
                  << r.check_id << " (" << r.runtime_ms << " ms)";
        if (r.status != "pass")
            std::cout << "\n       expected: " << r.expected
                      << "\n       computed: " << r.computed;
        std::cout << "\n";
    }
    std::cout << results.size() << " checks: " << pass << " passed, " << fail << " failed, "
              << inconclusive << " inconclusive\n";
    return modcubic::checks::exit_code(results);
}

int run_report(const modcubic::checks::Options& opt, const std::string& format,
               const std::string& out_path, const std::string& filter, int jobs,
               long long timeout_ms) {
    auto registry = modcubic::checks::build_registry(opt);
    auto results = modcubic::checks::run_checks(registry, filter, jobs, timeout_ms);
    if (results.empty()) {
        std::cerr << "warning: filter '" << filter << "' matches no checks\n";
        return 1;
    }
    std::string payload = format == "json" ? modcubic::checks::emit_json(results)
                                           : modcubic::checks::emit_markdown(results);
    if (out_path == "-") {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << payload;
    }
    return modcubic::checks::exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suite for the cubic-surface moduli compactifications"};
    app.require_subcommand(1);

    unsigned conductor = 24;
    int jobs = 1;
    long long timeout_ms = 30000;
    std::string data_dir = MODCUBIC_DATA_DIR;
    app.add_option("--conductor", conductor, "cyclotomic conductor (multiple of 24)");
    app.add_option("--jobs", jobs, "number of concurrent checks");
    app.add_option("--timeout-ms", timeout_ms, "per-check time budget in milliseconds");
    app.add_option("--data", data_dir, "fixture directory");

    auto* verify = app.add_subcommand("verify", "run all checks or a name-glob subset");
    std::vector<std::string> patterns;
    verify->add_option("pattern", patterns, "check id globs, e.g. ledger.* (default: all)");

    auto* report = app.add_subcommand("report", "run checks and write a report");
    std::string format = "json";
    std::string out_path = "-";
    std::string filter = "all";
    report->add_option("--format", format, "json or md")
        ->check(CLI::IsMember({"json", "md"}));
    report->add_option("--out", out_path, "output path ('-' for stdout)");
    report->add_option("--filter", filter, "check id glob");

    CLI11_PARSE(app, argc, argv);

    try {
        modcubic::checks::Options opt{conductor, data_dir};
        if (verify->parsed()) {
            if (patterns.empty()) patterns.push_back("all");
            return run_verify(opt, patterns, jobs, timeout_ms);
        }
        return run_report(opt, format, out_path, filter, jobs, timeout_ms);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
