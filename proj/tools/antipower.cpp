// Command-line front end: single-value queries, CSV sweeps, and the
// verification suites. Exit codes: 0 success, 1 computational failure or
// unwritable output, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "antipower/anti_power.hpp"
#include "antipower/errors.hpp"
#include "antipower/scan.hpp"
#include "antipower/tm.hpp"
#include "antipower/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

unsigned default_threads() {
    if (const char* env = std::getenv("ANTIPOWER_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void print_value(const nlohmann::json& input, std::uint64_t value,
                 const nlohmann::json& witness, bool json) {
    if (json) {
        nlohmann::json out{{"input", input}, {"value", value}, {"witness", witness}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value << "\n";
    }
}

int run_scan_command(const std::string& stat_name, std::uint64_t from, std::uint64_t to,
                     bool odd, const std::string& out_path, unsigned threads) {
    antipower::ScanStatistic stat;
    if (stat_name == "gamma") {
        stat = antipower::ScanStatistic::gamma;
    } else if (stat_name == "big-gamma") {
        stat = antipower::ScanStatistic::big_gamma;
    } else {
        stat = antipower::ScanStatistic::kappa;
        odd = true; // kappa is an odd-m statistic
    }
    std::uint64_t stride = 1;
    if (odd) {
        if (from % 2 == 0) ++from;
        stride = 2;
    }
    auto rows = antipower::run_scan(stat, from, to, stride, threads);
    if (out_path.empty()) {
        antipower::write_csv(std::cout, rows);
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitFailure;
    }
    antipower::write_csv(file, rows);
    file.flush();
    if (!file) {
        std::cerr << "error: write to " << out_path << " failed\n";
        return kExitFailure;
    }
    return kExitOk;
}

int run_verify_command(const std::string& suite, const antipower::VerifyOptions& opts,
                       bool json) {
    auto reports = antipower::run_verify_suite(suite, opts);
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports)
            out.push_back({{"check", r.check},
                           {"swept", r.swept},
                           {"passed", r.passed},
                           {"failed", r.failed},
                           {"first_failure", r.first_failure},
                           {"seconds", r.seconds}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.failed == 0 ? "PASS " : "FAIL ") << r.check
                      << "  swept=" << r.swept << " passed=" << r.passed
                      << " failed=" << r.failed;
            char buf[32];
            std::snprintf(buf, sizeof buf, "  (%.2fs)", r.seconds);
            std::cout << buf << "\n";
            if (r.failed != 0) std::cout << "     first failure: " << r.first_failure << "\n";
        }
    }
    return antipower::all_passed(reports) ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-power structure of Thue-Morse prefixes"};
    app.require_subcommand(1);

    std::uint64_t index = 0, alpha = 0, beta = 0, length = 0, m = 0, k = 0;
    std::uint64_t lambda = 1;
    bool json = false;

    auto* letter_cmd = app.add_subcommand("letter", "print the i-th letter (1-based)");
    letter_cmd->add_option("i", index)->required()->check(CLI::PositiveNumber);

    auto* factor_cmd = app.add_subcommand("factor", "print the factor <alpha,beta>");
    factor_cmd->add_option("alpha", alpha)->required()->check(CLI::PositiveNumber);
    factor_cmd->add_option("beta", beta)->required()->check(CLI::PositiveNumber);

    auto* prefix_cmd = app.add_subcommand("prefix", "print the prefix of length n");
    prefix_cmd->add_option("n", length)->required()->check(CLI::PositiveNumber);

    auto* kappa_cmd = app.add_subcommand("kappa", "smallest k whose length-k*m prefix repeats a block");
    kappa_cmd->add_option("m", m)->required()->check(CLI::PositiveNumber);
    kappa_cmd->add_option("--lambda", lambda, "allow each block value up to lambda occurrences")
        ->check(CLI::PositiveNumber);
    kappa_cmd->add_flag("--json", json);

    auto* gamma_cmd = app.add_subcommand("gamma", "smallest odd member of F(k)");
    gamma_cmd->add_option("k", k)->required()->check(CLI::PositiveNumber);
    gamma_cmd->add_flag("--json", json);

    auto* big_gamma_cmd = app.add_subcommand("big-gamma", "largest odd non-member of F(k), k >= 3");
    big_gamma_cmd->add_option("k", k)->required()->check(CLI::PositiveNumber);
    big_gamma_cmd->add_flag("--json", json);

    auto* complement_cmd = app.add_subcommand("complement", "all odd non-members of F(k), k >= 3");
    complement_cmd->add_option("k", k)->required()->check(CLI::PositiveNumber);
    complement_cmd->add_flag("--json", json);

    std::string stat = "kappa", out_path;
    std::uint64_t from = 1, to = 1;
    bool odd = false;
    unsigned threads = default_threads();
    auto* scan_cmd = app.add_subcommand("scan", "sweep a statistic over a key range, CSV output");
    scan_cmd->add_option("--stat", stat)->required()
        ->check(CLI::IsMember({"gamma", "big-gamma", "kappa"}));
    scan_cmd->add_option("--from", from)->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--to", to)->required()->check(CLI::PositiveNumber);
    scan_cmd->add_flag("--odd", odd, "restrict keys to odd values");
    scan_cmd->add_option("--out", out_path, "output file (default: stdout)");
    scan_cmd->add_option("--threads", threads, "worker threads (default: ANTIPOWER_THREADS or hardware)");

    std::string suite = "all";
    antipower::VerifyOptions vopts;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"prop1", "lemma1", "families", "kappa-bounds", "lemma9", "theorems", "all"}));
    verify_cmd->add_option("--max-m", vopts.max_m)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-k", vopts.max_k)->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*letter_cmd) {
            std::cout << to_char(antipower::tm::letter_at(index)) << "\n";
        } else if (*factor_cmd) {
            std::cout << antipower::tm::factor({alpha, beta}).str() << "\n";
        } else if (*prefix_cmd) {
            std::cout << antipower::tm::prefix(length).str() << "\n";
        } else if (*kappa_cmd) {
            if (lambda == 1) {
                auto result = antipower::kappa(m);
                print_value(m, result.kappa,
                            nlohmann::json::array({result.witness.first, result.witness.second}),
                            json);
            } else {
                print_value(nlohmann::json{{"m", m}, {"lambda", lambda}},
                            antipower::kappa_lambda(m, lambda), nullptr, json);
            }
        } else if (*gamma_cmd) {
            print_value(k, antipower::gamma(k), nullptr, json);
        } else if (*big_gamma_cmd) {
            print_value(k, antipower::big_gamma(k), nullptr, json);
        } else if (*complement_cmd) {
            auto set = antipower::complement_set(k);
            if (json) {
                nlohmann::json out{{"input", k}, {"value", set.members}, {"witness", nullptr}};
                std::cout << out.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < set.members.size(); ++i)
                    std::cout << (i ? "," : "") << set.members[i];
                std::cout << "\n";
            }
        } else if (*scan_cmd) {
            return run_scan_command(stat, from, to, odd, out_path, threads);
        } else if (*verify_cmd) {
            return run_verify_command(suite, vopts, json);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const antipower::falsification_error& e) {
        std::cerr << "falsified: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}
