// End-to-end acceptance suite. Runs numbered criteria against the library
// and the real CLI binary and prints one PASS/FAIL line per criterion.
//
//   acceptance <path-to-cli> [criterion ...]
//
// With no criterion arguments, all of them run. Exit status is the number
// of failed criteria.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include "antipower/anti_power.hpp"
#include "antipower/intmath.hpp"
#include "antipower/scan.hpp"
#include "antipower/theory.hpp"
#include "antipower/tm.hpp"
#include "oracle.hpp"

using namespace antipower;

namespace {

std::string g_cli;
std::filesystem::path g_tmp;

struct Criterion {
    int number;
    std::string description;
    std::function<bool(std::string&)> run;
};

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
    std::string cmd = g_cli + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot spawn: " + cmd);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(status);
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CsvRow {
    std::uint64_t key;
    std::uint64_t value;
};

std::vector<CsvRow> parse_csv(const std::string& text) {
    std::vector<CsvRow> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        rows.push_back({std::stoull(line.substr(0, c1)),
                        std::stoull(line.substr(c1 + 1, c2 - c1 - 1))});
    }
    return rows;
}

bool expect(bool ok, std::string& detail, const std::string& note) {
    if (!ok && detail.empty()) detail = note;
    return ok;
}

// --- criterion 1: exact small-scale values, library and CLI ----------------

bool criterion1(std::string& detail) {
    bool ok = true;
    ok &= expect(tm::prefix(9).str() == "011010011", detail, "prefix(9) wrong");
    auto rep = is_k_anti_power_prefix({3, 3});
    ok &= expect(!rep.is_anti_power && rep.first_collision &&
                     *rep.first_collision == std::pair<std::uint64_t, std::uint64_t>{0, 2},
                 detail, "3-block verdict or witness wrong");
    ok &= expect(complement_set(6).members == std::vector<std::uint64_t>{1, 3, 9}, detail,
                 "complement_set(6) != {1,3,9}");
    int code = -1;
    std::string out = run_cli("complement 6", &code);
    ok &= expect(code == 0 && out == "1,3,9\n", detail, "CLI complement 6 printed " + out);
    return ok;
}

// --- criterion 2: oracle equivalence ----------------------------------------

bool criterion2(std::string& detail) {
    bool ok = true;
    for (std::uint64_t m = 1; m <= 99 && ok; m += 2) {
        for (std::uint64_t k = 1; k <= 64 && ok; ++k) {
            auto fast = is_k_anti_power_prefix({m, k});
            auto ref = oracle::naive_is_anti_power(m, k, 0);
            ok &= expect(fast.is_anti_power == ref.is_anti_power &&
                             fast.first_collision == ref.first_collision,
                         detail,
                         "mismatch at m=" + std::to_string(m) + " k=" + std::to_string(k));
        }
    }
    for (std::uint64_t m = 1; m <= 99 && ok; m += 2)
        ok &= expect(kappa(m).kappa == oracle::naive_kappa(m), detail,
                     "kappa mismatch at m=" + std::to_string(m));
    return ok;
}

// --- criterion 3: gap divisibility and witnesses ----------------------------

bool criterion3(std::string& detail) {
    bool ok = true;
    for (std::uint64_t m = 2; m <= 64 && ok; ++m) {
        ok &= expect(theory::check_prop1_i(m, 1 << 12).holds, detail,
                     "gap divisibility fails at m=" + std::to_string(m));
        auto w = theory::prop1_ii_witness(m);
        bool verified =
            w.verdict.holds &&
            tm::factor({w.position, w.position + m - 1}) ==
                tm::factor({w.position + w.gap, w.position + w.gap + m - 1}) &&
            w.gap % (std::uint64_t{1} << (delta_of(m) + 1)) != 0;
        ok &= expect(verified, detail, "witness fails at m=" + std::to_string(m));
    }
    return ok;
}

// --- criterion 4: the three families and the alpha=3 cross-check ------------

bool criterion4(std::string& detail) {
    bool ok = true;
    auto check_family = [&](theory::Family fam, unsigned lo, unsigned hi, const char* name) {
        for (unsigned i = lo; i <= hi && ok; ++i) {
            auto fp = theory::family_params({fam, i});
            auto v = theory::check_lemma1(fp.lemma);
            ok &= expect(v.holds && !v.vacuous, detail,
                         std::string(name) + " construction fails at index " + std::to_string(i));
        }
    };
    check_family(theory::Family::k_alpha, 3, 8, "k_alpha");
    check_family(theory::Family::big_k_beta, 9, 11, "K_beta");
    check_family(theory::Family::kappa_rho, 4, 16, "kappa_rho");
    ok &= expect(big_gamma(74) >= 185, detail, "Gamma(74) < 185");
    ok &= expect(185 <= 3 * 74 - 4, detail, "185 above the linear bound");
    ok &= expect(kappa(185).kappa <= 74, detail, "direct K(185) > 74");
    return ok;
}

// --- criterion 5: kappa bounds ----------------------------------------------

bool criterion5(std::string& detail) {
    bool ok = true;
    for (std::uint64_t m = 1; m <= 999 && ok; m += 2) {
        std::uint64_t K = kappa(m).kappa;
        unsigned ell = ell_of(m);
        ok &= expect(K >= (std::uint64_t{1} << delta_of(m)) + 1, detail,
                     "lower bound fails at m=" + std::to_string(m));
        std::uint64_t base = (std::uint64_t{1} << ell) + 10;
        ok &= expect(K <= base || lt_pow2_half(K - base, ell + 5), detail,
                     "upper bound fails at m=" + std::to_string(m));
    }
    for (unsigned ell = 3; ell <= 9 && ok; ++ell)
        ok &= expect(theory::check_lemma9(ell).holds, detail,
                     "strict lower bound fails at ell=" + std::to_string(ell));
    return ok;
}

// --- criterion 6: theorem scaffolding ----------------------------------------

bool criterion6(std::string& detail) {
    bool ok = true;
    std::uint64_t prev_gamma = 0, prev_big = 0;
    std::vector<std::uint64_t> prev_members;
    for (std::uint64_t k = 3; k <= 135 && ok; ++k) {
        std::uint64_t G = big_gamma(k);
        std::uint64_t g = antipower::gamma(k);
        ok &= expect(G <= 3 * k - 4, detail, "Gamma(" + std::to_string(k) + ") > 3k-4");
        if (std::has_single_bit(k))
            ok &= expect(2 * G <= 3 * k, detail,
                         "Gamma above 3k/2 at k=" + std::to_string(k));
        ok &= expect(g >= prev_gamma && G >= prev_big, detail,
                     "monotonicity fails at k=" + std::to_string(k));
        auto members = complement_set(k).members;
        ok &= expect(std::includes(members.begin(), members.end(), prev_members.begin(),
                                   prev_members.end()),
                     detail, "nesting fails at k=" + std::to_string(k));
        prev_gamma = g;
        prev_big = G;
        prev_members = std::move(members);
    }
    for (unsigned ell = 3; ell <= 8 && ok; ++ell) {
        ok &= expect(antipower::gamma(theory::envelope_f(ell)) <= 3 * (std::uint64_t{1} << (ell - 2)) + 1,
                     detail, "gamma(f(ell)) fails at ell=" + std::to_string(ell));
        ok &= expect(antipower::gamma(theory::envelope_g(ell)) >= (std::uint64_t{1} << ell) + 1, detail,
                     "gamma(g(ell)) fails at ell=" + std::to_string(ell));
        ok &= expect(theory::envelope_h(ell) < theory::envelope_f(ell) &&
                         theory::envelope_f(ell) <= theory::envelope_h(ell + 1),
                     detail, "envelope ordering fails at ell=" + std::to_string(ell));
    }
    return ok;
}

// --- criterion 7: figure-scale scans and ratio bands -------------------------

bool criterion7(std::string& detail) {
    bool ok = true;
    unsigned threads = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
    std::string topt = " --threads " + std::to_string(threads);

    auto gamma_csv = g_tmp / "accept_gamma.csv";
    int code = -1;
    run_cli("scan --stat gamma --from 3 --to 2100 --out " + gamma_csv.string() + topt, &code);
    ok &= expect(code == 0, detail, "gamma scan did not complete");
    auto gamma_rows = parse_csv(slurp(gamma_csv));
    ok &= expect(gamma_rows.size() == 2098, detail, "gamma scan row count");
    std::string out_of_band;
    for (const auto& row : gamma_rows) {
        // 0.4 < value/key < 1.6, compared in integers.
        if (!(5 * row.value > 2 * row.key && 5 * row.value < 8 * row.key))
            out_of_band += " k=" + std::to_string(row.key) + " gamma=" + std::to_string(row.value);
    }
    if (!out_of_band.empty()) {
        ok = false;
        detail += (detail.empty() ? "" : "; ");
        detail += "gamma ratios outside (0.4,1.6):" + out_of_band;
    }

    auto big_csv = g_tmp / "accept_big_gamma.csv";
    run_cli("scan --stat big-gamma --from 3 --to 135 --out " + big_csv.string() + topt, &code);
    ok &= expect(code == 0, detail, "big-gamma scan did not complete");
    auto big_rows = parse_csv(slurp(big_csv));
    ok &= expect(big_rows.size() == 133, detail, "big-gamma scan row count");
    out_of_band.clear();
    for (const auto& row : big_rows) {
        if (!(row.value > row.key && row.value <= 3 * row.key))
            out_of_band += " k=" + std::to_string(row.key) + " Gamma=" + std::to_string(row.value);
    }
    if (!out_of_band.empty()) {
        ok = false;
        detail += (detail.empty() ? "" : "; ");
        detail += "big-gamma ratios outside (1,3]:" + out_of_band;
    }

    auto kappa_csv = g_tmp / "accept_kappa.csv";
    run_cli("scan --stat kappa --from 1 --to 299 --out " + kappa_csv.string() + topt, &code);
    ok &= expect(code == 0, detail, "kappa scan did not complete");
    auto kappa_rows = parse_csv(slurp(kappa_csv));
    ok &= expect(kappa_rows.size() == 150, detail, "kappa scan row count");
    for (const auto& row : kappa_rows) {
        unsigned ell = ell_of(row.key);
        std::uint64_t lower = (std::uint64_t{1} << delta_of(row.key)) + 1;
        std::uint64_t upper = (std::uint64_t{1} << ell) + pow2_half_floor(ell + 5) + 10 + 1;
        ok &= expect(row.value >= lower && row.value < upper, detail,
                     "kappa out of band at m=" + std::to_string(row.key));
    }
    return ok;
}

// --- criterion 8: determinism across thread counts and runs ------------------

bool criterion8(std::string& detail) {
    bool ok = true;
    auto scan_bytes = [&](const std::string& args, const std::string& tag) {
        auto path = g_tmp / ("accept_det_" + tag + ".csv");
        int code = -1;
        run_cli("scan " + args + " --out " + path.string(), &code);
        if (code != 0) return std::string();
        return slurp(path);
    };
    std::string base = scan_bytes("--stat kappa --from 1 --to 299 --threads 1", "k1");
    ok &= expect(!base.empty(), detail, "kappa determinism scan failed");
    for (int run = 0; run < 2 && ok; ++run)
        ok &= expect(scan_bytes("--stat kappa --from 1 --to 299 --threads 8", "k8") == base,
                     detail, "kappa scan bytes differ across thread counts");
    std::string gbase = scan_bytes("--stat gamma --from 3 --to 500 --threads 1", "g1");
    ok &= expect(!gbase.empty(), detail, "gamma determinism scan failed");
    ok &= expect(scan_bytes("--stat gamma --from 3 --to 500 --threads 8", "g8") == gbase, detail,
                 "gamma scan bytes differ across thread counts");
    ok &= expect(scan_bytes("--stat gamma --from 3 --to 500 --threads 1", "g1b") == gbase, detail,
                 "gamma scan bytes differ between repeated runs");
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli> [criterion ...]\n";
        return 64;
    }
    g_cli = argv[1];
    g_tmp = std::filesystem::temp_directory_path();

    std::vector<Criterion> criteria = {
        {1, "exact small-scale values (complement 6, length-9 prefix, witness (0,2))", criterion1},
        {2, "fast/naive oracle equivalence, odd m <= 99, k <= 64, with witnesses", criterion2},
        {3, "equal-factor gap divisibility and indivisible-gap witnesses, m in [2,64]", criterion3},
        {4, "family constructions (alpha 3-8, beta 9-11, rho 4-16), Gamma(74) >= 185, K(185) <= 74", criterion4},
        {5, "kappa bounds: 2^delta+1 lower and half-power upper for odd m <= 999; strict bounds ell in [3,9]", criterion5},
        {6, "theorem scaffolding over k <= 135 and ell in [3,8]", criterion6},
        {7, "figure-scale scans with ratio bands (gamma (0.4,1.6), big-gamma (1,3], kappa bounds)", criterion7},
        {8, "scan byte-determinism across thread counts and repeated runs", criterion8},
    };

    std::vector<int> selected;
    for (int i = 2; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.number) == selected.end())
            continue;
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s — %s (%.1fs)\n", c.number, ok ? "PASS" : "FAIL",
                    c.description.c_str(), secs);
        if (!ok) {
            std::printf("    detail: %s\n", detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures;
}
