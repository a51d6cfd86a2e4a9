#include "antipower/scan.hpp"

#include <atomic>
#include <cassert>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "antipower/anti_power.hpp"

namespace antipower {

std::string format_ratio(std::uint64_t value, std::uint64_t key) {
    assert(key >= 1);
    assert(value <= UINT64_MAX / 1000000);
    std::uint64_t scaled = value * 1000000;
    std::uint64_t q = scaled / key;
    std::uint64_t r = scaled % key;
    if (2 * r > key || (2 * r == key && (q & 1))) ++q;
    std::string frac = std::to_string(q % 1000000);
    frac.insert(frac.begin(), 6 - frac.size(), '0');
    return std::to_string(q / 1000000) + "." + frac;
}

namespace {

ScanRow compute_row(ScanStatistic stat, std::uint64_t key) {
    ScanRow row;
    row.key = key;
    try {
        switch (stat) {
        case ScanStatistic::gamma:
            row.value = gamma(key);
            break;
        case ScanStatistic::big_gamma:
            row.value = big_gamma(key);
            break;
        case ScanStatistic::kappa:
            row.value = kappa(key).kappa;
            break;
        }
        row.ratio = format_ratio(row.value, key);
    } catch (const std::domain_error& e) {
        row.error = e.what();
    }
    return row;
}

} // namespace

std::vector<ScanRow> run_scan(ScanStatistic stat, std::uint64_t from, std::uint64_t to,
                              std::uint64_t stride, unsigned threads) {
    if (stride < 1) throw std::domain_error("scan stride must be >= 1");
    std::vector<std::uint64_t> keys;
    for (std::uint64_t k = from; k <= to;) {
        keys.push_back(k);
        if (to - k < stride) break;
        k += stride;
    }
    std::vector<ScanRow> rows(keys.size());
    if (keys.empty()) return rows;

    unsigned workers = threads < 1 ? 1 : threads;
    if (workers == 1) {
        for (std::size_t i = 0; i < keys.size(); ++i) rows[i] = compute_row(stat, keys[i]);
        return rows;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= keys.size()) return;
            try {
                rows[i] = compute_row(stat, keys[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
    os << "key,value,ratio\n";
    for (const auto& row : rows) {
        if (!row.error.empty()) {
            os << row.key << ",," << row.error << "\n";
        } else {
            os << row.key << "," << row.value << "," << row.ratio << "\n";
        }
    }
}

} // namespace antipower
