#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace antipower {

enum class ScanStatistic { gamma, big_gamma, kappa };

/// One sweep record. Rows whose key is outside the statistic's domain carry
/// the diagnostic in `error` and no value; the sweep itself never aborts on
/// them.
struct ScanRow {
    std::uint64_t key = 0;
    std::uint64_t value = 0;
    std::string ratio; ///< value/key, fixed 6 digits, round-half-even
    std::string error; ///< empty for ordinary rows
};

/// value/key rendered with exactly six decimal digits, round-half-even,
/// computed entirely in integer arithmetic.
std::string format_ratio(std::uint64_t value, std::uint64_t key);

/// Sweeps keys from, from+stride, ..., <= to. Keys are computed
/// independently (in parallel when threads > 1) and merged in key order, so
/// the result is identical for every thread count.
std::vector<ScanRow> run_scan(ScanStatistic stat, std::uint64_t from, std::uint64_t to,
                              std::uint64_t stride, unsigned threads);

/// Header "key,value,ratio", one row per line, LF endings.
void write_csv(std::ostream& os, const std::vector<ScanRow>& rows);

} // namespace antipower
