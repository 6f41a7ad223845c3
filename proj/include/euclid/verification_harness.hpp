#ifndef EUCLID_VERIFICATION_HARNESS_HPP
#define EUCLID_VERIFICATION_HARNESS_HPP

#include <euclid/euclid_core.hpp>
#include <euclid/golden_ring.hpp>
#include <euclid/natural.hpp>
#include <euclid/potential_analysis.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace euclid {

/* Exhaustive and generative verification: scans every pair 0 <= y < x up
 * to a limit, aggregates the verdicts, walks the Fibonacci worst-case
 * family, and renders byte-deterministic CSV.
 */

// Aggregate over one scan.  violations counts pairs whose BoundReport has
// any false verdict; it is zero on a correct build.
struct ScanSummary {
    Natural x_max;
    std::uint64_t pairs_checked = 0;
    std::uint64_t violations = 0;
    std::size_t max_m = 0;
    std::pair<Natural, Natural> max_m_witness{0, 0};
    double tightness_thm1_max_gap = 0.0;
    double tightness_thm2_max_gap = 0.0;
    std::map<std::size_t, std::uint64_t> histogram_m;

    friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

struct ScanOptions {
    std::uint64_t x_max = 1;
    unsigned partitions = 1;
};

namespace detail {

// Histogram cap; unreachable at any feasible scan scale (m = 200 needs
// x >= F(202), a 42-digit number).
inline constexpr std::size_t kHistogramBuckets = 200;

template <class I>
struct ScanPartial {
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    std::size_t max_m = 0;
    bool has_witness = false;
    I witness_x{};
    I witness_y{};
    double thm1_gap = 0.0;
    double thm2_gap = 0.0;
    std::vector<std::uint64_t> histogram =
        std::vector<std::uint64_t>(kHistogramBuckets + 1, 0);
};

// One x-stride: x = partition+1, partition+1+stride, ... up to x_max,
// each with the full column 0 <= y < x.  Iteration order is ascending in
// (x, y), so the first witness seen for a given m is the smallest.
template <class I>
void scan_partition(std::uint64_t x_max, unsigned partition, unsigned stride,
                    ScanPartial<I>& acc)
{
    for (std::uint64_t x = partition + 1; x <= x_max; x += stride) {
        for (std::uint64_t y = 0; y < x; ++y) {
            const auto t = trace(I(x), I(y));
            const auto report = analyze(t);
            ++acc.pairs;
            if (!report.all_pass())
                ++acc.violations;
            const std::size_t bucket =
                report.m < kHistogramBuckets ? report.m : kHistogramBuckets;
            ++acc.histogram[bucket];
            const double md = static_cast<double>(report.m);
            if (report.thm1_float_bound - md > acc.thm1_gap)
                acc.thm1_gap = report.thm1_float_bound - md;
            if (report.thm2_float_bound - md > acc.thm2_gap)
                acc.thm2_gap = report.thm2_float_bound - md;
            if (!acc.has_witness || report.m > acc.max_m) {
                acc.max_m = report.m;
                acc.witness_x = I(x);
                acc.witness_y = I(y);
                acc.has_witness = true;
            }
        }
    }
}

// Deterministic merge: totals are commutative sums/maxes, and the witness
// rule (largest m, then smallest x, then smallest y) is order-free.
template <class I>
ScanSummary scan_impl(std::uint64_t x_max, unsigned partitions)
{
    std::vector<ScanPartial<I>> partials(partitions);
    if (partitions == 1) {
        scan_partition<I>(x_max, 0, 1, partials[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(partitions);
        for (unsigned p = 0; p < partitions; ++p)
            workers.emplace_back(scan_partition<I>, x_max, p, partitions,
                                 std::ref(partials[p]));
        for (auto& w : workers)
            w.join();
    }

    ScanSummary out;
    out.x_max = Natural(x_max);
    std::vector<std::uint64_t> histogram(kHistogramBuckets + 1, 0);
    bool have = false;
    I wx{}, wy{};
    for (const auto& part : partials) {
        out.pairs_checked += part.pairs;
        out.violations += part.violations;
        for (std::size_t b = 0; b <= kHistogramBuckets; ++b)
            histogram[b] += part.histogram[b];
        if (part.thm1_gap > out.tightness_thm1_max_gap)
            out.tightness_thm1_max_gap = part.thm1_gap;
        if (part.thm2_gap > out.tightness_thm2_max_gap)
            out.tightness_thm2_max_gap = part.thm2_gap;
        if (!part.has_witness)
            continue;
        const bool better =
            !have || part.max_m > out.max_m ||
            (part.max_m == out.max_m &&
             (part.witness_x < wx ||
              (part.witness_x == wx && part.witness_y < wy)));
        if (better) {
            out.max_m = part.max_m;
            wx = part.witness_x;
            wy = part.witness_y;
            have = true;
        }
    }
    out.max_m_witness = {Natural(wx), Natural(wy)};
    for (std::size_t b = 0; b <= kHistogramBuckets; ++b)
        if (histogram[b] != 0)
            out.histogram_m[b] = histogram[b];
    return out;
}

// Largest x_max for which every intermediate of the machine-word lane
// provably fits int64: x <= 5*10^5 forces m <= 26 (F(29) = 514229 is the
// first Fibonacci number past the limit), so the biggest product is the
// cor2 side 3^25 * 2*x_max < 2^63.
inline constexpr std::uint64_t kFastScanLimit = 500000;

} // namespace detail

// Every pair 0 <= y < x <= x_max, deterministically, regardless of how
// many partitions run.  Small limits run in machine words; anything past
// the proven-safe limit runs on arbitrary precision.  Both lanes execute
// the same templated analysis and produce identical summaries.
inline ScanSummary scan(const ScanOptions& options)
{
    if (options.x_max < 1)
        throw std::domain_error("scan requires x_max >= 1");
    if (options.partitions < 1)
        throw std::domain_error("scan requires partitions >= 1");
    if (options.x_max <= detail::kFastScanLimit)
        return detail::scan_impl<std::int64_t>(options.x_max, options.partitions);
    return detail::scan_impl<Natural>(options.x_max, options.partitions);
}

inline ScanSummary scan(std::uint64_t x_max)
{
    return scan(ScanOptions{x_max, 1});
}

// One row of the worst-case family: inputs (F(k+2), F(k+1)) run exactly
// k iterations while the golden bound evaluates to k+2, because
// y + x*phi = F(k+1) + F(k+2)*phi is exactly phi^(k+2).
struct TightnessRecord {
    unsigned long k = 0;
    Natural x;
    Natural y;
    std::size_t m = 0;
    double thm2_float_bound = 0.0;
    double gap = 0.0;
    // Exact bracketing phi^(m+2) <= phi*x + y < phi^(m+3), decided in
    // Z[phi]; the float gap is display only.
    bool exact_window_holds = false;
};

inline std::vector<TightnessRecord> tightness_fibonacci(unsigned long k_max)
{
    if (k_max < 1)
        throw std::domain_error("tightness_fibonacci requires k_max >= 1");
    std::vector<TightnessRecord> records;
    records.reserve(k_max);
    for (unsigned long k = 1; k <= k_max; ++k) {
        auto [x, y] = fibonacci_pair<Natural>(k);
        const auto t = trace(x, y);
        const std::size_t m = t.iterations();
        const auto verdict = check_thm2(x, y, m);
        const auto value = golden_make<Integer>(y, x);
        const bool window =
            golden_cmp(golden_phi_pow<Integer>(m + 2), value) !=
                std::strong_ordering::greater &&
            golden_cmp(value, golden_phi_pow<Integer>(m + 3)) ==
                std::strong_ordering::less;
        TightnessRecord rec;
        rec.k = k;
        rec.x = std::move(x);
        rec.y = std::move(y);
        rec.m = m;
        rec.thm2_float_bound = verdict.float_bound;
        rec.gap = verdict.float_bound - static_cast<double>(m);
        rec.exact_window_holds = window;
        records.push_back(std::move(rec));
    }
    return records;
}

// Independent oracle: gcd by repeated subtraction.  Test reference only;
// linear in the operand values, so keep the inputs small.
template <class I = Natural>
I reference_gcd(I x, I y)
{
    detail::check_operands(x, y);
    while (x != 0 && y != 0) {
        if (x >= y)
            x -= y;
        else
            y -= x;
    }
    return x != 0 ? x : y;
}

// CSV rendering: UTF-8, LF line endings, integers in plain decimal,
// floats with exactly six fractional digits -- byte-deterministic.
inline std::string tightness_csv(const std::vector<TightnessRecord>& records)
{
    std::string out = "k,x,y,m,thm2_bound,gap\n";
    for (const auto& rec : records) {
        out += std::to_string(rec.k);
        out += ',';
        out += detail::to_decimal(rec.x);
        out += ',';
        out += detail::to_decimal(rec.y);
        out += ',';
        out += std::to_string(rec.m);
        out += ',';
        out += format_fixed6(rec.thm2_float_bound);
        out += ',';
        out += format_fixed6(rec.gap);
        out += '\n';
    }
    return out;
}

inline std::string scan_summary_csv(const ScanSummary& summary)
{
    std::string out = "x_max,pairs,violations,max_m,witness_x,witness_y\n";
    out += detail::to_decimal(summary.x_max);
    out += ',';
    out += std::to_string(summary.pairs_checked);
    out += ',';
    out += std::to_string(summary.violations);
    out += ',';
    out += std::to_string(summary.max_m);
    out += ',';
    out += detail::to_decimal(summary.max_m_witness.first);
    out += ',';
    out += detail::to_decimal(summary.max_m_witness.second);
    out += '\n';
    return out;
}

inline void emit_csv(const std::vector<TightnessRecord>& records, std::ostream& out)
{
    out << tightness_csv(records);
}

inline void emit_csv(const ScanSummary& summary, std::ostream& out)
{
    out << scan_summary_csv(summary);
}

// Whole-file write with explicit failure reporting; used by the CLI's
// --csv options.
inline void write_file(const std::string& path, const std::string& content)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open for writing: " + path);
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    file.flush();
    if (!file)
        throw std::runtime_error("write failed: " + path);
}

} // namespace euclid

#endif // EUCLID_VERIFICATION_HARNESS_HPP
