// Command-line front end: tracing, verification, scanning, CSV export.
// Results go to stdout, diagnostics to stderr.  Exit codes: 0 success /
// all checks pass, 1 verification failure, 2 usage error, 3 I/O error.

#include <euclid/euclid.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

const CLI::Validator natural_validator(
    [](std::string& text) -> std::string {
        if (euclid::parse_natural(text))
            return {};
        return "'" + text + "' is not a non-negative decimal integer";
    },
    "NATURAL");

// Operands arrive as decimal strings of unbounded length.  Order is
// normalized inside the library; the note keeps the swap visible.
std::pair<euclid::Natural, euclid::Natural>
read_operands(const std::string& x_text, const std::string& y_text)
{
    auto x = euclid::parse_natural(x_text);
    auto y = euclid::parse_natural(y_text);
    if (!x || !y) // validated during parsing; belt and braces
        throw std::domain_error("operands must be non-negative decimal integers");
    if (*x < *y)
        std::cerr << "note: operands swapped: using x=" << y->str()
                  << " y=" << x->str() << "\n";
    return {std::move(*x), std::move(*y)};
}

std::string approx(double value)
{
    return "\xE2\x89\x88" + euclid::format_fixed6(value); // ≈
}

bool all_true(const std::vector<bool>& flags)
{
    return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

int cmd_gcd(const std::string& x_text, const std::string& y_text)
{
    auto [x, y] = read_operands(x_text, y_text);
    const auto t = euclid::trace(x, y);
    std::cout << "gcd=" << t.gcd_value.str() << " iterations=" << t.iterations()
              << "\n";
    return kExitOk;
}

int cmd_trace(const std::string& x_text, const std::string& y_text)
{
    auto [x, y] = read_operands(x_text, y_text);
    const auto t = euclid::trace(x, y);
    const auto add = euclid::additive_series(t);
    const auto gold = euclid::golden_series(t);
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& step = t.steps[i];
        std::cout << "i=" << i + 1 << " x=" << step.x.str()
                  << " y=" << step.y.str();
        if (step.quotient)
            std::cout << " q=" << step.quotient->str()
                      << " r=" << step.remainder->str();
        else
            std::cout << " q=- r=-";
        std::cout << " s_add=" << add.values[i].str()
                  << " s_gold=" << euclid::golden_format(gold.values[i]) << " ("
                  << approx(euclid::golden_to_float(gold.values[i]).value)
                  << ")\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& x_text, const std::string& y_text)
{
    auto [x, y] = read_operands(x_text, y_text);
    const auto report = euclid::analyze(x, y);
    const auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
    std::cout << "thm1=" << verdict(report.thm1_exact_holds) << "\n"
              << "thm2=" << verdict(report.thm2_exact_holds) << "\n"
              << "lemma_additive=" << verdict(all_true(report.lemma1_per_step))
              << "\n"
              << "lemma_golden=" << verdict(all_true(report.lemma2_per_step))
              << "\n"
              << "cor1=" << verdict(report.cor1_holds) << "\n"
              << "cor2=" << verdict(report.cor2_holds) << "\n";
    if (report.lame_applicable)
        std::cout << "lame=" << verdict(report.lame_holds) << "\n";
    else
        std::cout << "lame=n/a\n";
    std::cout << "m=" << report.m << " thm1_bound"
              << approx(report.thm1_float_bound) << " thm2_bound"
              << approx(report.thm2_float_bound)
              << " all_checks=" << verdict(report.all_pass()) << "\n";
    return report.all_pass() ? kExitOk : kExitVerifyFail;
}

int cmd_scan(std::uint64_t x_max, unsigned partitions,
             const std::string& csv_path, bool verbose)
{
    const auto summary = euclid::scan(euclid::ScanOptions{x_max, partitions});
    std::cout << "x_max=" << summary.x_max.str()
              << " pairs=" << summary.pairs_checked << " thm1_max_gap="
              << euclid::format_fixed6(summary.tightness_thm1_max_gap)
              << " thm2_max_gap="
              << euclid::format_fixed6(summary.tightness_thm2_max_gap)
              << " max_m=" << summary.max_m << " witness=("
              << summary.max_m_witness.first.str() << ","
              << summary.max_m_witness.second.str() << ")"
              << " violations=" << summary.violations << "\n";
    if (verbose)
        for (const auto& [m, count] : summary.histogram_m)
            std::cout << "m=" << m << " count=" << count << "\n";
    if (!csv_path.empty())
        euclid::write_file(csv_path, euclid::scan_summary_csv(summary));
    return summary.violations == 0 ? kExitOk : kExitVerifyFail;
}

int cmd_fib(bool use_index, std::uint64_t index, std::uint64_t k)
{
    if (use_index) {
        std::cout << euclid::fib(index).str() << "\n";
    } else {
        auto [x, y] = euclid::fibonacci_pair(k);
        std::cout << "x=" << x.str() << " y=" << y.str() << "\n";
    }
    return kExitOk;
}

int cmd_tightness(std::uint64_t k_max, const std::string& csv_path)
{
    const auto records = euclid::tightness_fibonacci(k_max);
    const std::string csv = euclid::tightness_csv(records);
    if (csv_path.empty())
        std::cout << csv;
    else
        euclid::write_file(csv_path, csv);
    double max_gap = 0.0;
    bool ok = true;
    for (const auto& rec : records) {
        max_gap = std::max(max_gap, rec.gap);
        ok = ok && rec.m == rec.k && rec.exact_window_holds;
    }
    std::cout << "max_gap=" << euclid::format_fixed6(max_gap) << "\n";
    return ok ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Euclidean algorithm tracer and exact potential-bound verifier"};
    app.require_subcommand(1);

    std::string x_text, y_text;
    auto* gcd_cmd =
        app.add_subcommand("gcd", "Greatest common divisor and iteration count");
    gcd_cmd->add_option("x", x_text, "first operand")
        ->required()
        ->check(natural_validator);
    gcd_cmd->add_option("y", y_text, "second operand")
        ->required()
        ->check(natural_validator);

    auto* trace_cmd =
        app.add_subcommand("trace", "Per-iteration table with both potentials");
    trace_cmd->add_option("x", x_text, "first operand")
        ->required()
        ->check(natural_validator);
    trace_cmd->add_option("y", y_text, "second operand")
        ->required()
        ->check(natural_validator);

    auto* verify_cmd = app.add_subcommand(
        "verify", "Exact verdicts for every bound on one input pair");
    verify_cmd->add_option("x", x_text, "first operand")
        ->required()
        ->check(natural_validator);
    verify_cmd->add_option("y", y_text, "second operand")
        ->required()
        ->check(natural_validator);

    std::uint64_t scan_max = 1;
    unsigned partitions = 1;
    std::string scan_csv;
    bool verbose = false;
    auto* scan_cmd = app.add_subcommand(
        "scan", "Exhaustively verify all pairs 0 <= y < x <= max");
    scan_cmd->add_option("--max", scan_max, "largest x to scan")
        ->required()
        ->check(CLI::PositiveNumber);
    scan_cmd->add_option("--partitions", partitions, "number of x-stride partitions")
        ->check(CLI::PositiveNumber);
    scan_cmd->add_option("--csv", scan_csv, "write the summary CSV to this path");
    scan_cmd->add_flag("-v,--verbose", verbose,
                       "print the iteration-count histogram");

    std::uint64_t fib_index = 0;
    std::uint64_t fib_k = 1;
    auto* fib_cmd =
        app.add_subcommand("fib", "Fibonacci numbers and worst-case input pairs");
    auto* index_opt = fib_cmd->add_option("--index", fib_index, "print F(index)");
    fib_cmd->add_option("--pair", fib_k, "print the pair (F(k+2), F(k+1))")
        ->check(CLI::PositiveNumber);
    fib_cmd->require_option(1);

    std::uint64_t k_max = 1;
    std::string tightness_csv_path;
    auto* tight_cmd =
        app.add_subcommand("tightness", "Walk the Fibonacci worst-case family");
    tight_cmd->add_option("--kmax", k_max, "largest k")
        ->required()
        ->check(CLI::PositiveNumber);
    tight_cmd->add_option("--csv", tightness_csv_path, "write the CSV to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gcd_cmd->parsed())
            return cmd_gcd(x_text, y_text);
        if (trace_cmd->parsed())
            return cmd_trace(x_text, y_text);
        if (verify_cmd->parsed())
            return cmd_verify(x_text, y_text);
        if (scan_cmd->parsed())
            return cmd_scan(scan_max, partitions, scan_csv, verbose);
        if (fib_cmd->parsed())
            return cmd_fib(index_opt->count() > 0, fib_index, fib_k);
        if (tight_cmd->parsed())
            return cmd_tightness(k_max, tightness_csv_path);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage; // unreachable: a subcommand is required
}
