#include <euclid/verification_harness.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

using euclid::Natural;

namespace {

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("scan aggregates tiny ranges exactly", "[harness]")
{
    const auto s = euclid::scan(2);
    CHECK(s.x_max == 2);
    CHECK(s.pairs_checked == 3); // (1,0), (2,0), (2,1)
    CHECK(s.violations == 0);
    CHECK(s.max_m == 1);
    CHECK(s.max_m_witness.first == 1);
    CHECK(s.max_m_witness.second == 0);
    REQUIRE(s.histogram_m.size() == 1);
    CHECK(s.histogram_m.at(1) == 3);

    const auto s1 = euclid::scan(1);
    CHECK(s1.pairs_checked == 1);
    CHECK(s1.max_m_witness.first == 1);
    CHECK(s1.max_m_witness.second == 0);
}

TEST_CASE("scan finds the Fibonacci witness", "[harness]")
{
    const auto s = euclid::scan(13);
    CHECK(s.pairs_checked == 91);
    CHECK(s.violations == 0);
    CHECK(s.max_m == 5);
    CHECK(s.max_m_witness.first == 13);
    CHECK(s.max_m_witness.second == 8);
    CHECK(s.histogram_m.at(1) == 25);

    const auto s100 = euclid::scan(100);
    CHECK(s100.pairs_checked == 5050);
    CHECK(s100.violations == 0);
    CHECK(s100.max_m == 9);
    CHECK(s100.max_m_witness.first == 89);
    CHECK(s100.max_m_witness.second == 55);
}

TEST_CASE("scan rejects invalid options", "[harness]")
{
    CHECK_THROWS_AS(euclid::scan(euclid::ScanOptions{0, 1}), std::domain_error);
    CHECK_THROWS_AS(euclid::scan(euclid::ScanOptions{10, 0}), std::domain_error);
}

TEST_CASE("scan is deterministic across partition counts", "[harness]")
{
    const auto p1 = euclid::scan(euclid::ScanOptions{50, 1});
    const auto p4 = euclid::scan(euclid::ScanOptions{50, 4});
    const auto p8 = euclid::scan(euclid::ScanOptions{50, 8});
    CHECK(p1 == p4);
    CHECK(p1 == p8);
    CHECK(euclid::scan_summary_csv(p1) == euclid::scan_summary_csv(p4));
    CHECK(euclid::scan_summary_csv(p1) == euclid::scan_summary_csv(p8));

    // More partitions than x values: some partitions see no pairs.
    const auto p9 = euclid::scan(euclid::ScanOptions{3, 8});
    CHECK(p9 == euclid::scan(euclid::ScanOptions{3, 1}));
}

TEST_CASE("machine-word and arbitrary-precision lanes agree", "[harness]")
{
    const auto fast = euclid::detail::scan_impl<std::int64_t>(60, 3);
    const auto wide = euclid::detail::scan_impl<Natural>(60, 3);
    CHECK(fast == wide);
    CHECK(euclid::scan_summary_csv(fast) == euclid::scan_summary_csv(wide));
}

TEST_CASE("tightness walks the Fibonacci family", "[harness]")
{
    CHECK_THROWS_AS(euclid::tightness_fibonacci(0), std::domain_error);

    const auto records = euclid::tightness_fibonacci(5);
    REQUIRE(records.size() == 5);
    const long long xs[] = {2, 3, 5, 8, 13};
    const long long ys[] = {1, 2, 3, 5, 8};
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        CHECK(rec.k == i + 1);
        CHECK(rec.x == xs[i]);
        CHECK(rec.y == ys[i]);
        CHECK(rec.m == rec.k);
        CHECK_THAT(rec.thm2_float_bound,
                   Catch::Matchers::WithinAbs(static_cast<double>(rec.k + 2), 1e-9));
        CHECK(rec.gap >= 1.9);
        CHECK(rec.gap <= 2.1);
        CHECK(rec.exact_window_holds);
    }
}

TEST_CASE("reference_gcd subtracts its way to agreement", "[harness]")
{
    CHECK(euclid::reference_gcd(Natural(12), Natural(8)) == 4);
    CHECK(euclid::reference_gcd(Natural(7), Natural(1)) == 1);
    CHECK(euclid::reference_gcd(Natural(5), Natural(5)) == 5);
    CHECK(euclid::reference_gcd(Natural(5), Natural(0)) == 5);
    CHECK_THROWS_AS(euclid::reference_gcd(Natural(0), Natural(0)),
                    std::domain_error);

    for (std::int64_t x = 1; x <= 120; ++x)
        for (std::int64_t y = 0; y < x; ++y)
            REQUIRE(euclid::reference_gcd(Natural(x), Natural(y)) ==
                    euclid::gcd(Natural(x), Natural(y)));
}

TEST_CASE("csv renderers are byte-deterministic", "[harness]")
{
    CHECK(euclid::tightness_csv({}) == "k,x,y,m,thm2_bound,gap\n");

    const auto one = euclid::tightness_fibonacci(1);
    CHECK(euclid::tightness_csv(one) ==
          "k,x,y,m,thm2_bound,gap\n"
          "1,2,1,1,3.000000,2.000000\n");

    const auto s = euclid::scan(2);
    CHECK(euclid::scan_summary_csv(s) ==
          "x_max,pairs,violations,max_m,witness_x,witness_y\n"
          "2,3,0,1,1,0\n");

    std::ostringstream tight_stream;
    euclid::emit_csv(one, tight_stream);
    CHECK(tight_stream.str() == euclid::tightness_csv(one));

    std::ostringstream scan_stream;
    euclid::emit_csv(s, scan_stream);
    CHECK(scan_stream.str() == euclid::scan_summary_csv(s));
}

TEST_CASE("write_file round-trips and reports failures with the path",
          "[harness]")
{
    const auto path = std::filesystem::temp_directory_path() /
                      "euclid_harness_write_test.csv";
    const std::string content = "k,x,y,m,thm2_bound,gap\n";
    euclid::write_file(path.string(), content);
    CHECK(slurp(path) == content);
    std::filesystem::remove(path);

    const std::string bogus = "/nonexistent-dir-for-euclid-tests/out.csv";
    CHECK_THROWS_WITH(euclid::write_file(bogus, content),
                      Catch::Matchers::ContainsSubstring(bogus));
}
