#include <doctest.h>

#include <json.hpp>

#include "primeconv/bench.hpp"
#include "primeconv/sample_io.hpp"

using namespace primeconv;
using namespace primeconv::bench;

namespace {

const SuiteResult& suite(const VerifyReport& r, const std::string& name) {
  for (const auto& s : r.suites)
    if (s.name == name) return s;
  FAIL("missing suite " << name);
  throw std::logic_error("unreachable");
}

BenchConfig small_verify() {
  BenchConfig cfg;
  cfg.sizes = {2, 3, 5, 7, 11, 12, 13};
  cfg.trials = 5;
  return cfg;
}

}  // namespace

TEST_CASE("random stream is seeded and stream-separated") {
  RandomStream a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  const auto xa = a.real_signal(16);
  CHECK(xa == b.real_signal(16));
  CHECK_FALSE(xa == c.real_signal(16));
  CHECK_FALSE(xa == d.real_signal(16));
  for (double x : xa) {
    CHECK(x >= -1.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("table reproduces published multiplication counts") {
  BenchConfig cfg;
  cfg.sizes = {3, 5, 7, 11, 13, 17, 19, 23};
  cfg.engines = {Engine::fast_prime};
  const auto rows = build_table(cfg);
  const std::uint64_t expected[] = {4, 11, 22, 56, 79, 137, 172, 254};
  REQUIRE(rows.size() == 8);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].mults_measured == expected[i]);
    CHECK(rows[i].mults_predicted == expected[i]);
    CHECK(rows[i].quoted_mults == expected[i]);
    CHECK(rows[i].max_rel_err_vs_oracle <= 1e-10);
    CHECK(rows[i].lower_bound == 2 * (rows[i].n - 1));
  }
  CHECK(rows[0].quoted_best_mults == 4u);
  CHECK(rows[0].quoted_best_adds == 11u);
}

TEST_CASE("table direct rows and the p = 17 annotation") {
  BenchConfig cfg;
  cfg.sizes = {11, 17};
  cfg.engines = {Engine::direct};
  const auto rows = build_table(cfg);
  CHECK(rows[0].mults_measured == 121);
  CHECK(rows[0].adds_measured == 110);
  CHECK(rows[0].note.empty());
  CHECK(rows[1].mults_measured == 289);
  CHECK(rows[1].adds_measured == 272);
  CHECK(rows[1].quoted_mults == 189u);
  CHECK(rows[1].note.find("189/172") != std::string::npos);
}

TEST_CASE("table at n = 2") {
  BenchConfig cfg;
  cfg.sizes = {2};
  cfg.engines = {Engine::fast_prime};
  const auto rows = build_table(cfg);
  CHECK(rows[0].mults_measured == 2);
  CHECK(rows[0].adds_measured == 4);
  CHECK(rows[0].note.empty());
}

TEST_CASE("table formats and determinism") {
  BenchConfig cfg;
  cfg.sizes = {3, 4, 5};
  const auto rows = build_table(cfg);
  CHECK(rows.size() == 9);
  CHECK(format_table(rows, OutputFormat::csv) == format_table(build_table(cfg), OutputFormat::csv));

  const auto csv = format_table(rows, OutputFormat::csv);
  CHECK(csv.rfind("n,engine,mults_measured,adds_measured,", 0) == 0);
  const auto md = format_table(rows, OutputFormat::markdown);
  CHECK(md.find("| n | engine |") == 0);
  const auto js = nlohmann::json::parse(format_table(rows, OutputFormat::json));
  CHECK(js.size() == 9);
  CHECK(js[0]["engine"] == "direct");
  CHECK(js[0]["mean_wallclock_ns"].is_null());

  cfg.timing = true;
  CHECK(build_table(cfg)[0].mean_wallclock_ns.has_value());

  BenchConfig empty;
  CHECK_THROWS_AS(build_table(empty), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("verify passes by default and is deterministic") {
  const auto cfg = small_verify();
  const auto report = run_verify(cfg);
  for (const auto& s : report.suites) CHECK_MESSAGE(s.passed, s.name << ": " << s.detail);
  CHECK(report.passed());
  CHECK(report.suites.size() == 12);
  CHECK(format_verify(report, OutputFormat::markdown) == format_verify(run_verify(cfg), OutputFormat::markdown));
}

TEST_CASE("verify catches a perturbed plan") {
  auto cfg = small_verify();
  cfg.fault_delta = 1e-3;
  const auto report = run_verify(cfg);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(suite(report, "oracle-equivalence-real").passed);
  CHECK_FALSE(suite(report, "oracle-equivalence-complex").passed);
  CHECK(suite(report, "count-exactness").passed);
}

TEST_CASE("verify with zero tolerance fails float suites only") {
  auto cfg = small_verify();
  cfg.tolerance = 0.0;
  const auto report = run_verify(cfg);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(suite(report, "oracle-equivalence-real").passed);
  CHECK_FALSE(suite(report, "two-factor-equivalence").passed);
  CHECK_FALSE(suite(report, "rader-vs-naive-dft").passed);
  CHECK(suite(report, "count-exactness").passed);
  CHECK(suite(report, "f-rank").passed);
  CHECK(suite(report, "identity-decomposition").passed);
}

TEST_CASE("bench reports count ratios") {
  BenchConfig cfg;
  cfg.sizes = {3, 101};
  cfg.trials = 3;
  const auto report = run_bench(cfg);
  CHECK(report.rows.size() == 6);
  REQUIRE(report.summaries.size() == 2);
  CHECK(report.summaries[0].ratio_fast_vs_direct == doctest::Approx(4.0 / 9.0));
  CHECK(report.summaries[1].ratio_fast_vs_direct == doctest::Approx(5051.0 / 10201.0));
  CHECK(report.summaries[1].ratio_fast_vs_two_factor.has_value());
  for (const auto& r : report.rows)
    if (r.engine == Engine::fast_prime) CHECK(r.mults == predicted_counts(r.n).mults);

  double previous = 0.0;
  for (std::size_t n = 11; n < 2000; n += 97) {
    const double ratio = fast_direct_mult_ratio(n);
    CHECK(ratio < 0.5);
    CHECK(ratio > previous);
    previous = ratio;
  }

  cfg.trials = 2;
  CHECK_THROWS_AS(run_bench(cfg), std::invalid_argument);
  CHECK(nlohmann::json::parse(format_bench(report, OutputFormat::json))["count_ratios"].size() == 2);
}

TEST_CASE("sample file parsing") {
  const auto f = io::parse_samples("# kernel\n1\n 2.5 \n\n-3e-2\n");
  CHECK_FALSE(f.is_complex);
  CHECK(f.real() == RealSignal{1, 2.5, -0.03});

  const auto c = io::parse_samples("1 2\n+3 -4\n");
  CHECK(c.is_complex);
  CHECK(c.complex() == ComplexSignal{Complex(1, 2), Complex(3, -4)});
  CHECK_THROWS_AS(c.real(), std::invalid_argument);

  CHECK_THROWS_WITH_AS(io::parse_samples("1\nabc\n", "k.txt"), "k.txt:2: cannot parse 'abc' as a number",
                       io::ParseError);
  CHECK_THROWS_AS(io::parse_samples("1 2 3\n"), io::ParseError);
  CHECK_THROWS_AS(io::parse_samples("\n# nothing\n"), io::ParseError);
  CHECK_THROWS_AS(io::parse_samples("inf\n"), io::ParseError);
  CHECK_THROWS_AS(io::read_samples("/nonexistent/file"), io::ParseError);

  CHECK(io::format_number(0.1) == "0.1");
  CHECK(io::format_number(31.0) == "31");
  CHECK(io::format_number(-0.0) == "0");
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 123456789.125})
    CHECK(io::parse_samples(io::format_number(x)).values[0].real() == x);
}
