#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "primeconv/transforms.hpp"

namespace primeconv::bench {

enum class OutputFormat { csv, markdown, json };

OutputFormat parse_format(std::string_view name);

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::vector<Engine> engines{kAllEngines[0], kAllEngines[1], kAllEngines[2]};
  std::size_t trials = 5;
  std::uint64_t seed = 42;
  /// Overrides every floating-point tolerance when set.
  std::optional<double> tolerance;
  OutputFormat format = OutputFormat::markdown;
  /// Measure wall-clock in `table` (off keeps the output byte-deterministic).
  bool timing = false;
  /// Added to every v_i of the fast plans used by the verify oracle suites.
  double fault_delta = 0.0;
};

/// Seeded test-vector source. std::mt19937_64 seeded with
/// seed ^ (0x9E3779B97F4A7C15 * (stream + 1)); each component is
/// 2 * (u >> 11) * 2^-53 - 1 for a raw 64-bit draw u, uniform on [-1, 1).
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream);

  double uniform();
  RealSignal real_signal(std::size_t n);
  ComplexSignal complex_signal(std::size_t n);

 private:
  std::mt19937_64 gen_;
};

struct TableRow {
  std::size_t n = 0;
  Engine engine = Engine::direct;
  std::uint64_t mults_measured = 0;
  std::uint64_t adds_measured = 0;
  std::optional<std::uint64_t> mults_predicted;
  std::optional<std::uint64_t> adds_predicted;
  std::uint64_t lower_bound = 0;
  double max_rel_err_vs_oracle = 0.0;
  std::optional<double> mean_wallclock_ns;
  /// Published "best algorithm" counts, quoted for p in {3, 5, 7}.
  std::optional<std::uint64_t> quoted_best_mults;
  std::optional<std::uint64_t> quoted_best_adds;
  /// Published counts for the engine's column, when the table lists this p.
  std::optional<std::uint64_t> quoted_mults;
  std::optional<std::uint64_t> quoted_adds;
  std::string note;
};

std::vector<TableRow> build_table(const BenchConfig& config);
std::string format_table(const std::vector<TableRow>& rows, OutputFormat format);

struct SuiteResult {
  std::string name;
  bool passed = true;
  /// Largest observed error (0 for exact suites).
  double max_error = 0.0;
  /// Threshold the error was compared against; empty for exact suites.
  std::optional<double> tolerance;
  std::size_t cases = 0;
  std::string detail;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

/// Default sizes for `verify` when none are given: 2..32, 53, 97, 101.
std::vector<std::size_t> default_verify_sizes();

VerifyReport run_verify(const BenchConfig& config);
std::string format_verify(const VerifyReport& report, OutputFormat format);

struct BenchRow {
  std::size_t n = 0;
  Engine engine = Engine::direct;
  std::size_t trials = 0;
  double mean_ns = 0.0;
  double min_ns = 0.0;
  std::uint64_t mults = 0;
};

struct BenchSummary {
  std::size_t n = 0;
  /// (n(n-1)/2 + 1) / n^2.
  double ratio_fast_vs_direct = 0.0;
  /// Fast multiplications over 1 + (n-1)^2; prime n only.
  std::optional<double> ratio_fast_vs_two_factor;
  /// Fast multiplications over 2(n-1).
  double lower_bound_gap = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchSummary> summaries;
};

BenchReport run_bench(const BenchConfig& config);
std::string format_bench(const BenchReport& report, OutputFormat format);

/// Fast-over-direct multiplication ratio (n(n-1)/2 + 1) / n^2.
double fast_direct_mult_ratio(std::size_t n);

}  // namespace primeconv::bench
