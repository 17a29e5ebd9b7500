#include "primeconv/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "primeconv/fast.hpp"
#include "primeconv/oracle.hpp"
#include "primeconv/poly.hpp"

namespace primeconv::bench {

namespace {

struct Quoted {
  std::uint64_t mults, adds;
};

// Published complexity table, transcribed as printed.
const std::map<std::size_t, Quoted> kQuotedGeneral = {{3, {4, 10}},    {5, {11, 31}},   {7, {22, 64}},
                                                      {11, {56, 166}}, {13, {79, 235}}, {17, {137, 409}},
                                                      {19, {172, 514}}, {23, {254, 760}}};
const std::map<std::size_t, Quoted> kQuotedDirect = {{3, {9, 6}},      {5, {25, 20}},   {7, {49, 42}},
                                                     {11, {121, 110}}, {13, {169, 156}}, {17, {189, 172}},
                                                     {19, {361, 342}}, {23, {529, 506}}};
const std::map<std::size_t, Quoted> kQuotedBest = {{3, {4, 11}}, {5, {8, 62}}, {7, {16, 70}}};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

template <typename T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>)
    return fixed(*v, 1);
  else
    return std::to_string(*v);
}

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string markdown_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  out << "|";
  for (const auto& h : header) out << ' ' << h << " |";
  out << "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
  out << '\n';
  for (const auto& r : rows) {
    out << "|";
    for (const auto& c : r) out << ' ' << c << " |";
    out << '\n';
  }
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
    out << '\n';
  }
  return out.str();
}

template <Scalar T>
OpTally count_engine(Engine engine, const Signal<T>& b, const Signal<T>& z) {
  OpTally tally;
  CyclicConvolver<T>(b, engine).apply(z, tally);
  return tally;
}

std::uint64_t stream_id(std::uint64_t suite, std::uint64_t n) { return (suite << 32) | n; }

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "markdown") return OutputFormat::markdown;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected csv, markdown or json)");
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : gen_(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))) {}

double RandomStream::uniform() {
  const std::uint64_t u = gen_();
  return 2.0 * static_cast<double>(u >> 11) * 0x1.0p-53 - 1.0;
}

RealSignal RandomStream::real_signal(std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform();
  return RealSignal(std::move(v));
}

ComplexSignal RandomStream::complex_signal(std::size_t n) {
  std::vector<Complex> v(n);
  for (Complex& x : v) {
    const double re = uniform();
    const double im = uniform();
    x = Complex(re, im);
  }
  return ComplexSignal(std::move(v));
}

double fast_direct_mult_ratio(std::size_t n) {
  return static_cast<double>(predicted_counts(n).mults) / static_cast<double>(direct_counts(n).mults);
}

// ---------------------------------------------------------------- table

std::vector<TableRow> build_table(const BenchConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("table: no sizes given");
  if (config.engines.empty()) throw std::invalid_argument("table: no engines given");
  std::vector<TableRow> rows;
  std::uint64_t row_index = 0;
  for (std::size_t n : config.sizes) {
    if (n < 2) throw std::invalid_argument("table: sizes must be >= 2, got " + std::to_string(n));
    for (Engine engine : config.engines) {
      TableRow row;
      row.n = n;
      row.engine = engine;
      row.lower_bound = multiplication_lower_bound(n);

      RandomStream rng(config.seed, row_index++);
      const std::size_t trials = std::max<std::size_t>(config.trials, 1);
      std::vector<RealSignal> kernels, inputs;
      for (std::size_t t = 0; t < trials; ++t) {
        kernels.push_back(rng.real_signal(n));
        inputs.push_back(rng.real_signal(n));
      }

      const OpTally tally = count_engine(engine, kernels[0], inputs[0]);
      row.mults_measured = tally.mults;
      row.adds_measured = tally.adds;

      for (std::size_t t = 0; t < trials; ++t) {
        const CyclicConvolver<double> conv(kernels[t], engine);
        const auto expected = oracle::matrix_form_convolution(kernels[t], inputs[t]);
        row.max_rel_err_vs_oracle = std::max(row.max_rel_err_vs_oracle, relative_error(conv.apply(inputs[t]), expected));
      }

      if (config.timing) {
        const CyclicConvolver<double> conv(kernels[0], engine);
        double total = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
          const auto start = std::chrono::steady_clock::now();
          const auto out = conv.apply(inputs[t % inputs.size()]);
          const auto stop = std::chrono::steady_clock::now();
          total += std::chrono::duration<double, std::nano>(stop - start).count();
          if (out.size() != n) throw std::logic_error("unexpected output length");
        }
        row.mean_wallclock_ns = total / static_cast<double>(trials);
      }

      const auto quoted_best = kQuotedBest.find(n);
      if (quoted_best != kQuotedBest.end()) {
        row.quoted_best_mults = quoted_best->second.mults;
        row.quoted_best_adds = quoted_best->second.adds;
      }

      std::vector<std::string> notes;
      switch (engine) {
        case Engine::direct: {
          const OpCounts c = direct_counts(n);
          row.mults_predicted = c.mults;
          row.adds_predicted = c.adds;
          if (auto it = kQuotedDirect.find(n); it != kQuotedDirect.end()) {
            row.quoted_mults = it->second.mults;
            row.quoted_adds = it->second.adds;
            if (it->second.mults != c.mults || it->second.adds != c.adds)
              notes.push_back("published direct row lists " + std::to_string(it->second.mults) + "/" +
                              std::to_string(it->second.adds) + ", n^2 and n(n-1) give " + std::to_string(c.mults) +
                              "/" + std::to_string(c.adds));
          }
          break;
        }
        case Engine::fast_prime: {
          const OpCounts c = predicted_counts(n);
          row.mults_predicted = c.mults;
          row.adds_predicted = c.adds;
          if (auto it = kQuotedGeneral.find(n); it != kQuotedGeneral.end()) {
            row.quoted_mults = it->second.mults;
            row.quoted_adds = it->second.adds;
          }
          if (row.adds_measured != c.adds)
            notes.push_back("measured additions exceed 3n(n-1)/2+1 by " +
                            std::to_string(row.adds_measured - c.adds) + " (computing sum(y), h_{n-1} and c needs 3n-3)");
          if (!is_prime(n)) notes.push_back("composite length");
          break;
        }
        case Engine::winograd_two_factor:
          if (is_prime(n)) {
            const OpCounts c = two_factor_counts(n);
            row.mults_predicted = c.mults;
            row.adds_predicted = c.adds;
          } else {
            notes.push_back("composite length: zero-padded prime-length linear convolution, folded");
          }
          break;
      }
      for (std::size_t i = 0; i < notes.size(); ++i) row.note += (i ? "; " : "") + notes[i];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
      out.push_back({{"n", r.n},
                     {"engine", std::string(engine_name(r.engine))},
                     {"mults_measured", r.mults_measured},
                     {"adds_measured", r.adds_measured},
                     {"mults_predicted", opt_json(r.mults_predicted)},
                     {"adds_predicted", opt_json(r.adds_predicted)},
                     {"lower_bound", r.lower_bound},
                     {"max_rel_err_vs_oracle", r.max_rel_err_vs_oracle},
                     {"mean_wallclock_ns", opt_json(r.mean_wallclock_ns)},
                     {"quoted_mults", opt_json(r.quoted_mults)},
                     {"quoted_adds", opt_json(r.quoted_adds)},
                     {"quoted_best_mults", opt_json(r.quoted_best_mults)},
                     {"quoted_best_adds", opt_json(r.quoted_best_adds)},
                     {"note", r.note}});
    }
    return out.dump(2) + "\n";
  }

  const std::vector<std::string> header = {"n",           "engine",          "mults_measured", "adds_measured",
                                           "mults_predicted", "adds_predicted", "lower_bound",   "max_rel_err_vs_oracle",
                                           "mean_wallclock_ns", "quoted_mults", "quoted_adds",   "quoted_best_mults",
                                           "quoted_best_adds", "note"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    cells.push_back({std::to_string(r.n), std::string(engine_name(r.engine)), std::to_string(r.mults_measured),
                     std::to_string(r.adds_measured), opt_str(r.mults_predicted), opt_str(r.adds_predicted),
                     std::to_string(r.lower_bound), sci(r.max_rel_err_vs_oracle), opt_str(r.mean_wallclock_ns),
                     opt_str(r.quoted_mults), opt_str(r.quoted_adds), opt_str(r.quoted_best_mults),
                     opt_str(r.quoted_best_adds), r.note});
  }
  if (format == OutputFormat::csv) return csv_table(header, cells);
  return markdown_table(header, cells) +
         "\nquoted_* columns are transcribed from the published complexity table; quoted_best_* are the "
         "literature short-convolution counts it cites. They are reference data, not measurements.\n";
}

// ---------------------------------------------------------------- verify

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::vector<std::size_t> default_verify_sizes() {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 2; n <= 32; ++n) sizes.push_back(n);
  sizes.insert(sizes.end(), {53, 97, 101});
  return sizes;
}

namespace {

class SuiteBuilder {
 public:
  SuiteBuilder(std::string name, std::optional<double> tol) {
    result_.name = std::move(name);
    result_.tolerance = tol;
  }

  void observe(double err) {
    ++result_.cases;
    result_.max_error = std::max(result_.max_error, err);
    if (!(err <= result_.tolerance.value_or(0.0))) result_.passed = false;
  }

  void check(bool ok, const std::string& failure) {
    ++result_.cases;
    if (!ok) {
      if (result_.passed) result_.detail = failure;
      result_.passed = false;
    }
  }

  void note(std::string text) {
    if (result_.detail.empty()) result_.detail = std::move(text);
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

enum SuiteId : std::uint64_t {
  kOracleReal = 1,
  kOracleComplex,
  kCounts,
  kAntisymmetry,
  kHSum,
  kIdentity,
  kFRank,
  kPlanClosedForm,
  kCrt,
  kTwoFactor,
  kRader,
  kLinear,
};

}  // namespace

VerifyReport run_verify(const BenchConfig& config) {
  const std::vector<std::size_t> sizes = config.sizes.empty() ? default_verify_sizes() : config.sizes;
  const std::size_t trials = std::max<std::size_t>(config.trials, 1);
  auto tol = [&](double fallback) { return config.tolerance.value_or(fallback); };
  VerifyReport report;

  auto engine_sizes = [&](std::size_t max_n) {
    std::vector<std::size_t> out;
    for (std::size_t n : sizes)
      if (n >= 2 && n <= max_n) out.push_back(n);
    return out;
  };

  {
    SuiteBuilder s("oracle-equivalence-real", tol(Tolerance::kReal));
    for (std::size_t n : engine_sizes(SIZE_MAX)) {
      RandomStream rng(config.seed, stream_id(kOracleReal, n));
      for (std::size_t t = 0; t < trials; ++t) {
        const auto b = rng.real_signal(n);
        const auto z = rng.real_signal(n);
        auto plan = FastPlan<double>::create(b);
        if (config.fault_delta != 0.0) plan = plan.perturbed(config.fault_delta);
        s.observe(relative_error(fast_cyclic_convolution(plan, z), direct_cyclic_convolution(b, z)));
      }
    }
    report.suites.push_back(s.finish());
  }
  {
    SuiteBuilder s("oracle-equivalence-complex", tol(Tolerance::kComplex));
    const std::size_t complex_trials = std::min<std::size_t>(trials, 50);
    for (std::size_t n : engine_sizes(SIZE_MAX)) {
      RandomStream rng(config.seed, stream_id(kOracleComplex, n));
      for (std::size_t t = 0; t < complex_trials; ++t) {
        const auto b = rng.complex_signal(n);
        const auto z = rng.complex_signal(n);
        auto plan = FastPlan<Complex>::create(b);
        if (config.fault_delta != 0.0) plan = plan.perturbed(config.fault_delta);
        s.observe(relative_error(fast_cyclic_convolution(plan, z), direct_cyclic_convolution(b, z)));
      }
    }
    report.suites.push_back(s.finish());
  }
  {
    SuiteBuilder s("count-exactness", std::nullopt);
    bool paper_gap = false;
    for (std::size_t n : engine_sizes(SIZE_MAX)) {
      RandomStream rng(config.seed, stream_id(kCounts, n));
      const auto b = rng.real_signal(n);
      const auto z = rng.real_signal(n);
      const std::string at = " at n=" + std::to_string(n);

      OpTally fast;
      fast_cyclic_convolution(FastPlan<double>::create(b), z, fast);
      s.check(fast.mults == predicted_counts(n).mults, "fast multiplications differ from n(n-1)/2+1" + at);
      s.check(fast.adds == realized_counts(n).adds, "fast additions differ from 3n(n-1)/2+n-1" + at);
      paper_gap = paper_gap || fast.adds != predicted_counts(n).adds;

      OpTally direct;
      direct_cyclic_convolution(b, z, direct);
      s.check(direct.mults == direct_counts(n).mults && direct.adds == direct_counts(n).adds,
              "direct counts differ from n^2, n(n-1)" + at);

      if (is_prime(n)) {
        OpTally two;
        winograd_two_factor_convolution(b, z, two);
        s.check(two.mults == two_factor_counts(n).mults && two.adds == two_factor_counts(n).adds,
                "two-factor counts differ from closed form" + at);
      }
    }
    if (paper_gap) s.note("fast multiplications match n(n-1)/2+1; additions are 3n(n-1)/2+n-1, n-2 above the published total");
    report.suites.push_back(s.finish());
  }
  {
    SuiteBuilder s("g-antisymmetry", tol(1e-12));
    for (std::size_t n : engine_sizes(12)) {
      RandomStream rng(config.seed, stream_id(kAntisymmetry, n));
      const auto b = rng.real_signal(n);
      const auto z = rng.real_signal(n);
      const auto v = oracle::explicit_v(b);
      OpTally tally;
      const auto trace = fast_cyclic_convolution_trace(FastPlan<double>::create(b), z, tally);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
          // g_{i,j} with i > j straight from its definition.
          const double lower = v[(i + j) % n] * (trace.y[j] - trace.y[i]);
          s.observe(std::abs(lower + trace.g.upper(j, i)));
        }
    }
    report.suites.push_back(s.finish());
  }
  {
    SuiteBuilder s("h-zero-sum", tol(1e-10));
    for (std::size_t n : engine_sizes(16)) {
      RandomStream rng(config.seed, stream_id(kHSum, n));
      const auto b = rng.real_signal(n);
      const auto z = rng.real_signal(n);
      OpTally tally;
      const auto trace = fast_cyclic_convolution_trace(FastPlan<double>::create(b), z, tally);
      double sum = 0.0;
      for (double h : trace.h) sum += h;
      s.observe(std::abs(sum));
      const auto h_explicit = oracle::explicit_h(b, RealSignal(trace.y));
      s.observe(std::abs(h_explicit[n - 1] - trace.h[n - 1]));
    }
    report.suites.push_back(s.finish());
  }
  {
    SuiteBuilder s("identity-decomposition", std::nullopt);
    for (std::size_t n : engine_sizes(12)) {
      const auto f = oracle::f_matrix(n);
      const auto ddt = oracle::ones_matrix(n);
      const auto diff = ddt - f;
      double err = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) err = std::max(err, std::abs(diff(i, j) / static_cast<double>(n) - (i == j)));
      s.check(err <= 1e-12, "(dd^T - F)/n differs from I at n=" + std::to_string(n));
    }
    report.suites.push_back(s.finish());
  }
  {
    SuiteBuilder s("f-rank", std::nullopt);
    for (std::size_t n : engine_sizes(12)) {
      const auto f = oracle::f_matrix(n);
      for (std::size_t c = 0; c < n; ++c) {
        double col_sum = 0.0;
        for (std::size_t r = 0; r < n; ++r) col_sum += f(r, c);
        s.check(std::abs(col_sum) <= 1e-12 * static_cast<double>(n), "columns of F do not sum to zero at n=" + std::to_string(n));
      }
      s.check(oracle::numeric_rank(f) == n - 1, "rank(F) != n-1 at n=" + std::to_string(n));
    }
    report.suites.push_back(s.finish());
  }
  {
    SuiteBuilder s("plan-closed-form", tol(1e-12));
    for (std::size_t n : engine_sizes(16)) {
      RandomStream rng(config.seed, stream_id(kPlanClosedForm, n));
      const auto b = rng.real_signal(n);
      const auto expected = oracle::explicit_v(b);
      const auto plan = FastPlan<double>::create(b);
      s.observe(relative_error<double>(plan.v(), expected));
    }
    report.suites.push_back(s.finish());
  }
  {
    SuiteBuilder s("crt-round-trip", tol(1e-9));
    for (std::size_t p : {2, 3, 5, 7, 11, 13}) {
      RandomStream rng(config.seed, stream_id(kCrt, p));
      const auto system = ResidueSystem<double>::two_factor(p);
      for (std::size_t t = 0; t < std::min<std::size_t>(trials, 20); ++t) {
        const auto c = Polynomial<double>::from_signal(rng.real_signal(p));
        const auto back = crt_reconstruct(system.reduce(c), system);
        s.observe(relative_error(back.to_signal(p), c.to_signal(p)));
      }
    }
    report.suites.push_back(s.finish());
  }
  {
    SuiteBuilder s("two-factor-equivalence", tol(1e-8));
    for (std::size_t p : engine_sizes(31)) {
      if (!is_prime(p)) continue;
      RandomStream rng(config.seed, stream_id(kTwoFactor, p));
      for (std::size_t t = 0; t < std::min<std::size_t>(trials, 20); ++t) {
        const auto b = rng.real_signal(p);
        const auto z = rng.real_signal(p);
        const auto direct = direct_cyclic_convolution(b, z);
        s.observe(relative_error(winograd_two_factor_convolution(b, z), direct));
        s.observe(relative_error(fast_cyclic_convolution(FastPlan<double>::create(b), z), direct));
      }
    }
    report.suites.push_back(s.finish());
  }
  {
    SuiteBuilder s("rader-vs-naive-dft", tol(1e-9));
    for (std::size_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
      RandomStream rng(config.seed, stream_id(kRader, p));
      const auto plan = DftPlan::create(p);
      for (std::size_t t = 0; t < std::min<std::size_t>(trials, 50); ++t) {
        const auto x = rng.complex_signal(p);
        const auto expected = naive_dft(x);
        for (Engine e : kAllEngines) s.observe(relative_error(rader_dft(plan, x, e), expected));
      }
    }
    report.suites.push_back(s.finish());
  }
  {
    SuiteBuilder s("linear-convolution", tol(1e-10));
    for (std::size_t n : {1, 2, 3, 4, 5, 8, 13, 16, 31, 32, 64}) {
      RandomStream rng(config.seed, stream_id(kLinear, n));
      const auto b = rng.real_signal(n);
      const auto z = rng.real_signal(n);
      const auto expected = oracle::schoolbook_linear_convolution(b, z);
      for (Engine e : kAllEngines) {
        for (PadPolicy policy : {PadPolicy::smallest_prime, PadPolicy::double_length})
          s.observe(relative_error(full_linear_convolution(b, z, e, policy), expected));
      }
    }
    report.suites.push_back(s.finish());
  }
  return report;
}

std::string format_verify(const VerifyReport& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& s : report.suites)
      suites.push_back({{"suite", s.name},
                        {"passed", s.passed},
                        {"cases", s.cases},
                        {"max_error", s.max_error},
                        {"tolerance", opt_json(s.tolerance)},
                        {"detail", s.detail}});
    return nlohmann::json{{"passed", report.passed()}, {"suites", suites}}.dump(2) + "\n";
  }
  const std::vector<std::string> header = {"suite", "status", "cases", "max_error", "tolerance", "detail"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& s : report.suites)
    cells.push_back({s.name, s.passed ? "PASS" : "FAIL", std::to_string(s.cases),
                     s.tolerance ? sci(s.max_error) : "exact", s.tolerance ? sci(*s.tolerance) : "", s.detail});
  if (format == OutputFormat::csv) return csv_table(header, cells);
  return markdown_table(header, cells) + "\noverall: " + (report.passed() ? "PASS" : "FAIL") + "\n";
}

// ---------------------------------------------------------------- bench

BenchReport run_bench(const BenchConfig& config) {
  if (config.trials < 3) throw std::invalid_argument("bench: trials must be >= 3");
  const std::vector<std::size_t> sizes =
      config.sizes.empty() ? std::vector<std::size_t>{101, 499, 997} : config.sizes;
  BenchReport report;
  std::uint64_t row_index = 0;
  for (std::size_t n : sizes) {
    if (n < 2) throw std::invalid_argument("bench: sizes must be >= 2, got " + std::to_string(n));
    RandomStream rng(config.seed, row_index++);
    const auto b = rng.real_signal(n);
    std::vector<RealSignal> inputs;
    for (std::size_t t = 0; t < config.trials; ++t) inputs.push_back(rng.real_signal(n));

    for (Engine engine : config.engines) {
      const CyclicConvolver<double> conv(b, engine);
      BenchRow row;
      row.n = n;
      row.engine = engine;
      row.trials = config.trials;
      row.mults = count_engine(engine, b, inputs[0]).mults;
      double total = 0.0, best = 0.0;
      for (std::size_t t = 0; t < config.trials; ++t) {
        const auto start = std::chrono::steady_clock::now();
        const auto out = conv.apply(inputs[t]);
        const auto stop = std::chrono::steady_clock::now();
        if (out.size() != n) throw std::logic_error("unexpected output length");
        const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
        total += ns;
        best = t == 0 ? ns : std::min(best, ns);
      }
      row.mean_ns = total / static_cast<double>(config.trials);
      row.min_ns = best;
      report.rows.push_back(row);
    }

    BenchSummary summary;
    summary.n = n;
    summary.ratio_fast_vs_direct = fast_direct_mult_ratio(n);
    if (is_prime(n))
      summary.ratio_fast_vs_two_factor =
          static_cast<double>(predicted_counts(n).mults) / static_cast<double>(two_factor_counts(n).mults);
    summary.lower_bound_gap =
        static_cast<double>(predicted_counts(n).mults) / static_cast<double>(multiplication_lower_bound(n));
    report.summaries.push_back(summary);
  }
  return report;
}

std::string format_bench(const BenchReport& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::json rows = nlohmann::json::array(), summaries = nlohmann::json::array();
    for (const auto& r : report.rows)
      rows.push_back({{"n", r.n},
                      {"engine", std::string(engine_name(r.engine))},
                      {"trials", r.trials},
                      {"mean_ns", r.mean_ns},
                      {"min_ns", r.min_ns},
                      {"mults", r.mults}});
    for (const auto& s : report.summaries)
      summaries.push_back({{"n", s.n},
                           {"mult_ratio_fast_vs_direct", s.ratio_fast_vs_direct},
                           {"mult_ratio_fast_vs_two_factor", opt_json(s.ratio_fast_vs_two_factor)},
                           {"mult_ratio_fast_vs_lower_bound", s.lower_bound_gap}});
    return nlohmann::json{{"timings", rows}, {"count_ratios", summaries}}.dump(2) + "\n";
  }
  const std::vector<std::string> h1 = {"n", "engine", "trials", "mean_ns", "min_ns", "mults"};
  std::vector<std::vector<std::string>> c1;
  for (const auto& r : report.rows)
    c1.push_back({std::to_string(r.n), std::string(engine_name(r.engine)), std::to_string(r.trials), fixed(r.mean_ns, 0),
                  fixed(r.min_ns, 0), std::to_string(r.mults)});
  const std::vector<std::string> h2 = {"n", "mult_ratio_fast_vs_direct", "mult_ratio_fast_vs_two_factor",
                                       "mult_ratio_fast_vs_lower_bound"};
  std::vector<std::vector<std::string>> c2;
  for (const auto& s : report.summaries)
    c2.push_back({std::to_string(s.n), fixed(s.ratio_fast_vs_direct, 4),
                  s.ratio_fast_vs_two_factor ? fixed(*s.ratio_fast_vs_two_factor, 4) : "", fixed(s.lower_bound_gap, 2)});
  if (format == OutputFormat::csv) return csv_table(h1, c1) + "\n" + csv_table(h2, c2);
  return markdown_table(h1, c1) + "\n" + markdown_table(h2, c2) +
         "\nWall-clock figures are informational and hardware-dependent.\n";
}

}  // namespace primeconv::bench
