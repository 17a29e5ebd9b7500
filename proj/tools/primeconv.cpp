// primeconv: cyclic convolution, prime-length DFT, complexity tables and verification sweeps.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primeconv/bench.hpp"
#include "primeconv/sample_io.hpp"
#include "primeconv/transforms.hpp"

namespace {

using namespace primeconv;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::vector<std::size_t> sizes;
  std::vector<std::string> engines;
  std::size_t trials = 0;
  std::uint64_t seed = 42;
  double tol = -1.0;
  std::string format = "markdown";
  std::string out;
  bool timing = false;
  double fault = 0.0;

  std::string input, kernel;
  bool linear = false;
  bool require_prime = false;
  std::string pad = "prime";
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + opt.out + "'");
  f << text;
}

bench::BenchConfig make_config(const Options& opt, std::size_t default_trials) {
  bench::BenchConfig cfg;
  cfg.sizes = opt.sizes;
  if (!opt.engines.empty()) {
    cfg.engines.clear();
    for (const auto& e : opt.engines) cfg.engines.push_back(parse_engine(e));
  }
  cfg.trials = opt.trials ? opt.trials : default_trials;
  cfg.seed = opt.seed;
  if (opt.tol >= 0.0) cfg.tolerance = opt.tol;
  cfg.format = bench::parse_format(opt.format);
  cfg.timing = opt.timing;
  cfg.fault_delta = opt.fault;
  return cfg;
}

Engine single_engine(const Options& opt, Engine fallback) {
  if (opt.engines.empty()) return fallback;
  if (opt.engines.size() > 1) throw std::invalid_argument("this command takes a single --engine");
  return parse_engine(opt.engines.front());
}

void advise_composite(std::size_t n, Engine engine) {
  if (engine == Engine::fast_prime && n >= 2 && !is_prime(n))
    std::cerr << "note: length " << n << " is composite; the fast engine still applies but is not the best choice\n";
}

template <Scalar T>
std::string convolve_text(const Signal<T>& b, const Signal<T>& z, Engine engine, const Options& opt) {
  const PadPolicy pad = opt.pad == "double" ? PadPolicy::double_length : PadPolicy::smallest_prime;
  std::ostringstream out;
  if (opt.linear) {
    advise_composite(linear_pad_length(b.size(), z.size(), pad), engine);
    io::write_samples(out, linear_convolution(b, z, engine, pad));
  } else {
    advise_composite(b.size(), engine);
    io::write_samples(out, cyclic_convolution(b, z, engine));
  }
  return out.str();
}

int run_convolve(const Options& opt) {
  const auto input = io::read_samples(opt.input);
  const auto kernel = io::read_samples(opt.kernel);
  if (input.size() != kernel.size())
    throw std::invalid_argument("length mismatch: input '" + opt.input + "' has " + std::to_string(input.size()) +
                                " samples, kernel '" + opt.kernel + "' has " + std::to_string(kernel.size()));
  const std::size_t n = input.size();
  if (opt.require_prime && !is_prime(n))
    throw std::invalid_argument("length " + std::to_string(n) + " is not prime (--require-prime)");
  const Engine engine = single_engine(opt, Engine::fast_prime);
  if (input.is_complex || kernel.is_complex)
    emit(opt, convolve_text(kernel.complex(), input.complex(), engine, opt));
  else
    emit(opt, convolve_text(kernel.real(), input.real(), engine, opt));
  return kExitOk;
}

int run_dft(const Options& opt) {
  const auto input = io::read_samples(opt.input);
  const std::size_t p = input.size();
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("dft needs a prime length >= 3, got " + std::to_string(p));
  const Engine engine = single_engine(opt, Engine::fast_prime);
  std::ostringstream out;
  io::write_samples(out, rader_dft(DftPlan::create(p), input.complex(), engine));
  emit(opt, out.str());
  return kExitOk;
}

void add_sweep_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--sizes", opt.sizes, "Lengths to run (comma separated)")->delimiter(',');
  cmd->add_option("--engine", opt.engines, "direct, fast-prime, winograd-two-factor (comma separated)")
      ->delimiter(',');
  cmd->add_option("--trials", opt.trials, "Random vectors (or timing repetitions) per size");
  cmd->add_option("--seed", opt.seed, "64-bit seed for the test-vector generator");
  cmd->add_option("--tol", opt.tol, "Relative-error bound overriding the built-in tolerances")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "markdown", "json"}));
  cmd->add_option("--out", opt.out, "Write output to FILE instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fast cyclic convolution: convolve, prime-length DFT, complexity tables and verification"};
  app.name("primeconv");
  app.require_subcommand(1);
  Options opt;

  auto* table = app.add_subcommand("table", "Measured and predicted operation counts per length and engine");
  add_sweep_flags(table, opt);
  table->add_flag("--timing", opt.timing, "Also measure mean wall-clock (makes output non-deterministic)");

  auto* verify = app.add_subcommand("verify", "Run the invariant suites; exit 1 on any failure");
  add_sweep_flags(verify, opt);
  verify->add_option("--inject-fault", opt.fault, "Perturb every v_i of the fast plan by this amount")
      ->group("");

  auto* bench_cmd = app.add_subcommand("bench", "Wall-clock per engine and multiplication-count ratios");
  add_sweep_flags(bench_cmd, opt);

  auto* convolve = app.add_subcommand("convolve", "Cyclic (or --linear) convolution of two sample files");
  convolve->add_option("input", opt.input, "Input samples, one per line ('re' or 're im')")->required();
  convolve->add_option("kernel", opt.kernel, "Kernel samples, same format and length")->required();
  convolve->add_option("--engine", opt.engines, "direct, fast-prime or winograd-two-factor");
  convolve->add_flag("--linear", opt.linear, "First n samples of the zero-padded linear convolution");
  convolve->add_option("--pad", opt.pad, "Linear-convolution padding: prime (smallest prime >= 2n-1) or double (2n)")
      ->check(CLI::IsMember({"prime", "double"}));
  convolve->add_flag("--require-prime", opt.require_prime, "Reject composite lengths");
  convolve->add_option("--out", opt.out, "Write output to FILE instead of stdout");

  auto* dft = app.add_subcommand("dft", "Prime-length DFT by Rader reindexing");
  dft->add_option("input", opt.input, "Input samples, one per line ('re' or 're im')")->required();
  dft->add_option("--engine", opt.engines, "Engine for the (p-1)-point convolution");
  dft->add_option("--out", opt.out, "Write output to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) {
      const auto cfg = make_config(opt, 5);
      if (cfg.sizes.empty()) throw std::invalid_argument("table: --sizes is required");
      emit(opt, bench::format_table(bench::build_table(cfg), cfg.format));
      return kExitOk;
    }
    if (*verify) {
      const auto cfg = make_config(opt, 100);
      const auto report = bench::run_verify(cfg);
      emit(opt, bench::format_verify(report, cfg.format));
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }
    if (*bench_cmd) {
      const auto cfg = make_config(opt, 5);
      emit(opt, bench::format_bench(bench::run_bench(cfg), cfg.format));
      return kExitOk;
    }
    if (*convolve) return run_convolve(opt);
    if (*dft) return run_dft(opt);
  } catch (const std::exception& e) {
    std::cerr << "primeconv: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
