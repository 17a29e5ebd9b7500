#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primeconv/fast.hpp"
#include "primeconv/signal.hpp"

namespace primeconv {

enum class Engine { direct, fast_prime, winograd_two_factor };

inline constexpr Engine kAllEngines[] = {Engine::direct, Engine::fast_prime, Engine::winograd_two_factor};

std::string_view engine_name(Engine e);
/// Accepts "direct", "fast-prime", "winograd-two-factor"; throws std::invalid_argument otherwise.
Engine parse_engine(std::string_view name);

/// Cyclic convolution with a fixed kernel through one of the engines.
///
/// The two-factor engine only handles prime lengths; other lengths go through
/// the full linear product computed at the smallest prime length >= 2n-1,
/// folded back mod n.
template <Scalar T>
class CyclicConvolver {
 public:
  CyclicConvolver(Signal<T> kernel, Engine engine);

  std::size_t size() const { return kernel_.size(); }
  Engine engine() const { return engine_; }
  const Signal<T>& kernel() const { return kernel_; }

  Signal<T> apply(const Signal<T>& z, OpTally& tally) const;
  Signal<T> apply(const Signal<T>& z) const;

 private:
  Signal<T> run(const Signal<T>& z, OpTally* tally) const;

  Signal<T> kernel_;
  Engine engine_;
  std::optional<FastPlan<T>> fast_;
};

template <Scalar T>
Signal<T> cyclic_convolution(const Signal<T>& b, const Signal<T>& z, Engine engine, OpTally& tally);
template <Scalar T>
Signal<T> cyclic_convolution(const Signal<T>& b, const Signal<T>& z, Engine engine);

/// Zero-pad length used for linear convolution.
enum class PadPolicy {
  smallest_prime,  // smallest prime >= 2n - 1
  double_length,   // 2n
};

std::size_t linear_pad_length(std::size_t b_len, std::size_t z_len, PadPolicy policy);

/// All len(b) + len(z) - 1 samples of the linear convolution.
template <Scalar T>
Signal<T> full_linear_convolution(const Signal<T>& b, const Signal<T>& z, Engine engine,
                                  PadPolicy policy = PadPolicy::smallest_prime);
template <Scalar T>
Signal<T> full_linear_convolution(const Signal<T>& b, const Signal<T>& z, Engine engine, PadPolicy policy,
                                  OpTally& tally);

/// First n samples of the linear convolution of two length-n sequences.
template <Scalar T>
Signal<T> linear_convolution(const Signal<T>& b, const Signal<T>& z, Engine engine,
                             PadPolicy policy = PadPolicy::smallest_prime);

/// X_k = sum_j x_j exp(-2 pi i jk / n), by the defining double loop.
ComplexSignal naive_dft(const ComplexSignal& x);

/// Smallest generator of the multiplicative group mod p. Requires prime p >= 3.
std::uint64_t find_primitive_root(std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Precomputed reindexing for a prime-length DFT.
class DftPlan {
 public:
  static DftPlan create(std::size_t p);

  std::size_t size() const { return p_; }
  std::uint64_t generator() const { return g_; }
  /// input_index()[q] = g^{-q} mod p.
  const std::vector<std::size_t>& input_index() const { return input_index_; }
  /// output_index()[m] = g^m mod p.
  const std::vector<std::size_t>& output_index() const { return output_index_; }
  /// kernel[r] = exp(-2 pi i g^r / p), length p - 1.
  const ComplexSignal& kernel() const { return kernel_; }

 private:
  DftPlan(std::size_t p, std::uint64_t g, std::vector<std::size_t> in, std::vector<std::size_t> out,
          ComplexSignal kernel)
      : p_(p), g_(g), input_index_(std::move(in)), output_index_(std::move(out)), kernel_(std::move(kernel)) {}

  std::size_t p_;
  std::uint64_t g_;
  std::vector<std::size_t> input_index_;
  std::vector<std::size_t> output_index_;
  ComplexSignal kernel_;
};

/// Prime-length DFT as one (p-1)-point cyclic convolution plus the x_0 term.
ComplexSignal rader_dft(const DftPlan& plan, const ComplexSignal& x, Engine engine);
ComplexSignal rader_dft(const DftPlan& plan, const ComplexSignal& x, Engine engine, OpTally& tally);

}  // namespace primeconv
