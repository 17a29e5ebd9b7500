#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "primeconv/arith.hpp"

namespace primeconv {

/// Fixed-length sequence of finite field scalars, indexed 0..n-1.
template <Scalar T>
class Signal {
 public:
  explicit Signal(std::vector<T> samples);
  Signal(std::initializer_list<T> samples) : Signal(std::vector<T>(samples)) {}

  static Signal zeros(std::size_t n);

  std::size_t size() const { return samples_.size(); }
  const T& operator[](std::size_t i) const { return samples_[i]; }
  std::span<const T> samples() const { return samples_; }
  const std::vector<T>& vector() const { return samples_; }

  auto begin() const { return samples_.begin(); }
  auto end() const { return samples_.end(); }

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  struct Unchecked {};
  Signal(std::vector<T> samples, Unchecked) : samples_(std::move(samples)) {}

  std::vector<T> samples_;
};

using RealSignal = Signal<double>;
using ComplexSignal = Signal<Complex>;

/// True iff n is prime, by trial division.
bool is_prime(std::size_t n);

/// Smallest prime >= n (n <= 2 gives 2).
std::size_t next_prime(std::size_t n);

/// y_0 = z_0, y_k = z_{n-k}. Involutive.
template <Scalar T>
Signal<T> reverse_permute(const Signal<T>& z);

/// Applies D^i (D e_k = e_{k+1 mod n}) as an index permutation: out_k = x_{(k-i) mod n}.
template <Scalar T>
Signal<T> rotate(const Signal<T>& x, long long i);

/// c_p = sum_l b_l z_{(p-l) mod n}. Tallies n^2 mults and n(n-1) adds.
template <Scalar T>
Signal<T> direct_cyclic_convolution(const Signal<T>& b, const Signal<T>& z, OpTally& tally);
template <Scalar T>
Signal<T> direct_cyclic_convolution(const Signal<T>& b, const Signal<T>& z);

struct Tolerance {
  static constexpr double kReal = 1e-10;
  static constexpr double kComplex = 1e-9;
};

/// ||a - b||_inf / max(1, ||b||_inf). Lengths must agree.
template <Scalar T>
double relative_error(std::span<const T> actual, std::span<const T> expected);
template <Scalar T>
double relative_error(const Signal<T>& actual, const Signal<T>& expected) {
  return relative_error<T>(actual.samples(), expected.samples());
}

}  // namespace primeconv
