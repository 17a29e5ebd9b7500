#pragma once

#include <random>
#include <vector>

#include "primeconv/signal.hpp"

namespace primeconv::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return std::uniform_real_distribution<double>(-1.0, 1.0)(gen_); }

  RealSignal real(std::size_t n) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform();
    return RealSignal(std::move(v));
  }

  ComplexSignal complex(std::size_t n) {
    std::vector<Complex> v(n);
    for (Complex& x : v) x = Complex(uniform(), uniform());
    return ComplexSignal(std::move(v));
  }

 private:
  std::mt19937_64 gen_;
};

/// Eq. (1) evaluated literally, no shared code with the library.
template <typename T>
std::vector<T> brute_force_cyclic(const std::vector<T>& b, const std::vector<T>& z) {
  const std::size_t n = b.size();
  std::vector<T> c(n, T{});
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t l = 0; l < n; ++l) c[p] += b[l] * z[(p + n - l) % n];
  return c;
}

}  // namespace primeconv::testing
