#include "primeconv/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace primeconv {

template <Scalar T>
Signal<T>::Signal(std::vector<T> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw std::invalid_argument("signal must have at least one sample");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!is_finite(samples_[i]))
      throw std::invalid_argument("signal sample " + std::to_string(i) + " is not finite");
  }
}

template <Scalar T>
Signal<T> Signal<T>::zeros(std::size_t n) {
  if (n == 0) throw std::invalid_argument("signal must have at least one sample");
  return Signal(std::vector<T>(n, T{}), Unchecked{});
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::size_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::size_t next_prime(std::size_t n) {
  if (n <= 2) return 2;
  while (!is_prime(n)) ++n;
  return n;
}

template <Scalar T>
Signal<T> reverse_permute(const Signal<T>& z) {
  const std::size_t n = z.size();
  std::vector<T> y(n);
  y[0] = z[0];
  for (std::size_t k = 1; k < n; ++k) y[k] = z[n - k];
  return Signal<T>(std::move(y));
}

template <Scalar T>
Signal<T> rotate(const Signal<T>& x, long long i) {
  const auto n = static_cast<long long>(x.size());
  const long long shift = ((i % n) + n) % n;
  std::vector<T> out(x.size());
  for (long long k = 0; k < n; ++k) out[static_cast<std::size_t>((k + shift) % n)] = x[static_cast<std::size_t>(k)];
  return Signal<T>(std::move(out));
}

namespace {

template <Scalar T, typename Arith>
Signal<T> direct_impl(const Signal<T>& b, const Signal<T>& z, const Arith& ar) {
  if (b.size() != z.size())
    throw std::invalid_argument("length mismatch: kernel has " + std::to_string(b.size()) +
                                " samples, input has " + std::to_string(z.size()));
  const std::size_t n = b.size();
  std::vector<T> c(n);
  for (std::size_t p = 0; p < n; ++p) {
    T acc = ar.mul(b[0], z[p]);
    for (std::size_t l = 1; l < n; ++l) acc = ar.add(acc, ar.mul(b[l], z[(p + n - l) % n]));
    c[p] = acc;
  }
  return Signal<T>(std::move(c));
}

}  // namespace

template <Scalar T>
Signal<T> direct_cyclic_convolution(const Signal<T>& b, const Signal<T>& z, OpTally& tally) {
  return direct_impl(b, z, CountedArith(tally));
}

template <Scalar T>
Signal<T> direct_cyclic_convolution(const Signal<T>& b, const Signal<T>& z) {
  return direct_impl(b, z, PlainArith{});
}

template <Scalar T>
double relative_error(std::span<const T> actual, std::span<const T> expected) {
  if (actual.size() != expected.size())
    throw std::invalid_argument("relative_error: length mismatch");
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    diff = std::max(diff, std::abs(actual[i] - expected[i]));
    scale = std::max(scale, std::abs(expected[i]));
  }
  return diff / std::max(1.0, scale);
}

#define PRIMECONV_INSTANTIATE(T)                                                                 \
  template class Signal<T>;                                                                      \
  template Signal<T> reverse_permute(const Signal<T>&);                                          \
  template Signal<T> rotate(const Signal<T>&, long long);                                        \
  template Signal<T> direct_cyclic_convolution(const Signal<T>&, const Signal<T>&, OpTally&);    \
  template Signal<T> direct_cyclic_convolution(const Signal<T>&, const Signal<T>&);              \
  template double relative_error(std::span<const T>, std::span<const T>);

PRIMECONV_INSTANTIATE(double)
PRIMECONV_INSTANTIATE(Complex)

#undef PRIMECONV_INSTANTIATE

}  // namespace primeconv
