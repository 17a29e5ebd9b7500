#include "primeconv/fast.hpp"

#include <stdexcept>
#include <string>

namespace primeconv {

namespace {

void require_engine_length(std::size_t n) {
  if (n < 2) throw std::invalid_argument("fast engine requires n >= 2, got n = " + std::to_string(n));
}

template <Scalar T, typename Arith>
FastTrace<T> run(const FastPlan<T>& plan, const Signal<T>& z, const Arith& ar) {
  const std::size_t n = plan.size();
  if (z.size() != n)
    throw std::invalid_argument("length mismatch: plan has " + std::to_string(n) + " samples, input has " +
                                std::to_string(z.size()));
  const auto& v = plan.v();

  std::vector<T> y = reverse_permute(z).vector();

  GTable<T> g(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.upper(i, j) = ar.mul(v[(i + j) % n], ar.sub(y[j], y[i]));

  std::vector<T> h(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    T acc = g.upper(i, i + 1);
    for (std::size_t j = i + 2; j < n; ++j) acc = ar.add(acc, g.upper(i, j));
    for (std::size_t j = 0; j < i; ++j) acc = ar.sub(acc, g.upper(j, i));
    h[i] = acc;
  }
  // d^T h = 0.
  T partial = h[0];
  for (std::size_t i = 1; i + 1 < n; ++i) partial = ar.add(partial, h[i]);
  h[n - 1] = -partial;

  T sum_y = y[0];
  for (std::size_t j = 1; j < n; ++j) sum_y = ar.add(sum_y, y[j]);
  const T q = ar.mul(plan.q_coeff(), sum_y);

  std::vector<T> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = ar.sub(q, h[i]);

  return FastTrace<T>{std::move(y), std::move(g), std::move(h), q, Signal<T>(std::move(c))};
}

}  // namespace

template <Scalar T>
FastPlan<T> FastPlan<T>::create(const Signal<T>& b) {
  const std::size_t n = b.size();
  require_engine_length(n);
  T sum{};
  for (const T& x : b) sum += x;
  const T q_coeff = sum / static_cast<double>(n);
  std::vector<T> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = q_coeff - b[i];
  return FastPlan(std::move(v), q_coeff, is_prime(n));
}

template <Scalar T>
FastPlan<T> FastPlan<T>::perturbed(double delta) const {
  std::vector<T> v = v_;
  for (T& x : v) x += delta;
  return FastPlan(std::move(v), q_coeff_, prime_);
}

template <Scalar T>
Signal<T> fast_cyclic_convolution(const FastPlan<T>& plan, const Signal<T>& z, OpTally& tally) {
  return run(plan, z, CountedArith(tally)).c;
}

template <Scalar T>
Signal<T> fast_cyclic_convolution(const FastPlan<T>& plan, const Signal<T>& z) {
  return run(plan, z, PlainArith{}).c;
}

template <Scalar T>
FastTrace<T> fast_cyclic_convolution_trace(const FastPlan<T>& plan, const Signal<T>& z, OpTally& tally) {
  return run(plan, z, CountedArith(tally));
}

OpCounts predicted_counts(std::size_t n) {
  require_engine_length(n);
  const std::uint64_t pairs = n * (n - 1) / 2;
  return {pairs + 1, 3 * pairs + 1};
}

OpCounts realized_counts(std::size_t n) {
  require_engine_length(n);
  const std::uint64_t pairs = n * (n - 1) / 2;
  return {pairs + 1, 3 * pairs + n - 1};
}

OpCounts direct_counts(std::size_t n) {
  return {static_cast<std::uint64_t>(n) * n, static_cast<std::uint64_t>(n) * (n - 1)};
}

std::uint64_t multiplication_lower_bound(std::size_t n) { return n < 1 ? 0 : 2 * (n - 1); }

template class FastPlan<double>;
template class FastPlan<Complex>;
template Signal<double> fast_cyclic_convolution(const FastPlan<double>&, const Signal<double>&, OpTally&);
template Signal<Complex> fast_cyclic_convolution(const FastPlan<Complex>&, const Signal<Complex>&, OpTally&);
template Signal<double> fast_cyclic_convolution(const FastPlan<double>&, const Signal<double>&);
template Signal<Complex> fast_cyclic_convolution(const FastPlan<Complex>&, const Signal<Complex>&);
template FastTrace<double> fast_cyclic_convolution_trace(const FastPlan<double>&, const Signal<double>&, OpTally&);
template FastTrace<Complex> fast_cyclic_convolution_trace(const FastPlan<Complex>&, const Signal<Complex>&, OpTally&);

}  // namespace primeconv
