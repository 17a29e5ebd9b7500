#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "primeconv/signal.hpp"

namespace primeconv {

/// Precomputed state for a fixed kernel b of length n >= 2.
///
/// v_i = b^T D^i s / n with s = (1-n, 1, ..., 1). Since s = d - n e_0 and
/// D^i e_0 = e_i, this is v_i = (sum b)/n - b_i. q_coeff = (sum b)/n.
/// None of this work is tallied: it depends on b alone.
template <Scalar T>
class FastPlan {
 public:
  static FastPlan create(const Signal<T>& b);

  std::size_t size() const { return v_.size(); }
  const std::vector<T>& v() const { return v_; }
  T q_coeff() const { return q_coeff_; }

  /// False for composite n. The engine still works; better composite-length
  /// algorithms exist, so callers may want to warn.
  bool length_is_prime() const { return prime_; }

  /// Copy with every v_i shifted by delta. Used to check that verification
  /// catches a corrupted plan.
  FastPlan perturbed(double delta) const;

 private:
  FastPlan(std::vector<T> v, T q_coeff, bool prime) : v_(std::move(v)), q_coeff_(q_coeff), prime_(prime) {}

  std::vector<T> v_;
  T q_coeff_;
  bool prime_;
};

/// Strictly upper triangle of the antisymmetric table g_{i,j} = v_{(i+j) mod n} (y_j - y_i).
template <Scalar T>
class GTable {
 public:
  explicit GTable(std::size_t n) : n_(n), data_(n * (n - 1) / 2) {}

  std::size_t size() const { return n_; }

  /// Stored entry, i < j.
  T& upper(std::size_t i, std::size_t j) { return data_[offset(i, j)]; }
  const T& upper(std::size_t i, std::size_t j) const { return data_[offset(i, j)]; }

  /// Full antisymmetric view: zero on the diagonal, -g_{j,i} below it.
  T operator()(std::size_t i, std::size_t j) const {
    if (i == j) return T{};
    return i < j ? upper(i, j) : -upper(j, i);
  }

 private:
  // Row i holds j = i+1..n-1.
  std::size_t offset(std::size_t i, std::size_t j) const { return i * (2 * n_ - i - 1) / 2 + (j - i - 1); }

  std::size_t n_;
  std::vector<T> data_;
};

/// Intermediates of one fast execution, exposed for verification.
template <Scalar T>
struct FastTrace {
  std::vector<T> y;
  GTable<T> g;
  std::vector<T> h;
  T q{};
  Signal<T> c;
};

template <Scalar T>
Signal<T> fast_cyclic_convolution(const FastPlan<T>& plan, const Signal<T>& z, OpTally& tally);
template <Scalar T>
Signal<T> fast_cyclic_convolution(const FastPlan<T>& plan, const Signal<T>& z);

template <Scalar T>
FastTrace<T> fast_cyclic_convolution_trace(const FastPlan<T>& plan, const Signal<T>& z, OpTally& tally);

/// Published closed form: (n(n-1)/2 + 1, 3n(n-1)/2 + 1).
OpCounts predicted_counts(std::size_t n);

/// Closed form of what fast_cyclic_convolution actually tallies:
/// (n(n-1)/2 + 1, 3n(n-1)/2 + n - 1). Additions break down as
/// n(n-1)/2 differences, (n-1)(n-2) for h_0..h_{n-2}, n-2 for h_{n-1},
/// n-1 for sum(y) and n for c_i = q - h_i. Agrees with predicted_counts
/// only at n = 2.
OpCounts realized_counts(std::size_t n);

/// n^2 mults, n(n-1) adds.
OpCounts direct_counts(std::size_t n);

/// 2(n-1), the minimum multiplication count for prime n.
std::uint64_t multiplication_lower_bound(std::size_t n);

}  // namespace primeconv
