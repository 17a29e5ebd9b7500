#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "primeconv/signal.hpp"

namespace primeconv {

/// Dense polynomial; coefficient k multiplies x^k.
template <Scalar T>
class Polynomial {
 public:
  /// Coefficients below this fraction of the largest magnitude do not count toward the degree.
  static constexpr double kDegreeThreshold = 1e-12;

  Polynomial() : coeffs_{T{}} {}
  explicit Polynomial(std::vector<T> coeffs);
  Polynomial(std::initializer_list<T> coeffs) : Polynomial(std::vector<T>(coeffs)) {}

  static Polynomial from_signal(const Signal<T>& s) { return Polynomial(s.vector()); }
  static Polynomial monomial(std::size_t k, T coeff = T{1});
  /// x^n - 1.
  static Polynomial cyclic_modulus(std::size_t n);
  /// 1 + x + ... + x^{p-1}.
  static Polynomial all_ones(std::size_t p);

  /// Numerical degree; -1 for the zero polynomial.
  long degree() const;
  bool is_zero() const { return degree() < 0; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  /// Coefficient k, zero beyond the stored length.
  T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T{}; }
  T evaluate(T x) const;
  double max_abs() const;

  /// Coefficients 0..n-1 as a signal (zero-padded or truncated).
  Signal<T> to_signal(std::size_t n) const;

  /// Drops numerically-zero leading coefficients, keeping at least one.
  Polynomial trimmed() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
    return Polynomial(std::move(c));
  }
  /// Plain (untallied) product.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(T s, const Polynomial& a) {
    std::vector<T> c = a.coeffs_;
    for (T& x : c) x *= s;
    return Polynomial(std::move(c));
  }

 private:
  std::vector<T> coeffs_;
};

/// Quotient and remainder of a / m. The remainder has degree < deg(m);
/// entries below 1e-12 of the dividend's scale are flushed to zero.
template <Scalar T>
std::pair<Polynomial<T>, Polynomial<T>> poly_divmod(const Polynomial<T>& a, const Polynomial<T>& m);

template <Scalar T>
Polynomial<T> poly_mod(const Polynomial<T>& a, const Polynomial<T>& m) {
  return poly_divmod(a, m).second;
}

/// a * b mod m by schoolbook product then long division, every data operation tallied.
/// m is normalized to monic first; exact zero coefficients of m are skipped.
template <Scalar T>
Polynomial<T> poly_mul_mod(const Polynomial<T>& a, const Polynomial<T>& b, const Polynomial<T>& m, OpTally& tally);
template <Scalar T>
Polynomial<T> poly_mul_mod(const Polynomial<T>& a, const Polynomial<T>& b, const Polynomial<T>& m);

/// Monic greatest common divisor by the Euclidean algorithm.
template <Scalar T>
Polynomial<T> poly_gcd(const Polynomial<T>& a, const Polynomial<T>& b);

/// r with deg r < deg mk and Mk * r == 1 (mod mk). Throws if gcd(Mk, mk) is not a nonzero constant.
template <Scalar T>
Polynomial<T> extended_euclid_inverse(const Polynomial<T>& Mk, const Polynomial<T>& mk);

/// Pairwise coprime moduli m_k with their product m and the CRT idempotents
/// e_k = M_k (M_k^{-1} mod m_k) mod m, where M_k = m / m_k.
template <Scalar T>
class ResidueSystem {
 public:
  explicit ResidueSystem(std::vector<Polynomial<T>> moduli);

  /// {x - 1, 1 + x + ... + x^{p-1}}, product x^p - 1.
  static ResidueSystem two_factor(std::size_t p);

  const std::vector<Polynomial<T>>& moduli() const { return moduli_; }
  const Polynomial<T>& product() const { return product_; }
  const std::vector<Polynomial<T>>& idempotents() const { return idempotents_; }

  /// c mod m_k for every k.
  std::vector<Polynomial<T>> reduce(const Polynomial<T>& c) const;

 private:
  std::vector<Polynomial<T>> moduli_;
  Polynomial<T> product_;
  std::vector<Polynomial<T>> idempotents_;
};

/// sum_k c_k e_k mod m. Recombination uses precomputed constants only and is untallied.
template <Scalar T>
Polynomial<T> crt_reconstruct(const std::vector<Polynomial<T>>& residues, const ResidueSystem<T>& system);

/// Prime-length cyclic convolution through the residues mod (x - 1) and
/// mod 1 + x + ... + x^{p-1}. Tallies 1 + (p-1)^2 multiplications; the
/// b-side reductions are precomputation and the recombination is untallied.
template <Scalar T>
Signal<T> winograd_two_factor_convolution(const Signal<T>& b, const Signal<T>& z, OpTally& tally);
template <Scalar T>
Signal<T> winograd_two_factor_convolution(const Signal<T>& b, const Signal<T>& z);

/// Tally of winograd_two_factor_convolution at prime p.
/// Additions: (p-1) for z(1), (p-1) for z mod m1, (p-2)^2 in the product, (p-1)(p-2) for the reduction.
OpCounts two_factor_counts(std::size_t p);

}  // namespace primeconv
