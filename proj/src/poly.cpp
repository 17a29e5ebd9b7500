#include "primeconv/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace primeconv {

template <Scalar T>
Polynomial<T>::Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(T{});
}

template <Scalar T>
Polynomial<T> Polynomial<T>::monomial(std::size_t k, T coeff) {
  std::vector<T> c(k + 1, T{});
  c[k] = coeff;
  return Polynomial(std::move(c));
}

template <Scalar T>
Polynomial<T> Polynomial<T>::cyclic_modulus(std::size_t n) {
  std::vector<T> c(n + 1, T{});
  c[0] = T{-1};
  c[n] = T{1};
  return Polynomial(std::move(c));
}

template <Scalar T>
Polynomial<T> Polynomial<T>::all_ones(std::size_t p) {
  return Polynomial(std::vector<T>(p, T{1}));
}

template <Scalar T>
double Polynomial<T>::max_abs() const {
  double m = 0.0;
  for (const T& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

template <Scalar T>
long Polynomial<T>::degree() const {
  const double cutoff = kDegreeThreshold * max_abs();
  for (long k = static_cast<long>(coeffs_.size()) - 1; k >= 0; --k)
    if (std::abs(coeffs_[static_cast<std::size_t>(k)]) > cutoff) return k;
  return -1;
}

template <Scalar T>
T Polynomial<T>::evaluate(T x) const {
  T acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <Scalar T>
Signal<T> Polynomial<T>::to_signal(std::size_t n) const {
  std::vector<T> out(n, T{});
  for (std::size_t k = 0; k < n && k < coeffs_.size(); ++k) out[k] = coeffs_[k];
  return Signal<T>(std::move(out));
}

template <Scalar T>
Polynomial<T> Polynomial<T>::trimmed() const {
  const long d = degree();
  return Polynomial(std::vector<T>(coeffs_.begin(), coeffs_.begin() + std::max(d, 0L) + 1));
}

namespace {

/// Leading coefficient normalized to one; throws on the zero polynomial.
template <Scalar T>
std::vector<T> monic_coeffs(const Polynomial<T>& m, const char* what) {
  const long d = m.degree();
  if (d < 0) throw std::invalid_argument(std::string(what) + ": zero modulus");
  std::vector<T> c(m.coeffs().begin(), m.coeffs().begin() + d + 1);
  const T lead = c.back();
  for (T& x : c) x /= lead;
  c.back() = T{1};
  return c;
}

/// Reduces rem (length >= deg m + 1) in place by monic m; returns the quotient.
template <Scalar T, typename Arith>
std::vector<T> long_division(std::vector<T>& rem, const std::vector<T>& monic, const Arith& ar) {
  const std::size_t dm = monic.size() - 1;
  if (rem.size() <= dm) return {T{}};
  std::vector<T> quot(rem.size() - dm, T{});
  for (std::size_t k = rem.size() - 1; k >= dm; --k) {
    const T t = rem[k];
    quot[k - dm] = t;
    rem[k] = T{};
    for (std::size_t j = 0; j < dm; ++j) {
      if (monic[j] == T{}) continue;
      rem[k - dm + j] = ar.sub(rem[k - dm + j], ar.mul(t, monic[j]));
    }
    if (k == dm) break;
  }
  rem.resize(dm);
  return quot;
}

template <Scalar T>
void flush_small(std::vector<T>& c, double scale) {
  const double cutoff = Polynomial<T>::kDegreeThreshold * scale;
  for (T& x : c)
    if (std::abs(x) <= cutoff) x = T{};
}

}  // namespace

template <Scalar T>
std::pair<Polynomial<T>, Polynomial<T>> poly_divmod(const Polynomial<T>& a, const Polynomial<T>& m) {
  const std::vector<T> monic = monic_coeffs(m, "poly_divmod");
  const T lead = m.coeffs()[static_cast<std::size_t>(m.degree())];
  std::vector<T> rem = a.coeffs();
  const double scale = a.max_abs();
  std::vector<T> quot = long_division(rem, monic, PlainArith{});
  if (rem.empty()) rem.push_back(T{});
  flush_small(rem, scale);
  // a = quot * monic + rem = (quot / lead) * m + rem
  for (T& x : quot) x /= lead;
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

namespace {

template <Scalar T, typename Arith>
Polynomial<T> mul_mod_impl(const Polynomial<T>& a, const Polynomial<T>& b, const Polynomial<T>& m, const Arith& ar) {
  const std::vector<T> monic = monic_coeffs(m, "poly_mul_mod");
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<T> prod(ac.size() + bc.size() - 1, T{});
  std::vector<bool> seen(prod.size(), false);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    for (std::size_t j = 0; j < bc.size(); ++j) {
      const T t = ar.mul(ac[i], bc[j]);
      if (seen[i + j]) {
        prod[i + j] = ar.add(prod[i + j], t);
      } else {
        prod[i + j] = t;
        seen[i + j] = true;
      }
    }
  }
  long_division(prod, monic, ar);
  prod.resize(monic.size() - 1, T{});
  if (prod.empty()) prod.push_back(T{});
  return Polynomial<T>(std::move(prod));
}

}  // namespace

template <Scalar T>
Polynomial<T> poly_mul_mod(const Polynomial<T>& a, const Polynomial<T>& b, const Polynomial<T>& m, OpTally& tally) {
  return mul_mod_impl(a, b, m, CountedArith(tally));
}

template <Scalar T>
Polynomial<T> poly_mul_mod(const Polynomial<T>& a, const Polynomial<T>& b, const Polynomial<T>& m) {
  return mul_mod_impl(a, b, m, PlainArith{});
}

template <Scalar T>
Polynomial<T> poly_gcd(const Polynomial<T>& a, const Polynomial<T>& b) {
  Polynomial<T> r0 = a.trimmed(), r1 = b.trimmed();
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    Polynomial<T> r2 = poly_mod(r0, r1).trimmed();
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  if (r0.is_zero()) return r0;
  const T lead = r0.coeffs()[static_cast<std::size_t>(r0.degree())];
  return (T{1} / lead) * r0.trimmed();
}

template <Scalar T>
Polynomial<T> extended_euclid_inverse(const Polynomial<T>& Mk, const Polynomial<T>& mk) {
  const long dm = mk.degree();
  if (dm < 0) throw std::invalid_argument("extended_euclid_inverse: zero modulus");
  if (dm == 0) return Polynomial<T>{T{}};

  // Invariant: s_i * Mk == r_i (mod mk).
  Polynomial<T> r0 = mk.trimmed(), r1 = poly_mod(Mk, mk).trimmed();
  Polynomial<T> s0{T{}}, s1{T{1}};
  while (r1.degree() > 0) {
    auto [quot, rem] = poly_divmod(r0, r1);
    Polynomial<T> s2 = s0 - quot * s1;
    r0 = std::move(r1);
    r1 = rem.trimmed();
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.is_zero())
    throw std::invalid_argument("extended_euclid_inverse: inputs are not coprime (gcd has degree >= 1)");

  const Polynomial<T> inverse = poly_mod((T{1} / r1[0]) * s1, mk).trimmed();

  const Polynomial<T> check = poly_mod(Mk * inverse, mk) - Polynomial<T>{T{1}};
  if (check.max_abs() > 1e-8)
    throw std::runtime_error("extended_euclid_inverse: residual " + std::to_string(check.max_abs()) +
                             " exceeds 1e-8");
  return inverse;
}

template <Scalar T>
ResidueSystem<T>::ResidueSystem(std::vector<Polynomial<T>> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::invalid_argument("residue system needs at least one modulus");
  for (const auto& m : moduli_)
    if (m.degree() < 1) throw std::invalid_argument("residue system moduli must have degree >= 1");
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    for (std::size_t j = i + 1; j < moduli_.size(); ++j)
      if (poly_gcd(moduli_[i], moduli_[j]).degree() != 0)
        throw std::invalid_argument("residue system moduli " + std::to_string(i) + " and " + std::to_string(j) +
                                    " are not coprime");

  product_ = Polynomial<T>{T{1}};
  for (const auto& m : moduli_) product_ = (product_ * m).trimmed();

  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    Polynomial<T> cofactor{T{1}};
    for (std::size_t j = 0; j < moduli_.size(); ++j)
      if (j != k) cofactor = (cofactor * moduli_[j]).trimmed();
    const Polynomial<T> inv = extended_euclid_inverse(cofactor, moduli_[k]);
    idempotents_.push_back(poly_mod(cofactor * inv, product_));
  }
}

template <Scalar T>
ResidueSystem<T> ResidueSystem<T>::two_factor(std::size_t p) {
  if (p < 2) throw std::invalid_argument("two-factor system requires p >= 2");
  ResidueSystem sys({Polynomial<T>{T{-1}, T{1}}, Polynomial<T>::all_ones(p)});
  const Polynomial<T> diff = sys.product_ - Polynomial<T>::cyclic_modulus(p);
  if (diff.max_abs() > 1e-9) throw std::logic_error("two-factor moduli do not multiply to x^p - 1");
  return sys;
}

template <Scalar T>
std::vector<Polynomial<T>> ResidueSystem<T>::reduce(const Polynomial<T>& c) const {
  std::vector<Polynomial<T>> out;
  out.reserve(moduli_.size());
  for (const auto& m : moduli_) out.push_back(poly_mod(c, m));
  return out;
}

template <Scalar T>
Polynomial<T> crt_reconstruct(const std::vector<Polynomial<T>>& residues, const ResidueSystem<T>& system) {
  if (residues.size() != system.moduli().size())
    throw std::invalid_argument("crt_reconstruct: " + std::to_string(residues.size()) + " residues for " +
                                std::to_string(system.moduli().size()) + " moduli");
  Polynomial<T> acc{T{}};
  for (std::size_t k = 0; k < residues.size(); ++k) acc = acc + residues[k] * system.idempotents()[k];
  auto result = poly_mod(acc, system.product());
  std::vector<T> c = result.coeffs();
  c.resize(static_cast<std::size_t>(system.product().degree()), T{});
  return Polynomial<T>(std::move(c));
}

namespace {

template <Scalar T, typename Arith>
Signal<T> two_factor_impl(const Signal<T>& b, const Signal<T>& z, const Arith& ar) {
  const std::size_t p = b.size();
  if (z.size() != p)
    throw std::invalid_argument("length mismatch: kernel has " + std::to_string(p) + " samples, input has " +
                                std::to_string(z.size()));
  if (!is_prime(p))
    throw std::invalid_argument("winograd two-factor engine requires a prime length, got " + std::to_string(p));
  const std::size_t d = p - 1;  // degree of m1 = 1 + x + ... + x^{p-1}

  // b side: precomputation.
  T b_at_one{};
  for (const T& x : b) b_at_one += x;
  std::vector<T> b_red(d);
  for (std::size_t k = 0; k < d; ++k) b_red[k] = b[k] - b[d];

  // Residue mod (x - 1): one multiplication.
  T z_at_one = z[0];
  for (std::size_t k = 1; k < p; ++k) z_at_one = ar.add(z_at_one, z[k]);
  const T c0 = ar.mul(b_at_one, z_at_one);

  // Residue mod m1: x^{p-1} == -(1 + ... + x^{p-2}).
  std::vector<T> z_red(d);
  for (std::size_t k = 0; k < d; ++k) z_red[k] = ar.sub(z[k], z[d]);

  std::vector<T> prod(2 * d - 1, T{});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const T t = ar.mul(b_red[i], z_red[j]);
      prod[i + j] = (i == 0 || j == d - 1) ? t : ar.add(prod[i + j], t);
    }
  }
  for (std::size_t k = prod.size(); k-- > d;) {
    const T t = prod[k];
    for (std::size_t j = 0; j < d; ++j) prod[k - d + j] = ar.sub(prod[k - d + j], t);
  }
  prod.resize(d);

  const auto system = ResidueSystem<T>::two_factor(p);
  const Polynomial<T> c = crt_reconstruct<T>({Polynomial<T>{c0}, Polynomial<T>(std::move(prod))}, system);
  return c.to_signal(p);
}

}  // namespace

template <Scalar T>
Signal<T> winograd_two_factor_convolution(const Signal<T>& b, const Signal<T>& z, OpTally& tally) {
  return two_factor_impl(b, z, CountedArith(tally));
}

template <Scalar T>
Signal<T> winograd_two_factor_convolution(const Signal<T>& b, const Signal<T>& z) {
  return two_factor_impl(b, z, PlainArith{});
}

OpCounts two_factor_counts(std::size_t p) {
  const std::uint64_t d = p - 1;
  const std::uint64_t inner = d - 1;
  return {1 + d * d, 2 * d + inner * inner + d * inner};
}

#define PRIMECONV_INSTANTIATE(T)                                                                              \
  template class Polynomial<T>;                                                                               \
  template std::pair<Polynomial<T>, Polynomial<T>> poly_divmod(const Polynomial<T>&, const Polynomial<T>&);   \
  template Polynomial<T> poly_mul_mod(const Polynomial<T>&, const Polynomial<T>&, const Polynomial<T>&,       \
                                      OpTally&);                                                              \
  template Polynomial<T> poly_mul_mod(const Polynomial<T>&, const Polynomial<T>&, const Polynomial<T>&);      \
  template Polynomial<T> poly_gcd(const Polynomial<T>&, const Polynomial<T>&);                                \
  template Polynomial<T> extended_euclid_inverse(const Polynomial<T>&, const Polynomial<T>&);                 \
  template class ResidueSystem<T>;                                                                            \
  template Polynomial<T> crt_reconstruct(const std::vector<Polynomial<T>>&, const ResidueSystem<T>&);         \
  template Signal<T> winograd_two_factor_convolution(const Signal<T>&, const Signal<T>&, OpTally&);           \
  template Signal<T> winograd_two_factor_convolution(const Signal<T>&, const Signal<T>&);

PRIMECONV_INSTANTIATE(double)
PRIMECONV_INSTANTIATE(Complex)

#undef PRIMECONV_INSTANTIATE

}  // namespace primeconv
