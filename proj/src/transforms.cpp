#include "primeconv/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primeconv/poly.hpp"

namespace primeconv {

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::direct:
      return "direct";
    case Engine::fast_prime:
      return "fast-prime";
    case Engine::winograd_two_factor:
      return "winograd-two-factor";
  }
  return "unknown";
}

Engine parse_engine(std::string_view name) {
  for (Engine e : kAllEngines)
    if (engine_name(e) == name) return e;
  throw std::invalid_argument("unknown engine '" + std::string(name) +
                              "' (expected direct, fast-prime or winograd-two-factor)");
}

template <Scalar T>
CyclicConvolver<T>::CyclicConvolver(Signal<T> kernel, Engine engine) : kernel_(std::move(kernel)), engine_(engine) {
  if (engine_ == Engine::fast_prime) fast_ = FastPlan<T>::create(kernel_);
}

namespace {

/// c_k = lin_k + lin_{k+n}.
template <Scalar T, typename Arith>
Signal<T> fold(const Signal<T>& lin, std::size_t n, const Arith& ar) {
  std::vector<T> c(n, T{});
  for (std::size_t k = 0; k < n; ++k) c[k] = lin[k];
  for (std::size_t k = n; k < lin.size(); ++k) c[k - n] = ar.add(c[k - n], lin[k]);
  return Signal<T>(std::move(c));
}

template <Scalar T>
Signal<T> zero_pad(const Signal<T>& x, std::size_t m) {
  std::vector<T> out(m, T{});
  std::copy(x.begin(), x.end(), out.begin());
  return Signal<T>(std::move(out));
}

template <Scalar T>
Signal<T> truncate(const Signal<T>& x, std::size_t m) {
  return Signal<T>(std::vector<T>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m)));
}

template <Scalar T>
Signal<T> dispatch(const Signal<T>& b, const Signal<T>& z, Engine engine, OpTally* tally) {
  return tally ? cyclic_convolution(b, z, engine, *tally) : cyclic_convolution(b, z, engine);
}

template <Scalar T>
Signal<T> full_linear_impl(const Signal<T>& b, const Signal<T>& z, Engine engine, PadPolicy policy, OpTally* tally) {
  const std::size_t out_len = b.size() + z.size() - 1;
  const std::size_t m = linear_pad_length(b.size(), z.size(), policy);
  const Signal<T> c = dispatch(zero_pad(b, m), zero_pad(z, m), engine, tally);
  return truncate(c, out_len);
}

}  // namespace

template <Scalar T>
Signal<T> CyclicConvolver<T>::run(const Signal<T>& z, OpTally* tally) const {
  const std::size_t n = kernel_.size();
  if (z.size() != n)
    throw std::invalid_argument("length mismatch: kernel has " + std::to_string(n) + " samples, input has " +
                                std::to_string(z.size()));
  switch (engine_) {
    case Engine::direct:
      return tally ? direct_cyclic_convolution(kernel_, z, *tally) : direct_cyclic_convolution(kernel_, z);
    case Engine::fast_prime:
      return tally ? fast_cyclic_convolution(*fast_, z, *tally) : fast_cyclic_convolution(*fast_, z);
    case Engine::winograd_two_factor:
      if (is_prime(n))
        return tally ? winograd_two_factor_convolution(kernel_, z, *tally) : winograd_two_factor_convolution(kernel_, z);
      {
        const Signal<T> lin = full_linear_impl(kernel_, z, engine_, PadPolicy::smallest_prime, tally);
        return tally ? fold(lin, n, CountedArith(*tally)) : fold(lin, n, PlainArith{});
      }
  }
  throw std::logic_error("unhandled engine");
}

template <Scalar T>
Signal<T> CyclicConvolver<T>::apply(const Signal<T>& z, OpTally& tally) const {
  return run(z, &tally);
}

template <Scalar T>
Signal<T> CyclicConvolver<T>::apply(const Signal<T>& z) const {
  return run(z, nullptr);
}

template <Scalar T>
Signal<T> cyclic_convolution(const Signal<T>& b, const Signal<T>& z, Engine engine, OpTally& tally) {
  return CyclicConvolver<T>(b, engine).apply(z, tally);
}

template <Scalar T>
Signal<T> cyclic_convolution(const Signal<T>& b, const Signal<T>& z, Engine engine) {
  return CyclicConvolver<T>(b, engine).apply(z);
}

std::size_t linear_pad_length(std::size_t b_len, std::size_t z_len, PadPolicy policy) {
  if (b_len == 0 || z_len == 0) throw std::invalid_argument("linear convolution of an empty sequence");
  const std::size_t need = b_len + z_len - 1;
  if (policy == PadPolicy::double_length) return std::max<std::size_t>(2 * std::max(b_len, z_len), 2);
  return next_prime(need);
}

template <Scalar T>
Signal<T> full_linear_convolution(const Signal<T>& b, const Signal<T>& z, Engine engine, PadPolicy policy) {
  return full_linear_impl(b, z, engine, policy, nullptr);
}

template <Scalar T>
Signal<T> full_linear_convolution(const Signal<T>& b, const Signal<T>& z, Engine engine, PadPolicy policy,
                                  OpTally& tally) {
  return full_linear_impl(b, z, engine, policy, &tally);
}

template <Scalar T>
Signal<T> linear_convolution(const Signal<T>& b, const Signal<T>& z, Engine engine, PadPolicy policy) {
  if (b.size() != z.size())
    throw std::invalid_argument("length mismatch: kernel has " + std::to_string(b.size()) +
                                " samples, input has " + std::to_string(z.size()));
  return truncate(full_linear_convolution(b, z, engine, policy), b.size());
}

ComplexSignal naive_dft(const ComplexSignal& x) {
  const std::size_t n = x.size();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      acc += x[j] * std::polar(1.0, angle);
    }
    out[k] = acc;
  }
  return ComplexSignal(std::move(out));
}

__extension__ using u128 = unsigned __int128;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  u128 result = 1 % mod, b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t find_primitive_root(std::uint64_t p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("primitive root requires a prime p >= 3, got " + std::to_string(p));
  std::vector<std::uint64_t> factors;
  std::uint64_t rest = p - 1;
  for (std::uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    factors.push_back(q);
    while (rest % q == 0) rest /= q;
  }
  if (rest > 1) factors.push_back(rest);

  for (std::uint64_t g = 2; g < p; ++g) {
    bool generator = true;
    for (std::uint64_t q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw std::logic_error("no primitive root found");
}

DftPlan DftPlan::create(std::size_t p) {
  const std::uint64_t g = find_primitive_root(p);
  const std::uint64_t g_inv = pow_mod(g, p - 2, p);
  const std::size_t len = p - 1;
  std::vector<std::size_t> in(len), out(len);
  std::vector<Complex> kernel(len);
  std::uint64_t fwd = 1, bwd = 1;
  for (std::size_t r = 0; r < len; ++r) {
    out[r] = fwd;
    in[r] = bwd;
    kernel[r] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(fwd) / static_cast<double>(p));
    fwd = fwd * g % p;
    bwd = bwd * g_inv % p;
  }
  return DftPlan(p, g, std::move(in), std::move(out), ComplexSignal(std::move(kernel)));
}

namespace {

ComplexSignal rader_impl(const DftPlan& plan, const ComplexSignal& x, Engine engine, OpTally* tally) {
  const std::size_t p = plan.size();
  if (x.size() != p)
    throw std::invalid_argument("length mismatch: DFT plan has " + std::to_string(p) + " points, input has " +
                                std::to_string(x.size()));
  std::vector<Complex> permuted(p - 1);
  for (std::size_t q = 0; q + 1 < p; ++q) permuted[q] = x[plan.input_index()[q]];

  const CyclicConvolver<Complex> conv(plan.kernel(), engine);
  const ComplexSignal c = tally ? conv.apply(ComplexSignal(std::move(permuted)), *tally)
                                : conv.apply(ComplexSignal(std::move(permuted)));

  std::vector<Complex> out(p);
  Complex sum = x[0];
  for (std::size_t j = 1; j < p; ++j) sum = tally ? counted_add(sum, x[j], *tally) : sum + x[j];
  out[0] = sum;
  for (std::size_t m = 0; m + 1 < p; ++m)
    out[plan.output_index()[m]] = tally ? counted_add(x[0], c[m], *tally) : x[0] + c[m];
  return ComplexSignal(std::move(out));
}

}  // namespace

ComplexSignal rader_dft(const DftPlan& plan, const ComplexSignal& x, Engine engine) {
  return rader_impl(plan, x, engine, nullptr);
}

ComplexSignal rader_dft(const DftPlan& plan, const ComplexSignal& x, Engine engine, OpTally& tally) {
  return rader_impl(plan, x, engine, &tally);
}

#define PRIMECONV_INSTANTIATE(T)                                                                             \
  template class CyclicConvolver<T>;                                                                         \
  template Signal<T> cyclic_convolution(const Signal<T>&, const Signal<T>&, Engine, OpTally&);               \
  template Signal<T> cyclic_convolution(const Signal<T>&, const Signal<T>&, Engine);                         \
  template Signal<T> full_linear_convolution(const Signal<T>&, const Signal<T>&, Engine, PadPolicy);         \
  template Signal<T> full_linear_convolution(const Signal<T>&, const Signal<T>&, Engine, PadPolicy, OpTally&); \
  template Signal<T> linear_convolution(const Signal<T>&, const Signal<T>&, Engine, PadPolicy);

PRIMECONV_INSTANTIATE(double)
PRIMECONV_INSTANTIATE(Complex)

#undef PRIMECONV_INSTANTIATE

}  // namespace primeconv
