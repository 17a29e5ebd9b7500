#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <type_traits>

namespace primeconv {

using Complex = std::complex<double>;

template <typename T>
inline constexpr bool is_scalar_v = std::is_same_v<T, double> || std::is_same_v<T, Complex>;

template <typename T>
concept Scalar = is_scalar_v<T>;

/// Exact counts of field operations performed by one execution.
/// Subtractions are counted as additions; a complex multiply counts as one.
struct OpTally {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;

  void reset() { *this = OpTally{}; }
  friend bool operator==(const OpTally&, const OpTally&) = default;
};

/// Closed-form operation counts of an algorithm at a given length.
struct OpCounts {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

template <Scalar T>
T counted_mul(T a, T b, OpTally& tally) {
  ++tally.mults;
  return a * b;
}

template <Scalar T>
T counted_add(T a, T b, OpTally& tally) {
  ++tally.adds;
  return a + b;
}

template <Scalar T>
T counted_sub(T a, T b, OpTally& tally) {
  ++tally.adds;
  return a - b;
}

/// Arithmetic policy without bookkeeping. Engines are templated on the policy,
/// so plain and counted runs execute the same operation sequence.
struct PlainArith {
  template <Scalar T>
  T mul(T a, T b) const { return a * b; }
  template <Scalar T>
  T add(T a, T b) const { return a + b; }
  template <Scalar T>
  T sub(T a, T b) const { return a - b; }
};

class CountedArith {
 public:
  explicit CountedArith(OpTally& tally) : tally_(&tally) {}

  template <Scalar T>
  T mul(T a, T b) const { return counted_mul(a, b, *tally_); }
  template <Scalar T>
  T add(T a, T b) const { return counted_add(a, b, *tally_); }
  template <Scalar T>
  T sub(T a, T b) const { return counted_sub(a, b, *tally_); }

 private:
  OpTally* tally_;
};

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

}  // namespace primeconv
