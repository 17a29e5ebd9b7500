#include "primeconv/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace primeconv::oracle {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix shift_matrix(std::size_t n) {
  Matrix d(n, n);
  for (std::size_t k = 0; k < n; ++k) d((k + 1) % n, k) = 1.0;
  return d;
}

Matrix matrix_power(const Matrix& m, std::size_t k) {
  Matrix out = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

std::vector<double> seed_vector(std::size_t n) {
  std::vector<double> s(n, 1.0);
  s[0] = 1.0 - static_cast<double>(n);
  return s;
}

Matrix f_matrix(std::size_t n) {
  const Matrix d = shift_matrix(n);
  const std::vector<double> s = seed_vector(n);
  Matrix f(n, n);
  Matrix power = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t r = 0; r < n; ++r) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += power(r, k) * s[k];
      f(r, col) = acc;
    }
    power = d * power;
  }
  return f;
}

Matrix ones_matrix(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 1.0;
  return m;
}

std::size_t numeric_rank(Matrix m, double threshold) {
  std::size_t rank = 0;
  std::vector<bool> used(m.rows(), false);
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t pivot = m.rows();
    double best = threshold;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!used[r] && std::abs(m(r, col)) > best) {
        best = std::abs(m(r, col));
        pivot = r;
      }
    }
    if (pivot == m.rows()) continue;
    used[pivot] = true;
    ++rank;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (used[r]) continue;
      const double factor = m(r, col) / m(pivot, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(pivot, c);
    }
  }
  return rank;
}

template <Scalar T>
std::vector<std::vector<T>> cyclic_matrix(const Signal<T>& b) {
  const std::size_t n = b.size();
  std::vector<std::vector<T>> m(n, std::vector<T>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = b[(i + j) % n];
  return m;
}

template <Scalar T>
Signal<T> matrix_form_convolution(const Signal<T>& b, const Signal<T>& z) {
  const std::size_t n = b.size();
  // y_0 = z_0, y_k = z_{n-k}, written out independently of reverse_permute.
  std::vector<T> y(n);
  for (std::size_t k = 0; k < n; ++k) y[k] = z[(n - k) % n];
  const auto bc = cyclic_matrix(b);
  std::vector<T> c(n, T{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i] += bc[i][j] * y[j];
  return Signal<T>(std::move(c));
}

template <Scalar T>
std::vector<T> explicit_v(const Signal<T>& b) {
  const std::size_t n = b.size();
  const Matrix d = shift_matrix(n);
  const std::vector<double> s = seed_vector(n);
  std::vector<T> v(n);
  Matrix power = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    T acc{};
    for (std::size_t r = 0; r < n; ++r) {
      double ds = 0.0;
      for (std::size_t k = 0; k < n; ++k) ds += power(r, k) * s[k];
      acc += b[r] * ds;
    }
    v[i] = acc / static_cast<double>(n);
    power = d * power;
  }
  return v;
}

template <Scalar T>
std::vector<T> explicit_h(const Signal<T>& b, const Signal<T>& y) {
  const std::size_t n = b.size();
  const Matrix d = shift_matrix(n);
  const Matrix f = f_matrix(n);
  std::vector<T> fy(n, T{});
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) fy[r] += f(r, k) * y[k];
  std::vector<T> h(n);
  Matrix power = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    T acc{};
    for (std::size_t r = 0; r < n; ++r) {
      T row{};
      for (std::size_t k = 0; k < n; ++k) row += power(r, k) * fy[k];
      acc += b[r] * row;
    }
    h[i] = acc / static_cast<double>(n);
    power = d * power;
  }
  return h;
}

template <Scalar T>
Signal<T> schoolbook_linear_convolution(const Signal<T>& b, const Signal<T>& z) {
  std::vector<T> out(b.size() + z.size() - 1, T{});
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j) out[i + j] += b[i] * z[j];
  return Signal<T>(std::move(out));
}

#define PRIMECONV_INSTANTIATE(T)                                                          \
  template std::vector<std::vector<T>> cyclic_matrix(const Signal<T>&);                   \
  template Signal<T> matrix_form_convolution(const Signal<T>&, const Signal<T>&);         \
  template std::vector<T> explicit_v(const Signal<T>&);                                   \
  template std::vector<T> explicit_h(const Signal<T>&, const Signal<T>&);                 \
  template Signal<T> schoolbook_linear_convolution(const Signal<T>&, const Signal<T>&);

PRIMECONV_INSTANTIATE(double)
PRIMECONV_INSTANTIATE(Complex)

#undef PRIMECONV_INSTANTIATE

}  // namespace primeconv::oracle
