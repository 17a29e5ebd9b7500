#pragma once

// Dense-matrix reference constructions. Used by tests and `primeconv verify`;
// the engines never build any of these.

#include <cstddef>
#include <vector>

#include "primeconv/signal.hpp"

namespace primeconv::oracle {

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

/// Cyclic shift with D e_k = e_{k+1 mod n}.
Matrix shift_matrix(std::size_t n);
Matrix matrix_power(const Matrix& m, std::size_t k);
/// s = (1 - n, 1, ..., 1).
std::vector<double> seed_vector(std::size_t n);
/// Column i is D^i s.
Matrix f_matrix(std::size_t n);
/// d d^T.
Matrix ones_matrix(std::size_t n);
/// Rank by Gaussian elimination with partial pivoting; pivots at or below threshold count as zero.
std::size_t numeric_rank(Matrix m, double threshold = 1e-9);

/// B^c with row i = (b_i, b_{i+1}, ..., b_{i-1}).
template <Scalar T>
std::vector<std::vector<T>> cyclic_matrix(const Signal<T>& b);

/// B^c applied to reverse_permute(z).
template <Scalar T>
Signal<T> matrix_form_convolution(const Signal<T>& b, const Signal<T>& z);

/// v_i = b^T D^i s / n evaluated with a materialized D.
template <Scalar T>
std::vector<T> explicit_v(const Signal<T>& b);

/// h_i = b^T D^i F y / n with materialized D and F.
template <Scalar T>
std::vector<T> explicit_h(const Signal<T>& b, const Signal<T>& y);

/// Full linear convolution by the double loop.
template <Scalar T>
Signal<T> schoolbook_linear_convolution(const Signal<T>& b, const Signal<T>& z);

}  // namespace primeconv::oracle
