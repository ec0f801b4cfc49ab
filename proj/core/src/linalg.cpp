#include "kres/linalg.hpp"

#include <algorithm>

namespace kres {

QMatrix QMatrix::operator*(const QMatrix& o) const {
  internal_check(cols_ == o.rows_, "matrix product shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  internal_check(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  internal_check(rows_ == o.rows_ && cols_ == o.cols_, "matrix diff shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x == 0; });
}

std::size_t rank_exact(const QMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Scale each row by the lcm of its denominators; rank is unchanged.
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      Int den = m.at(i, j).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      Rat v = m.at(i, j) * Rat(l);
      v.canonicalize();
      internal_check(v.get_den() == 1, "row scaling left a denominator");
      a[i][j] = v.get_num();
    }
  }

  std::size_t rank = 0;
  Int prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);

    const Int p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int t = a[i][j] * p - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

}  // namespace kres
