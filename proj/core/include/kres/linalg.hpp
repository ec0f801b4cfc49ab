#ifndef KRES_LINALG_HPP
#define KRES_LINALG_HPP

#include <cstddef>
#include <vector>

#include "kres/numeric.hpp"

namespace kres {

// Dense matrix over the rationals.  Small and exact; this library never needs
// anything sparse or approximate.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const QMatrix& o) const = default;

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  static QMatrix identity(std::size_t n);
  bool is_zero() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

// Rank over Q by fraction-free (Bareiss) elimination: rows are scaled to
// integers, then eliminated with exact divisions by previous pivots so that
// intermediate entries stay integral.
std::size_t rank_exact(const QMatrix& m);

}  // namespace kres

#endif
