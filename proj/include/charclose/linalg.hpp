// Dense exact linear algebra over F_p: row echelon form, rank, kernel bases.
//
// Elimination uses first-nonzero pivoting, so results are deterministic;
// there are no magnitude concerns in exact arithmetic.
#ifndef CHARCLOSE_LINALG_HPP
#define CHARCLOSE_LINALG_HPP

#include <cstddef>
#include <vector>

#include "charclose/fp.hpp"

namespace charclose {

class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), a_(rows * cols, Fp::zero(p)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  Fp& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Fp at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  static FpMatrix identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Fp::one(p);
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<Fp> a_;
};

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// column indices in increasing order.
std::vector<std::size_t> rref(FpMatrix& m);

std::size_t rank(FpMatrix m);

/// Basis of the right null space { v : M v = 0 }.  Vectors are returned in
/// increasing order of their free column, each with a 1 in that coordinate;
/// the count is always cols - rank.
std::vector<std::vector<Fp>> kernel_basis(FpMatrix m);

}  // namespace charclose

#endif  // CHARCLOSE_LINALG_HPP
