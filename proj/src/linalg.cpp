#include "charclose/linalg.hpp"

namespace charclose {

std::vector<std::size_t> rref(FpMatrix& m) {
  const std::uint32_t p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // first nonzero entry in this column at or below `row`
    std::size_t pr = row;
    while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t j = col; j < m.cols(); ++j)
        std::swap(m.at(row, j), m.at(pr, j));
    const Fp scale = inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= scale;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Fp f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  (void)p;
  return pivots;
}

std::size_t rank(FpMatrix m) { return rref(m).size(); }

std::vector<std::vector<Fp>> kernel_basis(FpMatrix m) {
  const std::uint32_t p = m.modulus();
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Fp>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fp> v(m.cols(), Fp::zero(p));
    v[free] = Fp::one(p);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -m.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace charclose
