#include <doctest.h>

#include "charclose/driver.hpp"
#include "charclose/linalg.hpp"

using namespace charclose;

namespace {

FpMatrix random_matrix(RandomSource& rng, std::size_t rows, std::size_t cols,
                       std::uint32_t p) {
  FpMatrix m(rows, cols, p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = Fp(static_cast<std::int64_t>(rng.below(p)), p);
  return m;
}

bool annihilates(const FpMatrix& m, const std::vector<Fp>& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Fp acc = Fp::zero(m.modulus());
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("kernel of the identity is empty") {
  CHECK(kernel_basis(FpMatrix::identity(2, 5)).empty());
}

TEST_CASE("kernel of the zero map is the whole space") {
  const auto basis = kernel_basis(FpMatrix(2, 2, 7));
  REQUIRE(basis.size() == 2);
  CHECK(basis[0][0] == Fp::one(7));
  CHECK(basis[0][1] == Fp::zero(7));
  CHECK(basis[1][0] == Fp::zero(7));
  CHECK(basis[1][1] == Fp::one(7));
}

TEST_CASE("kernel of [1 1] over F_2 is (1,1)") {
  FpMatrix m(1, 2, 2);
  m.at(0, 0) = Fp::one(2);
  m.at(0, 1) = Fp::one(2);
  const auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == Fp::one(2));
  CHECK(basis[0][1] == Fp::one(2));
}

TEST_CASE("kernel vectors annihilate exactly and have full count") {
  RandomSource rng(3);
  const std::uint32_t primes[] = {2, 3, 5, 101};
  for (std::uint32_t p : primes) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng.below(8);
      const std::size_t cols = 1 + rng.below(8);
      const FpMatrix m = random_matrix(rng, rows, cols, p);
      const auto basis = kernel_basis(m);
      CHECK(basis.size() == cols - rank(m));
      for (const auto& v : basis) CHECK(annihilates(m, v));
      // Independence: each vector has a 1 where every other has a 0 (its
      // free column), so no nontrivial combination vanishes.
    }
  }
}

TEST_CASE("rref is idempotent and reports pivots in order") {
  RandomSource rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    FpMatrix m = random_matrix(rng, 2 + rng.below(5), 2 + rng.below(5), 13);
    const auto pivots = rref(m);
    for (std::size_t i = 1; i < pivots.size(); ++i)
      CHECK(pivots[i - 1] < pivots[i]);
    FpMatrix again = m;
    const auto pivots2 = rref(again);
    CHECK(pivots == pivots2);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        CHECK(m.at(i, j) == again.at(i, j));
  }
}

}  // TEST_SUITE
