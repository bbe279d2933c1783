// Numerical bookkeeping for the syzygy sheaf Syz(f_1,...,f_n)(m) on the
// plane cubic: rank, degree, slope, and their behaviour under Frobenius
// pull-back.  Diagnostic only; no bundle decomposition is attempted.
#ifndef CHARCLOSE_SYZYGY_HPP
#define CHARCLOSE_SYZYGY_HPP

#include <cstdint>
#include <vector>

#include "charclose/ideal.hpp"

namespace charclose {

/// Exact rational, normalized with positive denominator and reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

Rational make_rational(std::int64_t num, std::int64_t den);

struct SyzygyInfo {
  std::size_t rank = 0;          // n - 1
  std::int64_t degree = 0;       // deg of the twisted syzygy sheaf
  Rational slope;                // degree / rank
  std::int64_t twist = 0;        // the m in Syz(...)(m)
  std::vector<std::int64_t> generator_degrees;

  friend bool operator==(const SyzygyInfo& a, const SyzygyInfo& b) {
    return a.rank == b.rank && a.degree == b.degree && a.slope == b.slope &&
           a.twist == b.twist && a.generator_degrees == b.generator_degrees;
  }
};

/// Numerics of Syz(f_1,...,f_n)(m) on the degree-3 plane curve: rank n-1 and
/// degree 3((n-1)m - sum d_i), by additivity of degree along
/// 0 -> Syz(m) -> (+) O(m - d_i) -> O(m) -> 0 with deg O(k) = 3k.
/// Requires n >= 2.
SyzygyInfo syzygy_numerics(const HomIdeal& I, std::int64_t m);

/// Effect of the e-th Frobenius pull-back: rank fixed, degree scaled by p^e,
/// twist and generator degrees scaled by p^e.
SyzygyInfo pullback_numerics(const SyzygyInfo& s, unsigned e, std::uint32_t p);

}  // namespace charclose

#endif  // CHARCLOSE_SYZYGY_HPP
