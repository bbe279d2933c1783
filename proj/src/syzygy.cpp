#include "charclose/syzygy.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "charclose/errors.hpp"

namespace charclose {

namespace {

// Guarded multiply: |a * b| must stay below 2^62.
std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* who) {
  const __int128 wide = static_cast<__int128>(a) * b;
  constexpr __int128 limit = static_cast<__int128>(1) << 62;
  if (wide >= limit || wide <= -limit)
    throw ResourceError(std::string(who) + ": integer overflow");
  return static_cast<std::int64_t>(wide);
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

SyzygyInfo syzygy_numerics(const HomIdeal& I, std::int64_t m) {
  const std::size_t n = I.generator_count();
  if (n < 2)
    throw std::invalid_argument(
        "syzygy_numerics: at least two generators are required");
  SyzygyInfo s;
  s.rank = n - 1;
  s.twist = m;
  std::int64_t degree_sum = 0;
  for (std::uint64_t d : I.generator_degrees()) {
    s.generator_degrees.push_back(static_cast<std::int64_t>(d));
    degree_sum += static_cast<std::int64_t>(d);
  }
  s.degree = 3 * (static_cast<std::int64_t>(s.rank) * m - degree_sum);
  s.slope = make_rational(s.degree, static_cast<std::int64_t>(s.rank));
  return s;
}

SyzygyInfo pullback_numerics(const SyzygyInfo& s, unsigned e,
                             std::uint32_t p) {
  std::int64_t q = 1;
  for (unsigned i = 0; i < e; ++i)
    q = checked_mul(q, static_cast<std::int64_t>(p), "pullback_numerics");
  SyzygyInfo r;
  r.rank = s.rank;
  r.degree = checked_mul(s.degree, q, "pullback_numerics");
  r.twist = checked_mul(s.twist, q, "pullback_numerics");
  for (std::int64_t d : s.generator_degrees)
    r.generator_degrees.push_back(checked_mul(d, q, "pullback_numerics"));
  r.slope = make_rational(r.degree, static_cast<std::int64_t>(r.rank));
  return r;
}

}  // namespace charclose
