// Monomials in the three variables x, y, z and the graded reverse
// lexicographic order with x > y > z.  This order is fixed library-wide:
// it is graded, so normal forms respect homogeneity.
#ifndef CHARCLOSE_MONOMIAL_HPP
#define CHARCLOSE_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace charclose {

inline constexpr int kNumVars = 3;
inline constexpr char kVarNames[kNumVars] = {'x', 'y', 'z'};

struct Monomial {
  std::array<std::uint32_t, kNumVars> e{0, 0, 0};

  static Monomial one() { return Monomial{}; }

  std::uint64_t degree() const {
    return std::uint64_t(e[0]) + e[1] + e[2];
  }

  bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

  bool divides(const Monomial& m) const {
    return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
  }

  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    return Monomial{{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2]}};
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e == b.e;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i)
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kNumVars; ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

/// Graded reverse lexicographic comparison, x > y > z.
/// Returns <0 if a < b, 0 if equal, >0 if a > b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  const std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the monomial with the smaller exponent on the last
  // differing variable (scanning z, y, x) is the larger one.
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  return grevlex_cmp(a, b) < 0;
}

/// Comparator for descending order (leading monomial first).
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_cmp(a, b) > 0;
  }
};

/// All monomials of total degree d, in descending grevlex order.
inline std::vector<Monomial> monomials_of_degree(std::uint64_t d) {
  std::vector<Monomial> all;
  all.reserve(static_cast<std::size_t>((d + 1) * (d + 2) / 2));
  for (std::uint64_t a = 0; a <= d; ++a)
    for (std::uint64_t b = 0; a + b <= d; ++b)
      all.push_back(Monomial{{static_cast<std::uint32_t>(a),
                              static_cast<std::uint32_t>(b),
                              static_cast<std::uint32_t>(d - a - b)}});
  std::sort(all.begin(), all.end(), GrevlexGreater{});
  return all;
}

inline std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += kVarNames[i];
    if (m.e[i] > 1) {
      s += '^';
      s += std::to_string(m.e[i]);
    }
  }
  return s;
}

}  // namespace charclose

#endif  // CHARCLOSE_MONOMIAL_HPP
