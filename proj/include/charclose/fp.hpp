// Exact arithmetic in the prime field F_p, 2 <= p < 2^31.
//
// An element stores its fully reduced residue together with the modulus, so
// values from different fields cannot be combined silently.  Products are
// formed in 64-bit intermediates and reduced, which cannot overflow for
// p < 2^31.  Primality of p is the caller's responsibility (it is checked
// once when a ring is constructed, see is_prime below).
#ifndef CHARCLOSE_FP_HPP
#define CHARCLOSE_FP_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "charclose/errors.hpp"

namespace charclose {

class Fp {
 public:
  /// Reduces `value` into [0, p).  Accepts any signed 64-bit value.
  Fp(std::int64_t value, std::uint32_t p) : p_(check_modulus(p)) {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    v_ = static_cast<std::uint32_t>(r);
  }

  static Fp zero(std::uint32_t p) { return Fp(0, p); }
  static Fp one(std::uint32_t p) { return Fp(1, p); }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_, p_); }

  Fp& operator+=(Fp o) {
    require_same_field(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }

  Fp& operator-=(Fp o) {
    require_same_field(o);
    v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + (p_ - o.v_);
    return *this;
  }

  Fp& operator*=(Fp o) {
    require_same_field(o);
    v_ = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(v_) * o.v_) % p_);
    return *this;
  }

  Fp& operator/=(Fp o) { return *this *= inv(o); }

  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  /// a^e by square-and-multiply.
  friend Fp pow(Fp a, std::uint64_t e) {
    Fp acc = Fp::one(a.p_);
    Fp base = a;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  /// Multiplicative inverse via Fermat: a^(p-2).  Throws on a = 0.
  friend Fp inv(Fp a) {
    if (a.is_zero()) throw std::domain_error("Fp: division by zero");
    return pow(a, a.p_ - 2);
  }

  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

 private:
  static Fp from_raw(std::uint32_t v, std::uint32_t p) {
    Fp r(0, p);
    r.v_ = v;
    return r;
  }

  static std::uint32_t check_modulus(std::uint32_t p) {
    if (p < 2 || p > 0x7fffffffu)
      throw std::invalid_argument("Fp: modulus must satisfy 2 <= p < 2^31");
    return p;
  }

  void require_same_field(Fp o) const {
    if (p_ != o.p_)
      throw std::invalid_argument("Fp: mixed moduli " + std::to_string(p_) +
                                  " and " + std::to_string(o.p_));
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

/// Deterministic trial division; exact for all n < 2^62.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace charclose

#endif  // CHARCLOSE_FP_HPP
