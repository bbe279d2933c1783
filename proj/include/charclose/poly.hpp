// Sparse polynomials in x, y, z over a prime field.
//
// Terms are kept in strictly descending grevlex order with no zero
// coefficients, so equality is structural and the leading term is terms()[0].
// Values are immutable in spirit: every operation returns a fresh Poly.
#ifndef CHARCLOSE_POLY_HPP
#define CHARCLOSE_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charclose/fp.hpp"
#include "charclose/monomial.hpp"

namespace charclose {

/// Default guard against runaway total degree (Frobenius powers grow
/// exponentially in e; exceeding the cap is a loud ResourceError).
inline constexpr std::uint64_t kDefaultDegreeCap = 1'000'000;

struct Term {
  Monomial mono;
  Fp coeff;
};

class Poly {
 public:
  /// The zero polynomial over F_p.
  explicit Poly(std::uint32_t p) : p_(p) { (void)Fp::zero(p); }

  /// Canonicalizes an arbitrary term list: sorts, merges, drops zeros.
  static Poly from_terms(std::uint32_t p, std::vector<Term> terms);

  /// Fast path for term lists already in strictly descending grevlex order
  /// with no zero coefficients (checked only in debug builds).
  static Poly from_sorted_terms(std::uint32_t p, std::vector<Term> terms);

  static Poly monomial(Fp c, const Monomial& m) {
    Poly f(c.modulus());
    if (!c.is_zero()) f.terms_.push_back(Term{m, c});
    return f;
  }

  static Poly constant(Fp c) { return monomial(c, Monomial::one()); }

  /// The i-th variable (0 = x, 1 = y, 2 = z) as a polynomial.
  static Poly variable(int i, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Leading data under grevlex; callers must ensure the poly is nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Fp leading_coeff() const { return terms_.front().coeff; }

  /// Total degree of the leading term (0 for the zero polynomial).
  std::uint64_t degree() const {
    return terms_.empty() ? 0 : terms_.front().mono.degree();
  }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  /// c * x^m * f, the workhorse of polynomial reduction.
  Poly scaled(Fp c, const Monomial& m) const;
  Poly scaled(Fp c) const { return scaled(c, Monomial::one()); }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.p_ == b.p_ && a.terms_.size() == b.terms_.size() &&
           [&] {
             for (std::size_t i = 0; i < a.terms_.size(); ++i)
               if (a.terms_[i].mono != b.terms_[i].mono ||
                   a.terms_[i].coeff != b.terms_[i].coeff)
                 return false;
             return true;
           }();
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void require_same_modulus(const Poly& o) const;
  static Poly merge(const Poly& a, const Poly& b, bool subtract);

  std::uint32_t p_;
  std::vector<Term> terms_;
};

enum class HomogeneityKind { zero, homogeneous, mixed };

struct Homogeneity {
  HomogeneityKind kind;
  std::uint64_t degree = 0;  // meaningful only when kind == homogeneous
};

/// Classifies f as zero (homogeneous of every degree), homogeneous of one
/// degree, or mixed.
Homogeneity homogeneity(const Poly& f);

inline bool is_homogeneous(const Poly& f) {
  return homogeneity(f).kind != HomogeneityKind::mixed;
}

/// f^(p^e) by e applications of the term-wise Frobenius
/// sum c*m  |->  sum c^p * m^p, valid in characteristic p.
/// Throws ResourceError once the total degree would exceed `degree_cap`.
Poly frobenius_pow(const Poly& f, unsigned e,
                   std::uint64_t degree_cap = kDefaultDegreeCap);

/// Partial derivative with respect to variable i (0 = x, 1 = y, 2 = z).
Poly partial(const Poly& f, int i);

/// Parses the polynomial grammar documented in docs/polynomial-grammar.md:
/// integer coefficients, variables x/y/z, ^, + and -, optional *.
/// Throws SyntaxError with the offending position.
Poly parse(std::string_view text, std::uint32_t p);

/// Canonical text form; parse(to_string(f), p) == f.
std::string to_string(const Poly& f);

/// p^e as uint64, guarded against overflow past `limit`.
std::uint64_t checked_pow(std::uint32_t p, unsigned e, std::uint64_t limit);

}  // namespace charclose

#endif  // CHARCLOSE_POLY_HPP
