// Buchberger's algorithm and the operations built on a Groebner basis:
// normal forms, ideal membership, standard-monomial enumeration and the
// zero-dimensionality test.  The monomial order is grevlex with x > y > z,
// fixed library-wide.
//
// A basis may be degree-truncated: processing only S-pairs whose lcm degree
// stays within a bound yields a basis whose normal forms and leading ideal
// are exact in all degrees up to that bound (and meaningless above it).
// Operations guard against misuse above the truncation degree.
#ifndef CHARCLOSE_GROEBNER_HPP
#define CHARCLOSE_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "charclose/poly.hpp"

namespace charclose {

struct GroebnerLimits {
  /// Hard budget: a basis element of larger total degree aborts the run.
  std::uint64_t max_degree = kDefaultDegreeCap;
  /// Hard budget on processed S-pairs.
  std::size_t max_pairs = 500'000;
  /// When set, S-pairs with lcm degree beyond this are skipped instead of
  /// processed; the result is exact up to this degree only.
  std::optional<std::uint64_t> truncate_degree;
};

class GroebnerBasis {
 public:
  const std::vector<Poly>& generators() const { return gens_; }
  std::uint32_t modulus() const { return p_; }
  std::size_t size() const { return gens_.size(); }
  std::optional<std::uint64_t> truncated_at() const { return truncated_at_; }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.p_ == b.p_ && a.gens_ == b.gens_;
  }

 private:
  friend GroebnerBasis buchberger(std::vector<Poly>, const GroebnerLimits&);
  GroebnerBasis(std::uint32_t p, std::vector<Poly> gens,
                std::optional<std::uint64_t> truncated_at)
      : p_(p), gens_(std::move(gens)), truncated_at_(truncated_at) {}

  std::uint32_t p_;
  std::vector<Poly> gens_;  // monic, inter-reduced, sorted by ascending lm
  std::optional<std::uint64_t> truncated_at_;
};

/// The reduced Groebner basis of (gens) under grevlex; unique, monic and
/// inter-reduced, so two ideals are equal iff their bases compare equal.
/// Zero generators are dropped.  Throws ResourceError on budget exhaustion.
GroebnerBasis buchberger(std::vector<Poly> gens,
                         const GroebnerLimits& limits = {});

Poly s_polynomial(const Poly& f, const Poly& g);

/// Unique remainder of f modulo B: no term of the result is divisible by a
/// leading monomial of B, and f - result lies in the ideal.
Poly normal_form(const Poly& f, const GroebnerBasis& B);

/// Division with cofactors: f = sum quotients[i] * B[i] + remainder.
struct Division {
  std::vector<Poly> quotients;
  Poly remainder;
};
Division divide(const Poly& f, const GroebnerBasis& B);

/// f lies in the ideal iff its normal form vanishes.
bool member(const Poly& f, const GroebnerBasis& B);

/// All degree-d monomials outside the leading ideal of B, in descending
/// grevlex order.  Their residues form a basis of the degree-d piece of the
/// quotient ring.
std::vector<Monomial> standard_monomials(const GroebnerBasis& B,
                                         std::uint64_t d);

/// True iff the quotient by the ideal is finite-dimensional, equivalently
/// iff each variable has a pure power among the leading monomials.
bool is_irrelevant_primary(const GroebnerBasis& B);

}  // namespace charclose

#endif  // CHARCLOSE_GROEBNER_HPP
