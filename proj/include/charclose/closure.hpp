// Decision procedures for Frobenius closure and tight closure of homogeneous
// R_+-primary ideals in the cone over a smooth plane cubic.
//
// For an n-generated primary ideal, e = n-1 is a uniform Frobenius test
// exponent: f lies in I^F iff f^(p^(n-1)) lies in I^[p^(n-1)].  Tight
// closure membership is decided through the test ideal (x, y, z): the
// smallest e with p^e > 7(n-1) is a test ideal exponent, so f lies in I*
// iff w * f^(p^e') lies in I^[p^e'] for w in {x, y, z} and every e' <= e.
#ifndef CHARCLOSE_CLOSURE_HPP
#define CHARCLOSE_CLOSURE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "charclose/ideal.hpp"

namespace charclose {

enum class QueryKind { frobenius_member, frobenius_closure, tight_member, oracle };

/// Which multiplier/exponent combination refuted a tight-closure query.
struct TightWitness {
  char multiplier;    // 'x', 'y' or 'z'
  unsigned exponent;  // the e with multiplier * f^(p^e) outside I^[p^e]
};

/// Verdict plus the re-checkable data behind it.  For a positive
/// frobenius_member verdict, `exponent` certifies f^(p^exponent) in
/// I^[p^exponent] and can be replayed through frobenius_member_at.
struct ClosureReport {
  QueryKind kind;
  bool verdict = false;
  std::optional<unsigned> exponent;  // e used (oracle: smallest e found)
  std::uint64_t q = 1;               // p^e for the recorded exponent/bound
  std::size_t generator_count = 0;
  unsigned bound = 0;  // n-1, or the tight-closure e, or the oracle e_max
  std::optional<TightWitness> witness;
  double elapsed_seconds = 0.0;
};

/// Whether f^(p^e) lies in I^[p^e] inside R.  Internally reduces against a
/// degree-truncated basis of the lifted Frobenius power, exact at the query
/// degree.  f must be homogeneous; I need not be primary.
bool frobenius_member_at(const Poly& f, const HomIdeal& I, unsigned e,
                         std::uint64_t degree_cap = kDefaultDegreeCap);

/// Membership engine for one ideal that caches the truncated basis of each
/// lifted Frobenius power, so scans over many elements pay the basis
/// construction once per exponent.  Verdicts are identical to the free
/// functions.  Stateful; not for concurrent use.
class FrobeniusTester {
 public:
  explicit FrobeniusTester(HomIdeal ideal,
                           std::uint64_t degree_cap = kDefaultDegreeCap);

  const HomIdeal& ideal() const { return ideal_; }
  std::uint64_t degree_cap() const { return degree_cap_; }

  /// f^(p^e) in I^[p^e]; f homogeneous.
  bool member_at(const Poly& f, unsigned e);

  /// g in I^[p^e] for an arbitrary homogeneous g (no power applied).
  bool power_ideal_member(const Poly& g, unsigned e);

  std::optional<unsigned> min_exponent(const Poly& f, unsigned e_max);

 private:
  const GroebnerBasis& basis_for(unsigned e, std::uint64_t need);

  HomIdeal ideal_;
  std::uint64_t degree_cap_;
  std::optional<std::uint64_t> socle_;  // set when the ideal is primary
  std::map<unsigned, GroebnerBasis> cache_;
};

/// Brute-force scan: the smallest e <= e_max with frobenius_member_at true,
/// or nullopt.  Membership is monotone in e, so a hit settles all larger e.
std::optional<unsigned> min_frobenius_exponent(
    const Poly& f, const HomIdeal& I, unsigned e_max,
    std::uint64_t degree_cap = kDefaultDegreeCap);

/// Frobenius closure membership for primary I, decided by the single check
/// at e = n - 1.
ClosureReport in_frobenius_closure(const Poly& f, const HomIdeal& I,
                                   std::uint64_t degree_cap = kDefaultDegreeCap);
ClosureReport in_frobenius_closure(const Poly& f, FrobeniusTester& tester);

/// The full Frobenius closure I^F of a primary ideal, computed degreewise:
/// in each degree d up to the socle bound, the kernel of the F_p-linear map
/// (R/I)_d -> (R/I^[q])_{q d}, m -> m^q (q = p^(n-1)) supplies the new
/// generators.  Output generators are I's generators plus the kernel lifts,
/// without minimalization.
HomIdeal frobenius_closure(const HomIdeal& I,
                           std::uint64_t degree_cap = kDefaultDegreeCap);

/// Optional post-pass: drops generators contained in the ideal of the others.
HomIdeal minimalize_generators(const HomIdeal& I);

/// Tight closure membership for primary I over a validated cubic cone,
/// via the test ideal (x, y, z) and the bound p^e > 7(n-1).
ClosureReport in_tight_closure_cubic(const Poly& f, const HomIdeal& I,
                                     std::uint64_t degree_cap = kDefaultDegreeCap);
ClosureReport in_tight_closure_cubic(const Poly& f, FrobeniusTester& tester);

}  // namespace charclose

#endif  // CHARCLOSE_CLOSURE_HPP
