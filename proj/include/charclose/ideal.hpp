// Homogeneous ideals of the cone ring R = F_p[x,y,z]/(G), represented by
// their lift (gens, G) to the polynomial ring.  Every membership question
// in R is answered on the lift, so no quotient-ring arithmetic is needed.
#ifndef CHARCLOSE_IDEAL_HPP
#define CHARCLOSE_IDEAL_HPP

#include <cstdint>
#include <vector>

#include "charclose/curve.hpp"
#include "charclose/groebner.hpp"
#include "charclose/poly.hpp"

namespace charclose {

class HomIdeal {
 public:
  const CubicCone& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }
  const std::vector<std::uint64_t>& generator_degrees() const {
    return degrees_;
  }
  /// Reduced Groebner basis of the lifted ideal (generators, G).
  const GroebnerBasis& lift_basis() const { return lift_; }
  /// Whether the ideal is primary to the irrelevant maximal ideal
  /// (finite-dimensional quotient), decided on the lift.
  bool primary() const { return primary_; }

 private:
  friend HomIdeal make_ideal(const CubicCone&, std::vector<Poly>);
  HomIdeal(CubicCone ring, std::vector<Poly> gens,
           std::vector<std::uint64_t> degrees, GroebnerBasis lift,
           bool primary)
      : ring_(std::move(ring)),
        gens_(std::move(gens)),
        degrees_(std::move(degrees)),
        lift_(std::move(lift)),
        primary_(primary) {}

  CubicCone ring_;
  std::vector<Poly> gens_;
  std::vector<std::uint64_t> degrees_;
  GroebnerBasis lift_;
  bool primary_;
};

/// Builds the ideal (gens) of R.  Generators must be homogeneous, nonzero,
/// over the ring's field, and none may be a scalar multiple of the curve
/// equation (which is zero in R).
HomIdeal make_ideal(const CubicCone& ring, std::vector<Poly> gens);

/// The Frobenius power I^[p^e] = (f^(p^e) : f generator of I); the lift
/// adjoins G once, not G^(p^e), since extension happens inside R.
HomIdeal frobenius_power(const HomIdeal& I, unsigned e,
                         std::uint64_t degree_cap = kDefaultDegreeCap);

/// Largest degree d with a nonzero graded piece of R/I; requires primary.
std::uint64_t socle_degree_bound(const HomIdeal& I);

/// Ideal equality as subsets of R: reduced lifted bases compare equal.
bool same_ideal(const HomIdeal& a, const HomIdeal& b);

}  // namespace charclose

#endif  // CHARCLOSE_IDEAL_HPP
