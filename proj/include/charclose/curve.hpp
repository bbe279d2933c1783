// The validated ring datum R = F_p[x,y,z]/(G) for a smooth plane cubic:
// smoothness via the Jacobian criterion, the Hasse invariant, and the
// supersingular/ordinary dichotomy it decides.
#ifndef CHARCLOSE_CURVE_HPP
#define CHARCLOSE_CURVE_HPP

#include <cstdint>

#include "charclose/fp.hpp"
#include "charclose/poly.hpp"

namespace charclose {

/// Largest modulus for which the Hasse invariant is computed; the pruned
/// expansion of G^(p-1) grows roughly like p^3 and is refused beyond this.
inline constexpr std::uint32_t kHasseModulusLimit = 512;

class CubicCone {
 public:
  std::uint32_t modulus() const { return p_; }
  const Poly& curve() const { return curve_; }
  Fp hasse() const { return hasse_; }
  bool supersingular() const { return hasse_.is_zero(); }

  static constexpr int curve_degree = 3;
  static constexpr int genus = 1;

  friend bool operator==(const CubicCone& a, const CubicCone& b) {
    return a.p_ == b.p_ && a.curve_ == b.curve_;
  }

 private:
  friend CubicCone validate_curve(const Poly& G, std::uint32_t p);
  CubicCone(std::uint32_t p, Poly curve, Fp hasse)
      : p_(p), curve_(std::move(curve)), hasse_(hasse) {}

  std::uint32_t p_;
  Poly curve_;
  Fp hasse_;
};

/// Checks that p is prime, G is homogeneous of degree 3 and the projective
/// curve G = 0 is smooth (the Jacobian ideal (G, dG/dx, dG/dy, dG/dz) has
/// the origin as its only zero), then packages the validated ring.
/// Throws NotEllipticError when the curve fails, ResourceError when the
/// Hasse computation is out of reach (p > kHasseModulusLimit).
CubicCone validate_curve(const Poly& G, std::uint32_t p);

/// Coefficient of (xyz)^(p-1) in G^(p-1): zero exactly for supersingular
/// curves.  Computed by iterated multiplication, pruning every intermediate
/// term that can no longer reach the exponent pattern (p-1, p-1, p-1).
Fp hasse_invariant(const Poly& G);

}  // namespace charclose

#endif  // CHARCLOSE_CURVE_HPP
