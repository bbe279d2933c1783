#include "charclose/curve.hpp"

#include <string>

#include "charclose/errors.hpp"
#include "charclose/groebner.hpp"

namespace charclose {

Fp hasse_invariant(const Poly& G) {
  const std::uint32_t p = G.modulus();
  if (p > kHasseModulusLimit)
    throw ResourceError("hasse_invariant: supported for p <= " +
                        std::to_string(kHasseModulusLimit) + " (got p = " +
                        std::to_string(p) + ")");

  // Iterated multiplication by G with pruning: any intermediate term with an
  // exponent above p-1 can never return to the pattern (p-1, p-1, p-1).
  // Since G is homogeneous the surviving terms of G^k have degree 3k, so the
  // z-exponent is determined by the x and y exponents and the partial power
  // lives on a p x p coefficient grid.
  const std::size_t width = p;
  std::vector<std::uint64_t> cur(width * width, 0), next(width * width, 0);
  cur[0] = 1;
  for (std::uint32_t k = 1; k < p; ++k) {
    std::fill(next.begin(), next.end(), 0);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        const std::uint64_t coeff = cur[a * width + b];
        if (coeff == 0) continue;
        const std::int64_t c =
            3 * static_cast<std::int64_t>(k - 1) - a - b;
        if (c < 0 || c >= p) continue;
        for (const Term& t : G.terms()) {
          const std::uint32_t na = a + t.mono.e[0];
          const std::uint32_t nb = b + t.mono.e[1];
          const std::uint64_t nc = static_cast<std::uint64_t>(c) + t.mono.e[2];
          if (na >= p || nb >= p || nc >= p) continue;
          std::uint64_t& cell = next[na * width + nb];
          cell = (cell + coeff * t.coeff.value()) % p;
        }
      }
    std::swap(cur, next);
  }
  return Fp(static_cast<std::int64_t>(cur[(p - 1) * width + (p - 1)]), p);
}

CubicCone validate_curve(const Poly& G, std::uint32_t p) {
  if (!is_prime(p))
    throw ValidationError("validate_curve: modulus " + std::to_string(p) +
                          " is not prime");
  if (G.modulus() != p)
    throw std::invalid_argument("validate_curve: curve modulus differs from p");
  const Homogeneity h = homogeneity(G);
  if (h.kind != HomogeneityKind::homogeneous || h.degree != 3)
    throw NotEllipticError(
        "validate_curve: the curve must be homogeneous of degree 3");

  // Jacobian criterion: smooth iff the only common zero of G and its
  // partials is the origin, i.e. the Jacobian ideal is irrelevant-primary.
  std::vector<Poly> jac{G, partial(G, 0), partial(G, 1), partial(G, 2)};
  bool all_partials_zero = true;
  for (int i = 1; i < 4; ++i)
    if (!jac[i].is_zero()) all_partials_zero = false;
  if (all_partials_zero)
    throw NotEllipticError(
        "validate_curve: all partial derivatives vanish; the curve is "
        "singular everywhere");
  if (!is_irrelevant_primary(buchberger(jac)))
    throw NotEllipticError(
        "validate_curve: the Jacobian criterion fails; the projective curve "
        "is singular");

  return CubicCone(p, G, hasse_invariant(G));
}

}  // namespace charclose
