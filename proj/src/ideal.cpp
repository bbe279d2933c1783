#include "charclose/ideal.hpp"

#include <string>

#include "charclose/errors.hpp"

namespace charclose {

HomIdeal make_ideal(const CubicCone& ring, std::vector<Poly> gens) {
  const std::uint32_t p = ring.modulus();
  std::vector<std::uint64_t> degrees;
  degrees.reserve(gens.size());
  const Poly monic_curve =
      ring.curve().scaled(inv(ring.curve().leading_coeff()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Poly& g = gens[i];
    if (g.modulus() != p)
      throw std::invalid_argument("make_ideal: generator modulus mismatch");
    const Homogeneity h = homogeneity(g);
    if (h.kind == HomogeneityKind::zero)
      throw NonHomogeneousError("make_ideal: generator " + std::to_string(i) +
                                " is zero");
    if (h.kind == HomogeneityKind::mixed)
      throw NonHomogeneousError("make_ideal: generator " + std::to_string(i) +
                                " is not homogeneous");
    if (g.scaled(inv(g.leading_coeff())) == monic_curve)
      throw ValidationError("make_ideal: generator " + std::to_string(i) +
                            " is a scalar multiple of the curve equation");
    degrees.push_back(h.degree);
  }

  std::vector<Poly> lifted = gens;
  lifted.push_back(ring.curve());
  GroebnerBasis lift = buchberger(std::move(lifted));
  const bool primary = is_irrelevant_primary(lift);
  return HomIdeal(ring, std::move(gens), std::move(degrees), std::move(lift),
                  primary);
}

HomIdeal frobenius_power(const HomIdeal& I, unsigned e,
                         std::uint64_t degree_cap) {
  std::vector<Poly> powered;
  powered.reserve(I.generator_count());
  for (const Poly& g : I.generators())
    powered.push_back(frobenius_pow(g, e, degree_cap));
  return make_ideal(I.ring(), std::move(powered));
}

std::uint64_t socle_degree_bound(const HomIdeal& I) {
  if (!I.primary())
    throw NotPrimaryError(
        "socle_degree_bound: the ideal is not primary to the irrelevant "
        "maximal ideal");
  // Primary means each variable has a pure power among the leading
  // monomials; past the sum of those degrees every monomial is divisible by
  // one of them, and graded pieces of a quotient algebra that vanish once
  // stay zero.  Scan up to that bound.
  std::uint64_t bound = 0;
  for (int v = 0; v < kNumVars; ++v) {
    std::uint64_t best = 0;
    bool found = false;
    for (const Poly& g : I.lift_basis().generators()) {
      const Monomial& lm = g.leading_monomial();
      bool pure = true;
      for (int w = 0; w < kNumVars; ++w)
        if (w != v && lm.e[w] != 0) pure = false;
      if (pure && (!found || lm.e[v] < best)) {
        best = lm.e[v];
        found = true;
      }
    }
    bound += best;
  }
  std::uint64_t last_nonempty = 0;
  for (std::uint64_t d = 0; d <= bound; ++d)
    if (!standard_monomials(I.lift_basis(), d).empty()) last_nonempty = d;
  return last_nonempty;
}

bool same_ideal(const HomIdeal& a, const HomIdeal& b) {
  return a.ring() == b.ring() && a.lift_basis() == b.lift_basis();
}

}  // namespace charclose
