// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every check is exact arithmetic; each criterion also carries a
// wall-clock budget that is enforced.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "charclose/closure.hpp"
#include "charclose/curve.hpp"
#include "charclose/driver.hpp"
#include "charclose/syzygy.hpp"
#include "oracles.hpp"

using namespace charclose;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<bool(std::string&)> check;
};

CubicCone fermat(std::uint32_t p) {
  return validate_curve(parse("x^3+y^3+z^3", p), p);
}

HomIdeal xy_ideal(const CubicCone& ring) {
  const std::uint32_t p = ring.modulus();
  return make_ideal(ring, {parse("x", p), parse("y", p)});
}

std::optional<HomIdeal> sample_primary(RandomSource& rng,
                                       const CubicCone& ring, std::size_t n,
                                       std::uint64_t max_degree) {
  for (int attempt = 0; attempt < 300; ++attempt) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i)
      gens.push_back(
          oracles::random_form(rng, ring.modulus(), 1 + rng.below(max_degree)));
    try {
      HomIdeal I = make_ideal(ring, std::move(gens));
      if (I.primary()) return I;
    } catch (const ValidationError&) {
    }
  }
  return std::nullopt;
}

// Shared sample sets: criterion 6 re-examines the instances of criteria
// 2 and 3, so they are drawn once with fixed seeds.
std::vector<HomIdeal> criterion2_samples() {
  std::vector<HomIdeal> out;
  RandomSource rng(202401);
  const CubicCone ring = fermat(7);
  while (out.size() < 20) {
    const std::size_t n = 2 + rng.below(2);
    if (auto I = sample_primary(rng, ring, n, 3)) out.push_back(*I);
  }
  return out;
}

std::vector<HomIdeal> criterion3_samples() {
  std::vector<HomIdeal> out;
  RandomSource rng(202403);
  const CubicCone f2 = fermat(2);
  const CubicCone f5 = fermat(5);
  while (out.size() < 50) {
    const CubicCone& ring = (out.size() % 2 == 0) ? f2 : f5;
    const std::size_t n = 2 + (out.size() / 2) % 2;
    if (auto I = sample_primary(rng, ring, n, 3)) out.push_back(*I);
  }
  return out;
}

bool criterion1(std::string& detail) {
  const CubicCone ring = fermat(2);
  const HomIdeal closed = frobenius_closure(xy_ideal(ring));
  const HomIdeal expected =
      make_ideal(ring, {parse("x", 2), parse("y", 2), parse("z^2", 2)});
  if (!same_ideal(closed, expected)) {
    detail = "closure of (x, y) over F_2 is not (x, y, z^2)";
    return false;
  }
  std::ostringstream os;
  os << "closure basis {";
  for (const Poly& g : closed.lift_basis().generators())
    os << " " << to_string(g);
  os << " }";
  detail = os.str();
  return true;
}

bool criterion2(std::string& detail) {
  const CubicCone ring = fermat(7);
  if (!same_ideal(frobenius_closure(xy_ideal(ring)), xy_ideal(ring))) {
    detail = "(x, y) over F_7 is not Frobenius closed";
    return false;
  }
  const std::vector<HomIdeal> samples = criterion2_samples();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!same_ideal(frobenius_closure(samples[i]), samples[i])) {
      detail = "sample " + std::to_string(i) +
               " gained generators despite the ordinary curve";
      return false;
    }
  }
  detail = std::to_string(samples.size()) +
           " random primary ideals over F_7 are all Frobenius closed";
  return true;
}

bool criterion3(std::string& detail) {
  const std::vector<HomIdeal> samples = criterion3_samples();
  std::size_t finite = 0, scanned = 0;
  for (const HomIdeal& I : samples) {
    const std::size_t n = I.generator_count();
    const unsigned e_max = static_cast<unsigned>(n) + 1;
    const std::uint32_t p = I.ring().modulus();
    FrobeniusTester tester(I);
    const std::uint64_t socle = socle_degree_bound(I);
    for (std::uint64_t d = 0; d <= socle; ++d)
      for (const Monomial& m : standard_monomials(I.lift_basis(), d)) {
        ++scanned;
        const auto e = tester.min_exponent(Poly::monomial(Fp::one(p), m), e_max);
        if (e) {
          ++finite;
          if (*e > n - 1) {
            detail = "monomial " + to_string(m) + " over F_" +
                     std::to_string(p) + " has exponent " +
                     std::to_string(*e) + " > n-1 = " +
                     std::to_string(n - 1);
            return false;
          }
        }
      }
  }
  detail = std::to_string(samples.size()) + " ideals, " +
           std::to_string(scanned) + " standard monomials, " +
           std::to_string(finite) + " finite exponents, all within n-1";
  return true;
}

bool criterion4(std::string& detail) {
  const std::uint32_t primes[] = {2, 5, 7, 11, 13};
  const std::uint32_t expected[] = {0, 0, 6, 0, 5};
  std::ostringstream os;
  for (int i = 0; i < 5; ++i) {
    const CubicCone ring = fermat(primes[i]);
    if (ring.hasse().value() != expected[i]) {
      detail = "hasse(" + std::to_string(primes[i]) + ") = " +
               std::to_string(ring.hasse().value()) + ", expected " +
               std::to_string(expected[i]);
      return false;
    }
    if (ring.hasse() != oracles::fermat_hasse_by_multinomial(primes[i])) {
      detail = "multinomial oracle disagrees at p = " +
               std::to_string(primes[i]);
      return false;
    }
    if (ring.supersingular() != (primes[i] % 3 == 2)) {
      detail = "supersingular flag wrong at p = " + std::to_string(primes[i]);
      return false;
    }
    os << " " << ring.hasse().value();
  }
  detail = "hasse invariants:" + os.str() + "; zero exactly when p = 2 mod 3";
  return true;
}

bool criterion5(std::string& detail) {
  const CubicCone ring = fermat(2);
  const HomIdeal I = xy_ideal(ring);
  const ClosureReport in = in_tight_closure_cubic(parse("z^2", 2), I);
  if (!in.verdict || in.q != 8) {
    detail = "z^2 should lie in (x, y)* with q = 8, got verdict " +
             std::to_string(in.verdict) + ", q = " + std::to_string(in.q);
    return false;
  }
  const ClosureReport out = in_tight_closure_cubic(parse("z", 2), I);
  if (out.verdict) {
    detail = "z should be outside (x, y)*";
    return false;
  }
  detail = "z^2 in (x, y)* at q = 8; z excluded (witness " +
           std::string(1, out.witness ? out.witness->multiplier : '?') + ")";
  return true;
}

bool criterion6(std::string& detail) {
  std::vector<HomIdeal> samples = criterion2_samples();
  for (HomIdeal& I : criterion3_samples()) samples.push_back(std::move(I));
  std::size_t positive = 0, checked = 0;
  for (const HomIdeal& I : samples) {
    // I is contained in I^F
    const HomIdeal closed = frobenius_closure(I);
    for (const Poly& g : I.generators())
      if (!member(g, closed.lift_basis())) {
        detail = "a generator fell outside its own closure";
        return false;
      }
    const std::uint32_t p = I.ring().modulus();
    FrobeniusTester tester(I);
    const std::uint64_t socle = socle_degree_bound(I);
    for (std::uint64_t d = 0; d <= socle; ++d)
      for (const Monomial& m : standard_monomials(I.lift_basis(), d)) {
        const Poly f = Poly::monomial(Fp::one(p), m);
        if (in_frobenius_closure(f, tester).verdict) {
          ++checked;
          if (!in_tight_closure_cubic(f, tester).verdict) {
            detail = to_string(m) + " lies in I^F but not in I* over F_" +
                     std::to_string(p);
            return false;
          }
          ++positive;
        }
      }
  }
  detail = std::to_string(samples.size()) + " sampled ideals; " +
           std::to_string(positive) + "/" + std::to_string(checked) +
           " Frobenius-closure members confirmed in the tight closure";
  return true;
}

bool criterion7(std::string& detail) {
  RandomSource rng(202407);
  const std::uint32_t primes[] = {2, 3, 5};
  std::size_t ideals = 0, memberships = 0;
  while (ideals < 100) {
    const std::uint32_t p = primes[ideals % 3];
    const std::size_t n = 1 + rng.below(4);
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i)
      gens.push_back(oracles::random_form(rng, p, 1 + rng.below(4)));
    const GroebnerBasis B = buchberger(gens);
    ++ideals;

    for (std::size_t i = 0; i < B.size(); ++i)
      for (std::size_t j = i + 1; j < B.size(); ++j)
        if (!normal_form(s_polynomial(B.generators()[i], B.generators()[j]), B)
                 .is_zero()) {
          detail = "an S-polynomial of the output basis has nonzero normal "
                   "form";
          return false;
        }

    const Poly probe = oracles::random_form(rng, p, 1 + rng.below(5));
    const Poly nf = normal_form(probe, B);
    if (normal_form(nf, B) != nf) {
      detail = "normal_form is not idempotent";
      return false;
    }

    for (std::uint64_t d = 0; d <= 6; ++d) {
      const oracles::GradedPiece piece(gens, d, p);
      for (const Monomial& m : monomials_of_degree(d)) {
        ++memberships;
        const Poly f = Poly::monomial(Fp::one(p), m);
        if (member(f, B) != piece.contains(f)) {
          detail = "member() disagrees with the linear-algebra oracle on " +
                   to_string(m) + " over F_" + std::to_string(p);
          return false;
        }
      }
    }
  }
  detail = std::to_string(ideals) + " ideals, " +
           std::to_string(memberships) +
           " membership queries agree with the degreewise oracle";
  return true;
}

bool criterion8(std::string& detail) {
  RandomSource rng(202408);
  const CubicCone f2 = fermat(2);
  const CubicCone f5 = fermat(5);
  for (int trial = 0; trial < 20; ++trial) {
    const CubicCone& ring = trial % 2 == 0 ? f2 : f5;
    const std::uint32_t p = ring.modulus();
    const std::size_t n = 2 + rng.below(3);
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i)
      gens.push_back(oracles::random_form(rng, p, 1 + rng.below(3)));
    HomIdeal I = make_ideal(ring, gens);
    const std::int64_t m = static_cast<std::int64_t>(rng.below(9)) - 3;
    const unsigned e = static_cast<unsigned>(rng.below(3));
    const std::int64_t q =
        static_cast<std::int64_t>(checked_pow(p, e, 1u << 20));
    const SyzygyInfo direct = syzygy_numerics(frobenius_power(I, e), q * m);
    const SyzygyInfo pulled = pullback_numerics(syzygy_numerics(I, m), e, p);
    if (!(direct == pulled)) {
      detail = "pull-back identity shadow failed at trial " +
               std::to_string(trial);
      return false;
    }
  }
  detail = "20 random (ideal, twist, exponent) instances agree exactly";
  return true;
}

}  // namespace

int main() {
  // Budgets are the stated runtime bounds; criteria without one get an
  // hour so only the exactness check can fail them.
  const std::vector<Criterion> criteria = {
      {1, "golden Frobenius closure over F_2", 1.0, criterion1},
      {2, "ordinary-curve triviality over F_7", 60.0, criterion2},
      {3, "uniform test exponent bound n-1", 600.0, criterion3},
      {4, "Hasse invariant table", 3600.0, criterion4},
      {5, "tight closure golden case", 60.0, criterion5},
      {6, "containment chain I in I^F in I*", 3600.0, criterion6},
      {7, "Groebner soundness vs linear algebra", 300.0, criterion7},
      {8, "syzygy pull-back identity shadow", 3600.0, criterion8},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed > c.budget_seconds) {
      ok = false;
      detail += " [exceeded " + std::to_string(c.budget_seconds) +
                " s budget]";
    }
    std::printf("%s criterion %d: %s (%.2f s) -- %s\n", ok ? "PASS" : "FAIL",
                c.number, c.title.c_str(), elapsed, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures > 0)
    std::printf("%d criterion(s) failed\n", failures);
  else
    std::printf("all 8 criteria passed\n");
  return failures == 0 ? 0 : 1;
}
