#include "charclose/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "charclose/errors.hpp"

namespace charclose {

namespace {

// Total order on polynomials used only to make the input seeding order (and
// hence the whole run) deterministic.
int poly_cmp(const Poly& a, const Poly& b) {
  const std::size_t n = std::min(a.term_count(), b.term_count());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = grevlex_cmp(a.terms()[i].mono, b.terms()[i].mono);
    if (c != 0) return c;
    const auto va = a.terms()[i].coeff.value(), vb = b.terms()[i].coeff.value();
    if (va != vb) return va < vb ? -1 : 1;
  }
  if (a.term_count() != b.term_count())
    return a.term_count() < b.term_count() ? -1 : 1;
  return 0;
}

// Remainder of f on division by (basis, leading monomials), scanning the
// divisors in the given order and always reducing the current head term.
Poly reduce(const Poly& f, const std::vector<Poly>& basis) {
  const std::uint32_t p = f.modulus();
  std::vector<Term> out;
  Poly work = f;
  std::size_t head = 0;
  while (head < work.terms().size()) {
    const Term& lead = work.terms()[head];
    const Poly* divisor = nullptr;
    for (const Poly& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lead.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      out.push_back(lead);
      ++head;
      continue;
    }
    const Fp c = lead.coeff / divisor->leading_coeff();
    const Monomial m = lead.mono / divisor->leading_monomial();
    // work[head..] - c*m*divisor ; the head term cancels by construction.
    Poly suffix = Poly::from_sorted_terms(
        p, std::vector<Term>(work.terms().begin() + head, work.terms().end()));
    work = suffix - divisor->scaled(c, m);
    head = 0;
  }
  return Poly::from_sorted_terms(p, std::move(out));
}

Poly make_monic(const Poly& f) {
  if (f.is_zero() || f.leading_coeff().is_one()) return f;
  return f.scaled(inv(f.leading_coeff()));
}

using PairKey = std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>;

}  // namespace

Poly s_polynomial(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial: zero argument");
  const Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
  return f.scaled(inv(f.leading_coeff()), L / f.leading_monomial()) -
         g.scaled(inv(g.leading_coeff()), L / g.leading_monomial());
}

GroebnerBasis buchberger(std::vector<Poly> gens, const GroebnerLimits& limits) {
  if (gens.empty())
    throw std::invalid_argument("buchberger: empty generator list");
  const std::uint32_t p = gens.front().modulus();
  for (const Poly& g : gens)
    if (g.modulus() != p)
      throw std::invalid_argument("buchberger: mixed moduli");

  std::vector<Poly> seed;
  for (const Poly& g : gens)
    if (!g.is_zero()) seed.push_back(make_monic(g));
  std::sort(seed.begin(), seed.end(),
            [](const Poly& a, const Poly& b) { return poly_cmp(a, b) < 0; });

  std::vector<Poly> basis;
  std::set<PairKey> pending;  // (lcm degree, i, j) with i < j

  // Gebauer-Moeller update: prune the candidate pairs of a new element with
  // the lcm-divisibility and coprimality criteria, and drop old pairs whose
  // lcm the new leading monomial strictly refines.
  auto add_element = [&](Poly g) {
    const std::uint32_t t = static_cast<std::uint32_t>(basis.size());
    if (g.degree() > limits.max_degree)
      throw ResourceError("buchberger: basis element of degree " +
                          std::to_string(g.degree()) +
                          " exceeds the degree budget " +
                          std::to_string(limits.max_degree));
    const Monomial lm_t = g.leading_monomial();

    struct Candidate {
      std::uint32_t index;
      Monomial lcm_with_t;
      bool coprime;
    };
    std::vector<Candidate> pool;
    pool.reserve(t);
    for (std::uint32_t j = 0; j < t; ++j) {
      const Monomial& lm_j = basis[j].leading_monomial();
      pool.push_back(Candidate{j, lcm(lm_j, lm_t), coprime(lm_j, lm_t)});
    }
    std::vector<Candidate> survivors;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      const Candidate& cand = pool[c];
      bool keep = cand.coprime;
      if (!keep) {
        bool dominated = false;
        for (std::size_t c2 = c + 1; c2 < pool.size() && !dominated; ++c2)
          if (pool[c2].lcm_with_t.divides(cand.lcm_with_t)) dominated = true;
        for (std::size_t s = 0; s < survivors.size() && !dominated; ++s)
          if (survivors[s].lcm_with_t.divides(cand.lcm_with_t))
            dominated = true;
        keep = !dominated;
      }
      if (keep) survivors.push_back(cand);
    }

    // old pairs made redundant by lm_t
    for (auto it = pending.begin(); it != pending.end();) {
      const auto [deg, i, j] = *it;
      const Monomial L =
          lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      if (lm_t.divides(L) &&
          lcm(basis[i].leading_monomial(), lm_t) != L &&
          lcm(basis[j].leading_monomial(), lm_t) != L)
        it = pending.erase(it);
      else
        ++it;
    }

    for (const Candidate& s : survivors) {
      if (s.coprime) continue;  // settled by the product criterion
      if (limits.truncate_degree &&
          s.lcm_with_t.degree() > *limits.truncate_degree)
        continue;  // outside the truncation window
      pending.emplace(s.lcm_with_t.degree(), s.index, t);
    }
    basis.push_back(std::move(g));
  };

  for (const Poly& g : seed) {
    Poly r = reduce(g, basis);
    if (!r.is_zero()) add_element(make_monic(r));
  }

  std::size_t processed = 0;
  while (!pending.empty()) {
    const auto [deg, i, j] = *pending.begin();
    pending.erase(pending.begin());
    if (++processed > limits.max_pairs)
      throw ResourceError("buchberger: S-pair budget of " +
                          std::to_string(limits.max_pairs) + " exhausted");
    Poly r = reduce(s_polynomial(basis[i], basis[j]), basis);
    if (!r.is_zero()) add_element(make_monic(r));
  }

  // Minimalize: drop elements whose leading monomial is divisible by the
  // leading monomial of another kept element.
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int c = grevlex_cmp(basis[a].leading_monomial(),
                              basis[b].leading_monomial());
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<Poly> kept;
  for (std::size_t idx : order) {
    bool redundant = false;
    for (const Poly& h : kept)
      if (h.leading_monomial().divides(basis[idx].leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(basis[idx]);
  }

  // Tail-reduce to the unique reduced basis.  Truncated bases are internal
  // and only ever queried for normal forms and leading-term data, which any
  // Groebner basis answers canonically, so the fixpoint pass is skipped.
  if (!limits.truncate_degree) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
          if (j != i) others.push_back(kept[j]);
        Poly r = make_monic(reduce(kept[i], others));
        if (r != kept[i]) {
          kept[i] = std::move(r);
          changed = true;
        }
      }
    }
  }
  std::sort(kept.begin(), kept.end(), [](const Poly& a, const Poly& b) {
    return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  return GroebnerBasis(p, std::move(kept), limits.truncate_degree);
}

Poly normal_form(const Poly& f, const GroebnerBasis& B) {
  if (f.modulus() != B.modulus())
    throw std::invalid_argument("normal_form: modulus mismatch");
  if (B.truncated_at() && f.degree() > *B.truncated_at())
    throw std::logic_error(
        "normal_form: query degree exceeds the basis truncation degree");
  return reduce(f, B.generators());
}

Division divide(const Poly& f, const GroebnerBasis& B) {
  const std::uint32_t p = f.modulus();
  Division d{std::vector<Poly>(B.size(), Poly(p)), Poly(p)};
  if (B.truncated_at() && f.degree() > *B.truncated_at())
    throw std::logic_error(
        "divide: query degree exceeds the basis truncation degree");
  std::vector<Term> rem;
  Poly work = f;
  std::size_t head = 0;
  while (head < work.terms().size()) {
    const Term lead = work.terms()[head];
    std::size_t di = B.size();
    for (std::size_t k = 0; k < B.size(); ++k) {
      if (B.generators()[k].leading_monomial().divides(lead.mono)) {
        di = k;
        break;
      }
    }
    if (di == B.size()) {
      rem.push_back(lead);
      ++head;
      continue;
    }
    const Poly& g = B.generators()[di];
    const Fp c = lead.coeff / g.leading_coeff();
    const Monomial m = lead.mono / g.leading_monomial();
    d.quotients[di] = d.quotients[di] + Poly::monomial(c, m);
    Poly suffix = Poly::from_sorted_terms(
        p, std::vector<Term>(work.terms().begin() + head, work.terms().end()));
    work = suffix - g.scaled(c, m);
    head = 0;
  }
  d.remainder = Poly::from_sorted_terms(p, std::move(rem));
  return d;
}

bool member(const Poly& f, const GroebnerBasis& B) {
  return normal_form(f, B).is_zero();
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& B,
                                         std::uint64_t d) {
  if (B.truncated_at() && d > *B.truncated_at())
    throw std::logic_error(
        "standard_monomials: degree exceeds the basis truncation degree");
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_of_degree(d)) {
    bool standard = true;
    for (const Poly& g : B.generators())
      if (g.leading_monomial().divides(m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
  }
  return out;
}

bool is_irrelevant_primary(const GroebnerBasis& B) {
  if (B.truncated_at())
    throw std::logic_error(
        "is_irrelevant_primary: requires an untruncated basis");
  for (int v = 0; v < kNumVars; ++v) {
    bool found = false;
    for (const Poly& g : B.generators()) {
      const Monomial& lm = g.leading_monomial();
      bool pure = true;
      for (int w = 0; w < kNumVars; ++w)
        if (w != v && lm.e[w] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace charclose
