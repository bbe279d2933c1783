#include "charclose/poly.hpp"

#include <algorithm>
#include <cctype>

#include "charclose/errors.hpp"

namespace charclose {

Poly Poly::from_terms(std::uint32_t p, std::vector<Term> terms) {
  for (const Term& t : terms)
    if (t.coeff.modulus() != p)
      throw std::invalid_argument("Poly: coefficient modulus mismatch");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_cmp(a.mono, b.mono) > 0;
  });
  Poly f(p);
  for (const Term& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff += t.coeff;
      if (f.terms_.back().coeff.is_zero()) f.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      f.terms_.push_back(t);
    }
  }
  return f;
}

Poly Poly::from_sorted_terms(std::uint32_t p, std::vector<Term> terms) {
  Poly f(p);
#ifndef NDEBUG
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff.is_zero() || terms[i].coeff.modulus() != p ||
        (i > 0 && grevlex_cmp(terms[i - 1].mono, terms[i].mono) <= 0))
      throw std::logic_error("Poly::from_sorted_terms: input not canonical");
  }
#endif
  f.terms_ = std::move(terms);
  return f;
}

Poly Poly::variable(int i, std::uint32_t p) {
  Monomial m;
  m.e[i] = 1;
  return monomial(Fp::one(p), m);
}

void Poly::require_same_modulus(const Poly& o) const {
  if (p_ != o.p_)
    throw std::invalid_argument("Poly: mixed moduli " + std::to_string(p_) +
                                " and " + std::to_string(o.p_));
}

Poly Poly::operator-() const {
  Poly r(p_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.mono, -t.coeff});
  return r;
}

// Merge of two descending term lists; the result needs no re-sorting.
Poly Poly::merge(const Poly& a, const Poly& b, bool subtract) {
  Poly r(a.p_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms_;
  const auto& tb = b.terms_;
  while (i < ta.size() && j < tb.size()) {
    const int c = grevlex_cmp(ta[i].mono, tb[j].mono);
    if (c > 0) {
      r.terms_.push_back(ta[i++]);
    } else if (c < 0) {
      r.terms_.push_back(
          Term{tb[j].mono, subtract ? -tb[j].coeff : tb[j].coeff});
      ++j;
    } else {
      Fp v = subtract ? ta[i].coeff - tb[j].coeff : ta[i].coeff + tb[j].coeff;
      if (!v.is_zero()) r.terms_.push_back(Term{ta[i].mono, v});
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) r.terms_.push_back(ta[i]);
  for (; j < tb.size(); ++j)
    r.terms_.push_back(Term{tb[j].mono, subtract ? -tb[j].coeff : tb[j].coeff});
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  a.require_same_modulus(b);
  return Poly::merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
  a.require_same_modulus(b);
  return Poly::merge(a, b, true);
}

Poly Poly::scaled(Fp c, const Monomial& m) const {
  if (c.modulus() != p_)
    throw std::invalid_argument("Poly::scaled: coefficient modulus mismatch");
  Poly r(p_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Fp v = t.coeff * c;
    if (!v.is_zero()) r.terms_.push_back(Term{t.mono * m, v});
  }
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_modulus(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.modulus());
  // Accumulate all cross products, then canonicalize once.
  std::vector<Term> prods;
  prods.reserve(a.terms().size() * b.terms().size());
  for (const Term& s : a.terms())
    for (const Term& t : b.terms())
      prods.push_back(Term{s.mono * t.mono, s.coeff * t.coeff});
  return Poly::from_terms(a.modulus(), std::move(prods));
}

Homogeneity homogeneity(const Poly& f) {
  if (f.is_zero()) return Homogeneity{HomogeneityKind::zero, 0};
  const std::uint64_t d = f.terms().front().mono.degree();
  for (const Term& t : f.terms())
    if (t.mono.degree() != d) return Homogeneity{HomogeneityKind::mixed, 0};
  return Homogeneity{HomogeneityKind::homogeneous, d};
}

std::uint64_t checked_pow(std::uint32_t p, unsigned e, std::uint64_t limit) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > limit / p)
      throw ResourceError("p^e overflows the configured limit (p = " +
                          std::to_string(p) + ", e = " + std::to_string(e) +
                          ")");
    q *= p;
  }
  return q;
}

Poly frobenius_pow(const Poly& f, unsigned e, std::uint64_t degree_cap) {
  const std::uint32_t p = f.modulus();
  Poly r = f;
  for (unsigned step = 0; step < e; ++step) {
    if (r.degree() > degree_cap / p)
      throw ResourceError(
          "frobenius_pow: total degree " + std::to_string(r.degree()) + " * " +
          std::to_string(p) + " exceeds the degree cap " +
          std::to_string(degree_cap));
    std::vector<Term> out;
    out.reserve(r.term_count());
    for (const Term& t : r.terms()) {
      Monomial m;
      for (int i = 0; i < kNumVars; ++i) m.e[i] = t.mono.e[i] * p;
      out.push_back(Term{m, pow(t.coeff, p)});
    }
    // Term-wise p-th power is order-preserving for grevlex, so the list is
    // already sorted and collision-free.
    r = Poly::from_terms(p, std::move(out));
  }
  return r;
}

Poly partial(const Poly& f, int i) {
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    if (t.mono.e[i] == 0) continue;
    Monomial m = t.mono;
    const Fp c = t.coeff * Fp(static_cast<std::int64_t>(m.e[i]), f.modulus());
    m.e[i] -= 1;
    if (!c.is_zero()) out.push_back(Term{m, c});
  }
  return Poly::from_terms(f.modulus(), std::move(out));
}

// ---------------------------------------------------------------------------
// Parsing.
//
// expr    = [ sign ] term { sign term }
// term    = unit { [ "*" ] unit }          (units multiply together)
// unit    = integer | variable [ "^" integer ]
// variable = "x" | "y" | "z"
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  std::uint32_t p;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos == s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  // Reads a digit run, reducing mod p as it goes (coefficients of any length
  // are accepted).
  Fp read_coefficient() {
    skip_ws();
    Fp v = Fp::zero(p);
    const Fp ten(10, p);
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * ten + Fp(s[pos] - '0', p);
      ++pos;
    }
    return v;
  }

  std::uint64_t read_exponent() {
    skip_ws();
    if (pos == s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw SyntaxError("expected an integer exponent after '^'", pos);
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > kDefaultDegreeCap)
        throw SyntaxError("exponent exceeds the supported range", pos);
      ++pos;
    }
    return v;
  }

  int variable_index(char c) {
    for (int i = 0; i < kNumVars; ++i)
      if (kVarNames[i] == c) return i;
    return -1;
  }

  // One term: optional coefficient and any number of variable powers,
  // multiplied together.  `sign` is +1/-1 from the surrounding expression.
  Term read_term(bool negative) {
    skip_ws();
    Fp coeff = negative ? -Fp::one(p) : Fp::one(p);
    Monomial mono;
    bool saw_unit = false;
    for (;;) {
      skip_ws();
      if (pos == s.size()) break;
      const char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= read_coefficient();
        saw_unit = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const int vi = variable_index(c);
        if (vi < 0)
          throw SyntaxError(std::string("unknown variable '") + c +
                                "' (only x, y, z are recognized)",
                            pos);
        ++pos;
        std::uint64_t exp = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          exp = read_exponent();
        }
        if (mono.e[vi] + exp > kDefaultDegreeCap)
          throw SyntaxError("exponent exceeds the supported range", pos);
        mono.e[vi] += static_cast<std::uint32_t>(exp);
        saw_unit = true;
      } else if (c == '*') {
        if (!saw_unit) throw SyntaxError("unexpected '*'", pos);
        ++pos;
        skip_ws();
        if (pos == s.size() || s[pos] == '+' || s[pos] == '-')
          throw SyntaxError("expected a factor after '*'", pos);
      } else {
        break;  // +, - or junk; the caller decides
      }
    }
    if (!saw_unit)
      throw SyntaxError("expected a term", pos);
    return Term{mono, coeff};
  }

  Poly parse_expr() {
    std::vector<Term> terms;
    skip_ws();
    if (pos == s.size()) throw SyntaxError("empty polynomial", pos);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    terms.push_back(read_term(negative));
    while (!at_end()) {
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        terms.push_back(read_term(c == '-'));
      } else {
        throw SyntaxError(std::string("unexpected character '") + c + "'",
                          pos);
      }
    }
    return Poly::from_terms(p, std::move(terms));
  }
};

}  // namespace

Poly parse(std::string_view text, std::uint32_t p) {
  Parser parser{text, 0, p};
  return parser.parse_expr();
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const Term& t : f.terms()) {
    if (!out.empty()) out += " + ";
    const bool unit_mono = t.mono.is_one();
    if (t.coeff.is_one() && !unit_mono) {
      out += to_string(t.mono);
    } else if (unit_mono) {
      out += std::to_string(t.coeff.value());
    } else {
      out += std::to_string(t.coeff.value());
      out += '*';
      out += to_string(t.mono);
    }
  }
  return out;
}

}  // namespace charclose
