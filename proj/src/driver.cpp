#include "charclose/driver.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "charclose/closure.hpp"
#include "charclose/curve.hpp"
#include "charclose/errors.hpp"
#include "charclose/groebner.hpp"
#include "charclose/ideal.hpp"
#include "charclose/syzygy.hpp"

namespace charclose {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct ModeName {
  Mode mode;
  const char* name;
};

constexpr ModeName kModeNames[] = {
    {Mode::validate, "validate"},
    {Mode::hasse, "hasse"},
    {Mode::frobenius_member, "frobenius-member"},
    {Mode::frobenius_closure, "frobenius-closure"},
    {Mode::tight_member, "tight-member"},
    {Mode::oracle, "oracle"},
    {Mode::syzygy_info, "syzygy-info"},
    {Mode::search, "search"},
};

}  // namespace

std::optional<Mode> mode_from_string(std::string_view name) {
  for (const ModeName& m : kModeNames)
    if (name == m.name) return m.mode;
  return std::nullopt;
}

std::string to_string(Mode mode) {
  for (const ModeName& m : kModeNames)
    if (mode == m.mode) return m.name;
  return "?";
}

ProblemSpec problem_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("problem file: invalid JSON: ") +
                          e.what());
  }
  if (j.contains("query")) j = j.at("query");  // accept full reports
  ProblemSpec spec;
  try {
    if (j.contains("mode")) {
      const auto mode = mode_from_string(j.at("mode").get<std::string>());
      if (!mode)
        throw ValidationError("problem file: unknown mode '" +
                              j.at("mode").get<std::string>() + "'");
      spec.mode = *mode;
    }
    if (j.contains("p")) spec.p = j.at("p").get<std::uint32_t>();
    if (j.contains("curve")) spec.curve = j.at("curve").get<std::string>();
    if (j.contains("ideal"))
      spec.ideal = j.at("ideal").get<std::vector<std::string>>();
    if (j.contains("element") && !j.at("element").is_null())
      spec.element = j.at("element").get<std::string>();
    if (j.contains("emax") && !j.at("emax").is_null())
      spec.emax = j.at("emax").get<unsigned>();
    if (j.contains("degree_cap"))
      spec.degree_cap = j.at("degree_cap").get<std::uint64_t>();
    if (j.contains("format"))
      spec.format = j.at("format").get<std::string>() == "json"
                        ? OutputFormat::json
                        : OutputFormat::text;
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples"))
      spec.samples = j.at("samples").get<std::size_t>();
    if (j.contains("max_gens"))
      spec.max_gens = j.at("max_gens").get<std::size_t>();
    if (j.contains("gen_degree"))
      spec.gen_degree = j.at("gen_degree").get<std::uint64_t>();
    if (j.contains("twist") && !j.at("twist").is_null())
      spec.twist = j.at("twist").get<std::int64_t>();
    if (j.contains("pullback") && !j.at("pullback").is_null())
      spec.pullback = j.at("pullback").get<unsigned>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("problem file: bad field: ") + e.what());
  }
  return spec;
}

namespace {

// ---------------------------------------------------------------------------
// Report plumbing.
// ---------------------------------------------------------------------------

json query_json(const ProblemSpec& spec) {
  json q;
  q["mode"] = to_string(spec.mode);
  q["p"] = spec.p;
  q["curve"] = spec.curve;
  if (!spec.ideal.empty()) q["ideal"] = spec.ideal;
  if (spec.element) q["element"] = *spec.element;
  if (spec.emax) q["emax"] = *spec.emax;
  q["degree_cap"] = spec.degree_cap;
  q["format"] = spec.format == OutputFormat::json ? "json" : "text";
  if (spec.mode == Mode::search) {
    q["seed"] = spec.seed;
    q["samples"] = spec.samples;
    q["max_gens"] = spec.max_gens;
    q["gen_degree"] = spec.gen_degree;
  }
  if (spec.twist) q["twist"] = *spec.twist;
  if (spec.pullback) q["pullback"] = *spec.pullback;
  return q;
}

json report_json(const ProblemSpec& spec, json result) {
  json r;
  r["schema"] = "charclose/1";
  r["query"] = query_json(spec);
  r["result"] = std::move(result);
  return r;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string verdict_text(bool verdict) { return verdict ? "yes" : "no"; }

class TextReport {
 public:
  explicit TextReport(std::ostream& out, const std::string& title)
      : out_(out) {
    out_ << "charclose " << title << "\n";
  }
  void line(const std::string& key, const std::string& value) {
    out_ << "  " << std::left << std::setw(18) << key << " " << value << "\n";
  }
  template <typename T>
  void num(const std::string& key, T value) {
    line(key, std::to_string(value));
  }

 private:
  std::ostream& out_;
};

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (const std::string& s : parts) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms << " ms";
  return os.str();
}

std::vector<std::string> poly_texts(const std::vector<Poly>& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const Poly& f : polys) out.push_back(to_string(f));
  return out;
}

// ---------------------------------------------------------------------------
// Shared input assembly.
// ---------------------------------------------------------------------------

CubicCone build_ring(const ProblemSpec& spec) {
  if (spec.p == 0)
    throw ValidationError("a prime --p is required");
  if (!is_prime(spec.p))
    throw ValidationError("--p " + std::to_string(spec.p) + " is not prime");
  if (spec.curve.empty())
    throw ValidationError("--curve is required");
  return validate_curve(parse(spec.curve, spec.p), spec.p);
}

HomIdeal build_ideal(const ProblemSpec& spec, const CubicCone& ring) {
  if (spec.ideal.empty())
    throw ValidationError("mode '" + to_string(spec.mode) +
                          "' requires --ideal with at least one generator");
  std::vector<Poly> gens;
  gens.reserve(spec.ideal.size());
  for (const std::string& text : spec.ideal)
    gens.push_back(parse(text, spec.p));
  return make_ideal(ring, std::move(gens));
}

Poly build_element(const ProblemSpec& spec) {
  if (!spec.element)
    throw ValidationError("mode '" + to_string(spec.mode) +
                          "' requires --element");
  return parse(*spec.element, spec.p);
}

json closure_report_json(const ClosureReport& r) {
  json j;
  j["verdict"] = r.verdict;
  if (r.exponent)
    j["exponent"] = *r.exponent;
  else
    j["exponent"] = nullptr;
  j["q"] = r.q;
  j["n"] = r.generator_count;
  j["bound"] = r.bound;
  if (r.witness) {
    j["witness"] = {{"multiplier", std::string(1, r.witness->multiplier)},
                    {"exponent", r.witness->exponent}};
  } else {
    j["witness"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed_seconds * 1000.0;
  return j;
}

// ---------------------------------------------------------------------------
// Mode handlers.  Each returns the JSON result object and, in text mode,
// prints the human-readable report directly.
// ---------------------------------------------------------------------------

json run_validate(const CubicCone& ring) {
  json result;
  result["valid"] = true;
  result["hasse"] = ring.hasse().value();
  result["supersingular"] = ring.supersingular();
  result["genus"] = CubicCone::genus;
  result["curve_degree"] = CubicCone::curve_degree;
  return result;
}

void print_ring(TextReport& t, const ProblemSpec& spec,
                const CubicCone& ring) {
  t.num("p", spec.p);
  t.line("curve", to_string(ring.curve()));
  t.line("class", ring.supersingular()
                      ? "supersingular (Hasse invariant 0)"
                      : "ordinary (Hasse invariant " +
                            std::to_string(ring.hasse().value()) + ")");
}

json run_search(const ProblemSpec& spec, const CubicCone& ring,
                std::ostream& out);

json dispatch(const ProblemSpec& spec, std::ostream& out) {
  const auto start = Clock::now();
  CubicCone ring = build_ring(spec);

  switch (spec.mode) {
    case Mode::validate:
    case Mode::hasse: {
      json result = run_validate(ring);
      result["elapsed_ms"] = elapsed_ms(start);
      if (spec.format == OutputFormat::text) {
        TextReport t(out, to_string(spec.mode));
        print_ring(t, spec, ring);
        t.line("verdict", "smooth cubic accepted");
      }
      return result;
    }

    case Mode::frobenius_member: {
      HomIdeal I = build_ideal(spec, ring);
      const Poly f = build_element(spec);
      const ClosureReport r = in_frobenius_closure(f, I, spec.degree_cap);
      json result = closure_report_json(r);
      if (spec.format == OutputFormat::text) {
        TextReport t(out, "frobenius-member");
        print_ring(t, spec, ring);
        t.line("ideal", "(" + join(poly_texts(I.generators()), "; ") + ")");
        t.line("element", to_string(f));
        t.line("bound", "e = n-1 = " + std::to_string(r.bound) +
                            "  (q = " + std::to_string(r.q) + ")");
        t.line("in I^F", verdict_text(r.verdict));
        t.line("elapsed", format_ms(r.elapsed_seconds * 1000.0));
      }
      return result;
    }

    case Mode::frobenius_closure: {
      HomIdeal I = build_ideal(spec, ring);
      HomIdeal closed = frobenius_closure(I, spec.degree_cap);
      const unsigned bound =
          static_cast<unsigned>(I.generator_count()) - 1;
      json result;
      result["n"] = I.generator_count();
      result["bound"] = bound;
      result["q"] = checked_pow(spec.p, bound, spec.degree_cap);
      result["socle_degree_bound"] = socle_degree_bound(I);
      const std::vector<std::string> closure_texts =
          poly_texts(closed.generators());
      result["closure_generators"] = closure_texts;
      const std::vector<std::string> added(
          closure_texts.begin() +
              static_cast<std::ptrdiff_t>(I.generator_count()),
          closure_texts.end());
      result["added"] = added;
      result["already_closed"] = added.empty();
      result["reduced_lift_basis"] =
          poly_texts(closed.lift_basis().generators());
      result["elapsed_ms"] = elapsed_ms(start);
      if (spec.format == OutputFormat::text) {
        TextReport t(out, "frobenius-closure");
        print_ring(t, spec, ring);
        t.line("ideal", "(" + join(poly_texts(I.generators()), "; ") + ")");
        t.line("bound", "e = n-1 = " + std::to_string(bound));
        t.line("closure", "(" + join(poly_texts(closed.generators()), "; ") + ")");
        t.line("added", added.empty() ? "none (Frobenius closed)"
                                      : join(added, "; "));
        t.line("elapsed", format_ms(elapsed_ms(start)));
      }
      return result;
    }

    case Mode::tight_member: {
      HomIdeal I = build_ideal(spec, ring);
      const Poly f = build_element(spec);
      const ClosureReport r = in_tight_closure_cubic(f, I, spec.degree_cap);
      json result = closure_report_json(r);
      if (spec.format == OutputFormat::text) {
        TextReport t(out, "tight-member");
        print_ring(t, spec, ring);
        t.line("ideal", "(" + join(poly_texts(I.generators()), "; ") + ")");
        t.line("element", to_string(f));
        t.line("bound", "smallest e with p^e > 7(n-1): e = " +
                            std::to_string(r.bound) +
                            "  (q = " + std::to_string(r.q) + ")");
        t.line("in I*", verdict_text(r.verdict));
        if (r.witness)
          t.line("witness", std::string(1, r.witness->multiplier) +
                                "*f^(p^" +
                                std::to_string(r.witness->exponent) +
                                ") is outside the Frobenius power");
        t.line("elapsed", format_ms(r.elapsed_seconds * 1000.0));
      }
      return result;
    }

    case Mode::oracle: {
      HomIdeal I = build_ideal(spec, ring);
      const Poly f = build_element(spec);
      const unsigned e_max =
          spec.emax ? *spec.emax
                    : static_cast<unsigned>(I.generator_count()) + 1;
      const auto t0 = Clock::now();
      const std::optional<unsigned> found =
          min_frobenius_exponent(f, I, e_max, spec.degree_cap);
      json result;
      result["found"] = found.has_value();
      if (found) {
        result["exponent"] = *found;
        result["q"] = checked_pow(spec.p, *found, spec.degree_cap);
      } else {
        result["exponent"] = nullptr;
        result["q"] = nullptr;
      }
      result["emax"] = e_max;
      result["n"] = I.generator_count();
      result["elapsed_ms"] = elapsed_ms(t0);
      if (spec.format == OutputFormat::text) {
        TextReport t(out, "oracle");
        print_ring(t, spec, ring);
        t.line("ideal", "(" + join(poly_texts(I.generators()), "; ") + ")");
        t.line("element", to_string(f));
        t.num("emax", e_max);
        t.line("min exponent",
               found ? std::to_string(*found) : "none up to emax");
        t.line("elapsed", format_ms(elapsed_ms(t0)));
      }
      return result;
    }

    case Mode::syzygy_info: {
      HomIdeal I = build_ideal(spec, ring);
      std::int64_t twist;
      if (spec.twist) {
        twist = *spec.twist;
      } else if (spec.element) {
        const Poly f = build_element(spec);
        const Homogeneity h = homogeneity(f);
        if (h.kind != HomogeneityKind::homogeneous)
          throw ValidationError(
              "syzygy-info: the element must be nonzero homogeneous to "
              "supply the twist");
        twist = static_cast<std::int64_t>(h.degree);
      } else {
        throw ValidationError("syzygy-info requires --twist or --element");
      }
      const SyzygyInfo s = syzygy_numerics(I, twist);
      auto info_json = [](const SyzygyInfo& x) {
        json j;
        j["rank"] = x.rank;
        j["degree"] = x.degree;
        j["slope"] = {{"num", x.slope.num}, {"den", x.slope.den}};
        j["twist"] = x.twist;
        j["generator_degrees"] = x.generator_degrees;
        return j;
      };
      json result = info_json(s);
      if (spec.pullback)
        result["pullback"] = info_json(pullback_numerics(s, *spec.pullback,
                                                         spec.p));
      result["elapsed_ms"] = elapsed_ms(start);
      if (spec.format == OutputFormat::text) {
        TextReport t(out, "syzygy-info");
        print_ring(t, spec, ring);
        t.line("ideal", "(" + join(poly_texts(I.generators()), "; ") + ")");
        t.num("twist", s.twist);
        t.num("rank", s.rank);
        t.num("degree", s.degree);
        t.line("slope", std::to_string(s.slope.num) + "/" +
                            std::to_string(s.slope.den));
        if (spec.pullback) {
          const SyzygyInfo pb = pullback_numerics(s, *spec.pullback, spec.p);
          t.line("pullback e=" + std::to_string(*spec.pullback),
                 "degree " + std::to_string(pb.degree) + ", twist " +
                     std::to_string(pb.twist));
        }
      }
      return result;
    }

    case Mode::search:
      return run_search(spec, ring, out);
  }
  throw std::logic_error("dispatch: unhandled mode");
}

// ---------------------------------------------------------------------------
// Search mode: seeded random primary ideals, oracle exponents for every
// standard monomial, histogram keyed by generator count.
// ---------------------------------------------------------------------------

Poly random_homogeneous(RandomSource& rng, std::uint32_t p, std::uint64_t d) {
  const std::vector<Monomial> monos = monomials_of_degree(d);
  for (;;) {
    std::vector<Term> terms;
    for (const Monomial& m : monos) {
      const Fp c(static_cast<std::int64_t>(rng.below(p)), p);
      if (!c.is_zero()) terms.push_back(Term{m, c});
    }
    if (!terms.empty()) return Poly::from_terms(p, std::move(terms));
  }
}

std::optional<HomIdeal> sample_primary_ideal(RandomSource& rng,
                                             const CubicCone& ring,
                                             std::size_t n,
                                             std::uint64_t max_degree) {
  constexpr int kAttempts = 300;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Poly> gens;
    gens.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      gens.push_back(random_homogeneous(rng, ring.modulus(),
                                        1 + rng.below(max_degree)));
    try {
      HomIdeal I = make_ideal(ring, std::move(gens));
      if (I.primary()) return I;
    } catch (const ValidationError&) {
      // a generator collided with the curve equation; redraw
    }
  }
  return std::nullopt;
}

json run_search(const ProblemSpec& spec, const CubicCone& ring,
                std::ostream& out) {
  if (spec.max_gens < 2)
    throw ValidationError("search: --max-gens must be at least 2");
  if (spec.gen_degree < 1)
    throw ValidationError("search: --gen-degree must be at least 1");
  const auto start = Clock::now();
  RandomSource rng(spec.seed);

  struct Row {
    std::map<unsigned, std::size_t> exponents;
    std::size_t none = 0;
    std::size_t resource = 0;
  };
  std::map<std::size_t, Row> hist;  // keyed by generator count n
  json samples_detail = json::array();
  json violations = json::array();
  std::size_t skipped = 0;

  for (std::size_t s = 0; s < spec.samples; ++s) {
    const std::size_t n = 2 + rng.below(spec.max_gens - 1);
    const std::optional<HomIdeal> ideal =
        sample_primary_ideal(rng, ring, n, spec.gen_degree);
    if (!ideal) {
      ++skipped;
      continue;
    }
    const unsigned e_max = static_cast<unsigned>(n) + 1;
    json detail;
    detail["sample"] = s;
    detail["n"] = n;
    detail["ideal"] = poly_texts(ideal->generators());
    json monomial_results = json::array();

    FrobeniusTester tester(*ideal, spec.degree_cap);
    const std::uint64_t socle = socle_degree_bound(*ideal);
    for (std::uint64_t d = 0; d <= socle; ++d) {
      for (const Monomial& m : standard_monomials(ideal->lift_basis(), d)) {
        const Poly f = Poly::monomial(Fp::one(spec.p), m);
        json entry;
        entry["monomial"] = to_string(m);
        try {
          const std::optional<unsigned> e = tester.min_exponent(f, e_max);
          if (e) {
            hist[n].exponents[*e] += 1;
            entry["exponent"] = *e;
            if (*e > n - 1) {
              json v;
              v["sample"] = s;
              v["monomial"] = to_string(m);
              v["exponent"] = *e;
              v["n"] = n;
              violations.push_back(v);
            }
          } else {
            hist[n].none += 1;
            entry["exponent"] = nullptr;
          }
        } catch (const ResourceError& e) {
          hist[n].resource += 1;
          entry["resource_error"] = e.what();
        }
        monomial_results.push_back(entry);
      }
    }
    detail["monomials"] = monomial_results;
    samples_detail.push_back(detail);
  }

  if (!violations.empty())
    throw std::logic_error(
        "search: observed a finite Frobenius exponent above n-1; this "
        "contradicts the uniform test exponent bound");

  json histogram = json::array();
  for (const auto& [n, row] : hist) {
    json r;
    r["n"] = n;
    json counts = json::object();
    for (const auto& [e, c] : row.exponents) counts[std::to_string(e)] = c;
    r["exponents"] = counts;
    r["none"] = row.none;
    r["resource"] = row.resource;
    histogram.push_back(r);
  }

  json result;
  result["seed"] = spec.seed;
  result["samples_requested"] = spec.samples;
  result["samples_skipped"] = skipped;
  result["histogram"] = histogram;
  result["violations"] = violations;
  result["samples"] = samples_detail;
  result["elapsed_ms"] = elapsed_ms(start);

  if (spec.format == OutputFormat::text) {
    TextReport t(out, "search");
    print_ring(t, spec, ring);
    t.num("seed", spec.seed);
    t.num("samples", spec.samples);
    if (skipped > 0) t.num("skipped", skipped);
    t.line("histogram", "min Frobenius exponents by generator count");
    for (const auto& [n, row] : hist) {
      std::string cells;
      for (const auto& [e, c] : row.exponents)
        cells += "e=" + std::to_string(e) + ":" + std::to_string(c) + "  ";
      cells += "none:" + std::to_string(row.none);
      if (row.resource > 0)
        cells += "  resource:" + std::to_string(row.resource);
      t.line("  n=" + std::to_string(n), cells);
    }
    t.line("bound check", "all finite exponents are <= n-1");
    t.line("elapsed", format_ms(elapsed_ms(start)));
  }
  return result;
}

const char* error_category(const std::exception& e) {
  if (dynamic_cast<const SyntaxError*>(&e)) return "syntax";
  if (dynamic_cast<const NotEllipticError*>(&e)) return "not-elliptic";
  if (dynamic_cast<const NotPrimaryError*>(&e)) return "not-primary";
  if (dynamic_cast<const NonHomogeneousError*>(&e)) return "non-homogeneous";
  if (dynamic_cast<const ValidationError*>(&e)) return "validation";
  if (dynamic_cast<const ResourceError*>(&e)) return "resource";
  return "internal";
}

}  // namespace

int run(const ProblemSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    json result = dispatch(spec, out);
    if (spec.format == OutputFormat::json)
      emit_json(out, report_json(spec, std::move(result)));
    return kExitOk;
  } catch (const std::exception& e) {
    const std::string category = error_category(e);
    int code = kExitInternal;
    if (category == "resource")
      code = kExitResource;
    else if (category != "internal")
      code = kExitValidation;
    err << "charclose: error (" << category << "): " << e.what() << "\n";
    if (spec.format == OutputFormat::json) {
      json j;
      j["schema"] = "charclose/1";
      j["query"] = query_json(spec);
      j["error"] = {{"category", category}, {"message", e.what()}};
      emit_json(out, j);
    }
    return code;
  }
}

}  // namespace charclose
