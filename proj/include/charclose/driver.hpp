// Front end shared by the command-line tool and the tests: a parsed problem
// description, a dispatcher that runs it and writes a text or JSON report,
// and the seeded random-search mode for minimal-exponent statistics.
#ifndef CHARCLOSE_DRIVER_HPP
#define CHARCLOSE_DRIVER_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "charclose/poly.hpp"

namespace charclose {

enum class Mode {
  validate,
  hasse,
  frobenius_member,
  frobenius_closure,
  tight_member,
  oracle,
  syzygy_info,
  search,
};

std::optional<Mode> mode_from_string(std::string_view name);
std::string to_string(Mode mode);

enum class OutputFormat { text, json };

struct ProblemSpec {
  Mode mode = Mode::validate;
  std::uint32_t p = 0;
  std::string curve;
  std::vector<std::string> ideal;       // generator texts
  std::optional<std::string> element;
  std::optional<unsigned> emax;         // oracle scan bound; default n+1
  std::uint64_t degree_cap = kDefaultDegreeCap;
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 20240701;        // search mode; printed in reports
  std::size_t samples = 20;             // search mode
  std::size_t max_gens = 3;             // search mode: n drawn from 2..max_gens
  std::uint64_t gen_degree = 3;         // search mode: degrees drawn from 1..
  std::optional<std::int64_t> twist;    // syzygy-info; defaults to deg(element)
  std::optional<unsigned> pullback;     // syzygy-info: also report this pull-back
};

/// Loads a problem from its JSON form.  Accepts either a bare problem object
/// or a full report (whose "query" object is the problem), so reports can be
/// re-run as problem files.  Throws ValidationError on malformed input.
ProblemSpec problem_from_json_text(const std::string& text);

/// Exit codes: 0 success, 1 validation/syntax, 2 resource budget,
/// 3 internal invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitInternal = 3;

/// Runs one query and writes the report to `out` (diagnostics to `err`);
/// returns the exit code.  In JSON mode errors are also reported as a JSON
/// object on `out`.
int run(const ProblemSpec& spec, std::ostream& out, std::ostream& err);

/// Deterministic 64-bit generator (splitmix64); used for all sampling so
/// seeded runs reproduce across platforms.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw from [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace charclose

#endif  // CHARCLOSE_DRIVER_HPP
