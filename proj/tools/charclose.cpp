// charclose command-line tool.
//
//   charclose <mode> --p <prime> --curve "<poly>" --ideal "<poly>;<poly>;..."
//             [--element "<poly>"] [--emax N] [--degree-cap N]
//             [--format text|json] [--seed N] [--problem file.json] ...
//
// A problem may also be given as a JSON file (--problem); explicit flags win
// over the file on conflict.  Exit codes: 0 success, 1 syntax/validation,
// 2 resource budget exhausted, 3 internal invariant violation.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charclose/driver.hpp"
#include "charclose/errors.hpp"

namespace {

std::vector<std::string> split_ideal(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ';') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius and tight closure of homogeneous ideals in cones "
               "over smooth plane cubics"};
  app.get_formatter()->column_width(28);

  std::string mode_name;
  std::string problem_file;
  std::uint32_t p = 0;
  std::string curve;
  std::string ideal_text;
  std::string element;
  unsigned emax = 0;
  std::uint64_t degree_cap = 0;
  std::string format;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t max_gens = 0;
  std::uint64_t gen_degree = 0;
  std::int64_t twist = 0;
  unsigned pullback = 0;

  app.add_option("mode", mode_name,
                 "validate | hasse | frobenius-member | frobenius-closure | "
                 "tight-member | oracle | syzygy-info | search");
  app.add_option("--problem", problem_file,
                 "JSON problem file (flags override its fields)");
  auto* opt_p = app.add_option("--p", p, "prime characteristic");
  auto* opt_curve =
      app.add_option("--curve", curve, "cubic curve equation, e.g. "
                                       "\"x^3+y^3+z^3\"");
  auto* opt_ideal = app.add_option(
      "--ideal", ideal_text, "ideal generators separated by ';'");
  auto* opt_element = app.add_option("--element", element,
                                     "homogeneous element to test");
  auto* opt_emax = app.add_option("--emax", emax,
                                  "oracle scan bound (default n+1)");
  auto* opt_cap = app.add_option("--degree-cap", degree_cap,
                                 "total-degree resource budget");
  auto* opt_format =
      app.add_option("--format", format, "text (default) or json")
          ->check(CLI::IsMember({"text", "json"}));
  auto* opt_seed = app.add_option("--seed", seed, "search sampling seed");
  auto* opt_samples =
      app.add_option("--samples", samples, "search sample count");
  auto* opt_max_gens = app.add_option(
      "--max-gens", max_gens, "search draws n from 2..max-gens");
  auto* opt_gen_degree = app.add_option(
      "--gen-degree", gen_degree, "search draws degrees from 1..gen-degree");
  auto* opt_twist =
      app.add_option("--twist", twist, "syzygy-info twist m");
  auto* opt_pullback = app.add_option(
      "--pullback", pullback, "syzygy-info: also report the e-th pull-back");

  CLI11_PARSE(app, argc, argv);

  charclose::ProblemSpec spec;
  if (!problem_file.empty()) {
    std::ifstream in(problem_file);
    if (!in) {
      std::cerr << "charclose: error (validation): cannot open problem file '"
                << problem_file << "'\n";
      return charclose::kExitValidation;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
      spec = charclose::problem_from_json_text(buffer.str());
    } catch (const std::exception& e) {
      std::cerr << "charclose: error (validation): " << e.what() << "\n";
      return charclose::kExitValidation;
    }
  }

  if (!mode_name.empty()) {
    const auto mode = charclose::mode_from_string(mode_name);
    if (!mode) {
      std::cerr << "charclose: error (validation): unknown mode '"
                << mode_name << "'\n";
      return charclose::kExitValidation;
    }
    spec.mode = *mode;
  } else if (problem_file.empty()) {
    std::cerr << app.help();
    return charclose::kExitValidation;
  }

  if (opt_p->count()) spec.p = p;
  if (opt_curve->count()) spec.curve = curve;
  if (opt_ideal->count()) spec.ideal = split_ideal(ideal_text);
  if (opt_element->count()) spec.element = element;
  if (opt_emax->count()) spec.emax = emax;
  if (opt_cap->count()) spec.degree_cap = degree_cap;
  if (opt_format->count())
    spec.format = format == "json" ? charclose::OutputFormat::json
                                   : charclose::OutputFormat::text;
  if (opt_seed->count()) spec.seed = seed;
  if (opt_samples->count()) spec.samples = samples;
  if (opt_max_gens->count()) spec.max_gens = max_gens;
  if (opt_gen_degree->count()) spec.gen_degree = gen_degree;
  if (opt_twist->count()) spec.twist = twist;
  if (opt_pullback->count()) spec.pullback = pullback;

  return charclose::run(spec, std::cout, std::cerr);
}
