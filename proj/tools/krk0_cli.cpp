// krk0: command-line front end. Exit codes: 0 success, 1 bad input,
// 2 verification failure, 3 internal error. stdout carries only the selected
// output format; diagnostics go to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "krk0/cyclotomic.hpp"
#include "krk0/determinant.hpp"
#include "krk0/errors.hpp"
#include "krk0/io.hpp"
#include "krk0/number_theory.hpp"
#include "krk0/verify.hpp"

namespace {

using namespace krk0;

enum class Format { json, csv, text };

struct Output {
  json data;
  std::string text;
};

struct Globals {
  Format format = Format::json;
  std::string report_path;
  unsigned parallelism = 0;
};

std::string render(const Output& out, Format format) {
  switch (format) {
    case Format::json:
      return out.data.dump(2) + "\n";
    case Format::csv:
      return json_to_csv(out.data);
    case Format::text:
      return out.text.empty() || out.text.back() == '\n' ? out.text : out.text + "\n";
  }
  return {};
}

void emit(const Output& out, const Globals& g) {
  const std::string rendered = render(out, g.format);
  if (g.report_path.empty()) {
    std::cout << rendered;
    return;
  }
  std::ofstream file(g.report_path);
  if (!file) throw Error("cannot open report file '" + g.report_path + "'");
  file << rendered;
  if (!file) throw Error("failed writing report file '" + g.report_path + "'");
  std::cerr << "wrote " << g.report_path << "\n";
}

std::vector<IntPoly> parse_polys(const std::vector<std::string>& texts) {
  std::vector<IntPoly> out;
  for (const auto& t : texts) {
    try {
      out.push_back(parse_poly(t));
    } catch (const ParseError& e) {
      throw ParseError("in '" + t + "': " + e.what(), e.position());
    }
  }
  return out;
}

std::vector<std::int64_t> parse_weights(const std::vector<std::string>& texts) {
  std::vector<std::int64_t> out;
  for (const auto& t : texts) {
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto v = parse_integer(item);
      const auto small = v ? to_int64(*v) : std::nullopt;
      if (!small) throw Error("bad weight '" + item + "'");
      out.push_back(*small);
    }
  }
  return out;
}

Output cyclotomic_command(std::uint64_t n) {
  if (n < 1) throw InvalidRange("n must be >= 1");
  const IntPoly& phi = cyclotomic(n);
  Output out;
  out.data = json{{"n", n}, {"polynomial", format_poly(phi)}, {"coefficients", poly_to_json(phi)}, {"degree", *phi.degree()}};
  out.text = format_poly(phi);
  return out;
}

Output resultant_command(const std::vector<std::string>& texts) {
  const auto polys = parse_polys(texts);
  const Integer r = resultant(polys[0], polys[1]);
  Output out;
  out.data = json{{"f", format_poly(polys[0])}, {"g", format_poly(polys[1])}, {"resultant", r.str()}};
  out.text = r.str();
  return out;
}

Output quotient_command(const std::vector<std::string>& texts, const std::vector<std::uint64_t>& pair) {
  std::vector<IntPoly> gens;
  if (!pair.empty()) {
    if (pair[0] < 1 || pair[0] >= pair[1]) throw InvalidRange("InvalidRange: need 1 <= m < n");
    gens = {cyclotomic(pair[0]), cyclotomic(pair[1])};
  } else {
    if (texts.empty()) throw Error("quotient needs generators or --pair");
    gens = parse_polys(texts);
  }
  const QuotientReport report = analyze_quotient(gens);
  Output out;
  out.data = quotient_report_to_json(report);
  if (!pair.empty()) out.data["pair"] = pair;
  out.text = report.group.to_string();
  return out;
}

Output bell_f_command(std::uint64_t a2, std::uint64_t a3) {
  const IntPoly f = bell_f(a2, a3);
  const auto factors = bell_factorization(a2, a3);
  const CompletionCheck completion = completion_check(a2, a3);
  Output out;
  out.data = json{{"alpha2", a2},
                  {"alpha3", a3},
                  {"f", poly_to_json(f)},
                  {"f_text", format_poly(f)},
                  {"degree", *f.degree()},
                  {"cyclotomic_factors", factors},
                  {"f_at_1", integer_to_json(completion.f_at_one)},
                  {"unit_ideal_with_t_minus_1", completion.unit_ideal},
                  {"completion_trivial", completion.trivial()}};
  out.text = format_poly(f);
  return out;
}

struct GroupSpec {
  std::optional<std::uint64_t> n;  // nullopt = torus
};

GroupSpec parse_group_spec(const std::string& spec) {
  if (spec == "torus") return {};
  if (spec.rfind("mu:", 0) != 0) throw Error("group must be 'torus', 'mu:n' or 'mu:p^n'");
  const std::string body = spec.substr(3);
  const auto caret = body.find('^');
  auto parse_u = [&](const std::string& s) {
    const auto v = parse_integer(s);
    const auto small = v ? to_int64(*v) : std::nullopt;
    if (!small || *small < 1) throw Error("bad group order in '" + spec + "'");
    return static_cast<std::uint64_t>(*small);
  };
  if (caret == std::string::npos) return {parse_u(body)};
  const std::uint64_t p = parse_u(body.substr(0, caret));
  const std::uint64_t e = parse_u(body.substr(caret + 1));
  if (!is_prime(p)) throw NotPrime("NotPrime: " + std::to_string(p) + " is not prime");
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (n > 1'000'000 / p) throw ConstraintViolation("p^n ≤ 1000000");
    n *= p;
  }
  return {n};
}

Output k0_command(std::uint64_t a2, std::uint64_t a3, std::uint64_t rho, const std::string& spec,
                  std::optional<std::uint64_t> r, std::uint64_t alpha1) {
  const GroupSpec group = parse_group_spec(spec);
  std::optional<KRDescriptor> descriptor;
  if (r) descriptor = KRDescriptor{alpha1, a2, a3, rho, *r, NormalForm{}};
  EquivariantK0 k;
  if (descriptor)
    k = group.n ? k0_mu(*descriptor, *group.n) : k0_torus(*descriptor);
  else
    k = group.n ? k0_mu(a2, a3, rho, *group.n) : k0_torus(a2, a3, rho);
  Output out;
  out.data = k0_to_json(k);
  if (descriptor) out.data["descriptor"] = descriptor_to_json(*descriptor);
  const bool nontrivial = descriptor ? is_nontrivial(*descriptor) : true;
  out.data["threefold_nontrivial"] = nontrivial;
  std::ostringstream text;
  if (group.n) {
    out.data["classification"] = k.f_part_structure.is_trivial() ? "trivial" : "nontrivial";
    text << "K0^mu_" << *group.n << " = Z^" << *group.n << " + (" << k.f_part_structure.to_string() << ")^"
         << k.f_part_multiplicity << "\n";
    text << "F-part: " << k.f_part_structure.to_string() << " ("
         << (k.f_part_structure.is_trivial() ? "trivial" : "nontrivial") << ")\n";
    if (const auto pp = as_prime_power(*group.n)) {
      const FGroupResult F = descriptor ? f_group(*descriptor, pp->prime, pp->exponent)
                                        : f_group(a2, a3, rho, pp->prime, pp->exponent);
      out.data["f_group"] = f_group_to_json(F);
    }
  } else {
    text << "K0^C* = Z[t,1/t] + (" << k.f_part_structure.to_string() << ")^" << k.f_part_multiplicity << "\n";
    text << "f-part free rank per summand: " << k.f_part_structure.free_rank() << "\n";
  }
  out.text = text.str();
  return out;
}

Output fixed_points_command(const std::vector<std::string>& weight_texts, std::uint64_t n, std::uint64_t bound) {
  const WeightVector w(parse_weights(weight_texts));
  if (n < 1 || bound < 1) throw InvalidRange("n and N must be >= 1");
  const FixedPointReport report = verify_fixed_point_prop(w, bound);
  Output out;
  out.data = fixed_point_report_to_json(report);
  out.data["hyperbolic"] = is_hyperbolic(w);
  out.data["torus_fixed"] = torus_fixed_indices(w);
  out.data["n"] = n;
  out.data["mu_fixed"] = mu_fixed_indices(w, n);
  out.data["coprime"] = coprime_predicate(w, n);
  std::ostringstream text;
  text << "hyperbolic: " << (is_hyperbolic(w) ? "yes" : "no") << "\n";
  text << "verify up to N=" << bound << ": " << (report.passed() ? "pass" : "fail") << " (" << report.checked
       << " checked)\n";
  out.text = text.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant K_0 of Koras-Russell threefolds and supporting checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--report", globals.report_path, "Write the output to this file instead of stdout");
  app.add_option("--parallelism", globals.parallelism, "Worker threads for verify (0 = auto)");

  std::uint64_t cyc_n = 0;
  auto* cyc = app.add_subcommand("cyclotomic", "Print the n-th cyclotomic polynomial");
  cyc->add_option("n", cyc_n)->required();

  std::vector<std::string> res_polys;
  auto* res = app.add_subcommand("resultant", "Resultant of two integer polynomials");
  res->add_option("polys", res_polys)->required()->expected(2);

  std::vector<std::string> quot_gens;
  std::vector<std::uint64_t> quot_pair;
  auto* quot = app.add_subcommand("quotient", "Abelian group structure of Z[t]/(g1, ..., gk)");
  quot->add_option("generators", quot_gens);
  quot->add_option("--pair", quot_pair, "Use (Phi_m, Phi_n)")->expected(2);

  std::uint64_t bf_a2 = 0, bf_a3 = 0;
  auto* bf = app.add_subcommand("bell-f", "The polynomial f(t) for (alpha2, alpha3)");
  bf->add_option("alpha2", bf_a2)->required();
  bf->add_option("alpha3", bf_a3)->required();

  std::uint64_t k_a2 = 0, k_a3 = 0, k_rho = 0, k_alpha1 = 1;
  std::optional<std::uint64_t> k_r;
  std::string k_group;
  auto* k0 = app.add_subcommand("k0", "Equivariant K_0 for torus, mu:n or mu:p^n");
  k0->add_option("alpha2", k_a2)->required();
  k0->add_option("alpha3", k_a3)->required();
  k0->add_option("rho", k_rho)->required();
  k0->add_option("group", k_group)->required();
  k0->add_option("--r", k_r, "x-degree r; enables the trivial-threefold branch when epsilon = 0");
  k0->add_option("--alpha1", k_alpha1, "alpha1 for the normal-form descriptor");

  std::vector<std::string> fp_weights;
  std::uint64_t fp_n = 1, fp_bound = 100;
  auto* fp = app.add_subcommand("fixed-points", "Fixed coordinates of a diagonal action with given weights");
  fp->add_option("weights", fp_weights, "Weights, space or comma separated")->required()->allow_extra_args();
  fp->add_option("-n", fp_n, "Order of mu_n to report");
  fp->add_option("-N,--max-n", fp_bound, "Verify the coprime criterion for 2 <= n <= N");

  VerifyConfig config;
  std::vector<std::string> only_suites;
  std::string inject;
  auto* ver = app.add_subcommand("verify", "Run every verification suite and emit a report");
  ver->add_option("--max-cyclotomic", config.max_cyclotomic);
  ver->add_option("--max-mn", config.max_mn);
  ver->add_option("--max-prime", config.max_prime);
  ver->add_option("--grid-max-n", config.grid_max_n);
  ver->add_option("--grid-max-index", config.grid_max_index);
  ver->add_option("--grid-max-factors", config.grid_max_factors);
  ver->add_option("--max-f-alpha", config.max_f_alpha);
  ver->add_option("--max-alpha", config.max_alpha);
  ver->add_option("--max-n", config.max_n);
  ver->add_option("--rho", config.rhos);
  ver->add_option("--weight-samples", config.weight_samples);
  ver->add_option("--weight-max-n", config.weight_max_n);
  ver->add_option("--snf-samples", config.snf_samples);
  ver->add_option("--seed", config.seed);
  ver->add_option("--suite", only_suites, "Run only these suites");
  ver->add_option("--inject-fault", inject, "Test hook: falsify the first check of a suite")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  globals.format = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;

  try {
    if (*cyc) {
      emit(cyclotomic_command(cyc_n), globals);
    } else if (*res) {
      emit(resultant_command(res_polys), globals);
    } else if (*quot) {
      emit(quotient_command(quot_gens, quot_pair), globals);
    } else if (*bf) {
      emit(bell_f_command(bf_a2, bf_a3), globals);
    } else if (*k0) {
      emit(k0_command(k_a2, k_a3, k_rho, k_group, k_r, k_alpha1), globals);
    } else if (*fp) {
      emit(fixed_points_command(fp_weights, fp_n, fp_bound), globals);
    } else if (*ver) {
      config.parallelism = globals.parallelism;
      if (!inject.empty()) config.inject_fault = inject;
      for (const auto& s : only_suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
          throw Error("unknown suite '" + s + "'");
      const auto start = std::chrono::steady_clock::now();
      VerifyReport report{config, {}};
      for (const auto& name : suite_names()) {
        if (!only_suites.empty() && std::find(only_suites.begin(), only_suites.end(), name) == only_suites.end())
          continue;
        const auto t0 = std::chrono::steady_clock::now();
        report.suites.push_back(run_suite(name, config));
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        std::cerr << (report.suites.back().ok() ? "pass " : "FAIL ") << name << " (" << dt.count() << " s)\n";
      }
      const std::chrono::duration<double> total = std::chrono::steady_clock::now() - start;
      std::cerr << "verify finished in " << total.count() << " s\n";
      emit(Output{report_to_json(report), report_to_text(report)}, globals);
      return report.ok() ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
