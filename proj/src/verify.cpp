#include "krk0/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "krk0/cyclotomic.hpp"
#include "krk0/determinant.hpp"
#include "krk0/errors.hpp"
#include "krk0/number_theory.hpp"
#include "krk0/parallel.hpp"
#include "krk0/smith.hpp"

namespace krk0 {

namespace {

struct CaseOutcome {
  bool ok = true;
  json detail;           // identifies the case; becomes the counterexample on failure
  std::optional<json> note;  // appended to the suite's notes["cases"]
};

using CaseFn = std::function<CaseOutcome(std::size_t)>;

SuiteResult make_suite(std::string name, int criterion, std::string description) {
  SuiteResult s;
  s.name = std::move(name);
  s.criterion = criterion;
  s.description = std::move(description);
  return s;
}

SuiteResult aggregate(SuiteResult suite, std::size_t count, const CaseFn& fn, const VerifyConfig& config) {
  std::vector<std::size_t> indices(count);
  for (std::size_t i = 0; i < count; ++i) indices[i] = i;
  auto outcomes = parallel_map(
      indices,
      [&](std::size_t i) {
        try {
          return fn(i);
        } catch (const Error& e) {
          return CaseOutcome{false, json{{"case", i}, {"error", e.what()}}, std::nullopt};
        }
      },
      resolve_parallelism(config.parallelism));
  if (config.inject_fault && *config.inject_fault == suite.name && !outcomes.empty()) {
    outcomes.front().ok = !outcomes.front().ok;
    outcomes.front().detail["injected_fault"] = true;
  }
  json notes = json::array();
  for (auto& o : outcomes) {
    ++suite.checked;
    if (o.ok)
      ++suite.passed;
    else if (!suite.counterexample)
      suite.counterexample = o.detail;
    if (o.note) notes.push_back(std::move(*o.note));
  }
  if (!notes.empty()) suite.notes["cases"] = std::move(notes);
  return suite;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (gcd_u64(k, n) == 1) ++count;
  return count;
}

json group_json(const FinAbGroup& g) { return group_to_json(g); }

// ---------------------------------------------------------------- suites

SuiteResult cyclotomic_suite(const VerifyConfig& c) {
  SuiteResult s = make_suite("cyclotomic", 1, "prod_{d|n} Phi_d = t^n - 1, deg Phi_n = phi(n), Phi_p = 1 + ... + t^(p-1)");
  return aggregate(std::move(s), c.max_cyclotomic, [](std::size_t i) {
    const std::uint64_t n = i + 1;
    IntPoly product = IntPoly::constant(1);
    for (auto d : divisors(n)) product *= cyclotomic(d);
    bool ok = product == IntPoly::power_minus_one(n);
    ok = ok && *cyclotomic(n).degree() == totient(n);
    if (is_prime(n)) ok = ok && cyclotomic(n) == IntPoly(std::vector<Integer>(n, Integer(1)));
    return CaseOutcome{ok, json{{"n", n}}, std::nullopt};
  }, c);
}

struct Pair {
  std::uint64_t m, n;
};

std::vector<Pair> cyclotomic_pairs(std::uint64_t max_mn, bool prime_power_ratio) {
  std::vector<Pair> out;
  for (std::uint64_t n = 2; n <= max_mn; ++n)
    for (std::uint64_t m = 1; m < n; ++m) {
      const bool pp = n % m == 0 && as_prime_power(n / m).has_value();
      if (pp == prime_power_ratio) out.push_back({m, n});
    }
  return out;
}

SuiteResult pairs_trivial_suite(const VerifyConfig& c) {
  SuiteResult s = make_suite("cyclotomic_pairs_trivial", 2, "Z[t]/(Phi_m, Phi_n) = 0 when n/m is not a prime power");
  const auto pairs = cyclotomic_pairs(c.max_mn, false);
  return aggregate(std::move(s), pairs.size(), [&](std::size_t i) {
    const auto [m, n] = pairs[i];
    const FinAbGroup g = cyclotomic_pair(m, n);
    return CaseOutcome{g.is_trivial(), json{{"m", m}, {"n", n}, {"group", group_json(g)}}, std::nullopt};
  }, c);
}

SuiteResult pairs_prime_power_suite(const VerifyConfig& c) {
  SuiteResult s = make_suite("cyclotomic_pairs_prime_power", 3,
                "n/m = q^i: nontrivial, invariant factors are powers of q, order = |Res(Phi_m, Phi_n)|");
  const auto pairs = cyclotomic_pairs(c.max_mn, true);
  auto result = aggregate(std::move(s), pairs.size(), [&](std::size_t i) {
    const auto [m, n] = pairs[i];
    const std::uint64_t q = as_prime_power(n / m)->prime;
    const FinAbGroup g = cyclotomic_pair(m, n);
    const Integer res = abs(resultant(cyclotomic(m), cyclotomic(n)));
    bool ok = g.is_finite() && !g.is_trivial() && *group_order(g) == res;
    for (const auto& d : g.torsion()) {
      Integer x = d;
      while (x % q == 0) x /= q;
      ok = ok && x == 1;
    }
    const bool literal = g == FinAbGroup::cyclic(Integer(q));
    // The exact structure Z/q is asserted only where phi(m) = 1.
    if (totient(m) == 1) ok = ok && literal;
    json detail{{"m", m}, {"n", n}, {"q", q}, {"group", group_json(g)}, {"resultant", res.str()}};
    std::optional<json> note;
    if (!literal) note = json{{"m", m}, {"n", n}, {"q", q}, {"group", group_json(g)}, {"equals_Z_mod_q", false}};
    return CaseOutcome{ok, detail, note};
  }, c);
  const auto mismatches = result.notes.contains("cases") ? result.notes["cases"].size() : 0;
  result.notes["literal_Z_mod_q_agreements"] = result.checked - mismatches;
  result.notes["literal_Z_mod_q_disagreements"] = mismatches;
  return result;
}

SuiteResult finite_quotients_suite(const VerifyConfig& c) {
  SuiteResult s = make_suite("finite_quotients", 4,
                "Z[t]/(1 - t^(p^n), prod Phi_(a_i)) has free rank 0 when a_i >= 2 and p does not divide a_i");
  struct Case {
    std::uint64_t p, n;
    std::vector<std::uint64_t> indices;
  };
  std::vector<Case> cases;
  for (std::uint64_t p = 2; p <= c.max_prime; ++p) {
    if (!is_prime(p)) continue;
    std::vector<std::uint64_t> allowed;
    for (std::uint64_t a = 2; a <= c.grid_max_index; ++a)
      if (a % p != 0) allowed.push_back(a);
    // Multisets of size 1..max_factors, as nondecreasing index sequences.
    std::vector<std::vector<std::uint64_t>> multisets;
    std::function<void(std::size_t, std::vector<std::uint64_t>&)> extend = [&](std::size_t from,
                                                                              std::vector<std::uint64_t>& cur) {
      if (!cur.empty()) multisets.push_back(cur);
      if (cur.size() == c.grid_max_factors) return;
      for (std::size_t k = from; k < allowed.size(); ++k) {
        cur.push_back(allowed[k]);
        extend(k, cur);
        cur.pop_back();
      }
    };
    std::vector<std::uint64_t> cur;
    extend(0, cur);
    for (std::uint64_t n = 1; n <= c.grid_max_n; ++n)
      for (const auto& ms : multisets) cases.push_back({p, n, ms});
  }
  return aggregate(std::move(s), cases.size(), [&](std::size_t i) {
    const auto& cs = cases[i];
    IntPoly g = IntPoly::constant(1);
    for (auto a : cs.indices) g *= cyclotomic(a);
    const FinAbGroup grp = quotient_structure({-IntPoly::power_minus_one(ipow(cs.p, static_cast<unsigned>(cs.n))), g});
    return CaseOutcome{grp.is_finite(), json{{"p", cs.p}, {"n", cs.n}, {"indices", cs.indices}, {"group", group_json(grp)}},
                       std::nullopt};
  }, c);
}

std::vector<Pair> coprime_pairs(std::uint64_t max_alpha) {
  std::vector<Pair> out;
  for (std::uint64_t a = 2; a <= max_alpha; ++a)
    for (std::uint64_t b = a + 1; b <= max_alpha; ++b)
      if (gcd_u64(a, b) == 1) out.push_back({a, b});
  return out;
}

SuiteResult bell_f_suite(const VerifyConfig& c) {
  SuiteResult s = make_suite("bell_f_identities", 5,
                "f(t) is an exact quotient of degree (a2-1)(a3-1), equals prod Phi_ab, f(1) = 1, (f, t - 1) = (1)");
  const auto pairs = coprime_pairs(c.max_f_alpha);
  return aggregate(std::move(s), pairs.size(), [&](std::size_t i) {
    const auto [a, b] = pairs[i];
    const IntPoly f = bell_f(a, b);
    bool ok = f * (IntPoly::power_minus_one(a) * IntPoly::power_minus_one(b)) ==
              IntPoly::power_minus_one(a * b) * IntPoly::power_minus_one(1);
    ok = ok && *f.degree() == (a - 1) * (b - 1);
    IntPoly product = IntPoly::constant(1);
    for (auto k : bell_factorization(a, b)) {
      product *= cyclotomic(k);
      ok = ok && prime_factors(k).size() >= 2;
    }
    ok = ok && product == f;
    const Integer at_one = evaluate(f, Integer(1));
    ok = ok && at_one == 1;
    const CompletionCheck completion = completion_check(a, b);
    ok = ok && completion.unit_ideal && completion.trivial();
    return CaseOutcome{ok, json{{"alpha2", a}, {"alpha3", b}, {"degree", *f.degree()}, {"f_at_1", at_one.str()}},
                       std::nullopt};
  }, c);
}

struct GridKey {
  std::uint64_t a, b, p, n;
};

std::vector<GridKey> classification_grid(const VerifyConfig& c) {
  std::vector<GridKey> keys;
  for (const auto& [a, b] : coprime_pairs(c.max_alpha))
    for (std::uint64_t p = 2; p <= c.max_prime; ++p) {
      if (!is_prime(p)) continue;
      for (std::uint64_t n = 1; n <= c.max_n; ++n) keys.push_back({a, b, p, n});
    }
  return keys;
}

// F_(p^n) does not depend on rho, so each grid point is computed once and
// the rho values are checked against the shared result.
std::vector<FGroupResult> classification_results(const std::vector<GridKey>& keys, const VerifyConfig& c) {
  return parallel_map(keys, [](const GridKey& k) { return f_group(k.a, k.b, 2, k.p, k.n); },
                      resolve_parallelism(c.parallelism));
}

SuiteResult classification_suite(const VerifyConfig& c) {
  SuiteResult s = make_suite("f_group_classification", 6,
                "F_(p^n) finite; nontrivial iff p | a2 a3; then divisible by a prime of the complementary factor");
  const auto keys = classification_grid(c);
  const auto results = classification_results(keys, c);
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index[{keys[i].a, keys[i].b, keys[i].p, keys[i].n}] = i;

  const std::size_t per_rho = keys.size();
  auto suite = aggregate(std::move(s), per_rho * c.rhos.size(), [&](std::size_t i) {
    const GridKey& k = keys[i % per_rho];
    const std::uint64_t rho = c.rhos[i / per_rho];
    const FGroupResult& F = results[i % per_rho];
    const FinAbGroup total = power(F.group, rho - 1);
    bool ok = total.is_finite() && F.classification_holds() && F.order_matches_resultant();
    const bool divides = (k.a * k.b) % k.p == 0;
    ok = ok && (!total.is_trivial() == divides);
    if (divides) {
      const std::uint64_t other = k.a % k.p == 0 ? k.b : k.a;
      const Integer order = *group_order(F.group);
      bool witnessed = false;
      for (auto q : prime_factors(other)) witnessed = witnessed || order % q == 0;
      ok = ok && witnessed;
    }
    // Nontriviality propagates up the tower p^n -> p^(n+1).
    if (auto up = index.find({k.a, k.b, k.p, k.n + 1}); up != index.end() && F.nontrivial())
      ok = ok && results[up->second].nontrivial();
    return CaseOutcome{ok,
                       json{{"alpha2", k.a}, {"alpha3", k.b}, {"rho", rho}, {"p", k.p}, {"n", k.n},
                            {"group", group_json(F.group)}, {"resultant_order", F.resultant_order.str()}},
                       std::nullopt};
  }, c);

  // Russell cubic spot values.
  const bool f2 = f_group(2, 3, 2, 2, 1).group == FinAbGroup::cyclic(3);
  const bool f3 = group_order(f_group(2, 3, 2, 3, 1).group) == Integer(4);
  const bool f5 = f_group(2, 3, 2, 5, 1).group.is_trivial();
  const bool f7 = f_group(2, 3, 2, 7, 1).group.is_trivial();
  suite.notes["russell_cubic"] = {{"F_2_is_Z3", f2}, {"F_3_order_4", f3}, {"F_5_trivial", f5}, {"F_7_trivial", f7}};
  ++suite.checked;
  if (f2 && f3 && f5 && f7)
    ++suite.passed;
  else if (!suite.counterexample)
    suite.counterexample = json{{"russell_cubic", suite.notes["russell_cubic"]}};

  // Two code paths to the same group: base change at n = p^k against f_group.
  for (const auto& [a, b] : coprime_pairs(c.max_alpha)) {
    for (std::uint64_t p = 2; p <= c.max_prime; ++p) {
      if (!is_prime(p)) continue;
      for (std::uint64_t e = 1; e <= std::min<std::uint64_t>(c.max_n, 2); ++e) {
        ++suite.checked;
        const auto& F = results[index.at({a, b, p, e})];
        if (k0_mu(a, b, 2, ipow(p, static_cast<unsigned>(e))).f_part_structure == F.group)
          ++suite.passed;
        else if (!suite.counterexample)
          suite.counterexample = json{{"consistency", {{"alpha2", a}, {"alpha3", b}, {"p", p}, {"n", e}}}};
      }
    }
  }
  return suite;
}

SuiteResult restriction_kernel_suite(const VerifyConfig& c) {
  SuiteResult s = make_suite("rational_restriction_kernel", 7,
                "torus f-part has Z-rank (rho-1)(a2-1)(a3-1) > 0 while every F_(p^n) is finite");
  const auto keys = classification_grid(c);
  const auto results = classification_results(keys, c);
  const std::size_t per_rho = keys.size();
  return aggregate(std::move(s), per_rho * c.rhos.size(), [&](std::size_t i) {
    const GridKey& k = keys[i % per_rho];
    const std::uint64_t rho = c.rhos[i / per_rho];
    const std::uint64_t expected = (rho - 1) * (k.a - 1) * (k.b - 1);
    const EquivariantK0 torus = k0_torus(k.a, k.b, rho);
    const FinAbGroup torus_f = torus.f_part_total();
    const FinAbGroup mu_f = power(results[i % per_rho].group, rho - 1);
    const std::uint64_t kernel = rational_restriction_kernel(k.a, k.b, rho, k.p, k.n);
    const bool ok = torus_f.free_rank() == expected && torus_f.torsion().empty() && expected > 0 &&
                    mu_f.free_rank() == 0 && kernel == expected;
    return CaseOutcome{ok,
                       json{{"alpha2", k.a}, {"alpha3", k.b}, {"rho", rho}, {"p", k.p}, {"n", k.n},
                            {"torus_rank", torus_f.free_rank()}, {"kernel_dimension", kernel}},
                       std::nullopt};
  }, c);
}

SuiteResult fixed_point_suite(const VerifyConfig& c) {
  SuiteResult s = make_suite("fixed_points", 8,
                "n >= 2 coprime to all nonzero weights implies equal mu_n- and C^x-fixed coordinates");
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::uint64_t> length(1, c.weight_max_length);
  std::uniform_int_distribution<std::int64_t> weight(-c.weight_bound, c.weight_bound);
  std::vector<WeightVector> samples;
  samples.reserve(c.weight_samples);
  for (std::uint64_t i = 0; i < c.weight_samples; ++i) {
    std::vector<std::int64_t> w(length(rng));
    for (auto& a : w) a = weight(rng);
    samples.emplace_back(std::move(w));
  }
  return aggregate(std::move(s), samples.size(), [&](std::size_t i) {
    const WeightVector& w = samples[i];
    const FixedPointReport report = verify_fixed_point_prop(w, c.weight_max_n);
    bool ok = report.passed();
    const IndexSet torus = torus_fixed_indices(w);
    for (std::uint64_t n = 1; n <= c.weight_max_n && ok; ++n) {
      const IndexSet mu = mu_fixed_indices(w, n);
      ok = std::includes(mu.begin(), mu.end(), torus.begin(), torus.end());
      for (std::uint64_t m = 2; n * m <= c.weight_max_n && ok; ++m) {
        const IndexSet finer = mu_fixed_indices(w, n * m);
        ok = std::includes(mu.begin(), mu.end(), finer.begin(), finer.end());
      }
    }
    return CaseOutcome{ok, fixed_point_report_to_json(report), std::nullopt};
  }, c);
}

IntMatrix random_matrix(std::mt19937_64& rng, const VerifyConfig& c) {
  std::uniform_int_distribution<std::uint64_t> dim(1, c.snf_max_dim);
  std::uniform_int_distribution<std::int64_t> entry(-c.snf_entry_bound, c.snf_entry_bound);
  std::uniform_int_distribution<int> shape(0, 3);
  const auto rows = static_cast<Eigen::Index>(dim(rng));
  const int kind = shape(rng);
  const auto cols = kind == 0 ? rows : static_cast<Eigen::Index>(dim(rng));
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Integer(entry(rng));
  // Some samples get a repeated-combination row to exercise rank deficiency.
  if (kind == 1 && rows >= 2) m.row(rows - 1) = m.row(0) * Integer(3) - m.row(1);
  return m;
}

SuiteResult smith_suite(const VerifyConfig& c) {
  SuiteResult s = make_suite("smith_normal_form", 9,
                "U M V = D, det U and det V = +-1, divisibility chain, invariant product = |det M|");
  std::mt19937_64 rng(c.seed ^ 0x5317);
  std::vector<IntMatrix> samples;
  samples.reserve(c.snf_samples);
  for (std::uint64_t i = 0; i < c.snf_samples; ++i) samples.push_back(random_matrix(rng, c));
  return aggregate(std::move(s), samples.size(), [&](std::size_t i) {
    const IntMatrix& m = samples[i];
    const SmithForm<Integer> sf = smith_normal_form(m);
    bool ok = IntMatrix(sf.U * m * sf.V) == sf.D;
    ok = ok && abs(bareiss_determinant<Integer>(sf.U)) == 1 && abs(bareiss_determinant<Integer>(sf.V)) == 1;
    for (Eigen::Index r = 0; r < sf.D.rows() && ok; ++r)
      for (Eigen::Index k = 0; k < sf.D.cols() && ok; ++k) {
        if (r != k) ok = sf.D(r, k) == 0;
        else if (r < sf.rank) ok = sf.D(r, r) > 0 && (r == 0 || sf.D(r, r) % sf.D(r - 1, r - 1) == 0);
        else ok = sf.D(r, r) == 0;
      }
    if (m.rows() == m.cols()) {
      const Integer det = abs(bareiss_determinant<Integer>(m));
      if (det != 0) {
        Integer product = 1;
        for (Eigen::Index r = 0; r < sf.rank; ++r) product *= sf.D(r, r);
        ok = ok && sf.rank == m.rows() && product == det;
      } else {
        ok = ok && sf.rank < m.rows();
      }
    }
    return CaseOutcome{ok, json{{"sample", i}, {"rows", m.rows()}, {"cols", m.cols()}, {"matrix", matrix_to_json(m)}},
                       std::nullopt};
  }, c);
}

using SuiteFn = SuiteResult (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"cyclotomic", cyclotomic_suite},
      {"cyclotomic_pairs_trivial", pairs_trivial_suite},
      {"cyclotomic_pairs_prime_power", pairs_prime_power_suite},
      {"finite_quotients", finite_quotients_suite},
      {"bell_f_identities", bell_f_suite},
      {"f_group_classification", classification_suite},
      {"rational_restriction_kernel", restriction_kernel_suite},
      {"fixed_points", fixed_point_suite},
      {"smith_normal_form", smith_suite},
  };
  return r;
}

}  // namespace

bool VerifyReport::ok() const {
  for (const auto& s : suites)
    if (!s.ok()) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& config) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(config);
  throw InvalidRange("unknown suite '" + name + "'");
}

VerifyReport run_verify(const VerifyConfig& config) {
  VerifyReport report{config, {}};
  for (const auto& [name, fn] : registry()) report.suites.push_back(fn(config));
  return report;
}

json config_to_json(const VerifyConfig& c) {
  return json{{"max_cyclotomic", c.max_cyclotomic},
              {"max_mn", c.max_mn},
              {"max_prime", c.max_prime},
              {"grid_max_n", c.grid_max_n},
              {"grid_max_index", c.grid_max_index},
              {"grid_max_factors", c.grid_max_factors},
              {"max_f_alpha", c.max_f_alpha},
              {"max_alpha", c.max_alpha},
              {"max_n", c.max_n},
              {"rhos", c.rhos},
              {"weight_samples", c.weight_samples},
              {"weight_max_n", c.weight_max_n},
              {"weight_max_length", c.weight_max_length},
              {"weight_bound", c.weight_bound},
              {"snf_samples", c.snf_samples},
              {"snf_max_dim", c.snf_max_dim},
              {"snf_entry_bound", c.snf_entry_bound},
              {"seed", c.seed}};
}

json report_to_json(const VerifyReport& report) {
  json suites = json::array();
  for (const auto& s : report.suites) {
    suites.push_back(json{{"name", s.name},
                          {"criterion", s.criterion},
                          {"description", s.description},
                          {"checked", s.checked},
                          {"passed", s.passed},
                          {"status", s.ok() ? "pass" : "fail"},
                          {"counterexample", s.counterexample ? *s.counterexample : json(nullptr)},
                          {"notes", s.notes}});
  }
  return json{{"status", report.ok() ? "pass" : "fail"}, {"bounds", config_to_json(report.config)}, {"suites", suites}};
}

std::string report_to_text(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& s : report.suites) {
    out << (s.ok() ? "PASS " : "FAIL ") << "[" << s.criterion << "] " << s.name << ": " << s.passed << "/" << s.checked
        << " checks\n";
    if (s.counterexample) out << "  counterexample: " << s.counterexample->dump() << "\n";
  }
  out << (report.ok() ? "verify: pass\n" : "verify: FAIL\n");
  return out.str();
}

}  // namespace krk0
