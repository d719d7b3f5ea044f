#include "krk0/io.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "krk0/errors.hpp"

namespace krk0 {

namespace {

constexpr std::size_t kMaxParsedDegree = 1'000'000;

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    skip_spaces();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    std::map<std::size_t, Integer> terms;
    bool first = true;
    while (!at_end()) {
      Integer sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [degree, coeff] = term();
      terms[degree] += sign * coeff;
    }
    std::vector<Integer> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, Integer(0));
    for (auto& [d, c] : terms) coeffs[d] = c;
    return IntPoly(std::move(coeffs));
  }

 private:
  std::pair<std::size_t, Integer> term() {
    if (at_end()) throw ParseError("expected a term", pos_);
    Integer coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      has_coeff = true;
      if (!at_end() && peek() == '*') {
        advance();
        if (at_end() || peek() != 't') throw ParseError("expected 't' after '*'", pos_);
      }
    }
    if (at_end() || peek() != 't') {
      if (!has_coeff) throw ParseError("expected a coefficient or 't'", pos_);
      return {0, coeff};
    }
    advance();
    std::size_t degree = 1;
    if (!at_end() && peek() == '^') {
      advance();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected an exponent", pos_);
      const std::size_t start = pos_;
      const Integer e = number();
      if (e > kMaxParsedDegree) throw ParseError("exponent too large", start);
      degree = static_cast<std::size_t>(e);
    }
    return {degree, coeff};
  }

  Integer number() {
    Integer value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      advance();
    }
    return value;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    ++pos_;
    skip_spaces();
  }
  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t to_size(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw ParseError(std::string("expected a nonnegative integer for ") + what, 0);
  return j.get<std::size_t>();
}

std::string scalar_label(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten(const json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty()) out << path << ",{}\n";
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out << path << ",[]\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
  } else {
    std::string value = j.is_string() ? j.get<std::string>() : j.dump();
    if (value.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      value = quoted + "\"";
    }
    out << path << "," << value << "\n";
  }
}

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t d = p.size(); d-- > 0;) {
    const Integer& c = p.coefficients()[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1 || d == 0) out += mag.str();
    if (d >= 1) out += "t";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

json integer_to_json(const Integer& x) {
  if (auto v = to_int64(x)) return *v;
  return x.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_string()) {
    if (auto v = parse_integer(j.get<std::string>())) return *v;
  }
  throw ParseError("expected an integer or decimal string", 0);
}

json poly_to_json(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of coefficients", 0);
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPoly(std::move(coeffs));
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows", 0);
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ParseError("ragged matrix row " + std::to_string(i), 0);
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = integer_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

json group_to_json(const FinAbGroup& g) {
  json torsion = json::array();
  for (const auto& d : g.torsion()) torsion.push_back(integer_to_json(d));
  return json{{"free_rank", g.free_rank()}, {"torsion", torsion}};
}

FinAbGroup group_from_json(const json& j) {
  std::vector<Integer> torsion;
  for (const auto& d : j.at("torsion")) torsion.push_back(integer_from_json(d));
  return FinAbGroup(to_size(j.at("free_rank"), "free_rank"), std::move(torsion));
}

json descriptor_to_json(const KRDescriptor& d) {
  json j;
  std::visit(
      [&](const auto& kind) {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, NormalForm>) j["kind"] = "normal";
        if constexpr (std::is_same_v<K, FirstKind>) j["kind"] = "first";
        if constexpr (std::is_same_v<K, SecondKind>) j["kind"] = "second";
      },
      d.kind);
  j["alpha"] = {d.alpha1, d.alpha2, d.alpha3};
  j["rho"] = d.rho;
  j["r"] = d.r;
  if (const auto* k = std::get_if<FirstKind>(&d.kind)) {
    j["m"] = k->m;
    j["a"] = k->a;
  }
  if (const auto* k = std::get_if<SecondKind>(&d.kind)) {
    j["l"] = k->l;
    j["b"] = k->b;
    j["a"] = k->a;
  }
  return j;
}

KRDescriptor descriptor_from_json(const json& j) {
  KRDescriptor d;
  const std::string kind = j.value("kind", std::string("normal"));
  const auto& alpha = j.at("alpha");
  if (!alpha.is_array() || alpha.size() != 3) throw ParseError("alpha must have three entries", 0);
  d.alpha1 = to_size(alpha[0], "alpha1");
  d.alpha2 = to_size(alpha[1], "alpha2");
  d.alpha3 = to_size(alpha[2], "alpha3");
  d.rho = to_size(j.at("rho"), "rho");
  d.r = to_size(j.at("r"), "r");
  const std::string a = j.contains("a") ? scalar_label(j["a"]) : "1";
  if (kind == "normal") {
    d.kind = NormalForm{};
  } else if (kind == "first") {
    d.kind = FirstKind{a, to_size(j.at("m"), "m")};
  } else if (kind == "second") {
    d.kind = SecondKind{a, to_size(j.at("l"), "l"), to_size(j.at("b"), "b")};
  } else {
    throw ParseError("unknown descriptor kind '" + kind + "'", 0);
  }
  return d;
}

json presentation_to_json(const QuotientPresentation& p) {
  json extra = json::array();
  for (const auto& g : p.extra) extra.push_back(poly_to_json(g));
  return json{{"modulus", poly_to_json(p.modulus)},
              {"modulus_text", format_poly(p.modulus)},
              {"extra", extra},
              {"rank", p.rank()}};
}

json quotient_report_to_json(const QuotientReport& r) {
  json gens = json::array();
  json gens_text = json::array();
  for (const auto& g : r.presentation.generators) {
    gens.push_back(poly_to_json(g));
    gens_text.push_back(format_poly(g));
  }
  const auto order = group_order(r.group);
  return json{{"generators", gens},
              {"generators_text", gens_text},
              {"modulus", poly_to_json(r.presentation.modulus)},
              {"group", group_to_json(r.group)},
              {"order", order ? order->str() : std::string("infinite")},
              {"resultant_check", r.resultant_check ? integer_to_json(*r.resultant_check) : json(nullptr)}};
}

json k0_to_json(const EquivariantK0& k) {
  json j;
  j["group"] = k.is_torus() ? json("torus") : json("mu:" + std::to_string(*k.mu_order));
  j["inputs"] = {{"alpha2", k.alpha2}, {"alpha3", k.alpha3}, {"rho", k.rho}};
  j["f"] = poly_to_json(k.f);
  j["f_text"] = format_poly(k.f);
  j["free_summand_rank"] = k.is_torus() ? json("infinite") : json(*k.mu_order);
  j["presentation"] = k.f_part_presentation ? presentation_to_json(*k.f_part_presentation) : json(nullptr);
  j["f_part"] = group_to_json(k.f_part_structure);
  j["f_part_multiplicity"] = k.f_part_multiplicity;
  j["f_part_total"] = group_to_json(k.f_part_total());
  const auto total = k.underlying_group();
  j["underlying_group"] = total ? group_to_json(*total) : json(nullptr);
  return j;
}

json f_group_to_json(const FGroupResult& r) {
  const auto order = group_order(r.group);
  return json{{"p", r.p},
              {"n", r.n},
              {"exponent", r.exponent},
              {"threefold_nontrivial", r.threefold_nontrivial},
              {"presentation", presentation_to_json(r.presentation)},
              {"group", group_to_json(r.group)},
              {"order", order ? order->str() : std::string("infinite")},
              {"classification", r.nontrivial() ? "nontrivial" : "trivial"},
              {"predicted", r.predicted_nontrivial ? "nontrivial" : "trivial"},
              {"classification_holds", r.classification_holds()},
              {"resultant_order", integer_to_json(r.resultant_order)},
              {"resultant_agrees", r.order_matches_resultant()}};
}

json fixed_point_report_to_json(const FixedPointReport& r) {
  json j{{"weights", r.weights}, {"N", r.bound}, {"checked", r.checked}, {"status", r.passed() ? "pass" : "fail"}};
  if (r.counterexample)
    j["counterexample"] = {{"n", r.counterexample->n},
                           {"mu_fixed", r.counterexample->mu_fixed},
                           {"torus_fixed", r.counterexample->torus_fixed}};
  else
    j["counterexample"] = nullptr;
  return j;
}

std::string json_to_csv(const json& j) {
  std::ostringstream out;
  out << "path,value\n";
  flatten(j, "", out);
  return out.str();
}

}  // namespace krk0
