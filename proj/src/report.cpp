#include "stablecore/report.hpp"

#include <ostream>
#include <sstream>

#include "stablecore/errors.hpp"

namespace stablecore {

StableIdeal2 parse_ideal_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return ideal_from_json(j);
}

StableIdeal2 ideal_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("ideal must be a JSON object");
  if (!j.contains("d") || !j["d"].is_number_integer()) throw ParseError("missing integer field \"d\"");
  const auto d = j["d"].get<long long>();
  if (d < 1 || d > 64) throw ParseError("\"d\" must lie in 1..64");
  const int dim = static_cast<int>(d);

  const bool has_rows = j.contains("rows");
  const bool has_gens = j.contains("generators");
  if (has_rows == has_gens) throw ParseError("give exactly one of \"rows\" or \"generators\"");

  if (has_rows) {
    if (!j["rows"].is_array()) throw ParseError("\"rows\" must be an array");
    std::vector<int> rows;
    for (const auto& v : j["rows"]) {
      if (!v.is_number_integer()) throw ParseError("\"rows\" entries must be integers");
      const auto x = v.get<long long>();
      if (x < 0 || x > 64) throw ParseError("row length out of range");
      rows.push_back(static_cast<int>(x));
    }
    return StableIdeal2(dim, std::move(rows));
  }

  if (!j["generators"].is_array()) throw ParseError("\"generators\" must be an array");
  MonomialSet set{dim, {}};
  for (const auto& v : j["generators"]) {
    if (!v.is_string()) throw ParseError("\"generators\" entries must be strings");
    set.monomials.push_back(parse_monomial(v.get<std::string>(), dim));
  }
  return from_generators(set);
}

Json to_json(const StableIdeal2& ideal) { return Json{{"d", ideal.dim()}, {"rows", ideal.rows()}}; }

Json certificate_to_json(const Certificate& c) {
  Json out = Json::array();
  for (const auto& t : c) {
    out.push_back(Json::array({t.generator, t.multiplier.to_string(), to_fraction_string(t.coefficient)}));
  }
  return out;
}

Json to_json(const GdDiagnostic& diag) {
  Json out{{"holds", diag.holds}, {"convention", diag.by_convention}};
  if (diag.witness) {
    Json gens = Json::array();
    for (const auto& m : diag.witness->local_generators) gens.push_back(m.to_string());
    out["witness"] = Json{{"s", diag.witness->s},
                          {"t", diag.witness->t},
                          {"prime", "(x1..x" + std::to_string(diag.witness->s) + ")"},
                          {"local_generators", gens},
                          {"localized_count", diag.witness->localized_count}};
  }
  return out;
}

Json to_json(const DiagonalReduction& j) {
  Json gens = Json::array();
  for (const auto& f : j.gens) gens.push_back(f.to_string());
  return Json{{"d", j.dim}, {"betas", j.betas}, {"generators", gens}};
}

Json to_json(const ReductionReport& r) {
  return Json{{"reduction_holds", r.reduction_holds},
              {"witness_degree", r.witness_degree},
              {"reduction_number", r.reduction_number},
              {"rank_power", r.rank_power},
              {"rank_product", r.rank_product},
              {"reasoning", r.reasoning}};
}

Json to_json(const SocleReport& s) {
  Json basis = Json::array();
  for (const auto& p : s.basis) basis.push_back(p.to_string());
  return Json{{"basis", basis}, {"matches", s.matches}, {"top_power_outside", s.top_power_outside}};
}

Json to_json(const NorthcottReport& n) {
  return Json{{"det", n.det.to_string()}, {"rows_match", n.rows_match}, {"eq3", n.eq3},
              {"eq4", n.eq4},              {"c", n.c},                   {"colon_match", n.colon_match}};
}

Json to_json(const LowerBoundReport& l) {
  return Json{{"outside_reduced", l.outside_reduced},
              {"specialization_matches", l.specialization_matches},
              {"outside_full", l.outside_full},
              {"degree_match", l.degree_match}};
}

void write_ordered_s_lines(std::ostream& os, const OrderedS& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& m = s.sequence()[i];
    const auto [h, j] = *s.locate(m);
    os << Json{{"index", i + 1}, {"monomial", m.to_string()}, {"h", h}, {"j", j}}.dump() << '\n';
  }
}

std::string render_tableau(const StableIdeal2& ideal) {
  const int d = ideal.dim();
  const int g = ideal.height();
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  const std::size_t w = std::to_string(d).size() + 2;
  os << pad("", w + 1);
  for (int j = 1; j <= d; ++j) os << pad("x" + std::to_string(j), w);
  os << '\n';
  for (int i = 1; i <= g; ++i) {
    os << pad("x" + std::to_string(i), w + 1);
    for (int j = 1; j <= d; ++j) {
      char c = ' ';
      if (j >= i) c = ideal.contains(i, j) ? '#' : '.';
      if (g >= 2 && i == g - 1 && j == d) c = ideal.contains(i, j) ? '@' : '!';
      os << pad(std::string(1, c), w);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace stablecore
