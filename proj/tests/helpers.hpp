#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stablecore/monomial.hpp"
#include "stablecore/poly.hpp"

namespace testing {

using namespace stablecore;

inline Monomial X(int dim, std::initializer_list<int> vars) { return Monomial::product_of(dim, vars); }

inline Monomial from_exps(const oracle::Exps& e) { return Monomial(e); }

inline HomogeneousPoly poly(std::initializer_list<std::pair<Rational, Monomial>> terms) {
  HomogeneousPoly p(terms.begin()->second.dim(), terms.begin()->second.degree());
  for (const auto& [c, m] : terms) p.add_term(m, c);
  return p;
}

inline std::vector<std::string> strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

inline const std::vector<int> kExampleRows{6, 6, 6, 4};

}  // namespace testing
