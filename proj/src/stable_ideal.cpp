#include "stablecore/stable_ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "stablecore/echelon.hpp"
#include "stablecore/errors.hpp"

namespace stablecore {

namespace {

std::string cell_name(int i, int j) {
  if (i == j) return "x" + std::to_string(i) + "^2";
  return "x" + std::to_string(std::min(i, j)) + "*x" + std::to_string(std::max(i, j));
}

// First monomial m and exchange (j -> i), i < j, X_j | m, with m*X_i/X_j
// missing from the set.
std::optional<std::pair<Monomial, std::pair<int, int>>> find_exchange_gap(
    const std::unordered_set<Monomial>& set, const std::vector<Monomial>& order) {
  for (const auto& m : order) {
    for (int j = 1; j <= m.dim(); ++j) {
      if (m.exponent(j) == 0) continue;
      for (int i = 1; i < j; ++i) {
        if (!set.count(m.times_variable(j, -1).times_variable(i, 1))) return {{m, {j, i}}};
      }
    }
  }
  return std::nullopt;
}

void check_quadratic(const MonomialSet& gens) {
  if (gens.monomials.empty()) throw EmptyInput();
  if (gens.dim < 1) throw ParseError("dimension must be at least 1");
  for (const auto& m : gens.monomials) {
    if (m.dim() != gens.dim) throw DimensionMismatch("generator " + m.to_string() + " has the wrong dimension");
    if (m.degree() != 2) throw ParseError("generator " + m.to_string() + " is not quadratic");
  }
}

std::vector<int> rows_of(const std::unordered_set<Monomial>& set, int dim) {
  std::vector<int> rows;
  for (int i = 1; i <= dim; ++i) {
    int last = 0;
    for (int j = i; j <= dim; ++j)
      if (set.count(Monomial::product_of(dim, {i, j}))) last = j;
    if (last == 0) break;
    rows.push_back(last);
  }
  return rows;
}

}  // namespace

StableIdeal2::StableIdeal2(int dim, std::vector<int> rows) : dim_(dim), rows_(std::move(rows)) {
  if (dim_ < 1) throw ParseError("dimension must be at least 1");
  if (rows_.empty()) throw EmptyInput();
  if (rows_.size() > static_cast<std::size_t>(dim_)) {
    throw ParseError("tableau has more rows than variables");
  }
  if (rows_.front() > dim_) {
    throw ParseError("row 1 reaches column " + std::to_string(rows_.front()) + " beyond d = " +
                     std::to_string(dim_));
  }
  for (int i = 1; i <= height(); ++i) {
    if (row(i) < i) {
      throw NotStronglyStable("row " + std::to_string(i) + " has length " + std::to_string(row(i)) +
                              " and misses its diagonal cell " + cell_name(i, i));
    }
    if (i > 1 && row(i) > row(i - 1)) {
      throw NotStronglyStable("rows must be nonincreasing: row " + std::to_string(i) + " = " +
                                  std::to_string(row(i)) + " exceeds row " + std::to_string(i - 1) +
                                  " = " + std::to_string(row(i - 1)),
                              cell_name(i, row(i)), i, i - 1);
    }
  }
}

bool StableIdeal2::contains(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > dim_) return false;
  return i <= height() && j <= row(i);
}

bool StableIdeal2::contains(const Monomial& quadratic) const {
  if (quadratic.degree() != 2) throw PreconditionError("contains: expected a quadratic monomial");
  const auto idx = quadratic.sorted_indices();
  return contains(idx[0], idx[1]);
}

std::vector<Monomial> StableIdeal2::generators() const {
  std::vector<Monomial> out;
  for (int i = 1; i <= height(); ++i)
    for (int j = i; j <= row(i); ++j) out.push_back(Monomial::product_of(dim_, {i, j}));
  std::sort(out.begin(), out.end(), RevlexGreater{});
  return out;
}

IdealPresentation StableIdeal2::presentation() const {
  std::vector<HomogeneousPoly> polys;
  for (const auto& m : generators()) polys.emplace_back(m);
  return IdealPresentation(dim_, std::move(polys));
}

StableIdeal2 from_generators(const MonomialSet& gens) {
  check_quadratic(gens);
  std::unordered_set<Monomial> set(gens.monomials.begin(), gens.monomials.end());
  std::vector<Monomial> order(set.begin(), set.end());
  std::sort(order.begin(), order.end(), RevlexGreater{});
  if (auto gap = find_exchange_gap(set, order)) {
    const auto& [m, ex] = *gap;
    const auto missing = m.times_variable(ex.first, -1).times_variable(ex.second, 1);
    throw NotStronglyStable(missing.to_string() + " = " + m.to_string() + " * x" +
                                std::to_string(ex.second) + " / x" + std::to_string(ex.first) +
                                " is missing",
                            m.to_string(), ex.first, ex.second);
  }
  return StableIdeal2(gens.dim, rows_of(set, gens.dim));
}

StableIdeal2 borel_closure(const MonomialSet& gens) {
  check_quadratic(gens);
  std::unordered_set<Monomial> set;
  std::deque<Monomial> queue(gens.monomials.begin(), gens.monomials.end());
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    if (!set.insert(m).second) continue;
    for (int j = 1; j <= m.dim(); ++j) {
      if (m.exponent(j) == 0) continue;
      for (int i = 1; i < j; ++i) queue.push_back(m.times_variable(j, -1).times_variable(i, 1));
    }
  }
  return StableIdeal2(gens.dim, rows_of(set, gens.dim));
}

Trimmed trim(const StableIdeal2& ideal) {
  return Trimmed{StableIdeal2(ideal.rows().front(), ideal.rows()), ideal.dim()};
}

int localized_generator_count(const StableIdeal2& ideal, int s) {
  const int d = ideal.dim();
  std::vector<Monomial> images;
  for (const auto& m : ideal.generators()) {
    std::vector<int> e(m.exponents());
    for (int j = s; j < d; ++j) e[static_cast<std::size_t>(j)] = 0;
    images.emplace_back(std::move(e));
  }
  std::sort(images.begin(), images.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : revlex_compare(a, b) < 0;
  });
  images.erase(std::unique(images.begin(), images.end()), images.end());
  std::vector<Monomial> minimal;
  for (const auto& m : images) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) minimal.push_back(m);
  }
  return static_cast<int>(minimal.size());
}

GdDiagnostic has_Gd(const StableIdeal2& ideal) {
  const int d = ideal.dim();
  const int g = ideal.height();
  if (ideal.row(1) != d) {
    throw PreconditionError("has_Gd: X_1 X_d must lie in the ideal (trim first)");
  }
  GdDiagnostic out;
  if (g == 1) {
    out.holds = true;
    out.by_convention = true;
    return out;
  }
  out.holds = ideal.row(g - 1) == d;
  if (out.holds) return out;

  GdWitness w;
  w.s = ideal.row(g - 1);
  w.t = 1;
  while (ideal.row(w.t) >= w.s + 1) ++w.t;
  for (int i = 1; i < w.t; ++i) w.local_generators.push_back(Monomial::variable(d, i));
  for (int i = w.t; i <= g - 1; ++i) w.local_generators.push_back(Monomial::product_of(d, {i, i}));
  for (int j = g; j <= w.s; ++j) w.local_generators.push_back(Monomial::product_of(d, {g - 1, j}));
  w.local_generators.push_back(Monomial::product_of(d, {g, g}));
  w.localized_count = localized_generator_count(ideal, w.s);
  out.witness = std::move(w);
  return out;
}

Saturation saturation(const StableIdeal2& ideal) {
  if (!has_Gd(ideal).holds) throw PreconditionError("saturation: closed form requires G_d");
  const int d = ideal.dim();
  const int g = ideal.height();
  const int nu = ideal.row(g);

  std::vector<HomogeneousPoly> gens;
  if (nu < d) {
    for (int i = 1; i < g; ++i) gens.emplace_back(Monomial::variable(d, i));
    for (int j = g; j <= nu; ++j) gens.emplace_back(Monomial::product_of(d, {g, j}));
  } else {
    for (int i = 1; i <= g; ++i) gens.emplace_back(Monomial::variable(d, i));
  }
  Saturation out{IdealPresentation(d, std::move(gens)), nu, -1, true};

  const auto original = ideal.presentation();
  for (int k = 2; k <= g + 2; ++k) {
    if (!graded_component(out.ideal, k)->contains_span(*graded_component(original, k))) {
      out.contains_original = false;
    }
  }
  for (int n = 0; n <= g && out.power < 0; ++n) {
    bool all = true;
    for (const auto& gen : out.ideal.generators()) {
      const auto comp = graded_component(original, gen.degree() + n);
      for (const auto& m : enumerate_degree(d, n)) {
        if (!comp->contains(gen.times(m))) {
          all = false;
          break;
        }
      }
      if (!all) break;
    }
    if (all) out.power = n;
  }
  return out;
}

int analytic_spread(const StableIdeal2& ideal) {
  const auto gens = ideal.generators();
  RationalMatrix exps(static_cast<Eigen::Index>(gens.size()), ideal.dim());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (int c = 0; c < ideal.dim(); ++c)
      exps(static_cast<Eigen::Index>(r), c) = gens[r].exponent(c + 1);
  return static_cast<int>(exact_rank(exps));
}

namespace {

void extend_tableaux(int dim, std::vector<int>& rows, std::vector<StableIdeal2>& out) {
  out.emplace_back(dim, rows);
  const int next = static_cast<int>(rows.size()) + 1;
  if (next > dim) return;
  for (int len = next; len <= rows.back(); ++len) {
    rows.push_back(len);
    extend_tableaux(dim, rows, out);
    rows.pop_back();
  }
}

}  // namespace

std::vector<StableIdeal2> all_tableaux(int dim) {
  std::vector<StableIdeal2> out;
  std::vector<int> rows{dim};
  extend_tableaux(dim, rows, out);
  return out;
}

std::vector<StableIdeal2> all_gd_tableaux(int dim) {
  std::vector<StableIdeal2> out;
  for (auto& t : all_tableaux(dim))
    if (has_Gd(t).holds) out.push_back(std::move(t));
  return out;
}

}  // namespace stablecore
