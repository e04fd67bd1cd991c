#include "stablecore/diagonal.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "stablecore/errors.hpp"

namespace stablecore {

namespace {

void require_assumption(const StableIdeal2& ideal, const char* op) {
  if (ideal.row(1) != ideal.dim()) {
    throw PreconditionError(std::string(op) + ": X_1 X_d must lie in the ideal (trim first)");
  }
}

void require_gd(const StableIdeal2& ideal, const char* op) {
  require_assumption(ideal, op);
  if (!has_Gd(ideal).holds) throw GdFailure(std::string(op) + ": the ideal does not satisfy G_d");
}

}  // namespace

DiagonalReduction diagonal_reduction(const StableIdeal2& ideal) {
  require_assumption(ideal, "diagonal_reduction");
  const int d = ideal.dim();
  DiagonalReduction out;
  out.dim = d;
  for (int n = 1; n <= d; ++n) {
    int beta = 0;
    for (int b = 1; b <= ideal.height(); ++b)
      if (ideal.contains(b, b + n - 1)) beta = b;
    HomogeneousPoly f(d, 2);
    for (int j = 1; j <= beta; ++j) f.add_term(Monomial::product_of(d, {j, j + n - 1}), Rational(1));
    out.betas.push_back(beta);
    out.gens.push_back(std::move(f));
  }
  return out;
}

DiagonalReduction diagonal_reduction_of_square(int dim) {
  return diagonal_reduction(StableIdeal2(dim, std::vector<int>(static_cast<std::size_t>(dim), dim)));
}

OrderedS::OrderedS(int dim, int height, std::vector<Monomial> sequence)
    : dim_(dim), height_(height), sequence_(std::move(sequence)) {
  std::vector<int> counts(static_cast<std::size_t>(dim_ + 1), 0);
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    const int h = sequence_[i].min_index();
    if (!position_.emplace(sequence_[i], i).second) {
      throw CertificationFailure("ordered_set", "repeated element " + sequence_[i].to_string());
    }
    labels_.emplace_back(h, ++counts[static_cast<std::size_t>(h)]);
  }
}

std::optional<std::size_t> OrderedS::position(const Monomial& m) const {
  auto it = position_.find(m);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<int, int>> OrderedS::locate(const Monomial& m) const {
  auto p = position(m);
  if (!p) return std::nullopt;
  return labels_[*p];
}

std::vector<Monomial> OrderedS::stratum(int h) const {
  std::vector<Monomial> out;
  for (const auto& m : sequence_)
    if (m.min_index() == h) out.push_back(m);
  return out;
}

OrderedS run_algorithm(int dim, int height) {
  if (height < 1 || height > dim) throw PreconditionError("run_algorithm: need 1 <= g <= d");
  std::size_t cap = 1;
  for (int k = 0; k <= height + 1; ++k) cap += binomial(dim + k - 1, k);

  const Monomial x1_squared = Monomial::product_of(dim, {1, 1});
  std::vector<Monomial> seq{Monomial::product_of(dim, {1, dim})};
  std::unordered_set<Monomial> seen{seq.front()};
  while (!x1_squared.divides(seq.back())) {
    if (seq.size() > cap) {
      throw CertificationFailure("run_algorithm", "iteration cap exceeded at " + seq.back().to_string());
    }
    const auto idx = seq.back().sorted_indices();
    const int h = idx[0];
    const int r = idx[1];
    const bool has_t = idx.size() >= 3;
    const int t = has_t ? idx[2] : 0;
    std::vector<int> sigma(idx.begin() + std::min<std::ptrdiff_t>(3, static_cast<std::ptrdiff_t>(idx.size())), idx.end());

    std::vector<int> next;
    if (h < r && h < height) {
      next = {h + 1, r, r};
      if (has_t) next.push_back(t);
    } else if (h == height && h < r) {
      next = {h, r - 1};
      if (has_t) next.push_back(t);
    } else if (h == r && has_t) {
      next = {h - 1, t - 1};
    } else {
      throw CertificationFailure("run_algorithm", "no branch applies to " + seq.back().to_string());
    }
    next.insert(next.end(), sigma.begin(), sigma.end());
    if (std::any_of(next.begin(), next.end(), [&](int v) { return v < 1 || v > dim; })) {
      throw CertificationFailure("run_algorithm", "step left the variable range at " + seq.back().to_string());
    }
    Monomial m = Monomial::product_of(dim, next);
    if (!seen.insert(m).second) {
      throw CertificationFailure("run_algorithm", "revisited " + m.to_string());
    }
    seq.push_back(std::move(m));
  }

  // X_h^{h+1} can only close its stratum.
  OrderedS s(dim, height, std::move(seq));
  for (int h = 1; h <= height; ++h) {
    const auto stratum = s.stratum(h);
    const Monomial top = Monomial(dim).times_variable(h, h + 1);
    auto it = std::find(stratum.begin(), stratum.end(), top);
    if (it != stratum.end() && it + 1 != stratum.end()) {
      throw CertificationFailure("run_algorithm", top.to_string() + " appears before the end of S_" +
                                                      std::to_string(h));
    }
  }
  return s;
}

OrderedS run_algorithm(const StableIdeal2& ideal) {
  require_assumption(ideal, "run_algorithm");
  return run_algorithm(ideal.dim(), ideal.height());
}

std::vector<Monomial> t_stratum(int dim, int h) {
  std::vector<Monomial> out;
  for (const auto& m : enumerate_degree(dim, h + 1))
    if (m.min_index() == h) out.push_back(m);
  return out;
}

StrataComparison verify_Sh_equals_Th(const OrderedS& s) {
  StrataComparison out;
  for (int h = 1; h <= s.height(); ++h) {
    const auto got = s.stratum(h);
    const auto want = t_stratum(s.dim(), h);
    const std::size_t n = std::min(got.size(), want.size());
    std::size_t i = 0;
    while (i < n && got[i] == want[i]) ++i;
    if (i < n || got.size() != want.size()) return StrataComparison{false, h, i};
  }
  return out;
}

Monomial successor_in_lower_stratum(const OrderedS& s, const Monomial& m, int k) {
  const auto pos = s.position(m);
  if (!pos) throw PreconditionError("successor_in_lower_stratum: " + m.to_string() + " is not in S");
  const int h = m.min_index();
  if (k < 1 || h - k < 1) {
    throw PreconditionError("successor_in_lower_stratum: need 1 <= k <= h - 1, got k = " + std::to_string(k));
  }
  // M = X_h X_{v_1} ... X_{v_h}
  const auto idx = m.sorted_indices();
  const std::vector<int> v(idx.begin() + 1, idx.end());
  std::vector<int> vars{h - k, v[static_cast<std::size_t>(k)] - 1};
  for (std::size_t i = static_cast<std::size_t>(k) + 1; i < v.size(); ++i) vars.push_back(v[i]);
  const Monomial closed = Monomial::product_of(s.dim(), vars);

  const auto& seq = s.sequence();
  for (std::size_t i = *pos + 1; i < seq.size(); ++i) {
    if (seq[i].min_index() == h - k) {
      if (seq[i] != closed) {
        throw CertificationFailure("successor_in_lower_stratum",
                                   "closed form " + closed.to_string() + " but scan found " + seq[i].to_string());
      }
      return closed;
    }
  }
  throw CertificationFailure("successor_in_lower_stratum",
                             "no element of S_" + std::to_string(h - k) + " follows " + m.to_string());
}

bool s_covers_products(const OrderedS& s) {
  const int d = s.dim();
  const int g = s.height();
  for (const auto& m : enumerate_degree(d, g + 1)) {
    if (m.min_index() > g) continue;
    bool covered = std::any_of(s.sequence().begin(), s.sequence().end(),
                               [&](const Monomial& e) { return e.divides(m); });
    if (!covered) return false;
  }
  return true;
}

namespace {

// Degree-(g+1) monomials with a quadratic divisor in the ideal.
std::vector<Monomial> degree_g_plus_one_members(const StableIdeal2& ideal) {
  std::vector<Monomial> out;
  const auto gens = ideal.generators();
  for (const auto& m : enumerate_degree(ideal.dim(), ideal.height() + 1)) {
    if (std::any_of(gens.begin(), gens.end(), [&](const Monomial& q) { return q.divides(m); })) {
      out.push_back(m);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

ImInJReport certify_Im_in_J(const StableIdeal2& ideal) {
  require_gd(ideal, "certify_Im_in_J");
  const auto j = diagonal_reduction(ideal).presentation();
  const int g = ideal.height();

  // Products of the generators with every degree-(g-1) monomial, deduplicated.
  std::set<Monomial, RevlexGreater> products;
  for (const auto& q : ideal.generators())
    for (const auto& m : enumerate_degree(ideal.dim(), g - 1)) products.insert(q * m);

  ImInJReport out;
  out.degree = g + 1;
  for (const auto& p : products) {
    auto membership = contains(j, HomogeneousPoly(p));
    if (!membership.member) {
      throw CertificationFailure("Im_in_J", p.to_string() + " is not in the diagonal reduction");
    }
    out.records.push_back({p, std::move(*membership.certificate)});
  }
  return out;
}

std::size_t certify_IS_in_J(const StableIdeal2& ideal) {
  require_gd(ideal, "certify_IS_in_J");
  const auto s = run_algorithm(ideal);
  const auto j = diagonal_reduction(ideal).presentation();
  const auto comp = graded_component(j, ideal.height() + 1);
  std::size_t checked = 0;
  for (const auto& m : degree_g_plus_one_members(ideal)) {
    const bool in_s = std::any_of(s.sequence().begin(), s.sequence().end(),
                                  [&](const Monomial& e) { return e.divides(m); });
    if (!in_s) continue;
    if (!comp->contains(HomogeneousPoly(m))) {
      throw CertificationFailure("IS_in_J", m.to_string() + " is not in the diagonal reduction");
    }
    ++checked;
  }
  return checked;
}

std::vector<Monomial> power_monomials(const StableIdeal2& ideal, int n) {
  std::set<Monomial, RevlexGreater> current{Monomial(ideal.dim())};
  const auto gens = ideal.generators();
  for (int i = 0; i < n; ++i) {
    std::set<Monomial, RevlexGreater> next;
    for (const auto& a : current)
      for (const auto& q : gens) next.insert(a * q);
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

IdealPresentation power_presentation(const StableIdeal2& ideal, int n) {
  std::vector<HomogeneousPoly> gens;
  for (const auto& m : power_monomials(ideal, n)) gens.emplace_back(m);
  return IdealPresentation(ideal.dim(), std::move(gens));
}

IdealPresentation product_presentation(const DiagonalReduction& j, const StableIdeal2& ideal, int r) {
  std::vector<HomogeneousPoly> gens;
  const auto power = power_monomials(ideal, r);
  for (const auto& f : j.gens)
    for (const auto& m : power) gens.push_back(f.times(m));
  return IdealPresentation(ideal.dim(), std::move(gens));
}

ReductionReport certify_reduction(const StableIdeal2& ideal) {
  require_gd(ideal, "certify_reduction");
  const int g = ideal.height();
  const auto j = diagonal_reduction(ideal);

  auto holds_at = [&](int r, std::size_t* rank_power, std::size_t* rank_product) {
    const auto power = power_presentation(ideal, r + 1);
    const auto product = product_presentation(j, ideal, r);
    const int k = 2 * (r + 1);
    const auto a = graded_component(power, k);
    const auto b = graded_component(product, k);
    if (rank_power) *rank_power = a->rank();
    if (rank_product) *rank_product = b->rank();
    return spans_equal(*a, *b);
  };

  ReductionReport out;
  out.witness_degree = 2 * g;
  out.reduction_holds = holds_at(g - 1, &out.rank_power, &out.rank_product);
  out.reasoning =
      "I^g and J I^(g-1) are both generated in degree 2g, so equality of their degree-2g "
      "components is equality of ideals";
  if (!out.reduction_holds) {
    out.reduction_number = -1;
    return out;
  }
  out.reduction_number = g - 1;
  while (out.reduction_number > 0 && holds_at(out.reduction_number - 1, nullptr, nullptr)) {
    --out.reduction_number;
  }
  return out;
}

}  // namespace stablecore
