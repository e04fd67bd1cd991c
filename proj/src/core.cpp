#include "stablecore/core.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "stablecore/errors.hpp"

namespace stablecore {

std::vector<Monomial> CoreResult::extended_generators() const {
  if (!trimmed_from) return generators;
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& m : generators) out.push_back(m.embed(*trimmed_from));
  return out;
}

CoreResult core(const StableIdeal2& ideal) {
  if (ideal.row(1) != ideal.dim()) throw PreconditionError("core: X_1 X_d must lie in the ideal (trim first)");
  if (!has_Gd(ideal).holds) {
    throw GdFailure("core: X_{g-1} X_d is not in the ideal, so G_d fails and the formula does not apply");
  }
  const int g = ideal.height();
  const auto gens = ideal.generators();
  CoreResult out{ideal, g, {}, std::nullopt, g == 1};
  for (const auto& m : enumerate_degree(ideal.dim(), g + 1)) {
    if (std::any_of(gens.begin(), gens.end(), [&](const Monomial& q) { return q.divides(m); })) {
      out.generators.push_back(m);
    }
  }
  std::reverse(out.generators.begin(), out.generators.end());
  return out;
}

CoreResult core_with_trim(const StableIdeal2& ideal) {
  const auto t = trim(ideal);
  CoreResult out = core(t.ideal);
  if (t.changed()) out.trimmed_from = t.original_dim;
  return out;
}

bool is_exchange_closed(const std::vector<Monomial>& monomials) {
  std::unordered_set<Monomial> set(monomials.begin(), monomials.end());
  for (const auto& m : monomials) {
    for (int j = 2; j <= m.dim(); ++j) {
      if (m.exponent(j) == 0) continue;
      for (int i = 1; i < j; ++i)
        if (!set.count(m.times_variable(j, -1).times_variable(i, 1))) return false;
    }
  }
  return true;
}

bool core_strong_stability_check(const CoreResult& c) { return is_exchange_closed(c.generators); }

NorthcottMatrix::NorthcottMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw PreconditionError("NorthcottMatrix: dimension must be >= 1");
  const Rational half(1, 2);
  entries_.reserve(static_cast<std::size_t>(dim * dim));
  for (int i = 1; i <= dim; ++i) {
    for (int j = 1; j <= dim; ++j) {
      HomogeneousPoly a(dim, 1);
      const int lo = j - (i - 1);
      const int hi = j + (i - 1);
      if (lo >= 1) a.add_term(Monomial::variable(dim, lo), half);
      if (hi <= dim) a.add_term(Monomial::variable(dim, hi), half);
      entries_.push_back(std::move(a));
    }
  }
}

HomogeneousPoly NorthcottMatrix::row_times_variables(int i) const {
  HomogeneousPoly sum(dim_, 2);
  for (int j = 1; j <= dim_; ++j) sum += (*this)(i, j).times(Monomial::variable(dim_, j));
  return sum;
}

HomogeneousPoly NorthcottMatrix::determinant() const {
  // det of the minor on rows (d - |mask|)..d and the columns in mask.
  std::unordered_map<unsigned, HomogeneousPoly> memo;
  auto det = [&](auto&& self, unsigned mask) -> HomogeneousPoly {
    const int size = std::popcount(mask);
    if (size == 0) return HomogeneousPoly(Monomial(dim_));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int row = dim_ - size + 1;
    HomogeneousPoly sum(dim_, size);
    int sign_pos = 0;
    for (int c = 0; c < dim_; ++c) {
      if (!(mask & (1u << c))) continue;
      const auto& entry = (*this)(row, c + 1);
      if (!entry.is_zero()) {
        auto term = entry * self(self, mask & ~(1u << c));
        if (sign_pos % 2) term = term.scaled(Rational(-1));
        sum += term;
      }
      ++sign_pos;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return det(det, (1u << dim_) - 1);
}

std::vector<MembershipCheck> lemma_in_soc_check(int dim) {
  const auto j = diagonal_reduction_of_square(dim).presentation();
  std::vector<MembershipCheck> out;
  for (int h = 1; h <= dim; ++h) {
    HomogeneousPoly p(Monomial(dim).times_variable(1, h).times_variable(dim - h + 1, 1));
    auto m = contains(j, p);
    out.push_back({p, m.member, m.certificate.value_or(Certificate{})});
  }
  return out;
}

std::vector<SocLemmaCheck> lemma_soc_lem_check(int dim) {
  if (dim < 2) throw PreconditionError("lemma_soc_lem_check: need d >= 2");
  const auto full = diagonal_reduction_of_square(dim);
  const auto smaller = diagonal_reduction_of_square(dim - 1);
  const auto j = full.presentation();
  const Monomial x1 = Monomial::variable(dim, 1);
  const Monomial x1xd = Monomial::product_of(dim, {1, dim});

  std::vector<SocLemmaCheck> out;
  for (int i = 1; i <= dim - 1; ++i) {
    const auto gi = smaller.gens[static_cast<std::size_t>(i - 1)].embed(dim);
    const auto p = gi.times(x1);
    auto m = contains(j, p);
    const auto closed = full.gens[static_cast<std::size_t>(i - 1)].times(x1) -
                        HomogeneousPoly(x1xd * Monomial::variable(dim, dim - i + 1));
    out.push_back({i, {p, m.member, m.certificate.value_or(Certificate{})}, closed == p});
  }
  return out;
}

SocleReport socle_check(int dim) {
  const auto j = diagonal_reduction_of_square(dim).presentation();
  const HomogeneousPoly top(Monomial(dim).times_variable(1, dim));
  SocleReport out;
  out.basis = socle_basis(j, dim);
  out.matches = out.basis.size() == 1 && out.basis.front() == top;
  out.top_power_outside = !contains(j, top).member;
  return out;
}

int northcott_sign(int dim) { return (dim % 4 == 0 || dim % 4 == 1) ? 0 : 1; }

NorthcottReport northcott_check(int dim) {
  if (dim < 2) throw PreconditionError("northcott_check: need d >= 2");
  const auto red = diagonal_reduction_of_square(dim);
  const auto j = red.presentation();
  const NorthcottMatrix a(dim);

  NorthcottReport out;
  out.rows_match = true;
  for (int i = 1; i <= dim; ++i)
    if (a.row_times_variables(i) != red.gens[static_cast<std::size_t>(i - 1)]) out.rows_match = false;

  out.det = a.determinant();
  out.c = northcott_sign(dim);
  const HomogeneousPoly x1d(Monomial(dim).times_variable(1, dim));
  const HomogeneousPoly xdd(Monomial(dim).times_variable(dim, dim));
  out.eq3 = contains(j, out.det - x1d).member;
  out.eq4 = contains(j, x1d - xdd.scaled(Rational(out.c == 0 ? 1 : -1))).member;

  const auto with_det = j.plus({out.det});
  const auto colon = colon_component(j, variables(dim), dim);
  out.colon_match = spans_equal(*graded_component(with_det, dim), colon);
  return out;
}

HomogeneousPoly apply_coordinate_change(const CoordinateChange& a, const HomogeneousPoly& p) {
  const int d = p.dim();
  if (a.rows() != d || a.cols() != d) throw DimensionMismatch("coordinate change: matrix size");
  std::vector<HomogeneousPoly> images;
  for (int j = 1; j <= d; ++j) {
    HomogeneousPoly form(d, 1);
    for (int i = 1; i <= d; ++i) form.add_term(Monomial::variable(d, i), a(i - 1, j - 1));
    images.push_back(std::move(form));
  }
  HomogeneousPoly out(d, p.degree());
  for (const auto& [m, c] : p.terms()) {
    HomogeneousPoly term(Monomial(d), c);
    for (int j = 1; j <= d; ++j)
      for (int e = 0; e < m.exponent(j); ++e) term = term * images[static_cast<std::size_t>(j - 1)];
    out += term;
  }
  return out;
}

CoordinateChange random_unipotent(int dim, std::mt19937_64& rng) {
  CoordinateChange a = CoordinateChange::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    a(i, i) = 1;
    for (int j = i + 1; j < dim; ++j) a(i, j) = static_cast<int>(rng() % 5) - 2;
  }
  return a;
}

UpperBoundReport certify_core_upper_bound(const StableIdeal2& ideal,
                                          const std::vector<CoordinateChange>& changes) {
  const auto c = core(ideal);
  const auto j = diagonal_reduction(ideal);
  UpperBoundReport out;
  for (const auto& a : changes) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, i) == 0) throw PreconditionError("coordinate change must be invertible");
      for (Eigen::Index k = 0; k < i; ++k)
        if (a(i, k) != 0) throw PreconditionError("coordinate change must be upper triangular");
    }
    std::vector<HomogeneousPoly> moved;
    for (const auto& f : j.gens) moved.push_back(apply_coordinate_change(a, f));
    const IdealPresentation image(ideal.dim(), std::move(moved));
    const auto comp = graded_component(image, c.g + 1);
    ++out.trials;
    const bool ok = std::all_of(c.generators.begin(), c.generators.end(),
                                [&](const Monomial& m) { return comp->contains(HomogeneousPoly(m)); });
    if (ok) ++out.passed;
  }
  return out;
}

UpperBoundReport certify_core_upper_bound(const StableIdeal2& ideal, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CoordinateChange> changes;
  for (int t = 0; t < trials; ++t) changes.push_back(random_unipotent(ideal.dim(), rng));
  return certify_core_upper_bound(ideal, changes);
}

IdealPresentation core_presentation(const StableIdeal2& ideal) {
  std::vector<HomogeneousPoly> gens;
  const int g = ideal.height();
  for (const auto& q : ideal.generators())
    for (const auto& m : enumerate_degree(ideal.dim(), g - 1)) gens.emplace_back(q * m);
  return IdealPresentation(ideal.dim(), std::move(gens));
}

GradedSpan ideal_meet_power(const StableIdeal2& ideal, int k) {
  std::vector<HomogeneousPoly> power;
  for (const auto& m : enumerate_degree(ideal.dim(), k)) power.emplace_back(m);
  const auto a = graded_component(ideal.presentation(), k);
  const auto b = GradedSpan::of(ideal.dim(), k, std::move(power));
  return intersect(*a, b);
}

LowerBoundReport certify_lower_bound_obstruction(const StableIdeal2& ideal) {
  if (ideal.row(1) != ideal.dim()) throw PreconditionError("lower bound: trim first");
  if (!has_Gd(ideal).holds) throw GdFailure("lower bound: the ideal does not satisfy G_d");
  const int g = ideal.height();
  const int d = ideal.dim();
  if (g < 2) throw PreconditionError("lower bound: the socle argument needs g >= 2");

  LowerBoundReport out;
  const auto reduced = diagonal_reduction_of_square(g);
  const auto socle = socle_check(g);
  out.outside_reduced = socle.matches && socle.top_power_outside;

  const auto j = diagonal_reduction(ideal);
  std::vector<HomogeneousPoly> specialized;
  for (const auto& f : j.gens) {
    auto t = f.truncated(g);
    if (!t.is_zero()) specialized.push_back(t.embed(g));
  }
  out.specialization_matches = specialized == reduced.gens;

  const HomogeneousPoly top(Monomial(d).times_variable(1, g));
  out.outside_full = !contains(j.presentation(), top).member;

  out.degree_match = spans_equal(*graded_component(core_presentation(ideal), g + 1),
                                 ideal_meet_power(ideal, g + 1));
  return out;
}

}  // namespace stablecore
