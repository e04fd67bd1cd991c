#include "stablecore/graded.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "stablecore/errors.hpp"

namespace stablecore {

namespace {

std::shared_ptr<const MonomialBasis> shared_basis(int dim, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{dim, degree}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(dim, degree);
  return slot;
}

}  // namespace

MonomialBasis::MonomialBasis(int dim, int degree)
    : dim_(dim), degree_(degree), monomials_(enumerate_degree(dim, degree)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) {
    throw DimensionMismatch("monomial " + m.to_string() + " is not of degree " +
                            std::to_string(degree_) + " in dimension " + std::to_string(dim_));
  }
  return it->second;
}

SparseRow<Rational> MonomialBasis::to_row(const HomogeneousPoly& p) const {
  if (p.dim() != dim_ || p.degree() != degree_) {
    throw DimensionMismatch("polynomial " + p.to_string() + " does not live in degree " +
                            std::to_string(degree_) + ", dimension " + std::to_string(dim_));
  }
  SparseRow<Rational> row;
  row.reserve(p.size());
  for (const auto& [m, c] : p.terms()) row.emplace_back(index_of(m), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

HomogeneousPoly MonomialBasis::to_poly(const SparseRow<Rational>& row) const {
  HomogeneousPoly p(dim_, degree_);
  for (const auto& [i, c] : row) p.add_term(monomials_[i], c);
  return p;
}

struct IdealPresentation::Cache {
  std::mutex mutex;
  std::map<std::pair<int, bool>, std::shared_ptr<const GradedSpan>> components;
};

IdealPresentation::IdealPresentation(int dim, std::vector<HomogeneousPoly> generators)
    : dim_(dim), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (g.dim() != dim_) throw DimensionMismatch("ideal generator in the wrong dimension");
    if (g.is_zero()) throw PreconditionError("ideal generators must be nonzero");
  }
}

IdealPresentation IdealPresentation::plus(const std::vector<HomogeneousPoly>& more) const {
  std::vector<HomogeneousPoly> all(gens_);
  all.insert(all.end(), more.begin(), more.end());
  return IdealPresentation(dim_, std::move(all));
}

GradedSpan::GradedSpan(int dim, int degree, std::vector<HomogeneousPoly> spanning,
                       std::vector<Source> sources, bool track)
    : basis_(shared_basis(dim, degree)),
      spanning_(std::move(spanning)),
      sources_(std::move(sources)),
      echelon_(basis_->size(), track) {
  if (sources_.size() != spanning_.size()) throw PreconditionError("GradedSpan: source count mismatch");
  for (std::size_t i = 0; i < spanning_.size(); ++i) echelon_.insert(basis_->to_row(spanning_[i]), i);
}

GradedSpan GradedSpan::of(int dim, int degree, std::vector<HomogeneousPoly> polys, bool track) {
  std::vector<Source> sources;
  sources.reserve(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) sources.push_back({i, Monomial(dim)});
  return GradedSpan(dim, degree, std::move(polys), std::move(sources), track);
}

bool GradedSpan::contains(const HomogeneousPoly& p) const {
  return echelon_.in_span(basis_->to_row(p));
}

std::optional<Certificate> GradedSpan::certify(const HomogeneousPoly& p) const {
  if (!echelon_.tracking()) throw PreconditionError("certify: span was built without tracking");
  SparseRow<Rational> combo;
  if (!echelon_.reduce(basis_->to_row(p), &combo).empty()) return std::nullopt;
  Certificate cert;
  cert.reserve(combo.size());
  for (const auto& [s, c] : combo) cert.push_back({sources_[s].generator, sources_[s].multiplier, c});
  return cert;
}

HomogeneousPoly GradedSpan::normal_form(const HomogeneousPoly& p) const {
  return basis_->to_poly(echelon_.reduce(basis_->to_row(p)));
}

std::vector<HomogeneousPoly> GradedSpan::basis() const {
  std::vector<HomogeneousPoly> out;
  for (const auto& row : echelon_.basis()) out.push_back(basis_->to_poly(row));
  return out;
}

bool GradedSpan::contains_span(const GradedSpan& other) const {
  if (other.dim() != dim() || other.degree() != degree()) {
    throw DimensionMismatch("contains_span: spans live in different graded pieces");
  }
  for (const auto& row : other.echelon_.basis())
    if (!echelon_.in_span(row)) return false;
  return true;
}

std::shared_ptr<const GradedSpan> graded_component(const IdealPresentation& ideal, int k, bool track) {
  if (k < 0) throw PreconditionError("graded_component: negative degree");
  auto& cache = *ideal.cache_;
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.components.find({k, true}); it != cache.components.end()) return it->second;
    if (!track) {
      if (auto it = cache.components.find({k, false}); it != cache.components.end()) return it->second;
    }
  }

  std::vector<HomogeneousPoly> rows;
  std::vector<GradedSpan::Source> sources;
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int rest = k - gens[i].degree();
    if (rest < 0) continue;
    for (const auto& m : enumerate_degree(ideal.dim(), rest)) {
      rows.push_back(gens[i].times(m));
      sources.push_back({i, m});
    }
  }
  auto span = std::make_shared<const GradedSpan>(ideal.dim(), k, std::move(rows), std::move(sources), track);

  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.components.try_emplace({k, track}, span);
  return it->second;
}

Membership contains(const IdealPresentation& ideal, const HomogeneousPoly& p) {
  if (p.dim() != ideal.dim()) throw DimensionMismatch("contains: dimension mismatch");
  auto comp = graded_component(ideal, p.degree(), true);
  auto cert = comp->certify(p);
  Membership out;
  out.member = cert.has_value();
  out.certificate = std::move(cert);
  return out;
}

HomogeneousPoly expand_certificate(const IdealPresentation& ideal, const Certificate& c, int degree) {
  HomogeneousPoly sum(ideal.dim(), degree);
  for (const auto& t : c) {
    if (t.generator >= ideal.generators().size()) throw PreconditionError("certificate: bad generator index");
    sum += ideal.generators()[t.generator].times(t.multiplier).scaled(t.coefficient);
  }
  return sum;
}

bool spans_equal(const GradedSpan& a, const GradedSpan& b) {
  return a.rank() == b.rank() && a.contains_span(b) && b.contains_span(a);
}

bool component_equal(const IdealPresentation& a, const IdealPresentation& b, int k) {
  if (a.dim() != b.dim()) throw DimensionMismatch("component_equal: dimension mismatch");
  return spans_equal(*graded_component(a, k), *graded_component(b, k));
}

GradedSpan colon_component(const IdealPresentation& ideal, const std::vector<Monomial>& by, int k) {
  const auto& source = *shared_basis(ideal.dim(), k);
  const auto n = static_cast<Eigen::Index>(source.size());

  // One block of linear conditions per multiplier b: the coordinates of
  // m*b modulo the ideal, read off the non-pivot columns of degree k + deg b.
  std::vector<std::vector<SparseRow<Rational>>> blocks;
  std::vector<std::map<std::size_t, Eigen::Index>> free_index;
  Eigen::Index total = 0;
  for (const auto& b : by) {
    if (b.dim() != ideal.dim()) throw DimensionMismatch("colon_component: multiplier dimension");
    auto comp = graded_component(ideal, k + b.degree());
    std::map<std::size_t, Eigen::Index> idx;
    for (std::size_t c = 0; c < comp->ambient_size(); ++c)
      if (!comp->is_pivot(comp->monomial_basis().at(c))) idx.emplace(c, total++);
    std::vector<SparseRow<Rational>> images;
    images.reserve(source.size());
    for (const auto& m : source.monomials()) {
      const auto nf = comp->normal_form(HomogeneousPoly(m * b));
      images.push_back(comp->monomial_basis().to_row(nf));
    }
    blocks.push_back(std::move(images));
    free_index.push_back(std::move(idx));
  }

  RationalMatrix conditions = RationalMatrix::Zero(total, n);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (const auto& [col, v] : blocks[bi][static_cast<std::size_t>(c)]) {
        conditions(free_index[bi].at(col), c) = v;
      }
    }
  }
  const RationalMatrix kernel = null_space(conditions);

  std::vector<HomogeneousPoly> polys;
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
    HomogeneousPoly p(ideal.dim(), k);
    for (Eigen::Index i = 0; i < n; ++i)
      if (kernel(i, j) != 0) p.add_term(source.at(static_cast<std::size_t>(i)), kernel(i, j));
    polys.push_back(std::move(p));
  }
  return GradedSpan::of(ideal.dim(), k, std::move(polys));
}

GradedSpan intersect(const GradedSpan& a, const GradedSpan& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) {
    throw DimensionMismatch("intersect: spans live in different graded pieces");
  }
  const auto& mb = a.monomial_basis();
  const auto ba = a.basis();
  const auto bb = b.basis();
  const auto n = static_cast<Eigen::Index>(mb.size());
  const auto ra = static_cast<Eigen::Index>(ba.size());
  const auto rb = static_cast<Eigen::Index>(bb.size());

  // x . A = y . B  <=>  [A^T  -B^T] (x; y) = 0
  RationalMatrix system = RationalMatrix::Zero(n, ra + rb);
  for (Eigen::Index r = 0; r < ra; ++r)
    for (const auto& [m, c] : ba[static_cast<std::size_t>(r)].terms())
      system(static_cast<Eigen::Index>(mb.index_of(m)), r) = c;
  for (Eigen::Index r = 0; r < rb; ++r)
    for (const auto& [m, c] : bb[static_cast<std::size_t>(r)].terms())
      system(static_cast<Eigen::Index>(mb.index_of(m)), ra + r) = -c;

  const RationalMatrix kernel = null_space(system);
  std::vector<HomogeneousPoly> polys;
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
    HomogeneousPoly p(a.dim(), a.degree());
    for (Eigen::Index r = 0; r < ra; ++r)
      if (kernel(r, j) != 0) p += ba[static_cast<std::size_t>(r)].scaled(kernel(r, j));
    if (!p.is_zero()) polys.push_back(std::move(p));
  }
  return GradedSpan::of(a.dim(), a.degree(), std::move(polys));
}

std::vector<HomogeneousPoly> socle_basis(const IdealPresentation& ideal, int k) {
  const auto colon = colon_component(ideal, variables(ideal.dim()), k);
  const auto comp = graded_component(ideal, k);

  std::vector<HomogeneousPoly> reps;
  for (const auto& v : colon.basis()) {
    auto nf = comp->normal_form(v);
    if (!nf.is_zero()) reps.push_back(std::move(nf));
  }
  if (reps.empty()) return {};

  // Re-echelonize with columns in descending revlex so each representative
  // is normalized on its leading term.
  const auto& mb = comp->monomial_basis();
  const auto n = static_cast<Eigen::Index>(mb.size());
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(reps.size()), n);
  for (std::size_t r = 0; r < reps.size(); ++r)
    for (const auto& [mono, c] : reps[r].terms())
      m(static_cast<Eigen::Index>(r), n - 1 - static_cast<Eigen::Index>(mb.index_of(mono))) = c;
  const auto pivots = reduced_row_echelon(m);

  std::vector<HomogeneousPoly> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    HomogeneousPoly p(ideal.dim(), k);
    for (Eigen::Index c = 0; c < n; ++c) {
      if (m(static_cast<Eigen::Index>(r), c) != 0) {
        p.add_term(mb.at(static_cast<std::size_t>(n - 1 - c)), m(static_cast<Eigen::Index>(r), c));
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Monomial> variables(int dim) {
  std::vector<Monomial> out;
  for (int i = 1; i <= dim; ++i) out.push_back(Monomial::variable(dim, i));
  return out;
}

}  // namespace stablecore
