#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "stablecore/echelon.hpp"
#include "stablecore/monomial.hpp"
#include "stablecore/poly.hpp"

namespace stablecore {

/// Monomials of one degree, indexed by their ascending revlex position.
class MonomialBasis {
 public:
  MonomialBasis(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& at(std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t index_of(const Monomial& m) const;

  SparseRow<Rational> to_row(const HomogeneousPoly& p) const;
  HomogeneousPoly to_poly(const SparseRow<Rational>& row) const;

 private:
  int dim_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t> index_;
};

/// One term of a membership certificate: coefficient * multiplier * gens[generator].
struct CertificateTerm {
  std::size_t generator;
  Monomial multiplier;
  Rational coefficient;
};

using Certificate = std::vector<CertificateTerm>;

class GradedSpan;

/// A finitely generated homogeneous ideal, given by generators that may have
/// mixed degrees. Immutable; copies share a memo of computed graded components.
class IdealPresentation {
 public:
  IdealPresentation(int dim, std::vector<HomogeneousPoly> generators);

  int dim() const { return dim_; }
  const std::vector<HomogeneousPoly>& generators() const { return gens_; }

  /// Sum of ideals: concatenated generator list.
  IdealPresentation plus(const std::vector<HomogeneousPoly>& more) const;

 private:
  friend std::shared_ptr<const GradedSpan> graded_component(const IdealPresentation&, int, bool);

  struct Cache;
  int dim_;
  std::vector<HomogeneousPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// The span of a list of degree-k polynomials, held as an exact row echelon
/// basis with columns in ascending revlex order.
class GradedSpan {
 public:
  /// Origin of a spanning row: gens[generator] * multiplier. For spans built
  /// from a bare list of polynomials the multiplier is 1.
  struct Source {
    std::size_t generator;
    Monomial multiplier;
  };

  GradedSpan(int dim, int degree, std::vector<HomogeneousPoly> spanning,
             std::vector<Source> sources, bool track);

  /// Span of the given polynomials (all of degree `degree`).
  static GradedSpan of(int dim, int degree, std::vector<HomogeneousPoly> polys, bool track = false);

  int dim() const { return basis_->dim(); }
  int degree() const { return basis_->degree(); }
  std::size_t rank() const { return echelon_.rank(); }
  std::size_t ambient_size() const { return basis_->size(); }
  const MonomialBasis& monomial_basis() const { return *basis_; }
  const std::vector<HomogeneousPoly>& spanning() const { return spanning_; }
  const std::vector<Source>& sources() const { return sources_; }

  bool contains(const HomogeneousPoly& p) const;

  /// Certificate expressing p in the sources, or nullopt if p is not in the span.
  std::optional<Certificate> certify(const HomogeneousPoly& p) const;

  /// Unique representative of p modulo the span, supported off the pivots.
  HomogeneousPoly normal_form(const HomogeneousPoly& p) const;

  /// Echelon basis as polynomials (pivot = smallest revlex monomial, coefficient 1).
  std::vector<HomogeneousPoly> basis() const;

  bool is_pivot(const Monomial& m) const { return echelon_.is_pivot(basis_->index_of(m)); }

  /// Every basis vector of `other` lies in this span.
  bool contains_span(const GradedSpan& other) const;

 private:
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<HomogeneousPoly> spanning_;
  std::vector<Source> sources_;
  SparseEchelon<Rational> echelon_;
};

/// Degree-k component of the ideal: span of g * m over generators g with
/// deg g <= k and monomials m of degree k - deg g. Memoized per ideal.
std::shared_ptr<const GradedSpan> graded_component(const IdealPresentation& ideal, int k,
                                                   bool track = false);

/// Membership of a homogeneous polynomial, with a certificate on success.
struct Membership {
  bool member = false;
  std::optional<Certificate> certificate;
};

Membership contains(const IdealPresentation& ideal, const HomogeneousPoly& p);

/// Multiply a certificate back out against the ideal's generators.
HomogeneousPoly expand_certificate(const IdealPresentation& ideal, const Certificate& c,
                                   int degree);

bool component_equal(const IdealPresentation& a, const IdealPresentation& b, int k);
bool spans_equal(const GradedSpan& a, const GradedSpan& b);

/// Degree-k part of (ideal : (by)).
GradedSpan colon_component(const IdealPresentation& ideal, const std::vector<Monomial>& by, int k);

/// Intersection of two spans in the same graded piece.
GradedSpan intersect(const GradedSpan& a, const GradedSpan& b);

/// Representatives of a basis of the degree-k socle of R/ideal, reduced modulo
/// the ideal and normalized so the leading revlex coefficient is 1.
std::vector<HomogeneousPoly> socle_basis(const IdealPresentation& ideal, int k);

/// (X_1, ..., X_d) as a list of monomials.
std::vector<Monomial> variables(int dim);

}  // namespace stablecore
