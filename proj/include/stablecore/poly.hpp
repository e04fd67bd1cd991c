#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stablecore/errors.hpp"
#include "stablecore/monomial.hpp"
#include "stablecore/rational.hpp"

namespace stablecore {

/// Homogeneous polynomial of fixed degree over an exact field.
///
/// Terms are kept in canonical form: every key has the polynomial's degree and
/// no stored coefficient is zero. Iteration runs from the leading (largest
/// revlex) term down.
template <typename Scalar>
class BasicHomogeneousPoly {
 public:
  using Terms = std::map<Monomial, Scalar, RevlexGreater>;

  BasicHomogeneousPoly() = default;
  BasicHomogeneousPoly(int dim, int degree) : dim_(dim), degree_(degree) {}

  /// Single term c * m.
  BasicHomogeneousPoly(const Monomial& m, Scalar c = Scalar(1))
      : dim_(m.dim()), degree_(m.degree()) {
    if (c != 0) terms_.emplace(m, std::move(c));
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Leading term under revlex; requires a nonzero polynomial.
  const std::pair<const Monomial, Scalar>& leading() const { return *terms_.begin(); }

  /// Adds c * m; drops the term if the coefficient cancels.
  void add_term(const Monomial& m, const Scalar& c) {
    check_compatible(m);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicHomogeneousPoly& operator+=(const BasicHomogeneousPoly& other) {
    check_same_space(other, "addition");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }

  BasicHomogeneousPoly& operator-=(const BasicHomogeneousPoly& other) {
    check_same_space(other, "subtraction");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }

  BasicHomogeneousPoly scaled(const Scalar& s) const {
    BasicHomogeneousPoly out(dim_, degree_);
    if (s == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
  }

  BasicHomogeneousPoly times(const Monomial& mono) const {
    if (mono.dim() != dim_) throw DimensionMismatch("poly * monomial: dimension mismatch");
    BasicHomogeneousPoly out(dim_, degree_ + mono.degree());
    for (const auto& [m, c] : terms_) out.terms_.emplace(m * mono, c);
    return out;
  }

  /// Substitute zero for every variable with index > keep.
  BasicHomogeneousPoly truncated(int keep) const {
    BasicHomogeneousPoly out(dim_, degree_);
    for (const auto& [m, c] : terms_)
      if (m.max_index() <= keep) out.terms_.emplace(m, c);
    return out;
  }

  /// Same polynomial in a different ambient dimension (only valid if the
  /// support fits).
  BasicHomogeneousPoly embed(int dim) const {
    BasicHomogeneousPoly out(dim, degree_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.embed(dim), c);
    return out;
  }

  /// Renders `x1^2 + x2^2 - 1/2*x1*x3`; "0" for the zero polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Scalar mag = c < 0 ? Scalar(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (m.is_one()) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + "*";
        out += m.to_string();
      }
    }
    return out;
  }

  friend bool operator==(const BasicHomogeneousPoly& a, const BasicHomogeneousPoly& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Monomial& m) const {
    if (m.dim() != dim_ || m.degree() != degree_) {
      throw DimensionMismatch("term " + m.to_string() + " does not match polynomial of degree " +
                              std::to_string(degree_) + " in dimension " + std::to_string(dim_));
    }
  }
  void check_same_space(const BasicHomogeneousPoly& o, const char* op) const {
    if (o.dim_ != dim_ || o.degree_ != degree_) {
      throw DimensionMismatch(std::string("polynomial ") + op + ": degree/dimension mismatch");
    }
  }

  int dim_ = 0;
  int degree_ = 0;
  Terms terms_;
};

template <typename Scalar>
BasicHomogeneousPoly<Scalar> operator+(BasicHomogeneousPoly<Scalar> a,
                                       const BasicHomogeneousPoly<Scalar>& b) {
  a += b;
  return a;
}

template <typename Scalar>
BasicHomogeneousPoly<Scalar> operator-(BasicHomogeneousPoly<Scalar> a,
                                       const BasicHomogeneousPoly<Scalar>& b) {
  a -= b;
  return a;
}

template <typename Scalar>
BasicHomogeneousPoly<Scalar> operator*(const BasicHomogeneousPoly<Scalar>& a,
                                       const BasicHomogeneousPoly<Scalar>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("polynomial product: dimension mismatch");
  BasicHomogeneousPoly<Scalar> out(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

template <typename Scalar>
BasicHomogeneousPoly<Scalar> operator*(const BasicHomogeneousPoly<Scalar>& a, const Monomial& m) {
  return a.times(m);
}

using HomogeneousPoly = BasicHomogeneousPoly<Rational>;

/// Sum of the given monomials, each with coefficient 1.
inline HomogeneousPoly sum_of(const std::vector<Monomial>& monomials) {
  if (monomials.empty()) throw PreconditionError("sum_of: empty list");
  HomogeneousPoly p(monomials.front().dim(), monomials.front().degree());
  for (const auto& m : monomials) p.add_term(m, Rational(1));
  return p;
}

}  // namespace stablecore
