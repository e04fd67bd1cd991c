#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace stablecore {

/// A monomial X_1^{e_1} ... X_d^{e_d} in a fixed ambient dimension d.
///
/// Variables are numbered 1..d throughout the public interface, matching the
/// usual X_1, ..., X_d notation. The total degree is cached.
class Monomial {
 public:
  Monomial() = default;

  /// The constant monomial 1 in dimension d.
  explicit Monomial(int dim);

  /// Exponents of X_1..X_d in order.
  explicit Monomial(std::vector<int> exponents);

  /// X_i in dimension d.
  static Monomial variable(int dim, int i);

  /// Product of the listed variables (with repetition), e.g. {1, 1, 3} = X_1^2 X_3.
  static Monomial product_of(int dim, std::initializer_list<int> vars);
  static Monomial product_of(int dim, const std::vector<int>& vars);

  int dim() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int exponent(int i) const { return exps_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& exponents() const { return exps_; }

  bool is_one() const { return degree_ == 0; }

  /// Smallest index in the support; 0 for the constant monomial.
  int min_index() const;
  /// Largest index in the support; 0 for the constant monomial.
  int max_index() const;

  /// Support indices with multiplicity, ascending: X_1^2 X_3 -> {1, 1, 3}.
  std::vector<int> sorted_indices() const;

  bool divides(const Monomial& other) const;

  /// this / other; requires other | this.
  Monomial quotient(const Monomial& other) const;

  /// Same exponents viewed in a larger (or equal) ambient dimension.
  Monomial embed(int dim) const;

  /// Multiply by X_i^e (e may be negative as long as the result stays valid).
  Monomial times_variable(int i, int e = 1) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic comparison of two monomials of equal degree:
/// a < b iff at the largest index where the exponents differ, a has the larger
/// exponent.
std::strong_ordering revlex_compare(const Monomial& a, const Monomial& b);

/// Ascending revlex; usable as a std::map comparator within one degree.
struct RevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return revlex_compare(a, b) < 0;
  }
};

/// Descending revlex (leading term first).
struct RevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return revlex_compare(a, b) > 0;
  }
};

/// All monomials of degree k in d variables, ascending in revlex order.
std::vector<Monomial> enumerate_degree(int dim, int k);

/// Parse `x1^2*x3` (or `1`) into a monomial of dimension d.
Monomial parse_monomial(std::string_view text, int dim);

std::size_t binomial(int n, int k);

}  // namespace stablecore

template <>
struct std::hash<stablecore::Monomial> {
  std::size_t operator()(const stablecore::Monomial& m) const noexcept {
    std::size_t h = static_cast<std::size_t>(m.dim());
    for (int e : m.exponents()) h = h * 1000003u ^ static_cast<std::size_t>(e);
    return h;
  }
};
