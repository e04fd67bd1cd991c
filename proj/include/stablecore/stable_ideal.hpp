#pragma once

#include <optional>
#include <set>
#include <vector>

#include "stablecore/graded.hpp"
#include "stablecore/monomial.hpp"

namespace stablecore {

/// Raw quadratic monomials, before any stability check.
struct MonomialSet {
  int dim = 0;
  std::vector<Monomial> monomials;
};

/// A strongly stable ideal generated in degree two, stored as its tableau:
/// rows[i-1] is the last column j with X_i X_j in the ideal. Row i holds the
/// cells (i, i), ..., (i, rows[i-1]).
class StableIdeal2 {
 public:
  /// Throws NotStronglyStable unless rows is nonincreasing with rows[i-1] >= i
  /// and rows[0] <= dim.
  StableIdeal2(int dim, std::vector<int> rows);

  int dim() const { return dim_; }
  const std::vector<int>& rows() const { return rows_; }
  int row(int i) const { return rows_[static_cast<std::size_t>(i - 1)]; }

  /// Number of tableau rows; equals the height of the ideal.
  int height() const { return static_cast<int>(rows_.size()); }

  /// Whether X_i X_j (either order) lies in the ideal.
  bool contains(int i, int j) const;
  bool contains(const Monomial& quadratic) const;

  /// Minimal generators X_i X_j, descending revlex.
  std::vector<Monomial> generators() const;

  IdealPresentation presentation() const;

  friend bool operator==(const StableIdeal2&, const StableIdeal2&) = default;

 private:
  int dim_;
  std::vector<int> rows_;
};

StableIdeal2 from_generators(const MonomialSet& gens);
StableIdeal2 borel_closure(const MonomialSet& gens);

inline int height(const StableIdeal2& ideal) { return ideal.height(); }

struct Trimmed {
  StableIdeal2 ideal;
  int original_dim;
  bool changed() const { return ideal.dim() != original_dim; }
};

/// Drop the variables X_{rows[0]+1}, ..., X_d, which no generator uses.
Trimmed trim(const StableIdeal2& ideal);

/// Witness for failure of G_d: the prime p = (X_1, ..., X_s) with
/// mu(I_p) >= s + 1 > ht p.
struct GdWitness {
  int s = 0;
  int t = 0;
  std::vector<Monomial> local_generators;
  /// Minimal generator count of I_p, computed independently by localizing.
  int localized_count = 0;
};

struct GdDiagnostic {
  bool holds = false;
  /// g = 1: accepted by convention, not covered by the criterion.
  bool by_convention = false;
  std::optional<GdWitness> witness;
};

/// G_d test via the tableau: holds iff X_{g-1} X_d is in the ideal.
/// Requires rows[0] == dim.
GdDiagnostic has_Gd(const StableIdeal2& ideal);

/// Number of minimal monomial generators of the localization of the ideal at
/// (X_1, ..., X_s), obtained by setting X_{s+1}, ..., X_d to 1.
int localized_generator_count(const StableIdeal2& ideal, int s);

struct Saturation {
  IdealPresentation ideal;
  /// nu = rows[g-1].
  int nu = 0;
  /// Smallest N with I' * m^N contained in I.
  int power = 0;
  /// I is contained in I' in degrees 2..g+2.
  bool contains_original = false;
};

/// Saturation of a G_d ideal in closed form, with its finite self-checks.
Saturation saturation(const StableIdeal2& ideal);

/// Rank of the exponent matrix of the generators.
int analytic_spread(const StableIdeal2& ideal);

/// All tableaux with rows[0] == dim.
std::vector<StableIdeal2> all_tableaux(int dim);

/// All tableaux with rows[0] == dim that satisfy G_d.
std::vector<StableIdeal2> all_gd_tableaux(int dim);

}  // namespace stablecore
