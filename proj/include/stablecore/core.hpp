#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "stablecore/diagonal.hpp"
#include "stablecore/echelon.hpp"
#include "stablecore/graded.hpp"
#include "stablecore/stable_ideal.hpp"

namespace stablecore {

/// core(I) = I m^{g-1} for a degree-two strongly stable ideal with G_d.
struct CoreResult {
  /// The ideal the formula was applied to (after trimming, if any).
  StableIdeal2 source;
  int g = 0;
  /// Minimal generators: every degree-(g+1) monomial with a quadratic divisor
  /// in the ideal, descending revlex, in the dimension of `source`.
  std::vector<Monomial> generators;
  /// Ambient dimension before trimming, when trimming dropped variables.
  std::optional<int> trimmed_from;
  /// g = 1: the formula's value, outside the range the obstruction argument covers.
  bool extrapolated = false;

  /// Generators extended to the original ambient ring.
  std::vector<Monomial> extended_generators() const;
};

/// Requires rows[0] == dim and G_d (GdFailure otherwise).
CoreResult core(const StableIdeal2& ideal);

/// Trims first, then applies the formula; records the original dimension.
CoreResult core_with_trim(const StableIdeal2& ideal);

/// Closure of a monomial list under m -> m X_i / X_j (i < j, X_j | m).
bool is_exchange_closed(const std::vector<Monomial>& monomials);
bool core_strong_stability_check(const CoreResult& c);

/// The d x d matrix A of linear forms with A (X_1, ..., X_d)^T = (f_1, ..., f_d)^T
/// for the diagonal reduction of m^2: a_ij = (X_{j-i+1} + X_{j+i-1}) / 2 with
/// out-of-range variables read as zero.
class NorthcottMatrix {
 public:
  explicit NorthcottMatrix(int dim);

  int dim() const { return dim_; }
  /// 1-based entry access.
  const HomogeneousPoly& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>((i - 1) * dim_ + (j - 1))];
  }

  /// sum_j a_ij X_j.
  HomogeneousPoly row_times_variables(int i) const;

  /// Cofactor expansion along rows, memoized on the remaining column set.
  HomogeneousPoly determinant() const;

 private:
  int dim_;
  std::vector<HomogeneousPoly> entries_;
};

struct MembershipCheck {
  HomogeneousPoly poly;
  bool member = false;
  Certificate certificate;
};

/// X_1^h X_{d-h+1} in J for h = 1..d, J the diagonal reduction of m^2.
std::vector<MembershipCheck> lemma_in_soc_check(int dim);

struct SocLemmaCheck {
  int i = 0;
  MembershipCheck membership;
  /// X_1 g_i == X_1 f_i - (X_1 X_d) X_{d-i+1} as polynomials.
  bool closed_form = false;
};

/// X_1 g_i in J for each generator g_i of the diagonal reduction of the
/// square of (X_1, ..., X_{d-1}). Requires d >= 2.
std::vector<SocLemmaCheck> lemma_soc_lem_check(int dim);

struct SocleReport {
  std::vector<HomogeneousPoly> basis;
  bool matches = false;
  bool top_power_outside = false;
};

/// Degree-d socle of R/J for J the diagonal reduction of m^2; expected [X_1^d].
SocleReport socle_check(int dim);

struct NorthcottReport {
  HomogeneousPoly det;
  bool rows_match = false;
  /// det(A) - X_1^d in J.
  bool eq3 = false;
  /// X_1^d - (-1)^c X_d^d in J.
  bool eq4 = false;
  int c = 0;
  /// (det(A)) + J and J : m agree in degree d.
  bool colon_match = false;

  bool all() const { return rows_match && eq3 && eq4 && colon_match; }
};

/// Sign exponent c: 0 for d = 0, 1 mod 4, 1 for d = 2, 3 mod 4.
int northcott_sign(int dim);

NorthcottReport northcott_check(int dim);

/// Upper triangular coordinate change: X_j -> sum_i a_ij X_i.
using CoordinateChange = RationalMatrix;

HomogeneousPoly apply_coordinate_change(const CoordinateChange& a, const HomogeneousPoly& p);

/// Unit-diagonal upper triangular matrix with off-diagonal entries in [-2, 2].
CoordinateChange random_unipotent(int dim, std::mt19937_64& rng);

struct UpperBoundReport {
  int trials = 0;
  int passed = 0;
  bool all() const { return trials == passed; }
};

/// I m^{g-1} lies in phi_A(J) for each supplied coordinate change.
UpperBoundReport certify_core_upper_bound(const StableIdeal2& ideal,
                                          const std::vector<CoordinateChange>& changes);

/// Same with `trials` seeded random unipotent changes.
UpperBoundReport certify_core_upper_bound(const StableIdeal2& ideal, int trials, std::uint64_t seed);

struct LowerBoundReport {
  /// X_1^g outside J', the diagonal reduction of m^2 in g variables (socle argument).
  bool outside_reduced = false;
  /// Setting X_{g+1}, ..., X_d to zero in J's generators yields J'.
  bool specialization_matches = false;
  /// X_1^g outside J itself.
  bool outside_full = false;
  /// I m^{g-1} = I intersect m^{g+1} in degree g+1.
  bool degree_match = false;

  bool all() const { return outside_reduced && specialization_matches && outside_full && degree_match; }
};

/// Requires G_d and g >= 2.
LowerBoundReport certify_lower_bound_obstruction(const StableIdeal2& ideal);

/// I m^{g-1} presented by products of generators with degree-(g-1) monomials.
IdealPresentation core_presentation(const StableIdeal2& ideal);

/// I intersect m^{g+1} in degree g+1, computed as an intersection of spans.
GradedSpan ideal_meet_power(const StableIdeal2& ideal, int k);

}  // namespace stablecore
