#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stablecore/graded.hpp"
#include "stablecore/stable_ideal.hpp"

namespace stablecore {

/// The diagonal reduction J = (f_1, ..., f_d) of a degree-two strongly stable
/// ideal, f_n = sum_{j=1}^{beta_n} X_j X_{j+n-1}: the sum of the tableau cells
/// on the n-th diagonal.
struct DiagonalReduction {
  int dim = 0;
  std::vector<int> betas;
  std::vector<HomogeneousPoly> gens;

  IdealPresentation presentation() const { return IdealPresentation(dim, gens); }
};

/// Requires rows[0] == dim.
DiagonalReduction diagonal_reduction(const StableIdeal2& ideal);

/// Diagonal reduction of m^2 in `dim` variables.
DiagonalReduction diagonal_reduction_of_square(int dim);

/// The ordered set S = (M_1, M_2, ...) produced by the stepping algorithm,
/// with each element's stratum h (its smallest variable index) and its
/// 1-based position j within that stratum.
class OrderedS {
 public:
  OrderedS(int dim, int height, std::vector<Monomial> sequence);

  int dim() const { return dim_; }
  int height() const { return height_; }
  const std::vector<Monomial>& sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }

  /// (h, j) of an element, or nullopt if m is not in S.
  std::optional<std::pair<int, int>> locate(const Monomial& m) const;
  /// Position of m in the sequence (0-based), or nullopt.
  std::optional<std::size_t> position(const Monomial& m) const;

  /// Subsequence S_h in algorithm order.
  std::vector<Monomial> stratum(int h) const;

 private:
  int dim_;
  int height_;
  std::vector<Monomial> sequence_;
  std::unordered_map<Monomial, std::size_t> position_;
  std::vector<std::pair<int, int>> labels_;
};

/// Runs the stepping algorithm from M_1 = X_1 X_d until X_1^2 is reached.
/// Depends only on (dim, height). Throws CertificationFailure on a repeat, an
/// uncovered branch or when the iteration cap is exceeded.
OrderedS run_algorithm(int dim, int height);
OrderedS run_algorithm(const StableIdeal2& ideal);

/// T_h: monomials of degree h+1 whose smallest variable index is h, ascending revlex.
std::vector<Monomial> t_stratum(int dim, int h);

struct StrataComparison {
  bool equal = true;
  /// First mismatch: stratum and 0-based position within it.
  int h = 0;
  std::size_t position = 0;
};

/// Checks that each S_h coincides with T_h as an ordered set.
StrataComparison verify_Sh_equals_Th(const OrderedS& s);

/// Closed form for the element of S_{h-k} immediately following M in S,
/// checked against a linear scan. Requires M in S_h and 1 <= k <= h - 1.
Monomial successor_in_lower_stratum(const OrderedS& s, const Monomial& m, int k);

/// Every monomial of (X_1, ..., X_g) m^g is divisible by an element of S.
bool s_covers_products(const OrderedS& s);

struct MembershipRecord {
  Monomial monomial;
  Certificate certificate;
};

struct ImInJReport {
  int degree = 0;
  std::vector<MembershipRecord> records;
};

/// Membership certificates in J for every degree-(g+1) monomial of I m^{g-1}.
/// Requires G_d; throws CertificationFailure on any non-member.
ImInJReport certify_Im_in_J(const StableIdeal2& ideal);

/// Every degree-(g+1) monomial that lies in I and is divisible by an element of
/// S has a certificate in J. Returns the number of monomials checked.
std::size_t certify_IS_in_J(const StableIdeal2& ideal);

struct ReductionReport {
  bool reduction_holds = false;
  int witness_degree = 0;
  /// Smallest r with I^{r+1} = J I^r found by descending search from g-1.
  int reduction_number = 0;
  std::size_t rank_power = 0;
  std::size_t rank_product = 0;
  std::string reasoning;
};

/// Distinct monomials of I^n (degree 2n).
std::vector<Monomial> power_monomials(const StableIdeal2& ideal, int n);

/// Presentations of I^{r+1} and J I^r, both generated in degree 2r+2.
IdealPresentation power_presentation(const StableIdeal2& ideal, int n);
IdealPresentation product_presentation(const DiagonalReduction& j, const StableIdeal2& ideal, int r);

ReductionReport certify_reduction(const StableIdeal2& ideal);

}  // namespace stablecore
