#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "stablecore/core.hpp"
#include "stablecore/errors.hpp"

using namespace testing;

TEST_SUITE("core") {
  TEST_CASE("core of the (6,6,6,4) ideal") {
    const auto ideal = StableIdeal2(6, kExampleRows);
    const auto c = core(ideal);
    CHECK(c.g == 4);
    CHECK_FALSE(c.extrapolated);
    CHECK(c.generators.size() == oracle::count_in_ideal(kExampleRows, 6, 5));
    CHECK(c.generators.size() == 241);
    for (const auto& m : c.generators) CHECK(oracle::in_ideal(kExampleRows, m.exponents()));
    const auto has = [&](const Monomial& m) {
      return std::find(c.generators.begin(), c.generators.end(), m) != c.generators.end();
    };
    CHECK(has(X(6, {1, 6, 6, 6, 6})));
    CHECK_FALSE(has(X(6, {4, 5, 5, 5, 5})));
    CHECK(component_equal(core_presentation(ideal), IdealPresentation(6, [&] {
                            std::vector<HomogeneousPoly> v;
                            for (const auto& b : ideal_meet_power(ideal, 5).basis()) v.push_back(b);
                            return v;
                          }()),
                          5));
  }

  TEST_CASE("golden core list") {
    std::ifstream in(STABLECORE_GOLDEN_DIR "/core_6664.txt");
    REQUIRE(in);
    std::vector<std::string> want;
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) want.push_back(line);
    CHECK(strings(core(StableIdeal2(6, kExampleRows)).generators) == want);
  }

  TEST_CASE("core of small cases") {
    const auto sq2 = core(StableIdeal2(2, {2, 2}));
    CHECK(strings(sq2.generators) == std::vector<std::string>{"x1^3", "x1^2*x2", "x1*x2^2", "x2^3"});
    const auto row = core(StableIdeal2(4, {4}));
    CHECK(row.extrapolated);
    CHECK(row.generators == StableIdeal2(4, {4}).generators());
    for (int d = 1; d <= 5; ++d) {
      auto all = enumerate_degree(d, d + 1);
      std::reverse(all.begin(), all.end());
      CHECK(core(StableIdeal2(d, std::vector<int>(d, d))).generators == all);
    }
    CHECK_THROWS_AS(core(StableIdeal2(4, {4, 3, 3})), GdFailure);
    CHECK_THROWS_AS(core(StableIdeal2(6, {4, 2})), PreconditionError);
  }

  TEST_CASE("core after trimming extends back") {
    const auto c = core_with_trim(StableIdeal2(6, {4, 4}));
    REQUIRE(c.trimmed_from);
    CHECK(*c.trimmed_from == 6);
    CHECK(c.source.dim() == 4);
    const auto ext = c.extended_generators();
    REQUIRE(ext.size() == c.generators.size());
    for (const auto& m : ext) CHECK(m.dim() == 6);
  }

  TEST_CASE("strong stability of the core") {
    CHECK(core_strong_stability_check(core(StableIdeal2(6, kExampleRows))));
    CHECK(core_strong_stability_check(core(StableIdeal2(3, {3, 3, 3}))));
    auto broken = core(StableIdeal2(6, kExampleRows));
    broken.generators.erase(std::find(broken.generators.begin(), broken.generators.end(), X(6, {1, 1, 1, 1, 1})));
    CHECK_FALSE(core_strong_stability_check(broken));
    CHECK_FALSE(is_exchange_closed({X(2, {2, 2})}));
  }

  TEST_CASE("powers of X_1 against J for m^2") {
    for (int d = 1; d <= 6; ++d) {
      const auto checks = lemma_in_soc_check(d);
      REQUIRE(checks.size() == static_cast<std::size_t>(d));
      for (const auto& c : checks) CHECK(c.member);
    }
    CHECK(lemma_in_soc_check(4)[2].poly == HomogeneousPoly(X(4, {1, 1, 1, 2})));
    CHECK(lemma_in_soc_check(2)[1].poly == HomogeneousPoly(X(2, {1, 1, 1})));
  }

  TEST_CASE("X_1 times the reduction of the smaller square") {
    for (int d = 2; d <= 6; ++d) {
      for (const auto& c : lemma_soc_lem_check(d)) {
        CHECK(c.membership.member);
        CHECK(c.closed_form);
      }
    }
    CHECK_THROWS_AS(lemma_soc_lem_check(1), PreconditionError);
  }

  TEST_CASE("socle of R/J is spanned by X_1^d") {
    for (int d = 1; d <= 5; ++d) {
      const auto s = socle_check(d);
      CHECK(s.matches);
      CHECK(s.top_power_outside);
      REQUIRE(s.basis.size() == 1);
      auto top = Monomial(d);
      for (int i = 0; i < d; ++i) top = top.times_variable(1);
      CHECK(s.basis[0] == HomogeneousPoly(top));
    }
  }

  TEST_CASE("Northcott matrix") {
    const NorthcottMatrix a2(2);
    CHECK(a2.determinant() == poly({{Rational(1, 2), X(2, {1, 1})}, {Rational(-1, 2), X(2, {2, 2})}}));
    CHECK(northcott_sign(2) == 1);
    CHECK(northcott_sign(3) == 1);
    CHECK(northcott_sign(4) == 0);
    CHECK(northcott_sign(5) == 0);
    for (int d = 2; d <= 5; ++d) {
      const auto n = northcott_check(d);
      CHECK(n.all());
      CHECK(n.c == northcott_sign(d));
    }
    const auto j3 = diagonal_reduction_of_square(3).presentation();
    CHECK(contains(j3, sum_of({X(3, {1, 1, 1}), X(3, {3, 3, 3})})).member);
    const auto j4 = diagonal_reduction_of_square(4).presentation();
    CHECK(contains(j4, poly({{Rational(1), X(4, {1, 1, 1, 1})}, {Rational(-1), X(4, {4, 4, 4, 4})}})).member);
  }

  TEST_CASE("property: Northcott rows reproduce the reduction generators") {
    for (int d = 1; d <= 6; ++d) {
      const NorthcottMatrix a(d);
      const auto j = diagonal_reduction_of_square(d);
      for (int i = 1; i <= d; ++i) CHECK(a.row_times_variables(i) == j.gens[static_cast<std::size_t>(i - 1)]);
    }
  }

  TEST_CASE("upper bound through coordinate changes") {
    const auto fig = StableIdeal2(6, kExampleRows);
    const auto id = CoordinateChange::Identity(6, 6);
    CHECK(certify_core_upper_bound(fig, std::vector<CoordinateChange>{id}).all());
    CoordinateChange diag = CoordinateChange::Identity(6, 6);
    for (int i = 0; i < 6; ++i) diag(i, i) = Rational(i + 2);
    CHECK(certify_core_upper_bound(fig, std::vector<CoordinateChange>{diag}).all());
    const auto rep = certify_core_upper_bound(fig, 10, 7);
    CHECK(rep.trials == 10);
    CHECK(rep.all());
  }

  TEST_CASE("random unipotent matrices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_unipotent(5, rng);
      for (int i = 0; i < 5; ++i) {
        CHECK(a(i, i) == 1);
        for (int j = 0; j < i; ++j) CHECK(a(i, j) == 0);
        for (int j = i + 1; j < 5; ++j) CHECK(abs(a(i, j)) <= 2);
      }
    }
  }

  TEST_CASE("coordinate changes are ring maps") {
    std::mt19937_64 rng(13);
    const auto a = random_unipotent(3, rng);
    const HomogeneousPoly p = sum_of({X(3, {1, 2}), X(3, {3, 3})});
    const HomogeneousPoly q = sum_of({X(3, {1}), X(3, {2})});
    CHECK(apply_coordinate_change(a, p * q) == apply_coordinate_change(a, p) * apply_coordinate_change(a, q));
  }

  TEST_CASE("lower bound obstruction") {
    const auto fig = certify_lower_bound_obstruction(StableIdeal2(6, kExampleRows));
    CHECK(fig.all());
    const auto sq3 = certify_lower_bound_obstruction(StableIdeal2(3, {3, 3, 3}));
    CHECK(sq3.all());
    CHECK(certify_lower_bound_obstruction(StableIdeal2(5, {5, 5, 3})).degree_match);
    CHECK_THROWS_AS(certify_lower_bound_obstruction(StableIdeal2(4, {4})), PreconditionError);
    const auto j = diagonal_reduction(StableIdeal2(6, kExampleRows)).presentation();
    CHECK_FALSE(contains(j, HomogeneousPoly(X(6, {1, 1, 1, 1}))).member);
  }
}
