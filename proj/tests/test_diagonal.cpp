#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "stablecore/diagonal.hpp"
#include "stablecore/errors.hpp"
#include "stablecore/report.hpp"

using namespace testing;

TEST_SUITE("diagonal") {
  TEST_CASE("diagonals of the (6,6,6,4) tableau") {
    const int d = 6;
    const auto j = diagonal_reduction(StableIdeal2(d, kExampleRows));
    CHECK(j.betas == std::vector<int>{4, 3, 3, 3, 2, 1});
    const std::vector<HomogeneousPoly> expected{
        sum_of({X(d, {1, 1}), X(d, {2, 2}), X(d, {3, 3}), X(d, {4, 4})}),
        sum_of({X(d, {1, 2}), X(d, {2, 3}), X(d, {3, 4})}),
        sum_of({X(d, {1, 3}), X(d, {2, 4}), X(d, {3, 5})}),
        sum_of({X(d, {1, 4}), X(d, {2, 5}), X(d, {3, 6})}),
        sum_of({X(d, {1, 5}), X(d, {2, 6})}),
        HomogeneousPoly(X(d, {1, 6}))};
    CHECK(j.gens == expected);
    CHECK(j.gens[0].to_string() == "x1^2 + x2^2 + x3^2 + x4^2");
    CHECK(j.gens[1].to_string() == "x1*x2 + x2*x3 + x3*x4");
    CHECK(j.gens[5].to_string() == "x1*x6");
  }

  TEST_CASE("diagonal reduction of m^2 and of a single row") {
    for (int d = 1; d <= 6; ++d) {
      const auto sq = diagonal_reduction_of_square(d);
      CHECK(sq.gens == diagonal_reduction(StableIdeal2(d, std::vector<int>(d, d))).gens);
      for (int n = 1; n <= d; ++n) CHECK(sq.betas[static_cast<std::size_t>(n - 1)] == d - n + 1);
      const auto row = diagonal_reduction(StableIdeal2(d, {d}));
      for (int n = 1; n <= d; ++n) CHECK(row.gens[static_cast<std::size_t>(n - 1)] == HomogeneousPoly(X(d, {1, n})));
    }
  }

  TEST_CASE("property: each diagonal sums exactly the tableau cells on it") {
    for (int d = 1; d <= 6; ++d) {
      for (const auto& ideal : all_tableaux(d)) {
        const auto j = diagonal_reduction(ideal);
        HomogeneousPoly total(d, 2);
        for (const auto& f : j.gens) {
          for (const auto& [m, c] : f.terms()) CHECK(c == 1);
          total += f;
        }
        CHECK(total == sum_of(ideal.generators()));
        for (std::size_t n = 0; n < j.gens.size(); ++n) {
          for (const auto& [m, c] : j.gens[n].terms()) {
            const auto idx = m.sorted_indices();
            CHECK(idx[1] - idx[0] == static_cast<int>(n));
          }
        }
      }
    }
  }

  TEST_CASE("algorithm output for d = 3, g = 2") {
    const auto s = run_algorithm(3, 2);
    CHECK(strings(s.sequence()) ==
          std::vector<std::string>{"x1*x3", "x2*x3^2", "x2^2*x3", "x1*x2", "x2^3", "x1^2"});
    CHECK(s.locate(X(3, {2, 3, 3})) == std::make_pair(2, 1));
    CHECK(s.locate(X(3, {1, 1})) == std::make_pair(1, 3));
    CHECK_FALSE(s.locate(X(3, {3, 3})));
  }

  TEST_CASE("first elements and the single-row case") {
    for (int d = 1; d <= 7; ++d) {
      for (int g = 1; g <= d; ++g) {
        const auto s = run_algorithm(d, g);
        for (int h = 1; h <= g; ++h) {
          auto expected = X(d, {h});
          for (int e = 0; e < h; ++e) expected = expected.times_variable(d);
          CHECK(s.sequence()[static_cast<std::size_t>(h - 1)] == expected);
        }
        CHECK(s.sequence().back() == X(d, {1, 1}));
      }
      const auto one = run_algorithm(d, 1);
      REQUIRE(one.size() == static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) CHECK(one.sequence()[static_cast<std::size_t>(i)] == X(d, {1, d - i}));
    }
  }

  TEST_CASE("property: S_h = T_h against an independent enumeration") {
    for (int d = 1; d <= 7; ++d) {
      for (int g = 1; g <= d; ++g) {
        const auto s = run_algorithm(d, g);
        CHECK(verify_Sh_equals_Th(s).equal);
        std::size_t total = 0;
        for (int h = 1; h <= g; ++h) {
          const auto t = oracle::t_stratum(d, h);
          CHECK(t.size() == oracle::choose(d, h));
          const auto sh = s.stratum(h);
          REQUIRE(sh.size() == t.size());
          for (std::size_t i = 0; i < t.size(); ++i) CHECK(sh[i].exponents() == t[i]);
          total += t.size();
        }
        CHECK(s.size() == total);
      }
    }
  }

  TEST_CASE("successor in a lower stratum agrees with a scan") {
    for (int d = 2; d <= 6; ++d) {
      for (int g = 2; g <= d; ++g) {
        const auto s = run_algorithm(d, g);
        const auto& seq = s.sequence();
        for (std::size_t i = 0; i < seq.size(); ++i) {
          const int h = seq[i].min_index();
          for (int k = 1; k < h; ++k) {
            std::optional<Monomial> scan;
            for (std::size_t j = i + 1; j < seq.size() && !scan; ++j)
              if (seq[j].min_index() == h - k) scan = seq[j];
            REQUIRE(scan);
            const auto next = successor_in_lower_stratum(s, seq[i], k);
            CHECK(next == *scan);
            CHECK(next.min_index() == h - k);
            CHECK(next.degree() == h - k + 1);
          }
          CHECK_THROWS_AS(successor_in_lower_stratum(s, seq[i], 0), PreconditionError);
        }
      }
    }
    const auto s = run_algorithm(6, 4);
    CHECK(successor_in_lower_stratum(s, X(6, {4, 6, 6, 6, 6}), 3) == X(6, {1, 5}));
  }

  TEST_CASE("S covers (X_1..X_g) m^g") {
    for (int d = 1; d <= 6; ++d)
      for (int g = 1; g <= d; ++g) CHECK(s_covers_products(run_algorithm(d, g)));
  }

  TEST_CASE("membership of I m^(g-1) in J") {
    const auto fig = StableIdeal2(6, kExampleRows);
    const auto rep = certify_Im_in_J(fig);
    CHECK(rep.degree == 5);
    CHECK(rep.records.size() == 241);
    const auto jp = diagonal_reduction(fig).presentation();
    CHECK(contains(jp, HomogeneousPoly(X(6, {4, 4, 6, 6, 6}))).member);
    CHECK_FALSE(contains(jp, HomogeneousPoly(X(6, {4, 4, 6, 6}))).member);
    for (const auto& r : rep.records) CHECK(expand_certificate(jp, r.certificate, 5) == HomogeneousPoly(r.monomial));

    const auto row = StableIdeal2(4, {4});
    CHECK(certify_Im_in_J(row).records.size() == 4);
    const auto sq2 = diagonal_reduction_of_square(2).presentation();
    CHECK(contains(sq2, HomogeneousPoly(X(2, {1, 2, 2}))).member);
    CHECK(certify_IS_in_J(fig) > 0);
  }

  TEST_CASE("reduction number") {
    const auto fig = certify_reduction(StableIdeal2(6, kExampleRows));
    CHECK(fig.reduction_holds);
    CHECK(fig.witness_degree == 8);
    CHECK(fig.rank_power == fig.rank_product);
    CHECK(fig.reduction_number <= 3);

    const auto row = certify_reduction(StableIdeal2(5, {5}));
    CHECK(row.reduction_holds);
    CHECK(row.reduction_number == 0);

    const auto sq3 = certify_reduction(StableIdeal2(3, {3, 3, 3}));
    CHECK(sq3.reduction_holds);
    CHECK(sq3.reduction_number <= 2);
  }

  TEST_CASE("golden ordered set for d = 6, g = 4") {
    std::ostringstream got;
    write_ordered_s_lines(got, run_algorithm(6, 4));
    std::ifstream in(STABLECORE_GOLDEN_DIR "/ordered_s_d6_g4.jsonl");
    REQUIRE(in);
    std::ostringstream want;
    want << in.rdbuf();
    CHECK(got.str() == want.str());
  }
}
