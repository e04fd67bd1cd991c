#pragma once

// Brute-force reference computations. Nothing here calls into the library, so
// the unit and acceptance tests can compare its answers against these.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;

// All exponent vectors of total degree k in d variables, any order.
inline std::vector<Exps> monomials(int d, int k) {
  std::vector<Exps> out;
  Exps cur(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == d - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[static_cast<std::size_t>(pos)] = e;
      rec(pos + 1, left - e);
    }
  };
  if (d == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  rec(0, k);
  return out;
}

// a < b in revlex: at the last differing index a has the larger exponent.
inline bool revlex_less(const Exps& a, const Exps& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

// Membership of a monomial in the ideal with tableau rows: some X_i X_j with
// i <= j <= rows[i-1] divides it.
inline bool in_ideal(const std::vector<int>& rows, const Exps& m) {
  const int d = static_cast<int>(m.size());
  for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
    if (m[static_cast<std::size_t>(i - 1)] == 0) continue;
    for (int j = i; j <= std::min(rows[static_cast<std::size_t>(i - 1)], d); ++j) {
      const int need_i = (i == j) ? 2 : 1;
      if (m[static_cast<std::size_t>(i - 1)] >= need_i && m[static_cast<std::size_t>(j - 1)] >= 1) return true;
    }
  }
  return false;
}

inline std::size_t count_in_ideal(const std::vector<int>& rows, int d, int k) {
  std::size_t n = 0;
  for (const auto& m : monomials(d, k)) n += in_ideal(rows, m) ? 1 : 0;
  return n;
}

// Every set of quadratic monomials in d variables that contains X_1 X_d and is
// closed under X_j -> X_i for i < j. Returned as tableau rows.
inline std::vector<std::vector<int>> stable_quadratic_sets(int d) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= d; ++i)
    for (int j = i; j <= d; ++j) cells.emplace_back(i, j);
  const std::size_t n = cells.size();
  std::vector<std::vector<int>> found;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    auto has = [&](int i, int j) {
      if (i > j) std::swap(i, j);
      for (std::size_t c = 0; c < n; ++c)
        if (cells[c] == std::make_pair(i, j)) return ((mask >> c) & 1U) != 0;
      return false;
    };
    if (!has(1, d)) continue;
    bool closed = true;
    for (std::size_t c = 0; c < n && closed; ++c) {
      if (!((mask >> c) & 1U)) continue;
      const auto [a, b] = cells[c];
      for (int i = 1; i < b && closed; ++i) closed = has(a, i);
      for (int i = 1; i < a && closed; ++i) closed = has(i, b);
    }
    if (!closed) continue;
    std::vector<int> rows;
    for (int i = 1; i <= d && has(i, i); ++i) {
      int len = i;
      while (len < d && has(i, len + 1)) ++len;
      rows.push_back(len);
    }
    found.push_back(rows);
  }
  std::sort(found.begin(), found.end());
  return found;
}

inline bool gd_by_cells(const std::vector<int>& rows, int d) {
  const int g = static_cast<int>(rows.size());
  if (g < 2) return true;
  return rows[static_cast<std::size_t>(g - 2)] >= d;
}

// Minimal generator count of I after inverting X_{s+1}, ..., X_d: substitute
// 1 for those variables and discard generators divisible by another one.
inline int localized_count(const std::vector<int>& rows, int s) {
  std::set<Exps> gens;
  for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
    for (int j = i; j <= rows[static_cast<std::size_t>(i - 1)]; ++j) {
      Exps e(static_cast<std::size_t>(s), 0);
      if (i <= s) ++e[static_cast<std::size_t>(i - 1)];
      if (j <= s) ++e[static_cast<std::size_t>(j - 1)];
      gens.insert(e);
    }
  }
  auto divides = [](const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  int count = 0;
  for (const auto& a : gens) {
    bool minimal = true;
    for (const auto& b : gens)
      if (b != a && divides(b, a)) minimal = false;
    count += minimal ? 1 : 0;
  }
  return count;
}

// T_h: degree-(h+1) monomials whose smallest variable index is h, ascending revlex.
inline std::vector<Exps> t_stratum(int d, int h) {
  std::vector<Exps> out;
  for (const auto& m : monomials(d, h + 1)) {
    int mn = 0;
    for (int i = 0; i < d; ++i)
      if (m[static_cast<std::size_t>(i)] > 0) {
        mn = i + 1;
        break;
      }
    if (mn == h) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), revlex_less);
  return out;
}

inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle
