#include "stablecore/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "stablecore/errors.hpp"

namespace stablecore {

Monomial::Monomial(int dim) : exps_(static_cast<std::size_t>(dim), 0) {
  if (dim < 0) throw PreconditionError("negative dimension");
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw PreconditionError("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(int dim, int i) {
  if (i < 1 || i > dim) {
    throw PreconditionError("variable index " + std::to_string(i) + " outside 1.." +
                            std::to_string(dim));
  }
  Monomial m(dim);
  m.exps_[static_cast<std::size_t>(i - 1)] = 1;
  m.degree_ = 1;
  return m;
}

Monomial Monomial::product_of(int dim, std::initializer_list<int> vars) {
  return product_of(dim, std::vector<int>(vars));
}

Monomial Monomial::product_of(int dim, const std::vector<int>& vars) {
  Monomial m(dim);
  for (int i : vars) {
    if (i < 1 || i > dim) {
      throw PreconditionError("variable index " + std::to_string(i) + " outside 1.." +
                              std::to_string(dim));
    }
    ++m.exps_[static_cast<std::size_t>(i - 1)];
    ++m.degree_;
  }
  return m;
}

int Monomial::min_index() const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) return static_cast<int>(i) + 1;
  return 0;
}

int Monomial::max_index() const {
  for (std::size_t i = exps_.size(); i > 0; --i)
    if (exps_[i - 1] > 0) return static_cast<int>(i);
  return 0;
}

std::vector<int> Monomial::sorted_indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree_));
  for (std::size_t i = 0; i < exps_.size(); ++i)
    out.insert(out.end(), static_cast<std::size_t>(exps_[i]), static_cast<int>(i) + 1);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("divides: dimension mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  if (!other.divides(*this)) throw PreconditionError("quotient: divisor does not divide");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::embed(int dim) const {
  if (dim < this->dim()) {
    if (max_index() > dim) throw DimensionMismatch("embed: monomial uses dropped variables");
  }
  std::vector<int> e(exps_);
  e.resize(static_cast<std::size_t>(dim), 0);
  return Monomial(std::move(e));
}

Monomial Monomial::times_variable(int i, int e) const {
  if (i < 1 || i > dim()) throw PreconditionError("times_variable: index out of range");
  std::vector<int> x(exps_);
  x[static_cast<std::size_t>(i - 1)] += e;
  return Monomial(std::move(x));
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("monomial product: dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
  std::vector<int> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents()[i];
  return Monomial(std::move(e));
}

std::strong_ordering revlex_compare(const Monomial& a, const Monomial& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("revlex_compare: dimension mismatch");
  if (a.degree() != b.degree()) throw DimensionMismatch("revlex_compare: degree mismatch");
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = ea.size(); i > 0; --i) {
    if (ea[i - 1] != eb[i - 1]) {
      return ea[i - 1] > eb[i - 1] ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

namespace {

void enumerate_into(std::vector<int>& exps, std::size_t pos, int remaining,
                    std::vector<Monomial>& out) {
  if (pos + 1 == exps.size()) {
    exps[pos] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[pos] = e;
    enumerate_into(exps, pos + 1, remaining - e, out);
  }
  exps[pos] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_degree(int dim, int k) {
  if (dim < 1) throw PreconditionError("enumerate_degree: dimension must be >= 1");
  if (k < 0) throw PreconditionError("enumerate_degree: negative degree");
  std::vector<Monomial> out;
  out.reserve(binomial(dim + k - 1, k));
  std::vector<int> exps(static_cast<std::size_t>(dim), 0);
  enumerate_into(exps, 0, k, out);
  std::sort(out.begin(), out.end(), RevlexLess{});
  return out;
}

Monomial parse_monomial(std::string_view text, int dim) {
  auto fail = [&](const std::string& why) {
    throw ParseError("bad monomial '" + std::string(text) + "': " + why);
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail("empty");
  Monomial m(dim);
  if (s == "1") return m;

  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number at position " + std::to_string(start));
    if (pos - start > 6) fail("number too large");
    return std::stoi(s.substr(start, pos - start));
  };
  while (true) {
    if (pos >= s.size() || (s[pos] != 'x' && s[pos] != 'X')) fail("expected 'x'");
    ++pos;
    int index = read_int();
    int e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      e = read_int();
    }
    if (index < 1 || index > dim) {
      fail("variable x" + std::to_string(index) + " outside 1.." + std::to_string(dim));
    }
    m = m.times_variable(index, e);
    if (pos == s.size()) break;
    if (s[pos] != '*') fail("expected '*'");
    ++pos;
  }
  return m;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace stablecore
