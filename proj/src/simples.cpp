#include "acell/simples.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace acell {

// ---------------------------------------------------------------------------
// Points and polynomials

DrinfeldPoint::DrinfeldPoint(std::map<int, std::vector<Rational>> roots)
    : roots_(std::move(roots)) {
  for (auto& [block, values] : roots_) {
    for (auto& v : values) {
      v.canonicalize();
      if (v == 0) {
        throw AlgebraError("Drinfeld point has a zero value in block " +
                           std::to_string(block));
      }
    }
    std::sort(values.begin(), values.end());
  }
}

void DrinfeldPoint::check_shape(const BlockShape& shape) const {
  if (roots_.size() != shape.num_blocks()) {
    throw AlgebraError("point has " + std::to_string(roots_.size()) +
                       " blocks, shape has " + std::to_string(shape.num_blocks()));
  }
  for (const auto& b : shape.blocks()) {
    auto it = roots_.find(b.id);
    if (it == roots_.end()) {
      throw AlgebraError("point has no values for block " + std::to_string(b.id));
    }
    if (it->second.size() != static_cast<std::size_t>(b.size)) {
      throw AlgebraError("point has " + std::to_string(it->second.size()) +
                         " values for block " + std::to_string(b.id) + " of size " +
                         std::to_string(b.size));
    }
  }
}

std::string DrinfeldPoint::to_string(const BlockShape& shape) const {
  std::string s;
  for (std::size_t pos = 0; pos < shape.num_blocks(); ++pos) {
    if (pos > 0) s += "/";
    auto it = roots_.find(shape.blocks()[pos].id);
    if (it == roots_.end()) continue;
    for (std::size_t k = 0; k < it->second.size(); ++k) {
      if (k > 0) s += ",";
      const Rational& v = it->second[k];
      s += v.get_den() == 1 ? rational_to_string(v) : "(" + rational_to_string(v) + ")";
    }
  }
  return s;
}

DrinfeldPolynomial::DrinfeldPolynomial(std::map<int, std::vector<Rational>> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& [block, c] : coeffs_) {
    for (auto& x : c) x.canonicalize();
    const std::string where = " (block " + std::to_string(block) + ")";
    if (c.empty() || c.back() != 1) {
      throw AlgebraError("Drinfeld polynomial must be monic" + where);
    }
    if (c.front() == 0) {
      throw AlgebraError("Drinfeld polynomial must have nonzero constant term" + where);
    }
  }
}

namespace {

std::string univariate_to_string(const std::vector<Rational>& c) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    const Rational mag = abs(c[k]);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << rational_to_string(mag);
      continue;
    }
    if (mag != 1) out << rational_to_string(mag) << "*";
    out << "u";
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

std::string DrinfeldPolynomial::to_string(const BlockShape& shape) const {
  std::string s;
  for (std::size_t pos = 0; pos < shape.num_blocks(); ++pos) {
    if (pos > 0) s += " ; ";
    auto it = coeffs_.find(shape.blocks()[pos].id);
    if (it != coeffs_.end()) s += univariate_to_string(it->second);
  }
  return s;
}

DrinfeldPolynomial point_to_polynomial(const DrinfeldPoint& p) {
  std::map<int, std::vector<Rational>> out;
  for (const auto& [block, roots] : p.roots()) {
    // Multiply out prod (u - a) one root at a time.
    std::vector<Rational> c{Rational(1)};
    for (const auto& a : roots) {
      std::vector<Rational> next(c.size() + 1, Rational(0));
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] += c[k];
        next[k] -= a * c[k];
      }
      c = std::move(next);
    }
    out.emplace(block, std::move(c));
  }
  return DrinfeldPolynomial(std::move(out));
}

NoRationalSplitting::NoRationalSplitting(int block, std::string factor)
    : AlgebraError("block " + std::to_string(block) + ": factor " + factor +
                   " has no rational roots; the point lies in an extension field"),
      block_(block),
      factor_(std::move(factor)) {}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational horner(const std::vector<Rational>& c, const Rational& x) {
  Rational v = 0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

// c / (u - a), assuming a is a root.
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& a) {
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;
  for (std::size_t k = c.size(); k-- > 1;) {
    carry = c[k] + carry * a;
    q[k - 1] = carry;
  }
  return q;
}

std::optional<Rational> find_rational_root(const std::vector<Rational>& c) {
  mpz_class lcm = 1;
  for (const auto& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& x : c) ints.push_back(mpz_class(x.get_num() * (lcm / x.get_den())));
  for (const auto& p : positive_divisors(ints.front())) {
    for (const auto& q : positive_divisors(ints.back())) {
      for (int sign : {1, -1}) {
        Rational x(p * sign, q);
        x.canonicalize();
        if (horner(c, x) == 0) return x;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

DrinfeldPoint polynomial_to_point(const DrinfeldPolynomial& P) {
  std::map<int, std::vector<Rational>> roots;
  for (const auto& [block, coeffs] : P.coefficients()) {
    std::vector<Rational> c = coeffs;
    std::vector<Rational> found;
    while (c.size() > 1) {
      auto root = find_rational_root(c);
      if (!root) throw NoRationalSplitting(block, univariate_to_string(c));
      found.push_back(*root);
      c = deflate(c, *root);
    }
    roots.emplace(block, std::move(found));
  }
  return DrinfeldPoint(std::move(roots));
}

// ---------------------------------------------------------------------------
// Specialization and rank

QMatrix specialize_gram(const CellDatum& d, const DrinfeldPoint& p) {
  const BlockShape& shape = d.shape();
  p.check_shape(shape);
  for (std::size_t b = 0; b < d.size(); ++b) {
    for (std::size_t b2 = 0; b2 < d.size(); ++b2) {
      if (!d.gram_is_symmetric(b, b2)) {
        throw AlgebraError("gram value at (" + d.labels()[b] + "," + d.labels()[b2] +
                           ") is not block-symmetric; its specialization depends on "
                           "the ordering of the point");
      }
    }
  }
  std::map<VarRef, Rational> zvals;
  for (const auto& b : shape.blocks()) {
    const auto& values = p.roots().at(b.id);
    for (int mu = 1; mu <= b.size; ++mu) {
      zvals.emplace(VarRef{b.id, mu}, values[static_cast<std::size_t>(mu - 1)]);
    }
  }
  QMatrix m(d.size());
  for (std::size_t b = 0; b < d.size(); ++b) {
    m[b].reserve(d.size());
    for (std::size_t b2 = 0; b2 < d.size(); ++b2) {
      m[b].push_back(evaluate(d.gram(b, b2), zvals));
    }
  }
  return m;
}

int rank_over_fraction_field(QMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      const LaurentPoly factor = m[r][col];
      for (std::size_t j = col; j < cols; ++j) {
        m[r][j] = m[rank][col] * m[r][j] - factor * m[rank][j];
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

PointClass classify_point(const CellDatum& d, const DrinfeldPoint& p) {
  int rank = rank_over_fraction_field(specialize_gram(d, p));
  return {rank > 0, rank};
}

}  // namespace acell
