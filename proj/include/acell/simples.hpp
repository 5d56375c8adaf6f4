#pragma once

// Specialization of the Gram form at maximal ideals of R(G_lambda) and the
// dictionary between such points and Drinfeld polynomials.

#include <map>
#include <string>
#include <vector>

#include "acell/cellalg.hpp"
#include "acell/error.hpp"
#include "acell/laurent.hpp"

namespace acell {

// Per block i, the multiset {a_{i,1}, ..., a_{i,m_i}} of nonzero rationals.
// Stored sorted, so equal multisets compare equal.
class DrinfeldPoint {
 public:
  DrinfeldPoint() = default;
  explicit DrinfeldPoint(std::map<int, std::vector<Rational>> roots);

  const std::map<int, std::vector<Rational>>& roots() const { return roots_; }
  // Throws unless blocks and multiset sizes match the shape.
  void check_shape(const BlockShape& shape) const;

  // "a1,a2/b1/..." with blocks in shape order; fractions in parentheses.
  std::string to_string(const BlockShape& shape) const;

  friend bool operator==(const DrinfeldPoint&, const DrinfeldPoint&) = default;

 private:
  std::map<int, std::vector<Rational>> roots_;
};

// Per block, monic coefficients c_0..c_{m_i} (c_{m_i} = 1, c_0 != 0).
class DrinfeldPolynomial {
 public:
  DrinfeldPolynomial() = default;
  explicit DrinfeldPolynomial(std::map<int, std::vector<Rational>> coefficients);

  const std::map<int, std::vector<Rational>>& coefficients() const { return coeffs_; }

  // "u^2 - 5*u + 6 ; u - 2" with blocks in shape order.
  std::string to_string(const BlockShape& shape) const;

  friend bool operator==(const DrinfeldPolynomial&, const DrinfeldPolynomial&) = default;

 private:
  std::map<int, std::vector<Rational>> coeffs_;
};

// Square matrix of Laurent polynomials in q (empty shape).
using QMatrix = std::vector<std::vector<LaurentPoly>>;

// Psi evaluated at the point, q left symbolic.
QMatrix specialize_gram(const CellDatum& d, const DrinfeldPoint& p);

// Rank over the fraction field Q(q^{1/2}), by fraction-free elimination.
int rank_over_fraction_field(QMatrix m);

struct PointClass {
  bool has_simple = false;
  int rank = 0;
};

PointClass classify_point(const CellDatum& d, const DrinfeldPoint& p);

DrinfeldPolynomial point_to_polynomial(const DrinfeldPoint& p);

// Raised when a block polynomial has an irreducible factor of degree > 1
// over Q; `factor()` holds that factor.
class NoRationalSplitting : public AlgebraError {
 public:
  NoRationalSplitting(int block, std::string factor);
  int block() const { return block_; }
  const std::string& factor() const { return factor_; }

 private:
  int block_;
  std::string factor_;
};

// Root multisets by the rational root test.
DrinfeldPoint polynomial_to_point(const DrinfeldPolynomial& P);

}  // namespace acell
