#pragma once

// Sparse Laurent polynomials over Q in grouped variables z[i][mu] and a
// distinguished variable q with half-integer exponents.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace acell {

using Rational = mpq_class;

// Ordered list of variable blocks (i, m_i). Block i owns the variables
// z[i][1] .. z[i][m_i]; variables are numbered densely in block order.
class BlockShape {
 public:
  struct Block {
    int id = 0;
    int size = 0;
    friend bool operator==(const Block&, const Block&) = default;
  };

  BlockShape() = default;
  explicit BlockShape(std::vector<Block> blocks);

  // One block with id 1 and m variables.
  static BlockShape single(int m);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  int num_vars() const { return num_vars_; }

  // Position of the block with this id, if present.
  std::optional<std::size_t> position(int id) const;
  const Block& block_with_id(int id) const;
  int offset(std::size_t pos) const { return offsets_[pos]; }

  // Dense index of z[id][mu], mu 1-based.
  int var_index(int id, int mu) const;

  friend bool operator==(const BlockShape& a, const BlockShape& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<int> offsets_;
  int num_vars_ = 0;
};

// z exponent vector (dense, one slot per variable) plus q exponent in
// half-units. Ordered lexicographically on z, then q.
struct Monomial {
  std::vector<int> z;
  int q2 = 0;

  bool is_z_free() const;
  auto operator<=>(const Monomial&) const = default;
};

// Names a single z variable.
struct VarRef {
  int block = 0;
  int mu = 0;
  auto operator<=>(const VarRef&) const = default;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(BlockShape shape) : shape_(std::move(shape)) {}

  static LaurentPoly constant(const BlockShape& shape, const Rational& c);
  static LaurentPoly variable(const BlockShape& shape, int block, int mu,
                              int exponent = 1);
  // c * q^{half_units/2}
  static LaurentPoly q_power(const BlockShape& shape, int half_units,
                             const Rational& c = 1);
  static LaurentPoly term(const BlockShape& shape, Monomial m,
                          const Rational& c);

  const BlockShape& shape() const { return shape_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Coefficient of a monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;

  // True when no term carries a z variable.
  bool is_z_free() const;

  // Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) {
    return a *= c;
  }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) {
    return a *= c;
  }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }

  // Non-negative integer power.
  LaurentPoly pow(int n) const;

  // Multiplicative inverse of a single term; throws otherwise.
  LaurentPoly term_inverse() const;

  // Multiplies every term by the monomial (z shift, q shift).
  LaurentPoly shifted(const Monomial& m) const;

  // Swaps the exponents of two variables of one block.
  LaurentPoly swap_vars(int block, int mu, int nu) const;

  // Re-expresses a polynomial in another shape. Every variable carrying a
  // nonzero exponent must exist (same block id, index in range) there.
  LaurentPoly reshaped(const BlockShape& target) const;

  // Text form, deterministic: terms in descending canonical order.
  std::string to_string() const;

 private:
  void require_same_shape(const LaurentPoly& other) const;

  BlockShape shape_;
  TermMap terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

// Negates every z exponent; q is fixed.
LaurentPoly bar_involution(const LaurentPoly& f);

// Sub-sum of the terms free of z, kept in f's shape.
LaurentPoly constant_term(const LaurentPoly& f);

// Constant term of a*b, without forming the full product.
LaurentPoly constant_term_of_product(const LaurentPoly& a,
                                     const LaurentPoly& b);

// Drops the shape of a z-free polynomial, leaving a Laurent polynomial in q
// alone (empty shape). Throws if a z variable is present.
LaurentPoly q_part(const LaurentPoly& f);

// Substitutes nonzero rational values for the z variables; q stays
// symbolic and the result has the empty shape.
LaurentPoly evaluate(const LaurentPoly& f,
                     const std::map<VarRef, Rational>& zvals);

// Substitutes a rational for q^{1/2}. Result keeps f's shape.
LaurentPoly evaluate_sqrt_q(const LaurentPoly& f, const Rational& t);

// Exact quotient a / b in the polynomial ring (no negative exponents in
// either argument); throws when b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Text form of a rational: "p" or "p/q".
std::string rational_to_string(const Rational& r);

}  // namespace acell
