#pragma once

// Symmetric Laurent polynomials as the representation ring of a product of
// general linear groups: GL weights, Schur characters and Schur expansions.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "acell/laurent.hpp"

namespace acell {

// Highest weight of a rational GL_m representation: weakly decreasing
// integers, possibly negative.
class GLWeight {
 public:
  GLWeight() = default;
  explicit GLWeight(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t k) const { return parts_[k]; }

  int degree() const;
  // w + k(1,...,1)
  GLWeight shifted(int k) const;
  // All parts equal (a power of the determinant character).
  bool is_rectangular() const;

  std::string to_string() const;

  auto operator<=>(const GLWeight&) const = default;

 private:
  std::vector<int> parts_;
};

// (w_1..w_m) -> (-w_m..-w_1), the highest weight of the dual representation.
GLWeight dual_weight(const GLWeight& w);

// Weights indexed by block position, one per block of a shape.
using SchurKey = std::vector<GLWeight>;

// Finite combination sum_k c_k * prod_i s_{w_{k,i}}(z_i) with coefficients
// Laurent polynomials in q (empty shape).
class SchurExpansion {
 public:
  using TermMap = std::map<SchurKey, LaurentPoly>;

  SchurExpansion() = default;
  explicit SchurExpansion(BlockShape shape) : shape_(std::move(shape)) {}

  // c * s_key
  static SchurExpansion single(const BlockShape& shape, SchurKey key,
                               const LaurentPoly& c);
  // The unit s_{(0..0)} x ... x s_{(0..0)}.
  static SchurExpansion one(const BlockShape& shape);

  const BlockShape& shape() const { return shape_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SchurKey& key, const LaurentPoly& c);

  SchurExpansion& operator+=(const SchurExpansion& other);
  friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) {
    return a += b;
  }
  // Multiplies every coefficient by a Laurent polynomial in q.
  SchurExpansion scaled(const LaurentPoly& c) const;

  friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }

  // The symmetric Laurent polynomial this expansion denotes.
  LaurentPoly to_poly() const;

  std::string to_string() const;

 private:
  void check_key(const SchurKey& key) const;

  BlockShape shape_;
  TermMap terms_;
};

// Schur Laurent polynomial s_w(z_1..z_m) in a one-block shape.
LaurentPoly schur(int m, const GLWeight& w);

// s_w in the variables of one block of a larger shape.
LaurentPoly schur(const BlockShape& shape, int block_id, const GLWeight& w);

// prod_i s_{key[i]}(z_i)
LaurentPoly schur_product(const BlockShape& shape, const SchurKey& key);

// Invariance under every permutation of the block's variables.
bool is_symmetric(const LaurentPoly& f, int block_id);

// Symmetric in every block.
bool is_block_symmetric(const LaurentPoly& f);

// Leading-term expansion in the Schur basis. Throws on asymmetric input.
SchurExpansion schur_expand(const LaurentPoly& f);

// Product in the representation ring.
SchurExpansion lr_mul(const SchurExpansion& a, const SchurExpansion& b);

// The involution sigma: s_w -> s_{dual(w)} blockwise, q fixed.
SchurExpansion dual(const SchurExpansion& e);

// Unit of R(G)[q^{+-1/2}]: one term, +-q^{k/2}, all weights rectangular.
bool is_unit(const SchurExpansion& e);

// Weakly decreasing tuples of length m with parts in [lo, hi].
std::vector<GLWeight> weights_in_range(int m, int lo, int hi);

}  // namespace acell
