#pragma once

// Constant-term inner products on block-symmetric Laurent polynomials.

#include <optional>

#include "acell/laurent.hpp"
#include "acell/symfunc.hpp"

namespace acell {

// prod_{mu != nu} (1 - z_mu / z_nu) in one block of m variables.
LaurentPoly macdonald_kernel(int m);

// Product of the per-block kernels of a shape.
LaurentPoly macdonald_kernel(const BlockShape& shape);

// Holds the kernel and the normalization prod_i 1/m_i! for a shape.
class PairingContext {
 public:
  explicit PairingContext(BlockShape shape);

  const BlockShape& shape() const { return shape_; }
  const LaurentPoly& kernel() const { return kernel_; }
  const Rational& normalization() const { return normalization_; }

 private:
  BlockShape shape_;
  LaurentPoly kernel_;
  Rational normalization_;
};

// prod_i (1/m_i!) [ f * bar(g) * kernel ]_1, a Laurent polynomial in q.
// Both arguments must be symmetric in every block.
LaurentPoly sf_inner(const LaurentPoly& f, const LaurentPoly& g,
                     const PairingContext& ctx);

// [ F * prod_i (1/m_i!) * kernel ]_1 for a precomputed (( , )) value F.
LaurentPoly scalar_pairing(const LaurentPoly& F, const PairingContext& ctx);

// Schur coefficients of f read off as inner products against s_w. The
// candidate weights come from the exponent range of f; when `bound` is set
// and that range leaves [-bound, bound] an error is raised.
SchurExpansion schur_projection(const LaurentPoly& f, const PairingContext& ctx,
                                std::optional<int> bound = std::nullopt);

}  // namespace acell
