#include "acell/pairing.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "acell/error.hpp"

namespace acell {

LaurentPoly macdonald_kernel(int m) {
  if (m < 0) throw AlgebraError("kernel size must be non-negative");
  return macdonald_kernel(BlockShape::single(m));
}

LaurentPoly macdonald_kernel(const BlockShape& shape) {
  LaurentPoly k = LaurentPoly::constant(shape, 1);
  const LaurentPoly one = k;
  for (const auto& b : shape.blocks()) {
    for (int mu = 1; mu <= b.size; ++mu) {
      for (int nu = 1; nu <= b.size; ++nu) {
        if (mu == nu) continue;
        k = k * (one - LaurentPoly::variable(shape, b.id, mu) *
                           LaurentPoly::variable(shape, b.id, nu, -1));
      }
    }
  }
  return k;
}

namespace {

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

void require_symmetric(const LaurentPoly& f, const char* what) {
  if (!is_block_symmetric(f)) {
    throw AlgebraError(std::string(what) + " is not block-symmetric");
  }
}

}  // namespace

PairingContext::PairingContext(BlockShape shape)
    : shape_(std::move(shape)), kernel_(macdonald_kernel(shape_)), normalization_(1) {
  for (const auto& b : shape_.blocks()) normalization_ /= factorial(b.size);
}

LaurentPoly sf_inner(const LaurentPoly& f, const LaurentPoly& g,
                     const PairingContext& ctx) {
  if (!(f.shape() == ctx.shape()) || !(g.shape() == ctx.shape())) {
    throw AlgebraError("inner product arguments do not match the context shape");
  }
  require_symmetric(f, "first argument");
  require_symmetric(g, "second argument");
  LaurentPoly ct =
      constant_term_of_product(f * bar_involution(g), ctx.kernel());
  return q_part(ct * ctx.normalization());
}

LaurentPoly scalar_pairing(const LaurentPoly& F, const PairingContext& ctx) {
  if (!(F.shape() == ctx.shape())) {
    throw AlgebraError("pairing value does not match the context shape");
  }
  return q_part(constant_term_of_product(F, ctx.kernel()) * ctx.normalization());
}

SchurExpansion schur_projection(const LaurentPoly& f, const PairingContext& ctx,
                                std::optional<int> bound) {
  const BlockShape& shape = ctx.shape();
  if (!(f.shape() == shape)) {
    throw AlgebraError("polynomial does not match the context shape");
  }
  require_symmetric(f, "polynomial");
  SchurExpansion result(shape);
  if (f.is_zero()) return result;

  // Every weight in the expansion is dominated by the leading one, so its
  // parts stay inside the exponent range of f and its degree occurs in f.
  std::vector<std::vector<GLWeight>> candidates;
  for (std::size_t pos = 0; pos < shape.num_blocks(); ++pos) {
    const int m = shape.blocks()[pos].size;
    const auto first = static_cast<std::size_t>(shape.offset(pos));
    int lo = INT_MAX;
    int hi = INT_MIN;
    std::set<int> degrees;
    for (const auto& [mono, c] : f.terms()) {
      int deg = 0;
      for (std::size_t k = first; k < first + static_cast<std::size_t>(m); ++k) {
        lo = std::min(lo, mono.z[k]);
        hi = std::max(hi, mono.z[k]);
        deg += mono.z[k];
      }
      degrees.insert(deg);
    }
    if (m == 0) lo = hi = 0;
    if (bound && (lo < -*bound || hi > *bound)) {
      throw AlgebraError("exponents of block " +
                         std::to_string(shape.blocks()[pos].id) +
                         " exceed the weight bound " + std::to_string(*bound));
    }
    std::vector<GLWeight> ws;
    for (auto& w : weights_in_range(m, lo, hi)) {
      if (degrees.count(w.degree())) ws.push_back(std::move(w));
    }
    candidates.push_back(std::move(ws));
  }

  const LaurentPoly weighted = f * ctx.kernel();
  SchurKey key(shape.num_blocks());
  auto sweep = [&](auto&& self, std::size_t pos) -> void {
    if (pos == shape.num_blocks()) {
      LaurentPoly c = constant_term_of_product(
          weighted, bar_involution(schur_product(shape, key)));
      result.add_term(key, q_part(c * ctx.normalization()));
      return;
    }
    for (const auto& w : candidates[pos]) {
      key[pos] = w;
      self(self, pos + 1);
    }
  };
  sweep(sweep, 0);
  return result;
}

}  // namespace acell
