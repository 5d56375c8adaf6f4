#include "acell/laurent.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>

#include "acell/error.hpp"

namespace acell {

// ---------------------------------------------------------------------------
// BlockShape

BlockShape::BlockShape(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::set<int> seen;
  offsets_.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    if (b.size < 0) {
      throw AlgebraError("block " + std::to_string(b.id) +
                         " has negative size");
    }
    if (!seen.insert(b.id).second) {
      throw AlgebraError("duplicate block id " + std::to_string(b.id));
    }
    offsets_.push_back(num_vars_);
    num_vars_ += b.size;
  }
}

BlockShape BlockShape::single(int m) { return BlockShape({{1, m}}); }

std::optional<std::size_t> BlockShape::position(int id) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k].id == id) return k;
  }
  return std::nullopt;
}

const BlockShape::Block& BlockShape::block_with_id(int id) const {
  auto pos = position(id);
  if (!pos) throw AlgebraError("unknown block id " + std::to_string(id));
  return blocks_[*pos];
}

int BlockShape::var_index(int id, int mu) const {
  auto pos = position(id);
  if (!pos) throw AlgebraError("unknown block id " + std::to_string(id));
  if (mu < 1 || mu > blocks_[*pos].size) {
    throw AlgebraError("variable index " + std::to_string(mu) +
                       " out of range for block " + std::to_string(id));
  }
  return offsets_[*pos] + mu - 1;
}

// ---------------------------------------------------------------------------
// Monomial

bool Monomial::is_z_free() const {
  return std::all_of(z.begin(), z.end(), [](int e) { return e == 0; });
}

namespace {

Monomial unit_monomial(const BlockShape& shape) {
  return Monomial{std::vector<int>(static_cast<std::size_t>(shape.num_vars()), 0), 0};
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial r{a.z, a.q2 + b.q2};
  for (std::size_t k = 0; k < r.z.size(); ++k) r.z[k] += b.z[k];
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(const BlockShape& shape, const Rational& c) {
  return term(shape, unit_monomial(shape), c);
}

LaurentPoly LaurentPoly::variable(const BlockShape& shape, int block, int mu,
                                  int exponent) {
  Monomial m = unit_monomial(shape);
  m.z[static_cast<std::size_t>(shape.var_index(block, mu))] = exponent;
  return term(shape, std::move(m), 1);
}

LaurentPoly LaurentPoly::q_power(const BlockShape& shape, int half_units,
                                 const Rational& c) {
  Monomial m = unit_monomial(shape);
  m.q2 = half_units;
  return term(shape, std::move(m), c);
}

LaurentPoly LaurentPoly::term(const BlockShape& shape, Monomial m,
                              const Rational& c) {
  if (m.z.size() != static_cast<std::size_t>(shape.num_vars())) {
    throw AlgebraError("monomial does not match shape");
  }
  LaurentPoly p(shape);
  p.add_term(m, c);
  return p;
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::is_z_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_z_free(); });
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  Rational v = c;
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::require_same_shape(const LaurentPoly& other) const {
  if (!(shape_ == other.shape_)) {
    throw AlgebraError("shape mismatch between Laurent polynomials");
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_shape(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_shape(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_shape(b);
  LaurentPoly r(a.shape_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(multiply(ma, mb), ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) throw AlgebraError("negative power of a polynomial");
  LaurentPoly result = constant(shape_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::term_inverse() const {
  if (terms_.size() != 1) {
    throw AlgebraError("only single terms are invertible");
  }
  const auto& [m, c] = *terms_.begin();
  Monomial inv{m.z, -m.q2};
  for (int& e : inv.z) e = -e;
  return term(shape_, std::move(inv), 1 / c);
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  if (m.z.size() != static_cast<std::size_t>(shape_.num_vars())) {
    throw AlgebraError("monomial does not match shape");
  }
  LaurentPoly r(shape_);
  for (const auto& [t, c] : terms_) r.terms_.emplace(multiply(t, m), c);
  return r;
}

LaurentPoly LaurentPoly::swap_vars(int block, int mu, int nu) const {
  auto i = static_cast<std::size_t>(shape_.var_index(block, mu));
  auto j = static_cast<std::size_t>(shape_.var_index(block, nu));
  LaurentPoly r(shape_);
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    std::swap(s.z[i], s.z[j]);
    r.terms_.emplace(std::move(s), c);
  }
  return r;
}

LaurentPoly LaurentPoly::reshaped(const BlockShape& target) const {
  if (shape_ == target) return *this;
  // Source variable k goes to dest[k] in the target.
  std::vector<int> dest;
  dest.reserve(static_cast<std::size_t>(shape_.num_vars()));
  for (const auto& b : shape_.blocks()) {
    auto pos = target.position(b.id);
    for (int mu = 1; mu <= b.size; ++mu) {
      if (pos && mu <= target.blocks()[*pos].size) {
        dest.push_back(target.offset(*pos) + mu - 1);
      } else {
        dest.push_back(-1);
      }
    }
  }
  LaurentPoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t = unit_monomial(target);
    t.q2 = m.q2;
    for (std::size_t k = 0; k < m.z.size(); ++k) {
      if (m.z[k] == 0) continue;
      if (dest[k] < 0) {
        throw AlgebraError("variable has no counterpart in target shape");
      }
      t.z[static_cast<std::size_t>(dest[k])] = m.z[k];
    }
    r.terms_.emplace(std::move(t), c);
  }
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

namespace {

std::string q_factor(int q2) {
  if (q2 % 2 != 0) return "q^{" + std::to_string(q2) + "/2}";
  int e = q2 / 2;
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

std::string z_name(const BlockShape& shape, std::size_t var) {
  std::size_t pos = 0;
  while (pos + 1 < shape.num_blocks() &&
         static_cast<std::size_t>(shape.offset(pos + 1)) <= var) {
    ++pos;
  }
  int mu = static_cast<int>(var) - shape.offset(pos) + 1;
  if (shape.num_blocks() == 1) return "z" + std::to_string(mu);
  return "z[" + std::to_string(shape.blocks()[pos].id) + "][" +
         std::to_string(mu) + "]";
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::vector<std::string> factors;
    if (m.q2 != 0) factors.push_back(q_factor(m.q2));
    for (std::size_t k = 0; k < m.z.size(); ++k) {
      if (m.z[k] == 0) continue;
      std::string f = z_name(shape_, k);
      if (m.z[k] != 1) f += "^" + std::to_string(m.z[k]);
      factors.push_back(std::move(f));
    }
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (factors.empty()) {
      out << rational_to_string(mag);
      continue;
    }
    if (mag != 1) out << rational_to_string(mag) << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k > 0) out << "*";
      out << factors[k];
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Free operations

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly bar_involution(const LaurentPoly& f) {
  LaurentPoly r(f.shape());
  for (const auto& [m, c] : f.terms()) {
    Monomial b = m;
    for (int& e : b.z) e = -e;
    r.add_term(b, c);
  }
  return r;
}

LaurentPoly constant_term(const LaurentPoly& f) {
  LaurentPoly r(f.shape());
  for (const auto& [m, c] : f.terms()) {
    if (m.is_z_free()) r.add_term(m, c);
  }
  return r;
}

LaurentPoly constant_term_of_product(const LaurentPoly& a,
                                     const LaurentPoly& b) {
  if (!(a.shape() == b.shape())) {
    throw AlgebraError("shape mismatch between Laurent polynomials");
  }
  LaurentPoly r(a.shape());
  const auto& bt = b.terms();
  for (const auto& [ma, ca] : a.terms()) {
    Monomial key{ma.z, INT_MIN};
    for (int& e : key.z) e = -e;
    for (auto it = bt.lower_bound(key); it != bt.end() && it->first.z == key.z;
         ++it) {
      Monomial m{std::vector<int>(ma.z.size(), 0), ma.q2 + it->first.q2};
      r.add_term(m, ca * it->second);
    }
  }
  return r;
}

LaurentPoly q_part(const LaurentPoly& f) {
  LaurentPoly r{BlockShape{}};
  for (const auto& [m, c] : f.terms()) {
    if (!m.is_z_free()) {
      throw AlgebraError("polynomial still depends on z variables");
    }
    r.add_term(Monomial{{}, m.q2}, c);
  }
  return r;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
  Rational r = 1;
  Rational b = e >= 0 ? base : Rational(1 / base);
  for (int n = e >= 0 ? e : -e; n > 0; --n) r *= b;
  return r;
}

}  // namespace

LaurentPoly evaluate(const LaurentPoly& f,
                     const std::map<VarRef, Rational>& zvals) {
  const BlockShape& shape = f.shape();
  std::vector<std::optional<Rational>> values(
      static_cast<std::size_t>(shape.num_vars()));
  for (const auto& [ref, v] : zvals) {
    if (v == 0) {
      throw AlgebraError("z variables are invertible; zero value for z[" +
                         std::to_string(ref.block) + "][" +
                         std::to_string(ref.mu) + "]");
    }
    values[static_cast<std::size_t>(shape.var_index(ref.block, ref.mu))] = v;
  }
  LaurentPoly r{BlockShape{}};
  for (const auto& [m, c] : f.terms()) {
    Rational v = c;
    for (std::size_t k = 0; k < m.z.size(); ++k) {
      if (m.z[k] == 0) continue;
      if (!values[k]) {
        throw AlgebraError("missing value for variable " + z_name(shape, k));
      }
      v *= rational_pow(*values[k], m.z[k]);
    }
    r.add_term(Monomial{{}, m.q2}, v);
  }
  return r;
}

LaurentPoly evaluate_sqrt_q(const LaurentPoly& f, const Rational& t) {
  if (t == 0) throw AlgebraError("q^{1/2} must be nonzero");
  LaurentPoly r(f.shape());
  for (const auto& [m, c] : f.terms()) {
    Monomial z{m.z, 0};
    r.add_term(z, c * rational_pow(t, m.q2));
  }
  return r;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.shape() == b.shape())) {
    throw AlgebraError("shape mismatch between Laurent polynomials");
  }
  if (b.is_zero()) throw AlgebraError("division by zero polynomial");
  auto nonnegative = [](const LaurentPoly& p) {
    for (const auto& [m, c] : p.terms()) {
      if (m.q2 < 0) return false;
      for (int e : m.z) {
        if (e < 0) return false;
      }
    }
    return true;
  };
  if (!nonnegative(a) || !nonnegative(b)) {
    throw AlgebraError("divide_exact requires non-negative exponents");
  }
  const auto& [lead_m, lead_c] = *b.terms().rbegin();
  LaurentPoly rem = a;
  LaurentPoly quot(a.shape());
  // Lex order on N^n is a well-order, so this loop terminates.
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().rbegin();
    Monomial qm{rm.z, rm.q2 - lead_m.q2};
    bool ok = qm.q2 >= 0;
    for (std::size_t k = 0; k < qm.z.size(); ++k) {
      qm.z[k] -= lead_m.z[k];
      ok = ok && qm.z[k] >= 0;
    }
    if (!ok) throw AlgebraError("inexact polynomial division");
    Rational qc = rc / lead_c;
    quot.add_term(qm, qc);
    rem -= b.shifted(qm) * qc;
  }
  return quot;
}

}  // namespace acell
