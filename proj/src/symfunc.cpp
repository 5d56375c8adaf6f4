#include "acell/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "acell/error.hpp"

namespace acell {

// ---------------------------------------------------------------------------
// GLWeight

GLWeight::GLWeight(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 1; k < parts_.size(); ++k) {
    if (parts_[k - 1] < parts_[k]) {
      throw AlgebraError("GL weight " + to_string() + " is not weakly decreasing");
    }
  }
}

int GLWeight::degree() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

GLWeight GLWeight::shifted(int k) const {
  std::vector<int> p = parts_;
  for (int& x : p) x += k;
  return GLWeight(std::move(p));
}

bool GLWeight::is_rectangular() const {
  return std::adjacent_find(parts_.begin(), parts_.end(),
                            std::not_equal_to<>()) == parts_.end();
}

std::string GLWeight::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

GLWeight dual_weight(const GLWeight& w) {
  std::vector<int> p(w.parts().rbegin(), w.parts().rend());
  for (int& x : p) x = -x;
  return GLWeight(std::move(p));
}

std::vector<GLWeight> weights_in_range(int m, int lo, int hi) {
  std::vector<GLWeight> out;
  std::vector<int> parts(static_cast<std::size_t>(m));
  auto rec = [&](auto&& self, int pos, int upper) -> void {
    if (pos == m) {
      out.emplace_back(parts);
      return;
    }
    for (int v = upper; v >= lo; --v) {
      parts[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  if (m >= 0 && lo <= hi) rec(rec, 0, hi);
  return out;
}

// ---------------------------------------------------------------------------
// Schur polynomials

namespace {

// Bialternant a_{w+rho} / a_rho for w with non-negative parts.
LaurentPoly polynomial_schur(int m, const GLWeight& w) {
  const BlockShape shape = BlockShape::single(m);
  if (m == 0) return LaurentPoly::constant(shape, 1);

  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  auto sign_of = [&] {
    int inversions = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
      }
    }
    return inversions % 2 == 0 ? 1 : -1;
  };

  LaurentPoly numerator(shape);
  do {
    Monomial mono{std::vector<int>(static_cast<std::size_t>(m), 0), 0};
    for (int i = 0; i < m; ++i) {
      mono.z[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
          w[static_cast<std::size_t>(i)] + m - 1 - i;
    }
    numerator.add_term(mono, sign_of());
  } while (std::next_permutation(perm.begin(), perm.end()));

  LaurentPoly vandermonde = LaurentPoly::constant(shape, 1);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      vandermonde = vandermonde * (LaurentPoly::variable(shape, 1, i) -
                                   LaurentPoly::variable(shape, 1, j));
    }
  }
  return divide_exact(numerator, vandermonde);
}

struct SchurCache {
  std::mutex mutex;
  std::map<GLWeight, LaurentPoly> table;
};

SchurCache& schur_cache() {
  static SchurCache cache;
  return cache;
}

// Copies a one-block polynomial into the block at `pos` of `shape`.
LaurentPoly embed_block(const LaurentPoly& f, const BlockShape& shape,
                        std::size_t pos) {
  LaurentPoly r(shape);
  const auto offset = static_cast<std::size_t>(shape.offset(pos));
  for (const auto& [m, c] : f.terms()) {
    Monomial t{std::vector<int>(static_cast<std::size_t>(shape.num_vars()), 0),
               m.q2};
    std::copy(m.z.begin(), m.z.end(), t.z.begin() + static_cast<std::ptrdiff_t>(offset));
    r.add_term(t, c);
  }
  return r;
}

LaurentPoly embed_q(const LaurentPoly& c, const BlockShape& shape) {
  LaurentPoly r(shape);
  for (const auto& [m, v] : c.terms()) {
    r.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(shape.num_vars()), 0), m.q2},
               v);
  }
  return r;
}

}  // namespace

LaurentPoly schur(int m, const GLWeight& w) {
  if (m < 0 || w.size() != static_cast<std::size_t>(m)) {
    throw AlgebraError("weight " + w.to_string() + " has length " +
                       std::to_string(w.size()) + ", expected " +
                       std::to_string(m));
  }
  auto& cache = schur_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.table.find(w); it != cache.table.end()) return it->second;
  }
  const int k = m > 0 ? std::max(0, -w[static_cast<std::size_t>(m - 1)]) : 0;
  LaurentPoly s = polynomial_schur(m, w.shifted(k));
  if (k != 0) {
    s = s.shifted(Monomial{std::vector<int>(static_cast<std::size_t>(m), -k), 0});
  }
  std::lock_guard lock(cache.mutex);
  cache.table.emplace(w, s);
  return s;
}

LaurentPoly schur(const BlockShape& shape, int block_id, const GLWeight& w) {
  auto pos = shape.position(block_id);
  if (!pos) throw AlgebraError("unknown block id " + std::to_string(block_id));
  return embed_block(schur(shape.blocks()[*pos].size, w), shape, *pos);
}

LaurentPoly schur_product(const BlockShape& shape, const SchurKey& key) {
  if (key.size() != shape.num_blocks()) {
    throw AlgebraError("Schur key has wrong number of blocks");
  }
  LaurentPoly r = LaurentPoly::constant(shape, 1);
  for (std::size_t pos = 0; pos < key.size(); ++pos) {
    const auto& b = shape.blocks()[pos];
    r = r * embed_block(schur(b.size, key[pos]), shape, pos);
  }
  return r;
}

bool is_symmetric(const LaurentPoly& f, int block_id) {
  const auto& b = f.shape().block_with_id(block_id);
  for (int mu = 1; mu < b.size; ++mu) {
    if (!(f.swap_vars(block_id, mu, mu + 1) == f)) return false;
  }
  return true;
}

bool is_block_symmetric(const LaurentPoly& f) {
  return std::all_of(f.shape().blocks().begin(), f.shape().blocks().end(),
                     [&](const auto& b) { return is_symmetric(f, b.id); });
}

SchurExpansion schur_expand(const LaurentPoly& f) {
  const BlockShape& shape = f.shape();
  for (const auto& b : shape.blocks()) {
    if (!is_symmetric(f, b.id)) {
      throw AlgebraError("polynomial is not symmetric in block " +
                         std::to_string(b.id));
    }
  }
  SchurExpansion result(shape);
  LaurentPoly rem = f;
  while (!rem.is_zero()) {
    const std::vector<int> lead = rem.terms().rbegin()->first.z;
    LaurentPoly c{BlockShape{}};
    for (auto it = rem.terms().rbegin();
         it != rem.terms().rend() && it->first.z == lead; ++it) {
      c.add_term(Monomial{{}, it->first.q2}, it->second);
    }
    SchurKey key;
    for (std::size_t pos = 0; pos < shape.num_blocks(); ++pos) {
      auto first = lead.begin() + shape.offset(pos);
      key.emplace_back(std::vector<int>(first, first + shape.blocks()[pos].size));
    }
    rem -= embed_q(c, shape) * schur_product(shape, key);
    result.add_term(key, c);
  }
  return result;
}

SchurExpansion lr_mul(const SchurExpansion& a, const SchurExpansion& b) {
  if (!(a.shape() == b.shape())) {
    throw AlgebraError("shape mismatch between Schur expansions");
  }
  return schur_expand(a.to_poly() * b.to_poly());
}

SchurExpansion dual(const SchurExpansion& e) {
  SchurExpansion r(e.shape());
  for (const auto& [key, c] : e.terms()) {
    SchurKey d;
    d.reserve(key.size());
    for (const auto& w : key) d.push_back(dual_weight(w));
    r.add_term(d, c);
  }
  return r;
}

bool is_unit(const SchurExpansion& e) {
  if (e.terms().size() != 1) return false;
  const auto& [key, c] = *e.terms().begin();
  if (c.size() != 1 || abs(c.terms().begin()->second) != 1) return false;
  return std::all_of(key.begin(), key.end(),
                     [](const GLWeight& w) { return w.is_rectangular(); });
}

// ---------------------------------------------------------------------------
// SchurExpansion

void SchurExpansion::check_key(const SchurKey& key) const {
  if (key.size() != shape_.num_blocks()) {
    throw AlgebraError("Schur key has wrong number of blocks");
  }
  for (std::size_t pos = 0; pos < key.size(); ++pos) {
    if (key[pos].size() != static_cast<std::size_t>(shape_.blocks()[pos].size)) {
      throw AlgebraError("weight " + key[pos].to_string() +
                         " does not match block size");
    }
  }
}

SchurExpansion SchurExpansion::single(const BlockShape& shape, SchurKey key,
                                      const LaurentPoly& c) {
  SchurExpansion e(shape);
  e.add_term(key, c);
  return e;
}

SchurExpansion SchurExpansion::one(const BlockShape& shape) {
  SchurKey key;
  for (const auto& b : shape.blocks()) {
    key.emplace_back(std::vector<int>(static_cast<std::size_t>(b.size), 0));
  }
  return single(shape, std::move(key), LaurentPoly::constant(BlockShape{}, 1));
}

void SchurExpansion::add_term(const SchurKey& key, const LaurentPoly& c) {
  if (c.shape().num_blocks() != 0) {
    throw AlgebraError("Schur coefficients must be Laurent polynomials in q");
  }
  if (c.is_zero()) return;
  check_key(key);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other) {
  if (!(shape_ == other.shape_)) {
    throw AlgebraError("shape mismatch between Schur expansions");
  }
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

SchurExpansion SchurExpansion::scaled(const LaurentPoly& c) const {
  SchurExpansion r(shape_);
  if (c.is_zero()) return r;
  for (const auto& [key, v] : terms_) r.add_term(key, v * c);
  return r;
}

LaurentPoly SchurExpansion::to_poly() const {
  LaurentPoly r(shape_);
  for (const auto& [key, c] : terms_) {
    r += embed_q(c, shape_) * schur_product(shape_, key);
  }
  return r;
}

std::string SchurExpansion::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, c] = *it;
    std::string basis;
    if (shape_.num_blocks() == 1) {
      basis = "s" + key[0].to_string();
    } else {
      for (std::size_t pos = 0; pos < key.size(); ++pos) {
        if (pos > 0) basis += "*";
        basis += "s[" + std::to_string(shape_.blocks()[pos].id) + "]" +
                 key[pos].to_string();
      }
      if (key.empty()) basis = "1";
    }
    if (c.size() == 1) {
      const auto& [m, v] = *c.terms().begin();
      const bool negative = v < 0;
      if (first) {
        if (negative) out << "-";
      } else {
        out << (negative ? " - " : " + ");
      }
      LaurentPoly mag = negative ? -c : c;
      if (!(mag == LaurentPoly::constant(BlockShape{}, 1))) {
        out << mag.to_string() << "*";
      }
    } else {
      if (!first) out << " + ";
      out << "(" << c.to_string() << ")*";
    }
    out << basis;
    first = false;
  }
  return out.str();
}

}  // namespace acell
