#include "acell/cellalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "acell/error.hpp"

namespace acell {

// ---------------------------------------------------------------------------
// Weights

Rational WeightData::pair(const std::vector<int>& x, const std::vector<int>& y) const {
  const auto r = static_cast<std::size_t>(rank);
  if (x.size() != r || y.size() != r) {
    throw AlgebraError("weight vector length does not match rank");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) s += form[i][j] * x[i] * y[j];
  }
  return s;
}

int q_exponent(const std::vector<int>& wt, const WeightData& wd) {
  std::vector<int> shifted = wt;
  if (wd.lambda.size() != wt.size()) {
    throw AlgebraError("weight vector length does not match rank");
  }
  for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] += 2 * wd.lambda[k];
  Rational twice_n = wd.pair(wt, shifted);
  if (twice_n.get_den() != 1 || !twice_n.get_num().fits_sint_p()) {
    throw AlgebraError("q exponent " + rational_to_string(twice_n) +
                       "/2 is not a half-integer");
  }
  return static_cast<int>(twice_n.get_num().get_si());
}

int q_exponent(const std::string& label, const WeightData& wd) {
  auto it = wd.wt.find(label);
  if (it == wd.wt.end()) throw AlgebraError("missing weight for label " + label);
  return q_exponent(it->second, wd);
}

// ---------------------------------------------------------------------------
// CellDatum

CellDatum::CellDatum(BlockShape shape, std::vector<std::string> labels,
                     WeightData weights, GramMap gram,
                     std::optional<std::string> unit_label)
    : shape_(std::move(shape)),
      labels_(std::move(labels)),
      weights_(std::move(weights)),
      unit_label_(std::move(unit_label)),
      zero_(shape_) {
  if (labels_.empty()) throw AlgebraError("a cell datum needs at least one label");
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k].empty()) throw AlgebraError("empty basis label");
    if (!index_.emplace(labels_[k], k).second) {
      throw AlgebraError("duplicate label " + labels_[k]);
    }
  }

  const auto rank = static_cast<std::size_t>(weights_.rank);
  if (weights_.rank <= 0) throw AlgebraError("weight rank must be positive");
  if (weights_.form.size() != rank) throw AlgebraError("form matrix has wrong size");
  for (const auto& row : weights_.form) {
    if (row.size() != rank) throw AlgebraError("form matrix has wrong size");
  }
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (weights_.form[i][j] != weights_.form[j][i]) {
        throw AlgebraError("form matrix is not symmetric");
      }
    }
  }
  if (weights_.lambda.size() != rank) throw AlgebraError("lambda has wrong length");
  for (const auto& [label, w] : weights_.wt) {
    if (!index_.count(label)) throw AlgebraError("weight given for unknown label " + label);
    if (w.size() != rank) throw AlgebraError("weight of label " + label + " has wrong length");
  }
  for (const auto& label : labels_) {
    if (!weights_.wt.count(label)) throw AlgebraError("missing weight for label " + label);
    q_exponents_.push_back(acell::q_exponent(label, weights_));
  }

  const std::size_t n = labels_.size();
  gram_.assign(n * n, zero_);
  expansions_.assign(n * n, std::nullopt);
  for (auto& [key, value] : gram) {
    const std::size_t b = index_of(key.first);
    const std::size_t b2 = index_of(key.second);
    if (!(value.shape() == shape_)) {
      throw AlgebraError("gram value at (" + key.first + "," + key.second +
                         ") has the wrong shape");
    }
    if (value.is_zero()) continue;
    gram_[b * n + b2] = value;
    gram_entries_.emplace(key, std::move(value));
  }
  for (std::size_t k = 0; k < n * n; ++k) {
    if (is_block_symmetric(gram_[k])) expansions_[k] = schur_expand(gram_[k]);
  }
  if (unit_label_ && !index_.count(*unit_label_)) {
    throw AlgebraError("unit label " + *unit_label_ + " is not a basis label");
  }
}

std::optional<std::size_t> CellDatum::unit_index() const {
  if (!unit_label_) return std::nullopt;
  return index_of(*unit_label_);
}

std::size_t CellDatum::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw AlgebraError("unknown label " + label);
  return it->second;
}

const LaurentPoly& CellDatum::gram(std::size_t b, std::size_t b2) const {
  return gram_.at(b * labels_.size() + b2);
}

bool CellDatum::gram_is_symmetric(std::size_t b, std::size_t b2) const {
  return expansions_.at(b * labels_.size() + b2).has_value();
}

const SchurExpansion& CellDatum::gram_expansion(std::size_t b, std::size_t b2) const {
  const auto& e = expansions_.at(b * labels_.size() + b2);
  if (!e) {
    throw AlgebraError("gram value at (" + labels_[b] + "," + labels_[b2] +
                       ") is not block-symmetric");
  }
  return *e;
}

std::vector<std::string> datum_violations(const CellDatum& d) {
  std::vector<std::string> out;
  const auto& labels = d.labels();
  for (std::size_t b = 0; b < d.size(); ++b) {
    for (std::size_t b2 = 0; b2 < d.size(); ++b2) {
      const std::string at = "(" + labels[b] + "," + labels[b2] + ")";
      if (!d.gram_is_symmetric(b, b2)) {
        out.push_back("gram not block-symmetric at " + at);
      }
      if (!d.gram(b, b2).is_zero() &&
          d.weights().wt.at(labels[b]) != d.weights().wt.at(labels[b2])) {
        out.push_back("gram nonzero between different weights at " + at);
      }
    }
  }
  if (auto u = d.unit_index()) {
    if (!(d.gram(*u, *u) == LaurentPoly::constant(d.shape(), 1))) {
      out.push_back("unit label " + labels[*u] + " has gram value other than 1");
    }
    if (d.q_exponent(*u) != 0) {
      out.push_back("unit label " + labels[*u] + " has nonzero q exponent");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// CellElement

CellElement::CellElement(DatumPtr datum) : datum_(std::move(datum)) {
  if (!datum_) throw AlgebraError("cell element without datum");
}

CellElement CellElement::basis(DatumPtr datum, std::size_t b, const SchurExpansion& s,
                               std::size_t b2) {
  CellElement x(std::move(datum));
  x.add_term(b, s, b2);
  return x;
}

CellElement CellElement::unit(DatumPtr datum) {
  auto u = datum->unit_index();
  if (!u) throw AlgebraError("datum has no unit label");
  SchurExpansion one = SchurExpansion::one(datum->shape());
  return basis(std::move(datum), *u, one, *u);
}

void CellElement::add_term(std::size_t b, const SchurExpansion& s, std::size_t b2) {
  if (b >= datum_->size() || b2 >= datum_->size()) {
    throw AlgebraError("label index out of range");
  }
  if (!(s.shape() == datum_->shape())) {
    throw AlgebraError("coefficient shape does not match the datum");
  }
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{b, b2}, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CellElement& CellElement::operator+=(const CellElement& other) {
  if (datum_ != other.datum_) throw AlgebraError("cell elements of different data");
  for (const auto& [key, s] : other.terms_) add_term(key.first, s, key.second);
  return *this;
}

std::string CellElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, s] : terms_) {
    if (!first) out << " ; ";
    first = false;
    out << datum_->labels()[key.first] << " | " << s.to_string() << " | "
        << datum_->labels()[key.second];
  }
  return out.str();
}

CellElement cell_mul(const CellElement& x, const CellElement& y) {
  if (x.datum() != y.datum()) throw AlgebraError("cell elements of different data");
  const CellDatum& d = *x.datum();
  CellElement r(x.datum());
  for (const auto& [kx, s1] : x.terms()) {
    const LaurentPoly p1 = s1.to_poly();
    const LaurentPoly qn = LaurentPoly::q_power(d.shape(), d.q_exponent(kx.second));
    for (const auto& [ky, s2] : y.terms()) {
      const LaurentPoly& psi = d.gram(ky.first, kx.second);
      if (psi.is_zero()) continue;
      d.gram_expansion(ky.first, kx.second);  // throws on asymmetric values
      r.add_term(kx.first, schur_expand(qn * p1 * s2.to_poly() * psi), ky.second);
    }
  }
  return r;
}

CellElement sharp(const CellElement& x) {
  CellElement r(x.datum());
  for (const auto& [key, s] : x.terms()) r.add_term(key.second, dual(s), key.first);
  return r;
}

// ---------------------------------------------------------------------------
// ModuleVector

ModuleVector::ModuleVector(DatumPtr datum) : datum_(std::move(datum)) {
  if (!datum_) throw AlgebraError("module vector without datum");
}

ModuleVector ModuleVector::unit(DatumPtr datum, std::size_t b) {
  ModuleVector v(std::move(datum));
  v.add(b, LaurentPoly::constant(v.datum_->shape(), 1));
  return v;
}

void ModuleVector::add(std::size_t b, const LaurentPoly& f) {
  if (b >= datum_->size()) throw AlgebraError("label index out of range");
  if (f.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(b, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

ModuleVector ModuleVector::scaled(const LaurentPoly& f) const {
  ModuleVector r(datum_);
  for (const auto& [b, c] : coords_) r.add(b, f * c);
  return r;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  if (datum_ != other.datum_) throw AlgebraError("module vectors of different data");
  for (const auto& [b, c] : other.coords_) add(b, c);
  return *this;
}

LaurentPoly module_pairing(const ModuleVector& x, const ModuleVector& y) {
  if (x.datum() != y.datum()) throw AlgebraError("module vectors of different data");
  const CellDatum& d = *x.datum();
  LaurentPoly r(d.shape());
  for (const auto& [b, f] : x.coords()) {
    for (const auto& [b2, g] : y.coords()) {
      const LaurentPoly& psi = d.gram(b, b2);
      if (psi.is_zero()) continue;
      r += f * bar_involution(g) * psi;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Verification

bool CellReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIP";
  }
  return "?";
}

std::string to_string(Idempotency i) {
  return i == Idempotency::yes ? "yes" : "inconclusive";
}

CellElement random_cell_element(const DatumPtr& datum, std::mt19937_64& rng,
                                int max_terms, int part_bound) {
  const CellDatum& d = *datum;
  const BlockShape& shape = d.shape();
  const BlockShape qshape;
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto random_weight = [&](int m) {
    std::vector<int> parts(static_cast<std::size_t>(m));
    for (int& p : parts) p = uniform(-part_bound, part_bound);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return GLWeight(std::move(parts));
  };
  auto random_coefficient = [&] {
    int c = 0;
    while (c == 0) c = uniform(-2, 2);
    return LaurentPoly::q_power(qshape, uniform(-2, 2), c);
  };

  CellElement x(datum);
  const int last = static_cast<int>(d.size()) - 1;
  for (int t = uniform(1, std::max(1, max_terms)); t > 0; --t) {
    SchurExpansion s(shape);
    for (int k = uniform(1, 2); k > 0; --k) {
      SchurKey key;
      for (const auto& b : shape.blocks()) key.push_back(random_weight(b.size));
      s.add_term(key, random_coefficient());
    }
    x.add_term(static_cast<std::size_t>(uniform(0, last)), s,
               static_cast<std::size_t>(uniform(0, last)));
  }
  return x;
}

CellReport verify_cell_axioms(const DatumPtr& dp, int samples, std::uint64_t seed) {
  const CellDatum& d = *dp;
  const auto& labels = d.labels();
  CellReport report;
  auto at = [&](std::size_t b, std::size_t b2) {
    return "(" + labels[b] + "," + labels[b2] + ")";
  };

  CheckResult sym{"a", "gram values block-symmetric", CheckStatus::pass, ""};
  CheckResult sigma{"b", "sigma-symmetry bar(gram(b,b')) = gram(b',b)", CheckStatus::pass, ""};
  CheckResult support{"c", "gram vanishes across distinct weights", CheckStatus::pass, ""};
  for (std::size_t b = 0; b < d.size(); ++b) {
    for (std::size_t b2 = 0; b2 < d.size(); ++b2) {
      if (sym.status == CheckStatus::pass && !d.gram_is_symmetric(b, b2)) {
        sym.status = CheckStatus::fail;
        sym.detail = "not symmetric at " + at(b, b2);
      }
      if (sigma.status == CheckStatus::pass &&
          !(bar_involution(d.gram(b, b2)) == d.gram(b2, b))) {
        sigma.status = CheckStatus::fail;
        sigma.detail = "fails at " + at(b, b2);
      }
      if (support.status == CheckStatus::pass && !d.gram(b, b2).is_zero() &&
          d.weights().wt.at(labels[b]) != d.weights().wt.at(labels[b2])) {
        support.status = CheckStatus::fail;
        support.detail = "nonzero at " + at(b, b2);
      }
    }
  }
  report.checks.push_back(sym);
  report.checks.push_back(sigma);
  report.checks.push_back(support);

  CheckResult assoc{"d", "associativity (xy)z = x(yz)", CheckStatus::pass, ""};
  CheckResult anti{"e", "anti-multiplicativity sharp(xy) = sharp(y)sharp(x)",
                   CheckStatus::pass, ""};
  if (sym.status == CheckStatus::fail) {
    assoc.status = anti.status = CheckStatus::skipped;
    assoc.detail = anti.detail = "requires (a)";
  } else {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples && assoc.status == CheckStatus::pass; ++k) {
      CellElement x = random_cell_element(dp, rng);
      CellElement y = random_cell_element(dp, rng);
      CellElement z = random_cell_element(dp, rng);
      if (!((x * y) * z == x * (y * z))) {
        assoc.status = CheckStatus::fail;
        assoc.detail = "x = [" + x.to_string() + "], y = [" + y.to_string() + "], z = [" +
                       z.to_string() + "]";
      }
    }
    for (int k = 0; k < samples && anti.status == CheckStatus::pass; ++k) {
      CellElement x = random_cell_element(dp, rng);
      CellElement y = random_cell_element(dp, rng);
      if (!(sharp(x * y) == sharp(y) * sharp(x))) {
        anti.status = CheckStatus::fail;
        anti.detail = "x = [" + x.to_string() + "], y = [" + y.to_string() + "]";
      }
    }
  }
  report.checks.push_back(assoc);
  report.checks.push_back(anti);

  CheckResult unit{"f", "unit label idempotent", CheckStatus::pass, ""};
  if (auto u = d.unit_index()) {
    if (!(d.gram(*u, *u) == LaurentPoly::constant(d.shape(), 1))) {
      unit.status = CheckStatus::fail;
      unit.detail = "gram" + at(*u, *u) + " != 1";
    } else if (d.q_exponent(*u) != 0) {
      unit.status = CheckStatus::fail;
      unit.detail = "n(" + labels[*u] + ") != 0";
    } else {
      CellElement e = CellElement::unit(dp);
      if (!(e * e == e) || !(sharp(e) == e)) {
        unit.status = CheckStatus::fail;
        unit.detail = "e*e != e or sharp(e) != e";
      }
    }
  } else {
    unit.status = CheckStatus::skipped;
    unit.detail = "no unit label";
  }
  report.checks.push_back(unit);
  return report;
}

Idempotency layer_idempotent(const CellDatum& d) {
  for (std::size_t b = 0; b < d.size(); ++b) {
    for (std::size_t b2 = 0; b2 < d.size(); ++b2) {
      if (d.gram_is_symmetric(b, b2) && is_unit(d.gram_expansion(b, b2))) {
        return Idempotency::yes;
      }
    }
  }
  return Idempotency::inconclusive;
}

bool LayerChain::all_idempotent() const {
  return std::all_of(layers_.begin(), layers_.end(), [](const DatumPtr& l) {
    return layer_idempotent(*l) == Idempotency::yes;
  });
}

}  // namespace acell
