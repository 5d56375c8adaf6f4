#pragma once

// One cell layer U[lambda] as a generalized matrix algebra over R(G_lambda).
//
// A layer is described by a CellDatum: the basis labels B_W, weight data
// for the q-power of the multiplication rule, and the Gram form
// Psi(b, b') = ((G(b) u, G(b') u)) with values in block-symmetric Laurent
// polynomials. Elements are finite sums of triples (b, s, b') with s in
// R(G_lambda)[q^{+-1/2}], multiplied by
//
//   (b1, s1, b1') (b2, s2, b2') = q^{n(b1')} (b1, s1 s2 Psi(b2, b1'), b2'),
//   n(b) = (wt b, 2 lambda + wt b) / 2.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "acell/laurent.hpp"
#include "acell/symfunc.hpp"

namespace acell {

struct WeightData {
  int rank = 0;
  // rank x rank symmetric bilinear form on the weight lattice.
  std::vector<std::vector<Rational>> form;
  std::vector<int> lambda;
  std::map<std::string, std::vector<int>> wt;

  // (x, y) under the form.
  Rational pair(const std::vector<int>& x, const std::vector<int>& y) const;
};

// n = (wt, 2 lambda + wt)/2 in half-units, i.e. (wt, 2 lambda + wt).
// Throws when that value is not an integer.
int q_exponent(const std::vector<int>& wt, const WeightData& wd);
int q_exponent(const std::string& label, const WeightData& wd);

class CellDatum {
 public:
  using GramMap = std::map<std::pair<std::string, std::string>, LaurentPoly>;

  // Checks structure only: distinct labels, a weight vector per label, a
  // symmetric form of the declared rank, gram keys naming known labels and
  // gram values in `shape`. Loader invariants are reported separately by
  // datum_violations().
  CellDatum(BlockShape shape, std::vector<std::string> labels, WeightData weights,
            GramMap gram, std::optional<std::string> unit_label = std::nullopt);

  const BlockShape& shape() const { return shape_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  const WeightData& weights() const { return weights_; }
  const std::optional<std::string>& unit_label() const { return unit_label_; }
  std::optional<std::size_t> unit_index() const;

  std::size_t index_of(const std::string& label) const;

  // Psi(b, b'), zero when not listed.
  const LaurentPoly& gram(std::size_t b, std::size_t b2) const;
  // Psi(b, b') in the Schur basis; throws if that value is not symmetric.
  const SchurExpansion& gram_expansion(std::size_t b, std::size_t b2) const;
  bool gram_is_symmetric(std::size_t b, std::size_t b2) const;

  // n(b) in half-units.
  int q_exponent(std::size_t b) const { return q_exponents_[b]; }

  // The gram entries as given (nonzero values only).
  const GramMap& gram_entries() const { return gram_entries_; }

 private:
  BlockShape shape_;
  std::vector<std::string> labels_;
  WeightData weights_;
  GramMap gram_entries_;
  std::optional<std::string> unit_label_;
  std::map<std::string, std::size_t> index_;
  std::vector<int> q_exponents_;
  std::vector<LaurentPoly> gram_;
  std::vector<std::optional<SchurExpansion>> expansions_;
  LaurentPoly zero_;
};

using DatumPtr = std::shared_ptr<const CellDatum>;

// Loader invariants that `d` violates: block symmetry of every gram value,
// the support condition (Psi(b, b') = 0 unless wt b = wt b') and, when a
// unit label is declared, Psi(b0, b0) = 1 and n(b0) = 0. Empty when valid.
std::vector<std::string> datum_violations(const CellDatum& d);

// Element of the layer: sum over (b, b') of (b, S, b').
class CellElement {
 public:
  using Key = std::pair<std::size_t, std::size_t>;
  using TermMap = std::map<Key, SchurExpansion>;

  explicit CellElement(DatumPtr datum);

  // (b, s, b')
  static CellElement basis(DatumPtr datum, std::size_t b, const SchurExpansion& s,
                           std::size_t b2);
  // (b0, 1, b0) for the datum's unit label.
  static CellElement unit(DatumPtr datum);

  const DatumPtr& datum() const { return datum_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::size_t b, const SchurExpansion& s, std::size_t b2);

  CellElement& operator+=(const CellElement& other);
  friend CellElement operator+(CellElement a, const CellElement& b) { return a += b; }

  friend bool operator==(const CellElement& a, const CellElement& b) {
    return a.datum_ == b.datum_ && a.terms_ == b.terms_;
  }

  // "b | S | b' ; ..." with terms in label order.
  std::string to_string() const;

 private:
  DatumPtr datum_;
  TermMap terms_;
};

// Vector sum_b f_b(z) G(b) u_lambda of the module, f_b arbitrary Laurent.
class ModuleVector {
 public:
  explicit ModuleVector(DatumPtr datum);

  // G(b) u_lambda
  static ModuleVector unit(DatumPtr datum, std::size_t b);

  const DatumPtr& datum() const { return datum_; }
  const std::map<std::size_t, LaurentPoly>& coords() const { return coords_; }

  void add(std::size_t b, const LaurentPoly& f);
  // f * x, coordinatewise.
  ModuleVector scaled(const LaurentPoly& f) const;

  ModuleVector& operator+=(const ModuleVector& other);

 private:
  DatumPtr datum_;
  std::map<std::size_t, LaurentPoly> coords_;
};

// sum x_b * bar(y_b') * Psi(b, b')
LaurentPoly module_pairing(const ModuleVector& x, const ModuleVector& y);

// Multiplication rule of the layer, extended bilinearly.
CellElement cell_mul(const CellElement& x, const CellElement& y);
inline CellElement operator*(const CellElement& x, const CellElement& y) {
  return cell_mul(x, y);
}

// Anti-involution (b, s, b') -> (b', sigma(s), b).
CellElement sharp(const CellElement& x);

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string id;     // "a" .. "f"
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // first counterexample or reason for skipping
};

struct CellReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Random element with up to `max_terms` triples, Schur parts in
// [-part_bound, part_bound] and q-power coefficients.
CellElement random_cell_element(const DatumPtr& datum, std::mt19937_64& rng,
                                int max_terms = 3, int part_bound = 1);

// Runs the generalized-matrix-algebra checks on `d`:
//  (a) gram values block-symmetric
//  (b) sigma-symmetry bar(Psi(b, b')) = Psi(b', b)
//  (c) support condition
//  (d) associativity on `samples` random triples
//  (e) sharp(xy) = sharp(y) sharp(x) on `samples` random pairs
//  (f) unit-label conditions
CellReport verify_cell_axioms(const DatumPtr& d, int samples, std::uint64_t seed);

enum class Idempotency { yes, inconclusive };

// `yes` when some Psi(b, b') is a unit of R(G)[q^{+-1/2}].
Idempotency layer_idempotent(const CellDatum& d);

// A finite chain of layers, ordered from the top of the ideal chain down.
class LayerChain {
 public:
  void push_back(DatumPtr layer) { layers_.push_back(std::move(layer)); }
  const std::vector<DatumPtr>& layers() const { return layers_; }
  // Every layer has a unit Gram value.
  bool all_idempotent() const;

 private:
  std::vector<DatumPtr> layers_;
};

std::string to_string(CheckStatus s);
std::string to_string(Idempotency i);

}  // namespace acell
