#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support/print.hpp"
#include "doctest.h"

#include <random>

#include "acell/cellalg.hpp"
#include "acell/datum.hpp"
#include "acell/error.hpp"
#include "acell/expr.hpp"
#include "support/generators.hpp"

using namespace acell;

namespace {

const BlockShape two = BlockShape::single(2);

LaurentPoly P(const char* text, const BlockShape& shape = two) { return parse_poly(text, shape); }

SchurExpansion S(const char* text, const BlockShape& shape = two) {
  return schur_expand(parse_poly(text, shape));
}

WeightData rank_one(int lambda, std::map<std::string, std::vector<int>> wt) {
  WeightData wd;
  wd.rank = 1;
  wd.form = {{Rational(1)}};
  wd.lambda = {lambda};
  wd.wt = std::move(wt);
  return wd;
}

DatumPtr make(const BlockShape& shape, std::vector<std::string> labels, WeightData wd,
              CellDatum::GramMap gram, std::optional<std::string> unit = std::nullopt) {
  return std::make_shared<const CellDatum>(shape, std::move(labels), std::move(wd),
                                           std::move(gram), std::move(unit));
}

DatumPtr unit_datum() {
  return make(two, {"b0"}, rank_one(2, {{"b0", {0}}}), {{{"b0", "b0"}, P("1")}}, "b0");
}

// Oracle: elements as (b, b') -> Laurent polynomial, multiplied straight
// from the rule with no Schur bookkeeping.
using PolyElement = std::map<std::pair<std::size_t, std::size_t>, LaurentPoly>;

PolyElement to_polys(const CellElement& x) {
  PolyElement out;
  for (const auto& [key, s] : x.terms()) out.emplace(key, s.to_poly());
  return out;
}

PolyElement poly_mul(const CellDatum& d, const PolyElement& x, const PolyElement& y) {
  PolyElement out;
  for (const auto& [kx, fx] : x) {
    for (const auto& [ky, fy] : y) {
      const LaurentPoly& psi = d.gram(ky.first, kx.second);
      if (psi.is_zero()) continue;
      const LaurentPoly qn = LaurentPoly::q_power(d.shape(), d.q_exponent(kx.second));
      LaurentPoly t = qn * fx * fy * psi;
      auto [it, fresh] = out.try_emplace({kx.first, ky.second}, d.shape());
      it->second += t;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

// Oracle for sharp: swap the labels and invert every variable.
PolyElement poly_sharp(const PolyElement& x) {
  PolyElement out;
  for (const auto& [k, f] : x) out.emplace(std::make_pair(k.second, k.first), bar_involution(f));
  return out;
}

}  // namespace

TEST_CASE("q_exponent") {
  const WeightData wd = rank_one(2, {{"b0", {0}}, {"b", {1}}, {"c", {-4}}});
  CHECK(q_exponent("b0", wd) == 0);
  CHECK(q_exponent("b", wd) == 5);  // 5/2 in half-units
  CHECK(q_exponent("c", wd) == 0);
  CHECK_THROWS_AS(q_exponent("nope", wd), AlgebraError);

  WeightData a2;
  a2.rank = 2;
  a2.form = {{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
  a2.lambda = {1, 0};
  a2.wt = {{"x", {-1, 1}}};
  // 2 lambda + wt = (1,1), form*(1,1) = (1,1), (-1,1).(1,1) = 0.
  CHECK(q_exponent("x", a2) == 0);
  a2.wt = {{"y", {1, 0}}};
  // 2 lambda + wt = (3,0), form*(3,0) = (6,-3), (1,0).(6,-3) = 6.
  CHECK(q_exponent("y", a2) == 6);
}

TEST_CASE("datum structure and loader invariants") {
  CHECK_THROWS_AS(make(two, {"a", "a"}, rank_one(0, {{"a", {0}}}), {}), AlgebraError);
  CHECK_THROWS_AS(make(two, {"a"}, rank_one(0, {}), {}), AlgebraError);
  CHECK_THROWS_AS(make(two, {"a"}, rank_one(0, {{"a", {0}}}), {{{"a", "x"}, P("1")}}),
                  AlgebraError);
  CHECK(datum_violations(*unit_datum()).empty());

  const auto asym = make(two, {"b"}, rank_one(0, {{"b", {0}}}), {{{"b", "b"}, P("z1-z2")}});
  const auto v = datum_violations(*asym);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "gram not block-symmetric at (b,b)");

  const auto support = make(two, {"a", "b"}, rank_one(0, {{"a", {0}}, {"b", {1}}}),
                            {{{"a", "b"}, P("1")}});
  REQUIRE(datum_violations(*support).size() == 1);

  const auto bad_unit = make(two, {"a"}, rank_one(0, {{"a", {0}}}), {{{"a", "a"}, P("2")}}, "a");
  CHECK(datum_violations(*bad_unit).size() == 1);
  const auto shifted_unit = make(two, {"a"}, rank_one(1, {{"a", {1}}}), {{{"a", "a"}, P("1")}}, "a");
  CHECK(datum_violations(*shifted_unit).size() == 1);
}

TEST_CASE("module_pairing") {
  std::mt19937_64 rng(41);
  const auto d = testing::random_valid_datum(rng, 3, 2);
  for (std::size_t b = 0; b < d->size(); ++b) {
    for (std::size_t b2 = 0; b2 < d->size(); ++b2) {
      CHECK(module_pairing(ModuleVector::unit(d, b), ModuleVector::unit(d, b2)) == d->gram(b, b2));
    }
  }
  const auto u = unit_datum();
  CHECK(module_pairing(ModuleVector::unit(u, 0), ModuleVector::unit(u, 0)) == P("1"));
  const BlockShape& shape = d->shape();
  for (int k = 0; k < 20; ++k) {
    ModuleVector x(d), y(d);
    for (std::size_t b = 0; b < d->size(); ++b) {
      x.add(b, testing::random_laurent(shape, rng, 2, 1));
      y.add(b, testing::random_laurent(shape, rng, 2, 1));
    }
    const LaurentPoly f = testing::random_laurent(shape, rng, 2, 1);
    const LaurentPoly g = testing::random_laurent(shape, rng, 2, 1);
    const LaurentPoly base = module_pairing(x, y);
    CHECK(module_pairing(x.scaled(f), y) == f * base);
    CHECK(module_pairing(x, y.scaled(g)) == bar_involution(g) * base);
    CHECK(module_pairing(x.scaled(f), y.scaled(g)) == f * bar_involution(g) * base);
  }
}

TEST_CASE("cell_mul examples") {
  const auto u = unit_datum();
  const CellElement e = CellElement::unit(u);
  CHECK(e * e == e);
  CHECK((e * CellElement(u)).is_zero());

  const auto d = make(two, {"b0", "b1"}, rank_one(2, {{"b0", {0}}, {"b1", {1}}}),
                      {{{"b0", "b0"}, P("1")}, {{"b1", "b1"}, P("7")}}, "b0");
  const SchurExpansion one = SchurExpansion::one(two);
  const CellElement x = CellElement::basis(d, 0, one, 1);
  const CellElement y = CellElement::basis(d, 1, one, 0);
  const SchurExpansion expected = one.scaled(LaurentPoly::q_power(BlockShape{}, 5, 7));
  CHECK(x * y == CellElement::basis(d, 0, expected, 0));
  CHECK((x * y).to_string() == "b0 | 7*q^{5/2}*s(0,0) | b0");
  // b0 and b1 do not pair.
  CHECK((y * y).is_zero());
  CHECK_THROWS_AS(x * CellElement::unit(u), AlgebraError);
}

TEST_CASE("cell_mul and sharp agree with the polynomial oracle") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 4; ++t) {
    const auto d = testing::random_valid_datum(rng, 3, 2);
    for (int k = 0; k < 15; ++k) {
      const CellElement x = random_cell_element(d, rng);
      const CellElement y = random_cell_element(d, rng);
      CHECK(to_polys(x * y) == poly_mul(*d, to_polys(x), to_polys(y)));
      CHECK(to_polys(sharp(x)) == poly_sharp(to_polys(x)));
    }
  }
}

TEST_CASE("algebra laws on random valid data") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 3; ++t) {
    const auto d = testing::random_valid_datum(rng, 3, 2);
    REQUIRE(datum_violations(*d).empty());
    const CellElement e = CellElement::unit(d);
    for (int k = 0; k < 15; ++k) {
      const CellElement x = random_cell_element(d, rng);
      const CellElement y = random_cell_element(d, rng);
      const CellElement z = random_cell_element(d, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(sharp(x * y) == sharp(y) * sharp(x));
      CHECK(sharp(sharp(x)) == x);
      CHECK(sharp(x + y) == sharp(x) + sharp(y));
      const CellElement exe = e * x * e;
      for (const auto& [key, s] : exe.terms()) {
        CHECK(key == std::make_pair(*d->unit_index(), *d->unit_index()));
      }
    }
    CHECK(e * e == e);
    CHECK(sharp(e) == e);
  }
}

TEST_CASE("sharp examples") {
  const auto u = unit_datum();
  CHECK(sharp(CellElement::unit(u)) == CellElement::unit(u));
  const auto d = make(two, {"b1", "b2"}, rank_one(0, {{"b1", {0}}, {"b2", {0}}}), {});
  CHECK(sharp(CellElement::basis(d, 0, S("z1+z2"), 1)) ==
        CellElement::basis(d, 1, S("z1^-1+z2^-1"), 0));
  CHECK(sharp(CellElement::basis(d, 0, S("q*(z1+z2)"), 1)).to_string() == "b2 | q*s(0,-1) | b1");
}

TEST_CASE("verify_cell_axioms") {
  const CellReport ok = verify_cell_axioms(unit_datum(), 10, 1);
  CHECK(ok.all_passed());
  REQUIRE(ok.checks.size() == 6);
  for (const auto& c : ok.checks) CHECK(c.status == CheckStatus::pass);

  const auto asym = make(two, {"b", "c"}, rank_one(0, {{"b", {0}}, {"c", {0}}}),
                         {{{"b", "c"}, P("z1-z2")}, {{"c", "b"}, P("z2^-1-z1^-1")}});
  const CellReport ra = verify_cell_axioms(asym, 5, 1);
  CHECK(ra.checks[0].status == CheckStatus::fail);
  CHECK(ra.checks[0].detail.find("(b,c)") != std::string::npos);
  CHECK(ra.checks[3].status == CheckStatus::skipped);
  CHECK(ra.checks[4].status == CheckStatus::skipped);
  CHECK(ra.checks[5].status == CheckStatus::skipped);

  const auto sig = make(two, {"b", "c"}, rank_one(0, {{"b", {0}}, {"c", {0}}}),
                        {{{"b", "c"}, P("z1+z2")}, {{"c", "b"}, P("z1+z2")}});
  const CellReport rs = verify_cell_axioms(sig, 10, 1);
  CHECK(rs.checks[0].status == CheckStatus::pass);
  CHECK(rs.checks[1].status == CheckStatus::fail);
  CHECK(rs.checks[2].status == CheckStatus::pass);
  CHECK(rs.checks[3].status == CheckStatus::pass);
  CHECK(!rs.all_passed());

  const auto sup = make(two, {"a", "b"}, rank_one(0, {{"a", {0}}, {"b", {1}}}),
                        {{{"a", "b"}, P("1")}, {{"b", "a"}, P("1")}});
  CHECK(verify_cell_axioms(sup, 5, 1).checks[2].status == CheckStatus::fail);

  const auto bad_unit = make(two, {"a"}, rank_one(0, {{"a", {0}}}), {{{"a", "a"}, P("2")}}, "a");
  CHECK(verify_cell_axioms(bad_unit, 5, 1).checks[5].status == CheckStatus::fail);

  // Same seed, same report.
  std::mt19937_64 rng(53);
  const auto d = testing::random_valid_datum(rng, 3, 2);
  const CellReport r1 = verify_cell_axioms(d, 8, 99);
  const CellReport r2 = verify_cell_axioms(d, 8, 99);
  CHECK(r1.all_passed());
  for (std::size_t k = 0; k < r1.checks.size(); ++k) CHECK(r1.checks[k].detail == r2.checks[k].detail);
}

TEST_CASE("layer_idempotent") {
  CHECK(layer_idempotent(*unit_datum()) == Idempotency::yes);
  const auto plain = make(two, {"a"}, rank_one(0, {{"a", {0}}}), {{{"a", "a"}, P("z1+z2")}});
  CHECK(layer_idempotent(*plain) == Idempotency::inconclusive);
  const auto det = make(two, {"a"}, rank_one(0, {{"a", {0}}}), {{{"a", "a"}, P("q*z1*z2")}});
  CHECK(layer_idempotent(*det) == Idempotency::yes);
  const auto neg = make(two, {"a"}, rank_one(0, {{"a", {0}}}), {{{"a", "a"}, P("-q^{-1/2}*z1^-2*z2^-2")}});
  CHECK(layer_idempotent(*neg) == Idempotency::yes);
  const auto two_terms = make(two, {"a"}, rank_one(0, {{"a", {0}}}), {{{"a", "a"}, P("1 + z1*z2")}});
  CHECK(layer_idempotent(*two_terms) == Idempotency::inconclusive);
  const auto empty = make(two, {"a"}, rank_one(0, {{"a", {0}}}), {});
  CHECK(layer_idempotent(*empty) == Idempotency::inconclusive);

  LayerChain chain;
  chain.push_back(unit_datum());
  chain.push_back(det);
  CHECK(chain.all_idempotent());
  chain.push_back(plain);
  CHECK(!chain.all_idempotent());
}

TEST_CASE("cell element text") {
  const auto d = make(two, {"b1", "b2"}, rank_one(0, {{"b1", {0}}, {"b2", {0}}}), {});
  CHECK(CellElement(d).to_string() == "0");
  CellElement x(d);
  x.add_term(1, S("z1+z2"), 0);
  x.add_term(0, S("(q+1)*z1*z2"), 1);
  CHECK(x.to_string() == "b1 | (q + 1)*s(1,1) | b2 ; b2 | s(1,0) | b1");
  CHECK(parse_cell_element(x.to_string(), d) == x);
  CHECK(parse_cell_element("b1 | z1+z2 | b1 ; b1 | -z1-z2 | b1", d).is_zero());
  CHECK_THROWS_AS(parse_cell_element("b1 | z1 | b1", d), AlgebraError);
  CHECK_THROWS_AS(parse_cell_element("b1 | 1 | b9", d), ParseError);
  CHECK_THROWS_AS(parse_cell_element("b1 | 1", d), ParseError);
}
