#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support/print.hpp"
#include "doctest.h"

#include <random>

#include "acell/datum.hpp"
#include "acell/error.hpp"
#include "acell/expr.hpp"
#include "acell/simples.hpp"
#include "support/generators.hpp"

using namespace acell;

namespace {

const BlockShape empty{};

DatumPtr load(const std::string& text) {
  return std::make_shared<const CellDatum>(parse_cell_datum(text));
}

std::string single_label(const std::string& blocks, const std::string& gram) {
  return "[blocks]\n" + blocks + "\n[labels]\nb\n[weights]\nrank 1\nform\n1\nlambda 0\nwt b 0\n" +
         "[gram]\n" + gram + "\n";
}

const char* kUnit = "[blocks]\n1 2\n[labels]\nb0\n[weights]\nrank 1\nform\n1\nlambda 0\n"
                    "wt b0 0\n[gram]\nb0 b0 : 1\n[unit]\nb0\n";

const char* kRankOne = "[blocks]\n1 1\n[labels]\nb0 b1\n[weights]\nrank 1\nform\n1\nlambda 0\n"
                       "wt b0 0\nwt b1 0\n[gram]\nb0 b0 : 1\nb0 b1 : z\nb1 b0 : z\n"
                       "b1 b1 : z^2\n[unit]\nb0\n";

DrinfeldPoint pt(std::map<int, std::vector<Rational>> r) { return DrinfeldPoint(std::move(r)); }

// Oracle: rank over Q(q) is the largest rank over a handful of rational
// specializations of q^{1/2}, each computed by plain Gaussian elimination.
int rank_by_specialization(const QMatrix& m) {
  int best = 0;
  for (int t : {2, 3, 5, 7, 11, -13}) {
    std::vector<std::vector<Rational>> a;
    for (const auto& row : m) {
      std::vector<Rational> r;
      for (const auto& f : row) {
        const LaurentPoly v = evaluate_sqrt_q(f, Rational(t, 1 + (t & 1)));
        r.push_back(v.coefficient(Monomial{{}, 0}));
      }
      a.push_back(r);
    }
    int rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
      std::size_t p = static_cast<std::size_t>(rank);
      while (p < a.size() && a[p][c] == 0) ++p;
      if (p == a.size()) continue;
      std::swap(a[p], a[static_cast<std::size_t>(rank)]);
      const auto& piv = a[static_cast<std::size_t>(rank)];
      for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < a.size(); ++r) {
        const Rational f = a[r][c] / piv[c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * piv[k];
      }
      ++rank;
    }
    best = std::max(best, rank);
  }
  return best;
}

}  // namespace

TEST_CASE("points") {
  CHECK(pt({{1, {3, 2}}}) == pt({{1, {2, 3}}}));
  CHECK_THROWS_AS(pt({{1, {0, 2}}}), AlgebraError);
  const BlockShape two = BlockShape::single(2);
  CHECK_THROWS_AS(pt({{1, {2}}}).check_shape(two), AlgebraError);
  CHECK_THROWS_AS(pt({{2, {1, 2}}}).check_shape(two), AlgebraError);
  CHECK(pt({{1, {Rational(1, 2), -3}}}).to_string(two) == "-3,(1/2)");
  CHECK(parse_point("(1/2),-3", two) == pt({{1, {Rational(1, 2), -3}}}));
  const BlockShape mixed({{1, 2}, {2, 1}});
  CHECK(parse_point("2,3/5", mixed) == pt({{1, {2, 3}}, {2, {5}}}));
  CHECK_THROWS(parse_point("2,3", mixed));
  CHECK_THROWS(parse_point("2,x/5", mixed));
}

TEST_CASE("specialize_gram") {
  const auto u = load(kUnit);
  const QMatrix one = specialize_gram(*u, pt({{1, {2, 3}}}));
  REQUIRE(one.size() == 1);
  CHECK(one[0][0] == LaurentPoly::constant(empty, 1));

  const auto d = load(single_label("1 2", "b b : q*(z1+z2)"));
  CHECK(specialize_gram(*d, pt({{1, {2, 3}}}))[0][0] == LaurentPoly::q_power(empty, 2, 5));
  CHECK(specialize_gram(*d, pt({{1, {3, 2}}})) == specialize_gram(*d, pt({{1, {2, 3}}})));
  CHECK_THROWS_AS(specialize_gram(*d, pt({{1, {2}}})), AlgebraError);
}

TEST_CASE("classify_point examples") {
  const auto u = load(kUnit);
  const PointClass pu = classify_point(*u, pt({{1, {Rational(-7, 3), 4}}}));
  CHECK(pu.has_simple);
  CHECK(pu.rank == 1);

  const auto r = load(kRankOne);
  const QMatrix m = specialize_gram(*r, pt({{1, {5}}}));
  CHECK(m[0][1] == LaurentPoly::constant(empty, 5));
  CHECK(m[1][1] == LaurentPoly::constant(empty, 25));
  const PointClass pr = classify_point(*r, pt({{1, {5}}}));
  CHECK(pr.has_simple);
  CHECK(pr.rank == 1);

  const auto z = load("[blocks]\n1 1\n[labels]\na b\n[weights]\nrank 1\nform\n1\nlambda 0\n"
                      "wt a 0\nwt b 1\n");
  const PointClass pz = classify_point(*z, pt({{1, {2}}}));
  CHECK(!pz.has_simple);
  CHECK(pz.rank == 0);

  // Vanishes exactly at z = 1.
  const auto v = load(single_label("1 1", "b b : z - 2 + z^-1"));
  CHECK(!classify_point(*v, pt({{1, {1}}})).has_simple);
  CHECK(classify_point(*v, pt({{1, {2}}})).has_simple);
}

TEST_CASE("rank over the fraction field") {
  auto c = [](const char* text) { return parse_poly(text, empty); };
  CHECK(rank_over_fraction_field({}) == 0);
  CHECK(rank_over_fraction_field({{c("q - q^-1"), c("1")}, {c("q^2 - 1"), c("q")}}) == 1);
  CHECK(rank_over_fraction_field({{c("q^{1/2}"), c("1")}, {c("1"), c("q^{1/2}")}}) == 2);
  CHECK(rank_over_fraction_field({{c("0"), c("0")}, {c("0"), c("q")}}) == 1);
  // Singular only at q = 1: still full rank over Q(q).
  CHECK(rank_over_fraction_field({{c("q"), c("1")}, {c("1"), c("1")}}) == 2);

  std::mt19937_64 rng(61);
  for (int k = 0; k < 40; ++k) {
    const int n = testing::uniform(rng, 1, 4);
    const int r = testing::uniform(rng, 0, n);
    // Product of an n x r and an r x n matrix has rank at most r.
    QMatrix a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(r));
    for (auto& row : a) {
      for (int j = 0; j < r; ++j) row.push_back(testing::random_laurent(empty, rng, 2));
    }
    for (auto& row : b) {
      for (int j = 0; j < n; ++j) row.push_back(testing::random_laurent(empty, rng, 2));
    }
    QMatrix m(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n), LaurentPoly(empty)));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        for (std::size_t t = 0; t < b.size(); ++t) m[i][j] += a[i][t] * b[t][j];
      }
    }
    const int got = rank_over_fraction_field(m);
    CHECK(got <= r);
    CHECK(got == rank_by_specialization(m));
  }
}

TEST_CASE("unit datum has a simple at every point") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 3; ++t) {
    const auto d = testing::random_valid_datum(rng, 3, 2);
    for (int k = 0; k < 10; ++k) {
      std::map<int, std::vector<Rational>> roots;
      for (const auto& b : d->shape().blocks()) {
        for (int j = 0; j < b.size; ++j) {
          roots[b.id].push_back(Rational(testing::nonzero(rng, 9), testing::uniform(rng, 1, 4)));
        }
      }
      const DrinfeldPoint p(roots);
      const PointClass pc = classify_point(*d, p);
      CHECK(pc.has_simple);
      CHECK(pc.rank == rank_by_specialization(specialize_gram(*d, p)));
    }
  }
}

TEST_CASE("rank ignores label order and value order") {
  const auto a = load("[blocks]\n1 2\n[labels]\nx y\n[weights]\nrank 1\nform\n1\nlambda 0\n"
                      "wt x 0\nwt y 0\n[gram]\nx x : z1+z2\nx y : 1\ny x : 1\ny y : z1^-1+z2^-1\n");
  const auto b = load("[blocks]\n1 2\n[labels]\ny x\n[weights]\nrank 1\nform\n1\nlambda 0\n"
                      "wt x 0\nwt y 0\n[gram]\nx x : z1+z2\nx y : 1\ny x : 1\ny y : z1^-1+z2^-1\n");
  for (auto p : {pt({{1, {1, 1}}}), pt({{1, {2, 3}}}), pt({{1, {1, -1}}}), pt({{1, {Rational(1, 2), 2}}})}) {
    CHECK(classify_point(*a, p).rank == classify_point(*b, p).rank);
  }
  // (z1+z2)(1/z1+1/z2) = 1 exactly when z1/z2 is a root of t^2 + t + 1, never
  // at rational points; but at {1,-1} the diagonal vanishes and the rank stays 2.
  CHECK(classify_point(*a, pt({{1, {1, -1}}})).rank == 2);
}

TEST_CASE("Drinfeld polynomials") {
  const BlockShape one = BlockShape::single(1);
  const BlockShape two = BlockShape::single(2);
  CHECK(point_to_polynomial(pt({{1, {2}}})).to_string(one) == "u - 2");
  CHECK(point_to_polynomial(pt({{1, {1, 1}}})).to_string(two) == "u^2 - 2*u + 1");
  CHECK(point_to_polynomial(pt({{1, {2, 3}}})).to_string(two) == "u^2 - 5*u + 6");
  CHECK(polynomial_to_point(parse_drinfeld_polynomial("u - 2", one)) == pt({{1, {2}}}));
  CHECK(polynomial_to_point(parse_drinfeld_polynomial("u^2 - 5*u + 6", two)) == pt({{1, {2, 3}}}));
  CHECK_THROWS_AS(polynomial_to_point(parse_drinfeld_polynomial("u^2 + 1", two)), NoRationalSplitting);
  try {
    polynomial_to_point(parse_drinfeld_polynomial("u^2 + 1", two));
  } catch (const NoRationalSplitting& e) {
    CHECK(e.block() == 1);
    CHECK(e.factor() == "u^2 + 1");
  }
  CHECK_THROWS(parse_drinfeld_polynomial("2*u - 2", one));
  CHECK_THROWS(parse_drinfeld_polynomial("u", one));
  CHECK_THROWS(parse_drinfeld_polynomial("u - 1", two));

  const BlockShape mixed({{1, 3}, {2, 1}});
  const auto P = parse_drinfeld_polynomial("u^3 - 2*u^2 - 1/4*u + 1/2 ; u + 7", mixed);
  CHECK(polynomial_to_point(P) == pt({{1, {Rational(-1, 2), Rational(1, 2), 2}}, {2, {-7}}}));

  std::mt19937_64 rng(71);
  for (int k = 0; k < 40; ++k) {
    std::map<int, std::vector<Rational>> roots;
    for (const auto& b : mixed.blocks()) {
      for (int j = 0; j < b.size; ++j) {
        roots[b.id].push_back(Rational(testing::nonzero(rng, 6), testing::uniform(rng, 1, 3)));
      }
    }
    const DrinfeldPoint p(roots);
    const DrinfeldPolynomial poly = point_to_polynomial(p);
    CHECK(polynomial_to_point(poly) == p);
    CHECK(parse_drinfeld_polynomial(poly.to_string(mixed), mixed) == poly);
  }
}
