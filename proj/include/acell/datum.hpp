#pragma once

// Line-oriented cell datum files and the text forms of cell elements,
// Drinfeld points and Drinfeld polynomials.
//
//   # comment
//   [blocks]          one "<id> <size>" per line
//   1 2
//   [labels]          whitespace separated, in basis order
//   b0 b1
//   [weights]
//   rank 1
//   form              followed by `rank` rows of rationals
//   1
//   lambda 2
//   wt b0 0
//   wt b1 1
//   [gram]            "<b> <b'> : <polynomial>", absent pairs are zero
//   b0 b0 : 1
//   [unit]            optional distinguished label
//   b0

#include <string>
#include <string_view>

#include "acell/cellalg.hpp"
#include "acell/error.hpp"
#include "acell/simples.hpp"

namespace acell {

// A datum that parsed but breaks a loader invariant.
class DatumError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Parses and validates (datum_violations must be empty).
CellDatum parse_cell_datum(std::string_view text);

// Parses without running the loader invariants.
CellDatum parse_cell_datum_unchecked(std::string_view text);

// Normalized text; parse_cell_datum(serialize_cell_datum(d)) reproduces d.
std::string serialize_cell_datum(const CellDatum& d);

// "b | S | b' ; ..." where S is any block-symmetric polynomial expression
// (Schur atoms s(...) included); "0" is the zero element.
CellElement parse_cell_element(std::string_view text, const DatumPtr& datum);

// "a1,a2/b1/..." per block in shape order; fractions as "(p/q)".
DrinfeldPoint parse_point(std::string_view text, const BlockShape& shape);

// Monic polynomials in u, one per block in shape order, separated by ';'.
DrinfeldPolynomial parse_drinfeld_polynomial(std::string_view text,
                                             const BlockShape& shape);

}  // namespace acell
