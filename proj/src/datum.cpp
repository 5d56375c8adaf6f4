#include "acell/datum.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "acell/expr.hpp"

namespace acell {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k >= line.size()) break;
    std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    out.push_back({std::string(line.substr(start, k - start)), static_cast<int>(start) + 1});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Rational> to_rational(std::string_view s) {
  static const std::regex pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
  std::string str(s);
  if (!str.empty() && str.front() == '+') str.erase(0, 1);
  if (!std::regex_match(str, pattern)) return std::nullopt;
  auto slash = str.find('/');
  if (slash != std::string::npos && mpz_class(str.substr(slash + 1)) == 0) return std::nullopt;
  Rational r(str);
  r.canonicalize();
  return r;
}

bool is_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'' && c != '.') {
      return false;
    }
  }
  return true;
}

struct GramLine {
  int line = 0;
  int column = 0;  // of the polynomial text
  std::string b;
  std::string b2;
  std::string poly;
};

class DatumReader {
 public:
  explicit DatumReader(std::string_view text) : text_(text) {}

  CellDatum read() {
    std::string section;
    std::istringstream in{std::string(text_)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      line_ = number;
      std::string_view line = raw;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (trim(line).empty()) continue;
      if (pending_form_rows_ > 0) {
        form_row(line);
        continue;
      }
      std::string_view t = trim(line);
      if (t.front() == '[') {
        if (t.back() != ']') fail("unterminated section header", column_of(line, t));
        section = std::string(trim(t.substr(1, t.size() - 2)));
        if (section != "blocks" && section != "labels" && section != "weights" &&
            section != "gram" && section != "unit") {
          fail("unknown section [" + section + "]", column_of(line, t));
        }
        if (!seen_sections_.insert(section).second) {
          fail("duplicate section [" + section + "]", column_of(line, t));
        }
        continue;
      }
      if (section.empty()) fail("content before the first section header", column_of(line, t));
      if (section == "blocks") {
        blocks_line(line);
      } else if (section == "labels") {
        for (const auto& tok : tokenize(line)) {
          if (!is_label(tok.text)) fail("invalid label '" + tok.text + "'", tok.column);
          labels_.push_back(tok.text);
        }
      } else if (section == "weights") {
        weights_line(line);
      } else if (section == "gram") {
        gram_line(line);
      } else {
        auto toks = tokenize(line);
        if (toks.size() != 1 || unit_) fail("[unit] holds exactly one label", toks[0].column);
        unit_ = toks[0].text;
      }
    }
    if (pending_form_rows_ > 0) fail("form matrix is missing rows", 1);
    for (const char* required : {"blocks", "labels", "weights"}) {
      if (!seen_sections_.count(required)) {
        line_ = 0;
        fail(std::string("missing section [") + required + "]", 1);
      }
    }
    if (weights_.rank == 0) {
      line_ = 0;
      fail("missing 'rank' in [weights]", 1);
    }

    BlockShape shape;
    try {
      shape = BlockShape(blocks_);
    } catch (const AlgebraError& e) {
      throw DatumError(std::string("invalid datum: ") + e.what());
    }
    CellDatum::GramMap gram;
    for (const auto& g : gram_lines_) {
      line_ = g.line;
      LaurentPoly value;
      try {
        value = parse_poly(g.poly, shape);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), g.line, g.column + e.column() - 1);
      }
      if (!gram.emplace(std::pair{g.b, g.b2}, std::move(value)).second) {
        fail("duplicate gram entry (" + g.b + "," + g.b2 + ")", 1);
      }
    }
    try {
      return CellDatum(shape, labels_, weights_, std::move(gram), unit_);
    } catch (const AlgebraError& e) {
      throw DatumError(std::string("invalid datum: ") + e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what, int column) const {
    throw ParseError(what, line_, column);
  }

  static int column_of(std::string_view line, std::string_view part) {
    return static_cast<int>(part.data() - line.data()) + 1;
  }

  int int_token(const Token& t) const {
    auto v = to_int(t.text);
    if (!v) fail("expected an integer, found '" + t.text + "'", t.column);
    return *v;
  }

  void blocks_line(std::string_view line) {
    auto toks = tokenize(line);
    if (toks.size() != 2) fail("expected '<block id> <size>'", toks[0].column);
    blocks_.push_back({int_token(toks[0]), int_token(toks[1])});
  }

  std::vector<int> int_vector(const std::vector<Token>& toks, std::size_t from) const {
    std::vector<int> v;
    for (std::size_t k = from; k < toks.size(); ++k) v.push_back(int_token(toks[k]));
    return v;
  }

  void weights_line(std::string_view line) {
    auto toks = tokenize(line);
    const std::string& key = toks[0].text;
    if (key == "rank") {
      if (toks.size() != 2) fail("expected 'rank <n>'", toks[0].column);
      weights_.rank = int_token(toks[1]);
      if (weights_.rank <= 0) fail("rank must be positive", toks[1].column);
    } else if (key == "form") {
      if (weights_.rank == 0) fail("'form' must follow 'rank'", toks[0].column);
      if (toks.size() != 1) fail("matrix rows go on the lines after 'form'", toks[1].column);
      pending_form_rows_ = weights_.rank;
      weights_.form.clear();
    } else if (key == "lambda") {
      weights_.lambda = int_vector(toks, 1);
    } else if (key == "wt") {
      if (toks.size() < 2) fail("expected 'wt <label> <entries>'", toks[0].column);
      if (!weights_.wt.emplace(toks[1].text, int_vector(toks, 2)).second) {
        fail("duplicate weight for label " + toks[1].text, toks[1].column);
      }
    } else {
      fail("unknown key '" + key + "' in [weights]", toks[0].column);
    }
  }

  void form_row(std::string_view line) {
    std::vector<Rational> row;
    for (const auto& t : tokenize(line)) {
      auto r = to_rational(t.text);
      if (!r) fail("expected a rational, found '" + t.text + "'", t.column);
      row.push_back(*r);
    }
    if (row.size() != static_cast<std::size_t>(weights_.rank)) {
      fail("form row has " + std::to_string(row.size()) + " entries, expected " +
               std::to_string(weights_.rank),
           1);
    }
    weights_.form.push_back(std::move(row));
    --pending_form_rows_;
  }

  void gram_line(std::string_view line) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected '<b> <b'> : <polynomial>'", 1);
    auto toks = tokenize(line.substr(0, colon));
    if (toks.size() != 2) fail("expected two labels before ':'", toks.empty() ? 1 : toks[0].column);
    GramLine g{line_, static_cast<int>(colon) + 2, toks[0].text, toks[1].text,
               std::string(line.substr(colon + 1))};
    gram_lines_.push_back(std::move(g));
  }

  std::string_view text_;
  int line_ = 0;
  std::set<std::string> seen_sections_;
  std::vector<BlockShape::Block> blocks_;
  std::vector<std::string> labels_;
  WeightData weights_;
  int pending_form_rows_ = 0;
  std::vector<GramLine> gram_lines_;
  std::optional<std::string> unit_;
};

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')') --depth;
    if (s[k] == sep && depth == 0) {
      parts.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

}  // namespace

CellDatum parse_cell_datum_unchecked(std::string_view text) {
  return DatumReader(text).read();
}

CellDatum parse_cell_datum(std::string_view text) {
  CellDatum d = parse_cell_datum_unchecked(text);
  auto violations = datum_violations(d);
  if (!violations.empty()) {
    std::string msg = "invalid datum: " + violations.front();
    for (std::size_t k = 1; k < violations.size(); ++k) msg += "; " + violations[k];
    throw DatumError(msg);
  }
  return d;
}

std::string serialize_cell_datum(const CellDatum& d) {
  std::ostringstream out;
  out << "[blocks]\n";
  for (const auto& b : d.shape().blocks()) out << b.id << " " << b.size << "\n";
  out << "[labels]\n";
  for (std::size_t k = 0; k < d.size(); ++k) out << (k ? " " : "") << d.labels()[k];
  out << "\n[weights]\n";
  const WeightData& w = d.weights();
  out << "rank " << w.rank << "\nform\n";
  for (const auto& row : w.form) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << (k ? " " : "") << rational_to_string(row[k]);
    }
    out << "\n";
  }
  out << "lambda";
  for (int x : w.lambda) out << " " << x;
  out << "\n";
  for (const auto& label : d.labels()) {
    out << "wt " << label;
    for (int x : w.wt.at(label)) out << " " << x;
    out << "\n";
  }
  out << "[gram]\n";
  for (std::size_t b = 0; b < d.size(); ++b) {
    for (std::size_t b2 = 0; b2 < d.size(); ++b2) {
      const LaurentPoly& g = d.gram(b, b2);
      if (g.is_zero()) continue;
      out << d.labels()[b] << " " << d.labels()[b2] << " : " << g.to_string() << "\n";
    }
  }
  if (d.unit_label()) out << "[unit]\n" << *d.unit_label() << "\n";
  return out.str();
}

CellElement parse_cell_element(std::string_view text, const DatumPtr& datum) {
  CellElement x(datum);
  if (trim(text) == "0") return x;
  std::size_t offset = 0;
  for (std::string_view part : split_top_level(text, ';')) {
    const std::size_t here = offset;
    offset += part.size() + 1;
    auto fields = split_top_level(part, '|');
    if (fields.size() != 3) {
      throw ParseError("expected 'b | S | b''", 0, static_cast<int>(here) + 1);
    }
    auto label_index = [&](std::string_view f, std::size_t at) {
      std::string label(trim(f));
      try {
        return datum->index_of(label);
      } catch (const AlgebraError&) {
        throw ParseError("unknown label '" + label + "'", 0, static_cast<int>(at) + 1);
      }
    };
    const std::size_t s_at = here + fields[0].size() + 1;
    const std::size_t b = label_index(fields[0], here);
    const std::size_t b2 = label_index(fields[2], s_at + fields[1].size() + 1);
    LaurentPoly s;
    try {
      s = parse_poly(fields[1], datum->shape());
    } catch (const ParseError& e) {
      throw ParseError(e.message(), 0, static_cast<int>(s_at) + e.column());
    }
    x.add_term(b, schur_expand(s), b2);
  }
  return x;
}

DrinfeldPoint parse_point(std::string_view text, const BlockShape& shape) {
  auto blocks = split_top_level(text, '/');
  if (blocks.size() != shape.num_blocks()) {
    throw AlgebraError("point '" + std::string(text) + "' has " +
                       std::to_string(blocks.size()) + " blocks, shape has " +
                       std::to_string(shape.num_blocks()));
  }
  std::map<int, std::vector<Rational>> roots;
  for (std::size_t pos = 0; pos < blocks.size(); ++pos) {
    std::vector<Rational> values;
    if (!trim(blocks[pos]).empty()) {
      for (std::string_view v : split_top_level(blocks[pos], ',')) {
        v = trim(v);
        if (v.size() >= 2 && v.front() == '(' && v.back() == ')') {
          v = trim(v.substr(1, v.size() - 2));
        }
        auto r = to_rational(v);
        if (!r) throw AlgebraError("invalid point value '" + std::string(v) + "'");
        values.push_back(*r);
      }
    }
    roots.emplace(shape.blocks()[pos].id, std::move(values));
  }
  DrinfeldPoint p(std::move(roots));
  p.check_shape(shape);
  return p;
}

DrinfeldPolynomial parse_drinfeld_polynomial(std::string_view text,
                                             const BlockShape& shape) {
  auto blocks = split_top_level(text, ';');
  if (blocks.size() != shape.num_blocks()) {
    throw AlgebraError("expected " + std::to_string(shape.num_blocks()) +
                       " polynomials separated by ';'");
  }
  const BlockShape line = BlockShape::single(1);
  ParseOptions options;
  options.aliases.emplace("u", VarRef{1, 1});
  std::map<int, std::vector<Rational>> coeffs;
  for (std::size_t pos = 0; pos < blocks.size(); ++pos) {
    const int id = shape.blocks()[pos].id;
    LaurentPoly p = parse_poly(blocks[pos], line, options);
    std::vector<Rational> c(static_cast<std::size_t>(shape.blocks()[pos].size) + 1);
    for (const auto& [m, v] : p.terms()) {
      if (m.q2 != 0 || m.z[0] < 0) {
        throw AlgebraError("Drinfeld polynomial of block " + std::to_string(id) +
                           " must be an ordinary polynomial in u");
      }
      if (static_cast<std::size_t>(m.z[0]) >= c.size()) {
        throw AlgebraError("Drinfeld polynomial of block " + std::to_string(id) +
                           " must have degree " + std::to_string(shape.blocks()[pos].size));
      }
      c[static_cast<std::size_t>(m.z[0])] = v;
    }
    coeffs.emplace(id, std::move(c));
  }
  return DrinfeldPolynomial(std::move(coeffs));
}

}  // namespace acell
