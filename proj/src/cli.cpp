#include "acell/cli.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "acell/cellalg.hpp"
#include "acell/datum.hpp"
#include "acell/error.hpp"
#include "acell/expr.hpp"
#include "acell/pairing.hpp"
#include "acell/simples.hpp"
#include "acell/symfunc.hpp"

namespace acell {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Options {
 public:
  explicit Options(const Command& c) : c_(c) {}

  bool has(const std::string& flag) const { return c_.options.count(flag) > 0; }

  const std::string& required(const std::string& flag) const {
    auto it = c_.options.find(flag);
    if (it == c_.options.end() || it->second.empty()) {
      throw UsageError("'" + c_.verb + "' needs --" + flag);
    }
    return it->second.back();
  }

  std::string value_or(const std::string& flag, const std::string& fallback) const {
    auto it = c_.options.find(flag);
    return it == c_.options.end() || it->second.empty() ? fallback : it->second.back();
  }

  std::vector<std::string> all(const std::string& flag) const {
    auto it = c_.options.find(flag);
    return it == c_.options.end() ? std::vector<std::string>{} : it->second;
  }

  long long integer(const std::string& flag, long long fallback) const {
    if (!has(flag)) return fallback;
    const std::string& v = required(flag);
    try {
      std::size_t used = 0;
      long long x = std::stoll(v, &used);
      if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    throw UsageError("--" + flag + " expects an integer, got '" + v + "'");
  }

  bool records() const {
    std::string f = value_or("format", "text");
    if (f != "text" && f != "records") throw UsageError("--format is 'text' or 'records'");
    return f == "records";
  }

 private:
  const Command& c_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  if (s.empty()) parts.emplace_back();
  return parts;
}

std::vector<int> int_list(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (const auto& part : split(s, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--" + flag + " expects comma-separated integers, got '" + s + "'");
    }
  }
  return out;
}

BlockShape shape_from(const Options& o) {
  std::vector<BlockShape::Block> blocks;
  int id = 1;
  for (int m : int_list(o.required("m"), "m")) blocks.push_back({id++, m});
  return BlockShape(std::move(blocks));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DatumPtr load_datum(const std::string& path) {
  return std::make_shared<const CellDatum>(parse_cell_datum(read_file(path)));
}

void emit(std::ostream& out, bool records, const std::string& key, const std::string& value) {
  if (records) {
    out << key << "=" << value << "\n";
  } else {
    out << value << "\n";
  }
}

int run_schur(const Options& o, std::ostream& out) {
  const BlockShape shape = shape_from(o);
  const auto parts = split(o.required("weight"), '/');
  if (parts.size() != shape.num_blocks()) {
    throw UsageError("--weight needs one weight per block, separated by '/'");
  }
  SchurKey key;
  for (const auto& p : parts) key.emplace_back(int_list(p, "weight"));
  emit(out, o.records(), "poly", schur_product(shape, key).to_string());
  return kExitOk;
}

int run_expand(const Options& o, std::ostream& out) {
  const BlockShape shape = shape_from(o);
  const LaurentPoly f = parse_poly(o.required("poly"), shape);
  const std::string method = o.value_or("method", "leading");
  SchurExpansion e;
  if (method == "leading") {
    e = schur_expand(f);
  } else if (method == "project") {
    e = schur_projection(f, PairingContext(shape), static_cast<int>(o.integer("bound", 4)));
  } else {
    throw UsageError("--method is 'leading' or 'project'");
  }
  emit(out, o.records(), "expansion", e.to_string());
  return kExitOk;
}

int run_pair(const Options& o, std::ostream& out) {
  const BlockShape shape = shape_from(o);
  const LaurentPoly f = parse_poly(o.required("f"), shape);
  const LaurentPoly g = parse_poly(o.required("g"), shape);
  emit(out, o.records(), "inner", sf_inner(f, g, PairingContext(shape)).to_string());
  return kExitOk;
}

int run_mult(const Options& o, std::ostream& out) {
  const DatumPtr d = load_datum(o.required("datum"));
  const CellElement x = parse_cell_element(o.required("x"), d);
  const CellElement y = parse_cell_element(o.required("y"), d);
  emit(out, o.records(), "product", cell_mul(x, y).to_string());
  return kExitOk;
}

int run_check(const Options& o, std::ostream& out) {
  const bool records = o.records();
  const auto paths = o.all("datum");
  if (paths.empty()) throw UsageError("'check' needs --datum");
  const auto seed = static_cast<std::uint64_t>(o.integer("seed", 1));
  const int samples = static_cast<int>(o.integer("samples", 20));
  LayerChain chain;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const DatumPtr d = load_datum(paths[k]);
    chain.push_back(d);
    const std::string name = std::filesystem::path(paths[k]).filename().string();
    const std::string prefix = paths.size() > 1 ? "layer." + std::to_string(k + 1) + "." : "";
    const CellReport report = verify_cell_axioms(d, samples, seed);
    if (records) {
      out << prefix << "datum=" << name << "\n";
    } else {
      out << "datum " << name << "\n";
    }
    for (const auto& c : report.checks) {
      if (records) {
        out << prefix << "check." << c.id << "=" << to_string(c.status) << "\n";
        if (!c.detail.empty()) out << prefix << "check." << c.id << ".detail=" << c.detail << "\n";
      } else {
        out << "(" << c.id << ") " << to_string(c.status) << " " << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
      }
    }
    const std::string idem = to_string(layer_idempotent(*d));
    if (records) {
      out << prefix << "layer_idempotent=" << idem << "\n";
    } else {
      out << "layer_idempotent " << idem << "\n";
    }
  }
  if (paths.size() > 1) {
    const std::string all = chain.all_idempotent() ? "yes" : "no";
    if (records) {
      out << "chain_idempotent=" << all << "\n";
    } else {
      out << "chain_idempotent " << all << "\n";
    }
  }
  return kExitOk;
}

int run_simples(const Options& o, std::ostream& out) {
  const bool records = o.records();
  const DatumPtr d = load_datum(o.required("datum"));
  std::vector<DrinfeldPoint> points;
  for (const auto& p : o.all("point")) points.push_back(parse_point(p, d->shape()));
  for (const auto& P : o.all("drinfeld")) {
    points.push_back(polynomial_to_point(parse_drinfeld_polynomial(P, d->shape())));
  }
  if (points.empty()) throw UsageError("'simples' needs --point or --drinfeld");
  int k = 0;
  for (const auto& p : points) {
    ++k;
    const PointClass pc = classify_point(*d, p);
    const std::string point = p.to_string(d->shape());
    const std::string poly = point_to_polynomial(p).to_string(d->shape());
    const std::string has = pc.has_simple ? "true" : "false";
    if (records) {
      const std::string n = std::to_string(k);
      out << "point." << n << "=" << point << "\n"
          << "drinfeld." << n << "=" << poly << "\n"
          << "has_simple." << n << "=" << has << "\n"
          << "rank." << n << "=" << pc.rank << "\n";
    } else {
      out << "point " << point << " | drinfeld " << poly << " | has_simple " << has
          << " | rank " << pc.rank << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run_command(const Command& c, std::ostream& out, std::ostream& err) {
  const Options o(c);
  try {
    if (c.verb == "schur") return run_schur(o, out);
    if (c.verb == "expand") return run_expand(o, out);
    if (c.verb == "pair") return run_pair(o, out);
    if (c.verb == "mult") return run_mult(o, out);
    if (c.verb == "check") return run_check(o, out);
    if (c.verb == "simples") return run_simples(o, out);
    err << "error: unknown command '" << c.verb << "'\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace acell
