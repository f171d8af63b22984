#include "rbmod/json_io.hpp"

#include "rbmod/error.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace rbmod::json {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string describe(const Json& j) {
  std::string s = j.dump();
  if (s.size() > 40) s = s.substr(0, 37) + "...";
  return s;
}

const Json& field(const Json& j, const char* key, std::string_view what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

}  // namespace

Rational parse_rational(const Json& j, std::string_view what) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError&) {
      throw ParseError(std::string(what) + ": not a fraction: " + describe(j));
    }
  }
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(j.get<unsigned long long>())
                                  : Rational(j.get<long long>());
  }
  throw ParseError(std::string(what) + ": expected a fraction string, got " + describe(j));
}

DenseMatrix parse_matrix(const Json& j, std::string_view what) {
  const std::string name(what);
  if (!j.is_array()) throw ParseError(name + ": expected an array of rows");
  if (j.empty()) throw ParseError(name + ": empty matrix");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array()) {
      throw ParseError(name + ": row " + std::to_string(r + 1) + " is not an array");
    }
    if (r == 0) {
      cols = j[r].size();
      if (cols == 0) throw ParseError(name + ": row 1 is empty");
    } else if (j[r].size() != cols) {
      throw DimensionMismatch(name + ": row " + std::to_string(r + 1) + " has " +
                              std::to_string(j[r].size()) + " entries, row 1 has " +
                              std::to_string(cols));
    }
  }
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = parse_rational(j[r][c], name + " row " + std::to_string(r + 1) + ", column " +
                                            std::to_string(c + 1));
  return m;
}

Polynomial parse_polynomial(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial: expected a coefficient array");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i)
    coeffs.push_back(parse_rational(j[i], "polynomial coefficient " + std::to_string(i)));
  return Polynomial(std::move(coeffs));
}

Family parse_family(std::string_view s) {
  const auto l = lower(s);
  if (l == "p1") return Family::P1;
  if (l == "p2") return Family::P2;
  if (l == "p3") return Family::P3;
  if (l == "p4") return Family::P4;
  if (l == "xkx") return Family::XKx;
  throw ParseError("unknown operator family \"" + std::string(s) + "\"");
}

Flavor parse_flavor(std::string_view s) {
  const auto l = lower(s);
  if (l == "kxp1") return Flavor::KxP1;
  if (l == "kxp2") return Flavor::KxP2;
  if (l == "kxp3") return Flavor::KxP3;
  if (l == "kxp4") return Flavor::KxP4;
  if (l == "xkx") return Flavor::XKx;
  throw ParseError("unknown flavor \"" + std::string(s) + "\"");
}

KxVariant parse_variant(std::string_view s) {
  const auto l = lower(s);
  if (l == "i14") return KxVariant::I14;
  if (l == "i23") return KxVariant::I23;
  throw ParseError("unknown variant \"" + std::string(s) + "\" (expected i14 or i23)");
}

RBOperator parse_operator(const Json& j) {
  const auto& fam = field(j, "family", "operator");
  if (!fam.is_string()) throw ParseError("operator: family must be a string");
  Rational weight = 1;
  if (auto it = j.find("weight"); it != j.end() && !it->is_null())
    weight = parse_rational(*it, "operator weight");
  std::optional<Rational> b;
  if (auto it = j.find("b"); it != j.end() && !it->is_null()) b = parse_rational(*it, "operator b");
  unsigned truncation = kDefaultTruncation;
  if (auto it = j.find("truncation"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer() || it->get<long long>() < 1)
      throw ParseError("operator: truncation must be a positive integer");
    truncation = it->get<unsigned>();
  }
  return RBOperator::make(parse_family(fam.get<std::string>()), weight, b, truncation);
}

ModulePair parse_module(const Json& j, std::optional<Flavor> fallback) {
  std::optional<Flavor> flavor = fallback;
  if (auto it = j.find("flavor"); j.is_object() && it != j.end()) {
    if (!it->is_string()) throw ParseError("module: flavor must be a string");
    flavor = parse_flavor(it->get<std::string>());
  }
  if (!flavor) throw ParseError("module: no flavor given");
  auto A = parse_matrix(field(j, "A", "module"), "A");
  auto B = parse_matrix(field(j, "B", "module"), "B");
  return ModulePair::make(std::move(A), std::move(B), *flavor);
}

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(q.str());
  return out;
}

Json to_json(const DenseMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Polynomial& p) { return to_json(Vector(p.coefficients().begin(), p.coefficients().end())); }

Json to_json(const RBOperator& op) {
  Json out;
  out["family"] = std::string(to_string(op.family));
  out["weight"] = op.weight.str();
  out["b"] = op.b ? Json(op.b->str()) : Json(nullptr);
  out["truncation"] = op.truncation;
  return out;
}

Json to_json(const ModulePair& mp) {
  Json out;
  out["flavor"] = std::string(to_string(mp.flavor));
  out["A"] = to_json(mp.A);
  out["B"] = to_json(mp.B);
  return out;
}

Json to_json(const BlockPattern& bp) {
  Json out;
  out["rows"] = bp.rows;
  out["cols"] = bp.cols;
  out["case"] = bp.kase ? Json(case_label(*bp.kase)) : Json(nullptr);
  out["free_count"] = bp.free_count();
  Json cells = Json::array();
  for (const auto& c : bp.free_cells) cells.push_back({c.row + 1, c.col + 1});
  out["free_cells"] = std::move(cells);
  return out;
}

Json to_json(const SolutionSpace& ss) {
  Json out;
  out["dim"] = ss.dim_ambient;
  out["solution_dim"] = ss.dimension();
  Json basis = Json::array();
  for (const auto& m : ss.basis) basis.push_back(to_json(m));
  out["basis"] = std::move(basis);
  Json pattern = Json::array();
  for (const auto& p : ss.patterns) {
    Json e;
    e["block_row"] = p.block_row + 1;
    e["block_col"] = p.block_col + 1;
    e["case"] = p.label;
    Json cells = Json::array();
    for (const auto& c : p.pattern.free_cells) cells.push_back({c.row + 1, c.col + 1});
    e["free_cells"] = std::move(cells);
    pattern.push_back(std::move(e));
  }
  out["pattern"] = std::move(pattern);
  Json blocks = Json::array();
  for (const auto& b : ss.blocks) blocks.push_back({{"eigenvalue", b.eigenvalue.str()}, {"size", b.size}});
  out["blocks"] = std::move(blocks);
  out["change_of_basis"] = to_json(ss.change_of_basis);
  return out;
}

Json to_json(const SubmoduleWitness& w) {
  Json out;
  out["generator"] = to_json(w.generator);
  out["x_eigen"] = w.x_eigen.str();
  out["p_eigen"] = w.p_eigen.str();
  return out;
}

Json to_json(const CatalogEntry& e) {
  Json out;
  out["family"] = e.family;
  out["description"] = e.description;
  out["module"] = to_json(e.representative);
  Json cells = Json::array();
  for (const auto& c : e.free_cells) cells.push_back({c.row + 1, c.col + 1});
  out["free_cells"] = std::move(cells);
  out["free_parameters"] = e.free_parameters;
  return out;
}

}  // namespace rbmod::json
