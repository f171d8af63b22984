#pragma once

// JSON encodings shared by the command-line tool and test fixtures.
// Scalars are strings ("3", "-1/2"); matrices are arrays of row arrays.

#include "rbmod/matrix.hpp"
#include "rbmod/matsolve.hpp"
#include "rbmod/polynomial.hpp"
#include "rbmod/rbops.hpp"
#include "rbmod/structure.hpp"

#include <json.hpp>

#include <optional>
#include <string_view>

namespace rbmod::json {

using Json = nlohmann::ordered_json;

/// Accepts a fraction string or a JSON integer. Throws ParseError.
Rational parse_rational(const Json& j, std::string_view what);
/// Throws ParseError (bad entries, with row/column) or DimensionMismatch
/// (ragged rows).
DenseMatrix parse_matrix(const Json& j, std::string_view what);
Polynomial parse_polynomial(const Json& j);
/// {"family":"P2","weight":"1","b":null,"truncation":12}
RBOperator parse_operator(const Json& j);
Flavor parse_flavor(std::string_view s);  // case-insensitive, e.g. "xkx", "KxP3"
Family parse_family(std::string_view s);
KxVariant parse_variant(std::string_view s);  // "i14" | "i23"
/// {"flavor": ..., "A": [...], "B": [...]}; `fallback` used when "flavor" is absent.
ModulePair parse_module(const Json& j, std::optional<Flavor> fallback = std::nullopt);

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const DenseMatrix& m);
Json to_json(const Polynomial& p);
Json to_json(const RBOperator& op);
Json to_json(const ModulePair& mp);
Json to_json(const BlockPattern& bp);  // free cells one-based
Json to_json(const SolutionSpace& ss);
Json to_json(const SubmoduleWitness& w);
Json to_json(const CatalogEntry& e);

}  // namespace rbmod::json
