#pragma once

// Exact JSON forms of the library objects. Rationals are strings "p/q" or "p"; integers are also
// accepted on input. Every parser throws ParseError on malformed input.

#include <conelift/bounds.hpp>
#include <conelift/combin.hpp>
#include <conelift/factorize.hpp>
#include <conelift/lift.hpp>
#include <conelift/polytope.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>

namespace conelift::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const RatVector& v);
/// {"rows", "cols", "data": [[...]]}
Json to_json(const RatMatrix& m);
Json to_json(const BoolMatrix& m);
/// {"dim", "vertices", "facets": [{"a", "b"}], "equalities"} (equalities only when present)
Json to_json(const Polytope& p);
/// {"n", "edges": [[i, j]]}
Json to_json(const Graph& g);
Json to_json(const ConeDescriptor& c);
/// {"cone", "A", "B"} with vectors for the orthant and nested rows for symmetric matrices.
Json to_json(const ConeFactorization& f);
Json to_json(const BooleanFactorization& f);
/// {"cone", "E", "e", "R", "r", "witness", "notes"}
Json to_json(const AffineLift& l);
Json to_json(const RankReport& r);

Rational rational_from_json(const Json& j);
RatVector vector_from_json(const Json& j);
/// Accepts the object form or a bare array of rows.
RatMatrix matrix_from_json(const Json& j);
/// Either list may be omitted: vertices are computed from facets and conversely.
Polytope polytope_from_json(const Json& j);
Graph graph_from_json(const Json& j);
ConeDescriptor cone_from_json(const Json& j);
/// "orthant:5", "psd:2", "cp:6".
ConeDescriptor parse_cone(std::string_view text);
ConeFactorization factorization_from_json(const Json& j);
AffineLift lift_from_json(const Json& j);

Json read_file(const std::filesystem::path& path);
/// Two-space indentation and a trailing newline.
void write_file(const std::filesystem::path& path, const Json& j);
std::string dump(const Json& j);

}  // namespace conelift::io
