#include <conelift/error.hpp>
#include <conelift/json_io.hpp>

#include <fstream>
#include <sstream>

namespace conelift::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Index index_from_json(const Json& j) {
  if (!j.is_number_integer()) fail("expected an integer");
  return j.get<Index>();
}

Json element_to_json(const ConeElement& x) {
  if (const auto* v = std::get_if<RatVector>(&x)) return to_json(*v);
  const RatMatrix& m = std::get<SymmetricMatrix>(x).matrix();
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(to_json(RatVector(m.row(i).transpose())));
  return rows;
}

ConeElement element_from_json(const Json& j, const ConeDescriptor& cone) {
  if (cone.kind == ConeKind::Orthant) {
    RatVector v = vector_from_json(j);
    if (v.size() != cone.size) fail("factor has the wrong length");
    return v;
  }
  RatMatrix m = matrix_from_json(j);
  if (m.rows() != cone.size || m.cols() != cone.size) fail("factor has the wrong size");
  if (m != m.transpose()) fail("factor is not symmetric");
  return SymmetricMatrix(m);
}

std::vector<Halfspace> halfspaces_from_json(const Json& j) {
  if (!j.is_array()) fail("expected a list of halfspaces");
  std::vector<Halfspace> out;
  for (const auto& h : j) out.push_back({vector_from_json(field(h, "a")), rational_from_json(field(h, "b"))});
  return out;
}

Json halfspaces_to_json(const std::vector<Halfspace>& hs) {
  Json out = Json::array();
  for (const auto& h : hs) out.push_back({{"a", to_json(h.a)}, {"b", to_json(h.b)}});
  return out;
}

Json bound_to_json(const Bound& b) { return {{"value", b.value}, {"rule", b.rule}}; }

}  // namespace

Json to_json(const Rational& x) { return conelift::to_string(x); }

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const RatMatrix& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i) data.push_back(to_json(RatVector(m.row(i).transpose())));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Json to_json(const BoolMatrix& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j) ? 1 : 0);
    data.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Json to_json(const Polytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices) verts.push_back(to_json(v));
  Json out = {{"dim", p.dim}, {"vertices", verts}, {"facets", halfspaces_to_json(p.facets)}};
  if (!p.equalities.empty()) out["equalities"] = halfspaces_to_json(p.equalities);
  return out;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges) edges.push_back({i, j});
  return {{"n", g.n}, {"edges", edges}};
}

Json to_json(const ConeDescriptor& c) { return {{"kind", std::string(to_string(c.kind))}, {"size", c.size}}; }

Json to_json(const ConeFactorization& f) {
  Json a = Json::array(), b = Json::array();
  for (const auto& x : f.a_list) a.push_back(element_to_json(x));
  for (const auto& x : f.b_list) b.push_back(element_to_json(x));
  Json out = {{"cone", to_json(f.cone)}, {"A", a}, {"B", b}};
  bool any = false;
  Json certs = Json::array();
  for (const auto& c : f.a_certificates) {
    certs.push_back(c ? to_json(*c) : Json());
    any = any || c.has_value();
  }
  if (any) out["certificates"] = certs;
  return out;
}

Json to_json(const BooleanFactorization& f) { return {{"A", to_json(f.a)}, {"B", to_json(f.b)}}; }

Json to_json(const AffineLift& l) {
  Json witness = Json::array();
  for (const auto& z : l.preimages) witness.push_back(to_json(z));
  return {{"cone", to_json(l.cone)}, {"E", to_json(l.e_mat)}, {"e", to_json(l.e_rhs)}, {"R", to_json(l.recovery)},
          {"r", to_json(l.offset)},  {"witness", witness},        {"notes", l.notes}};
}

Json to_json(const RankReport& r) {
  Json out = {{"target", std::string(to_string(r.target))},
              {"lower", bound_to_json(r.lower)},
              {"upper", bound_to_json(r.upper)},
              {"exact", r.exact ? Json(*r.exact) : Json()}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  if (r.boolean_witness) out["boolean_witness"] = to_json(*r.boolean_witness);
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) fail("expected a rational as \"p/q\"");
  return parse_rational(j.get<std::string>());
}

RatVector vector_from_json(const Json& j) {
  if (!j.is_array()) fail("expected a vector");
  RatVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rational_from_json(j[i]);
  return v;
}

RatMatrix matrix_from_json(const Json& j) {
  const Json& data = j.is_object() ? field(j, "data") : j;
  if (!data.is_array()) fail("expected matrix rows");
  const Index rows = static_cast<Index>(data.size());
  const Index cols = j.is_object() ? index_from_json(field(j, "cols")) : rows == 0 ? 0 : static_cast<Index>(data[0].size());
  if (j.is_object() && index_from_json(field(j, "rows")) != rows) fail("matrix dimensions do not match its data");
  RatMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const RatVector r = vector_from_json(data[static_cast<std::size_t>(i)]);
    if (r.size() != cols) fail("ragged matrix rows");
    m.row(i) = r.transpose();
  }
  return m;
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object()) fail("expected a polytope object");
  const std::vector<Halfspace> eqs = j.contains("equalities") ? halfspaces_from_json(j.at("equalities")) : std::vector<Halfspace>{};
  if (j.contains("vertices")) {
    std::vector<RatVector> pts;
    for (const auto& v : j.at("vertices")) pts.push_back(vector_from_json(v));
    if (pts.empty()) fail("polytope has no vertices");
    for (const auto& v : pts)
      if (v.size() != pts.front().size()) fail("vertices of different lengths");
    if (j.contains("dim") && index_from_json(j.at("dim")) != pts.front().size()) fail("dim does not match the vertices");
    Polytope p = from_vertices(pts);
    if (j.contains("facets")) p = align_facets(p, halfspaces_from_json(j.at("facets")));
    return p;
  }
  if (!j.contains("facets")) fail("polytope needs vertices or facets");
  return from_inequalities(halfspaces_from_json(j.at("facets")), eqs);
}

Graph graph_from_json(const Json& j) {
  const Index n = index_from_json(field(j, "n"));
  std::vector<std::pair<Index, Index>> edges;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) fail("edges are pairs");
    edges.emplace_back(index_from_json(e[0]), index_from_json(e[1]));
  }
  return make_graph(n, edges);
}

ConeDescriptor cone_from_json(const Json& j) {
  if (j.is_string()) return parse_cone(j.get<std::string>());
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) fail("cone kind must be a string");
  try {
    return {parse_cone_kind(kind.get<std::string>()), index_from_json(field(j, "size"))};
  } catch (const Error& e) {
    fail(e.what());
  }
}

ConeDescriptor parse_cone(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail("cone must look like kind:size");
  ConeDescriptor c;
  try {
    c.kind = parse_cone_kind(text.substr(0, colon));
    c.size = std::stoll(std::string(text.substr(colon + 1)));
  } catch (const std::exception&) {
    fail(std::string("bad cone \"") + std::string(text) + "\"");
  }
  if (c.size < 0) fail("cone size must be nonnegative");
  return c;
}

ConeFactorization factorization_from_json(const Json& j) {
  ConeFactorization f;
  f.cone = cone_from_json(field(j, "cone"));
  for (const auto& x : field(j, "A")) f.a_list.push_back(element_from_json(x, f.cone));
  for (const auto& x : field(j, "B")) f.b_list.push_back(element_from_json(x, f.cone));
  if (j.contains("certificates")) {
    for (const auto& c : j.at("certificates")) f.a_certificates.push_back(c.is_null() ? std::nullopt : std::optional(matrix_from_json(c)));
    if (f.a_certificates.size() != f.a_list.size()) fail("one certificate per row factor");
  }
  return f;
}

AffineLift lift_from_json(const Json& j) {
  AffineLift l;
  l.cone = cone_from_json(field(j, "cone"));
  l.e_mat = matrix_from_json(field(j, "E"));
  l.e_rhs = vector_from_json(field(j, "e"));
  l.recovery = matrix_from_json(field(j, "R"));
  l.offset = vector_from_json(field(j, "r"));
  const Index coords = cone_coords(l.cone);
  if (l.e_mat.cols() != coords || l.e_rhs.size() != l.e_mat.rows()) fail("equalities do not match the cone");
  if (l.recovery.cols() != coords || l.offset.size() != l.recovery.rows()) fail("recovery does not match the cone");
  if (j.contains("witness"))
    for (const auto& z : j.at("witness")) {
      l.preimages.push_back(vector_from_json(z));
      if (l.preimages.back().size() != coords) fail("witness has the wrong length");
    }
  if (j.contains("notes"))
    for (const auto& n : j.at("notes")) l.notes.push_back(n.get<std::string>());
  return l;
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path.string());
  out << dump(j);
}

}  // namespace conelift::io
