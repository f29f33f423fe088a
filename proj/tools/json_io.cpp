#include "json_io.hpp"

#include <algorithm>

namespace singlab::io {

namespace {

const json& need(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) fail(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::string text_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  fail(ErrorCode::ParseError, "expected a string or integer, got " + v.dump());
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> names_of(const json& v) {
  if (v.is_string()) return split_list(v.get<std::string>());
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(text_of(x));
  return out;
}

std::size_t basis_index(const std::vector<std::string>& names, const json& key) {
  if (key.is_number_integer()) {
    const long i = key.get<long>();
    if (i < 0 || static_cast<std::size_t>(i) >= names.size()) fail(ErrorCode::InvalidInput, "basis index out of range");
    return static_cast<std::size_t>(i);
  }
  const std::string name = text_of(key);
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) fail(ErrorCode::InvalidInput, "unknown basis element '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

Vector vector_of(Field f, const std::vector<std::string>& names, const json& elem) {
  Vector v = zero_vector(f, names.size());
  if (!elem.is_object()) fail(ErrorCode::ParseError, "an element is an object {basis name: coefficient}");
  for (const auto& [k, c] : elem.items()) v[basis_index(names, json(k))] += parse_scalar(f, text_of(c));
  return v;
}

std::size_t vertex_index(const Quiver& q, const json& v) {
  if (v.is_number_integer()) {
    const long i = v.get<long>();
    if (i < 0 || static_cast<std::size_t>(i) >= q.size()) fail(ErrorCode::InvalidInput, "vertex index out of range");
    return static_cast<std::size_t>(i);
  }
  const std::string name = text_of(v);
  const auto it = std::find(q.vertices.begin(), q.vertices.end(), name);
  if (it == q.vertices.end()) fail(ErrorCode::InvalidInput, "unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - q.vertices.begin());
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

Field field_of(const json& doc, const Context& ctx) {
  if (ctx.field) return *ctx.field;
  if (doc.is_object() && doc.contains("field")) return Field::parse(doc.at("field").get<std::string>());
  return Field::rationals();
}

Ring ring_of(const json& doc, const Context& ctx) {
  const Field f = field_of(doc, ctx);
  const auto names = names_of(need(doc, "ring"));
  std::string weights;
  if (ctx.weights) weights = *ctx.weights;
  else if (doc.contains("weights")) weights = join(names_of(doc.at("weights")), ",");
  return Ring::parse(join(names, ","), f, weights);
}

std::vector<Poly> polys_of(const Ring& ring, const json& list) {
  std::vector<Poly> out;
  for (const auto& s : names_of(list)) out.push_back(parse_poly(ring, s));
  return out;
}

json to_json(const Ring& ring) { return join(ring.names(), ","); }

json to_json(const PolyMatrix& m) { return m.to_strings(); }

MatrixFactorisation mf_of(const json& doc, const Context& ctx) {
  const Ring ring = ring_of(doc, ctx);
  const Poly sigma = parse_poly(ring, need(doc, "sigma").get<std::string>());
  auto matrix = [&](const char* key) {
    return PolyMatrix::parse(ring, need(doc, key).get<std::vector<std::vector<std::string>>>());
  };
  return make_mf(sigma, matrix("phi"), matrix("psi"));
}

json to_json(const MatrixFactorisation& m) {
  json out;
  out["ring"] = to_json(m.ring);
  std::vector<std::string> w;
  for (int x : m.ring.weights()) w.push_back(std::to_string(x));
  out["weights"] = join(w, ",");
  out["sigma"] = m.sigma.to_string();
  out["phi"] = to_json(m.phi);
  out["psi"] = to_json(m.psi);
  return out;
}

CurvedAlgebra algebra_of(const json& doc, const Context& ctx) {
  const Field f = field_of(doc, ctx);
  if (doc.contains("preset")) {
    const std::string p = doc.at("preset").get<std::string>();
    const int n = doc.contains("n") ? doc.at("n").get<int>() : 2;
    if (p == "ground-field") return ground_field_algebra(f);
    if (p == "truncated-polynomial")
      return truncated_polynomial_algebra(f, n, doc.contains("xDegree") ? doc.at("xDegree").get<int>() : 0);
    if (p == "odd-quadratic") return odd_quadratic_algebra(f, parse_scalar(f, text_of(need(doc, "c"))));
    if (p == "matrix") return matrix_algebra(f, n);
    if (p == "upper-triangular") return upper_triangular_algebra(f, n);
    fail(ErrorCode::InvalidInput, "unknown algebra preset '" + p + "'");
  }
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const auto& b : need(doc, "basis")) {
    names.push_back(text_of(need(b, "name")));
    degrees.push_back(b.contains("degree") ? b.at("degree").get<int>() : 0);
  }
  Grading g = Grading::Z;
  if (doc.contains("grading")) {
    const std::string s = doc.at("grading").get<std::string>();
    if (s == "Z2") g = Grading::Z2;
    else if (s != "Z") fail(ErrorCode::InvalidInput, "grading must be Z or Z2");
  }
  std::size_t unit = CurvedAlgebra::npos;
  if (doc.contains("unit") && !doc.at("unit").is_null()) unit = basis_index(names, doc.at("unit"));
  CurvedAlgebra a = make_algebra(f, g, degrees, names, unit);
  if (unit == CurvedAlgebra::npos) a.unit_combination = vector_of(f, names, need(doc, "unitCombination"));
  if (unit != CurvedAlgebra::npos)
    for (std::size_t i = 0; i < names.size(); ++i) {
      a.mult[unit][i] = a.basis_vector(i);
      a.mult[i][unit] = a.basis_vector(i);
    }
  if (doc.contains("mult"))
    for (const auto& m : doc.at("mult"))
      a.mult[basis_index(names, need(m, "left"))][basis_index(names, need(m, "right"))] =
          vector_of(f, names, need(m, "result"));
  if (doc.contains("d"))
    for (const auto& e : doc.at("d")) {
      const std::size_t j = basis_index(names, need(e, "of"));
      const Vector v = vector_of(f, names, need(e, "result"));
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) a.d.set(i, j, v[i]);
    }
  if (doc.contains("curvature")) a.curvature = vector_of(f, names, doc.at("curvature"));
  return a;
}

json element_json(const std::vector<std::string>& names, const Vector& v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[names[i]] = v[i].to_string();
  return out;
}

json to_json(const CurvedAlgebra& a) {
  json out;
  out["grading"] = a.grading == Grading::Z ? "Z" : "Z2";
  json basis = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back({{"name", a.names[i]}, {"degree", a.degrees[i]}});
  out["basis"] = basis;
  if (a.unit == CurvedAlgebra::npos) out["unitCombination"] = element_json(a.names, a.unit_combination);
  else out["unit"] = a.names[a.unit];
  json mult = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != a.unit && j != a.unit && !is_zero_vector(a.mult[i][j]))
        mult.push_back({{"left", a.names[i]}, {"right", a.names[j]}, {"result", element_json(a.names, a.mult[i][j])}});
  out["mult"] = mult;
  json d = json::array();
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Vector c = a.d.column(j);
    if (!is_zero_vector(c)) d.push_back({{"of", a.names[j]}, {"result", element_json(a.names, c)}});
  }
  out["d"] = d;
  if (a.has_curvature()) out["curvature"] = element_json(a.names, a.curvature);
  return out;
}

Vector element_of(const CurvedAlgebra& a, const json& elem) { return vector_of(a.field, a.names, elem); }

Quiver quiver_of(const json& doc) {
  Quiver q;
  q.vertices = names_of(need(doc, "vertices"));
  for (const auto& a : need(doc, "arrows")) {
    Arrow arrow;
    arrow.name = text_of(need(a, "name"));
    arrow.tail = vertex_index(q, need(a, "from"));
    arrow.head = vertex_index(q, need(a, "to"));
    arrow.degree = a.contains("degree") ? a.at("degree").get<int>() : 0;
    q.arrows.push_back(arrow);
  }
  if (doc.contains("extending") && !doc.at("extending").is_null()) q.extending = vertex_index(q, doc.at("extending"));
  return q;
}

json to_json(const Quiver& q) {
  json out;
  out["vertices"] = q.vertices;
  json arrows = json::array();
  for (const Arrow& a : q.arrows)
    arrows.push_back({{"name", a.name}, {"from", q.vertices[a.tail]}, {"to", q.vertices[a.head]}, {"degree", a.degree}});
  out["arrows"] = arrows;
  if (q.extending) out["extending"] = *q.extending;
  return out;
}

Path path_of(const Quiver& q, const std::string& text) {
  for (std::size_t v = 0; v < q.size(); ++v)
    if (text == "e" + q.vertices[v]) return Path{v, {}};
  Path p;
  std::string cur;
  auto push = [&]() {
    const auto it = std::find_if(q.arrows.begin(), q.arrows.end(), [&](const Arrow& a) { return a.name == cur; });
    if (it == q.arrows.end()) fail(ErrorCode::ParseError, "unknown arrow '" + cur + "' in path '" + text + "'");
    const std::size_t a = static_cast<std::size_t>(it - q.arrows.begin());
    if (p.arrows.empty()) p.start = q.arrows[a].tail;
    else if (q.arrows[p.arrows.back()].head != q.arrows[a].tail)
      fail(ErrorCode::InvalidInput, "path '" + text + "' is not composable");
    p.arrows.push_back(a);
    cur.clear();
  };
  for (char c : text) {
    if (c == '.') push();
    else cur += c;
  }
  push();
  return p;
}

PathElement path_element_of(const Quiver& q, const json& terms, Field f) {
  PathElement out;
  for (const auto& t : terms) {
    const Scalar c = t.contains("coef") ? parse_scalar(f, text_of(t.at("coef"))) : Scalar::one(f);
    add_into(out, path_element(path_of(q, text_of(need(t, "path"))), c), Scalar::one(f));
  }
  return out;
}

std::vector<Scalar> lambda_of(const json& value, Field f) {
  std::vector<Scalar> out;
  for (const auto& s : names_of(value)) out.push_back(parse_scalar(f, s));
  return out;
}

ConilpotentCoalgebra coalgebra_of(const json& doc, const Context& ctx) {
  if (doc.contains("dualOf")) return dual_coalgebra(algebra_of(doc.at("dualOf"), ctx));
  if (doc.contains("barOf")) return bar_coalgebra(algebra_of(doc.at("barOf"), ctx), need(doc, "maxLength").get<int>());
  const Field f = field_of(doc, ctx);
  ConilpotentCoalgebra c;
  c.field = f;
  bool weighted = false;
  for (const auto& b : need(doc, "basis")) {
    c.names.push_back(text_of(need(b, "name")));
    c.degrees.push_back(b.contains("degree") ? b.at("degree").get<int>() : 0);
    c.weights.push_back(b.contains("weight") ? b.at("weight").get<int>() : 1);
    weighted = weighted || b.contains("weight");
  }
  c.coaugmentation = basis_index(c.names, need(doc, "coaugmentation"));
  if (!weighted) c.weights.clear();
  c.comult.resize(c.dim());
  for (const auto& e : need(doc, "comult")) {
    const std::size_t i = basis_index(c.names, need(e, "of"));
    for (const auto& t : need(e, "terms")) {
      if (!t.is_array() || t.size() != 3) fail(ErrorCode::ParseError, "a coproduct term is [left, right, coef]");
      c.comult[i].emplace_back(basis_index(c.names, t[0]), basis_index(c.names, t[1]), parse_scalar(f, text_of(t[2])));
    }
  }
  c.d = Matrix(f, c.dim(), c.dim());
  if (doc.contains("d"))
    for (const auto& e : doc.at("d")) {
      const std::size_t j = basis_index(c.names, need(e, "of"));
      const Vector v = vector_of(f, c.names, need(e, "result"));
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) c.d.set(i, j, v[i]);
    }
  return c;
}

}  // namespace singlab::io
