// singlab: command-line front end. Reports go to standard output as JSON (sorted keys)
// or plain text; diagnostics for failures are JSON too, with a stable error code.
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "singlab/groebner.hpp"
#include "singlab/singularity.hpp"

using namespace singlab;
using io::json;

namespace {

struct Options {
  std::string field, weights, out = "json";
  std::optional<long> weight_bound;
  std::optional<int> trunc, window;
  bool schema = false;
  std::string ring, sigma, gens, fs, coeffs, type, lambda, var, vars, variant = "cochain", support = "sum", base = "field";
  bool unreduced = false;
  std::vector<std::string> inputs;
};

io::Context context_of(const Options& o) {
  io::Context ctx;
  if (!o.field.empty()) ctx.field = Field::parse(o.field);
  if (!o.weights.empty()) ctx.weights = o.weights;
  return ctx;
}

json read_json_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
}

// The first input file (if any) with command-line flags laid over it.
json document(const Options& o, std::size_t which = 0) {
  json doc = o.inputs.size() > which ? read_json_file(o.inputs[which]) : json::object();
  if (which > 0) return doc;
  if (!o.ring.empty()) doc["ring"] = o.ring;
  if (!o.sigma.empty()) doc["sigma"] = o.sigma;
  if (!o.gens.empty()) doc["gens"] = io::split_list(o.gens);
  if (!o.fs.empty()) doc["fs"] = io::split_list(o.fs);
  if (!o.coeffs.empty()) doc["coeffs"] = io::split_list(o.coeffs);
  if (!o.lambda.empty()) doc["lambda"] = o.lambda;
  if (!o.type.empty()) doc["type"] = o.type;
  return doc;
}

std::string monomial_text(const Ring& r, const Monomial& m) { return Poly::monomial(r, m, Scalar::one(r.field())).to_string(); }

json strings_of(const std::vector<Poly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

// ---- polynomial commands ------------------------------------------------------

json cmd_gb(const Options& o) {
  const json doc = document(o);
  const Ring ring = io::ring_of(doc, context_of(o));
  const GroebnerBasis gb = buchberger(ring, io::polys_of(ring, doc.at("gens")));
  json out;
  out["ring"] = io::to_json(ring);
  out["gens"] = strings_of(gb.gens);
  out["unitIdeal"] = gb.is_unit_ideal();
  const QuotientBasis qb = quotient_basis(gb, 0);
  out["quotientDim"] = qb.finite ? json(quotient_basis(gb).dim()) : json(nullptr);
  return out;
}

json local_algebra_json(const Ring& ring, const LocalAlgebra& la, const char* key) {
  json out;
  out[key] = la.number ? json(*la.number) : json(nullptr);
  json basis = json::array();
  if (la.basis.finite)
    for (const auto& m : la.basis.monomials) basis.push_back(monomial_text(ring, m));
  out["basis"] = basis;
  if (la.truncated_at) out["truncatedAt"] = *la.truncated_at;
  return out;
}

json cmd_milnor(const Options& o, bool tjurina) {
  const json doc = document(o);
  const Ring ring = io::ring_of(doc, context_of(o));
  const Poly sigma = parse_poly(ring, doc.at("sigma").get<std::string>());
  std::optional<long> bound;
  if (o.trunc) bound = *o.trunc;
  const LocalAlgebra la = tjurina ? tjurina_algebra(sigma, bound) : milnor_algebra(sigma, bound);
  json out = local_algebra_json(ring, la, tjurina ? "tjurinaNumber" : "milnorNumber");
  if ((doc.contains("weights") || !o.weights.empty()) && !sigma.is_zero())
    out["quasiHomogeneous"] = is_quasi_homogeneous(sigma, ring.weights()).holds;
  return out;
}

// ---- matrix factorisations ------------------------------------------------------

MatrixFactorisation mf_input(const Options& o, std::size_t which = 0) {
  if (o.inputs.size() <= which) fail(ErrorCode::InvalidInput, "expected a matrix factorisation file");
  return io::mf_of(document(o, which), context_of(o));
}

json cmd_mf(const std::string& sub, const Options& o) {
  if (sub == "verify") {
    const MFCheck c = mf_verify(mf_input(o));
    json out{{"ok", c.ok}};
    if (!c.ok)
      out["failure"] = {{"product", c.product}, {"row", c.row}, {"col", c.col}, {"expected", c.expected.to_string()},
                        {"got", c.got.to_string()}};
    return out;
  }
  if (sub == "shift") return io::to_json(mf_shift(mf_input(o)));
  if (sub == "tensor") return io::to_json(mf_tensor(mf_input(o), mf_input(o, 1)));
  if (sub == "knoerrer-g") return io::to_json(knoerrer_G(mf_input(o), o.var.empty() ? "z" : o.var));
  if (sub == "knoerrer-h") {
    const auto uv = io::split_list(o.vars.empty() ? "u,v" : o.vars);
    if (uv.size() != 2) fail(ErrorCode::InvalidInput, "--vars takes two names");
    return io::to_json(knoerrer_H(mf_input(o), uv[0], uv[1]));
  }
  if (sub == "rho") {
    if (o.var.empty()) fail(ErrorCode::InvalidInput, "--var is required");
    return io::to_json(restrict_rho(mf_input(o), o.var));
  }
  if (sub == "unfold") {
    const MatrixFactorisation m = mf_input(o);
    const int n = o.window.value_or(2);
    const FreeComplex c = mf_unfold(m, n);
    json out;
    json diffs = json::object();
    for (const auto& [i, d] : c.d) diffs[std::to_string(i)] = io::to_json(d);
    out["differentials"] = diffs;
    const UnfoldExactness ex = unfold_exactness(m, o.trunc.value_or(4));
    out["isComplex"] = ex.is_complex;
    out["exactAtEven"] = ex.exact_at_even;
    out["exactAtOdd"] = ex.exact_at_odd;
    out["exact"] = ex.all();
    return out;
  }
  if (sub == "coker") {
    const MatrixFactorisation m = mf_input(o);
    const Presentation p = mf_cokernel(m);
    json out;
    out["presentation"] = io::to_json(p.matrix);
    out["quotient"] = strings_of(p.quotient.gens);
    out["localLength"] = local_cokernel_dim(m.phi, o.trunc.value_or(8));
    out["truncatedAt"] = o.trunc.value_or(8);
    return out;
  }
  if (sub == "hom") {
    const FreeComplex h = mf_hom_complex(mf_input(o), mf_input(o, o.inputs.size() > 1 ? 1 : 0));
    json dims = json::array();
    for (const auto& [key, dim] : slice_cohomology(h, o.weight_bound.value_or(4)))
      dims.push_back({{"degree", key.first}, {"weight", key.second}, {"dim", dim}});
    return json{{"dims", dims}, {"weightUnits", "doubled"}};
  }
  fail(ErrorCode::InvalidInput, "unknown mf command '" + sub + "'");
}

// ---- stabilisation ------------------------------------------------------------------

Stabilisation stab_input(const Options& o) {
  const json doc = document(o);
  const Ring ring = io::ring_of(doc, context_of(o));
  const Poly sigma = parse_poly(ring, doc.at("sigma").get<std::string>());
  std::optional<std::vector<Poly>> coeffs;
  if (doc.contains("coeffs")) coeffs = io::polys_of(ring, doc.at("coeffs"));
  return stabilise(ring, io::polys_of(ring, doc.at("fs")), sigma, coeffs);
}

json cmd_stab(const Options& o) {
  const Stabilisation s = stab_input(o);
  return json{{"mf", io::to_json(s.mf)}, {"coeffs", strings_of(s.coeffs)}, {"coeffsFromDivision", s.coeffs_from_division}};
}

json cmd_endcoh(const Options& o) {
  const EndDGAlgebra e = end_dg_algebra(stab_input(o));
  std::optional<long> order;
  if (o.trunc) order = *o.trunc;
  const EndCohomology h = end_cohomology(e, o.weight_bound.value_or(4), order);
  json out;
  json dims = json::array();
  for (const auto& [key, dim] : h.dims) dims.push_back({{"parity", key.first}, {"weight", key.second}, {"dim", dim}});
  out["dims"] = dims;
  json classes = json::array();
  for (const auto& c : h.classes)
    classes.push_back({{"parity", c.parity}, {"weight", c.weight}, {"rep", c.rep.to_string()}});
  out["classes"] = classes;
  json products = json::array();
  for (const auto& [ij, v] : h.products)
    products.push_back({{"left", ij.first}, {"right", ij.second}, {"result", vector_json(v)}});
  out["products"] = products;
  out["truncatedAt"] = h.truncated_at ? json(*h.truncated_at) : json(nullptr);
  out["weightUnits"] = "doubled";
  return out;
}

// ---- Hochschild ------------------------------------------------------------------------

json cmd_hh(const Options& o) {
  HochschildSpec spec;
  spec.algebra = io::algebra_of(document(o), context_of(o));
  if (o.variant == "chain") spec.variant = HHVariant::Chain;
  else if (o.variant != "cochain") fail(ErrorCode::InvalidInput, "--variant is cochain or chain");
  if (o.support == "product") spec.support = HHSupport::Product;
  else if (o.support != "sum") fail(ErrorCode::InvalidInput, "--support is sum or product");
  spec.length_bound = o.trunc.value_or(4);
  spec.reduced = !o.unreduced;
  const int window = o.window.value_or(spec.length_bound - 2);
  const HHResult r = spec.variant == HHVariant::Cochain ? hochschild_cohomology(spec, window)
                                                        : hochschild_homology(spec, window);
  json out;
  json dims = json::array();
  std::map<int, std::size_t> totals;
  for (const auto& [key, dim] : r.dims) {
    dims.push_back({{"slot", key.first}, {"degree", key.second}, {"dim", dim}});
    totals[key.second] += dim;
  }
  out["dims"] = dims;
  json tot = json::object();
  for (const auto& [d, n] : totals) tot[std::to_string(d)] = n;
  out["totals"] = tot;
  out["lengthGraded"] = r.length_graded;
  out["exact"] = r.exact;
  out["support"] = o.support;
  json hh0 = json::array();
  for (const Vector& z : r.hh0_basis) hh0.push_back(io::element_json(spec.algebra.names, z));
  out["hh0"] = hh0;
  out["curvatureTermOk"] = curvature_term_check(spec);
  return out;
}

// ---- quivers ------------------------------------------------------------------------------

std::vector<Scalar> lambda_or_zero(const json& doc, std::size_t n, const Options& o) {
  const Field f = o.field.empty() ? Field::gaussian() : Field::parse(o.field);
  if (!doc.contains("lambda")) return std::vector<Scalar>(n, Scalar::zero(f));
  return io::lambda_of(doc.at("lambda"), f);
}

json cmd_quiver(const std::string& sub, const Options& o) {
  const json doc = document(o);
  if (sub == "blocks") {
    const Quiver q = doc.contains("type") ? extended_dynkin(doc.at("type").get<std::string>())
                                          : io::quiver_of(doc.contains("quiver") ? doc.at("quiver") : doc);
    if (!doc.contains("lambda")) fail(ErrorCode::InvalidInput, "--lambda is required");
    const auto lambda = io::lambda_of(doc.at("lambda"), o.field.empty() ? Field::gaussian() : Field::parse(o.field));
    json blocks = json::array();
    for (const Block& b : dsg_blocks(q, lambda)) {
      std::vector<std::string> vs;
      for (std::size_t v : b.vertices) vs.push_back(q.vertices[v]);
      blocks.push_back({{"type", b.type}, {"polynomial", b.polynomial}, {"vertices", vs}});
    }
    return json{{"blocks", blocks}};
  }
  if (sub == "drinfeld") {
    const int depth = o.trunc.value_or(6);
    const int window = o.window.value_or(depth - 2);
    TensorBase base = TensorBase::Field;
    if (o.base == "vertices") base = TensorBase::Vertices;
    else if (o.base != "field") fail(ErrorCode::InvalidInput, "--base is field or vertices");
    DrinfeldComplex dc;
    if (doc.contains("quiver")) {
      const Quiver q = io::quiver_of(doc.at("quiver"));
      const Field f = o.field.empty() ? Field::rationals() : Field::parse(o.field);
      Quiver target = q;
      std::vector<PathElement> rels;
      if (doc.contains("relations")) {
        for (const auto& r : doc.at("relations")) rels.push_back(io::path_element_of(q, r, f));
      } else {
        target = double_quiver(q);
        std::vector<Scalar> lambda(q.size(), Scalar::zero(f));
        if (doc.contains("lambda")) lambda = io::lambda_of(doc.at("lambda"), f);
        rels = preprojective_relations(q, lambda);
      }
      const QuiverQuotient qq = quiver_quotient_algebra(target, rels, doc.at("maxLength").get<std::size_t>());
      Vector e = zero_vector(f, qq.algebra.dim());
      for (const auto& v : doc.at("e")) {
        const auto it = std::find(q.vertices.begin(), q.vertices.end(), v.get<std::string>());
        if (it == q.vertices.end()) fail(ErrorCode::InvalidInput, "unknown vertex in e");
        e[qq.vertices.idempotents[static_cast<std::size_t>(it - q.vertices.begin())]] = Scalar::one(f);
      }
      dc = drinfeld_quotient(qq.algebra, e, depth, base, qq.vertices);
    } else {
      if (base == TensorBase::Vertices) fail(ErrorCode::InvalidInput, "--base vertices needs a quiver input");
      const CurvedAlgebra a = io::algebra_of(doc.at("algebra"), context_of(o));
      dc = drinfeld_quotient(a, io::element_of(a, doc.at("e")), depth, base);
    }
    json cohom = json::array();
    for (const auto& [deg, dim] : drinfeld_cohomology(dc, window)) cohom.push_back({{"degree", deg}, {"dim", dim}});
    return json{{"base", o.base}, {"componentDims", dc.dims}, {"cohomology", cohom}, {"dSquaredZero", drinfeld_d_squared(dc)}};
  }
  const Quiver q = io::quiver_of(doc.contains("quiver") ? doc.at("quiver") : doc);
  const std::size_t len = static_cast<std::size_t>(o.trunc.value_or(sub == "paths" ? 2 : 4));
  if (sub == "paths") {
    json paths = json::array();
    std::vector<std::size_t> counts(len + 1, 0);
    for (const Path& p : path_basis(q, len)) {
      paths.push_back(path_to_string(q, p));
      ++counts[p.length()];
    }
    return json{{"paths", paths}, {"countsByLength", counts}};
  }
  const auto lambda = lambda_or_zero(doc, q.size(), o);
  if (sub == "preproj") {
    const Quiver d = double_quiver(q);
    const auto rels = preprojective_relations(q, lambda);
    json rs = json::array();
    for (const auto& r : rels) rs.push_back(to_string(d, r));
    return json{{"double", io::to_json(d)}, {"relations", rs}, {"dims", truncated_algebra_dim(d, rels, len)}};
  }
  if (sub == "derived") {
    const DGQuiverAlgebra dg = derived_preprojective(q, lambda);
    json ds = json::array();
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Path t{i, {dg.first_loop + i}};
      ds.push_back({{"loop", path_to_string(dg.graded, t)}, {"d", to_string(dg.graded, dg.differential(t))}});
    }
    return json{{"differentials", ds}, {"h0Dims", dg.h0_dims(len)}};
  }
  fail(ErrorCode::InvalidInput, "unknown quiver command '" + sub + "'");
}

// ---- Koszul duality ---------------------------------------------------------------------

json cmd_koszul_dual(const Options& o) {
  const CurvedAlgebra a = io::algebra_of(document(o), context_of(o));
  const int L = o.trunc.value_or(6);
  const KoszulDualResult r = koszul_dual_cohomology(a, L, o.window.value_or(L - 2));
  json out;
  json dims = json::array();
  for (const auto& [p, d] : r.dims) dims.push_back({{"degree", p}, {"dim", d}});
  out["dims"] = dims;
  json products = json::array();
  for (const auto& [key, v] : r.products) {
    const auto& [p, i, q, j] = key;
    products.push_back({{"left", {p, i}}, {"right", {q, j}}, {"result", vector_json(v)}});
  }
  out["products"] = products;
  // The lowest positive degree with a single class, and whether its powers survive.
  for (const auto& [p, d] : r.dims)
    if (p > 0 && d == 1) {
      json nonzero = json::array();
      for (const Vector& v : r.powers(p, Vector{Scalar::one(a.field)})) nonzero.push_back(!is_zero_vector(v));
      out["generator"] = {{"degree", p}, {"powersNonzero", nonzero}};
      break;
    }
  bool degree_zero = !a.has_differential();
  for (int d : a.degrees) degree_zero = degree_zero && d == 0;
  if (degree_zero) {
    const CounitCheck c = counit_h0_check(a, L);
    out["counit"] = {{"ok", c.ok}, {"h0Dim", c.h0_dim}, {"surjective", c.surjective}, {"kernelIsImage", c.kernel_is_image}};
  }
  return out;
}

json cmd_bar(const Options& o) {
  const auto pieces = bar(io::algebra_of(document(o), context_of(o)), o.trunc.value_or(4));
  json ps = json::array();
  for (const auto& p : pieces) {
    std::map<int, std::size_t> by_degree;
    for (int d : p.degrees) ++by_degree[d];
    json dims = json::object();
    for (const auto& [d, n] : by_degree) dims[std::to_string(d)] = n;
    ps.push_back({{"length", p.length}, {"dim", p.words.size()}, {"dimsByDegree", dims}});
  }
  return json{{"pieces", ps}, {"dSquaredZero", bar_d_squared(pieces)}};
}

json cmd_cobar(const Options& o) {
  const ConilpotentCoalgebra c = io::coalgebra_of(document(o), context_of(o));
  const CobarComplex om = cobar(c, o.trunc.value_or(4));
  json cohom = json::array();
  for (const auto& [p, d] : cobar_cohomology(om)) cohom.push_back({{"degree", p}, {"dim", d}});
  return json{{"words", om.words.size()}, {"cohomology", cohom}, {"dSquaredZero", cobar_d_squared(om)},
              {"windowLimited", true}};
}

// ---- schemas ------------------------------------------------------------------------------

json schema_for(const std::string& cmd) {
  const json poly_input = {{"type", "object"},
                           {"required", {"ring", "sigma"}},
                           {"properties",
                            {{"ring", {{"type", "string"}, {"example", "x,y,z"}}},
                             {"weights", {{"type", "string"}, {"example", "1,1,1"}}},
                             {"field", {{"enum", {"rat", "gauss", "gf:<p>"}}}},
                             {"sigma", {{"type", "string"}}}}}};
  const json mf = {{"type", "object"},
                   {"required", {"ring", "sigma", "phi", "psi"}},
                   {"properties",
                    {{"ring", {{"type", "string"}}},
                     {"weights", {{"type", "string"}}},
                     {"field", {{"type", "string"}}},
                     {"sigma", {{"type", "string"}}},
                     {"phi", {{"type", "array"}, {"items", {{"type", "array"}, {"items", {{"type", "string"}}}}}}},
                     {"psi", {{"type", "array"}, {"items", {{"type", "array"}, {"items", {{"type", "string"}}}}}}}}}};
  const json element = {{"type", "object"}, {"additionalProperties", {{"type", "string"}}}};
  const json algebra = {
      {"type", "object"},
      {"properties",
       {{"preset", {{"enum", {"ground-field", "truncated-polynomial", "odd-quadratic", "matrix", "upper-triangular"}}}},
        {"n", {{"type", "integer"}}},
        {"xDegree", {{"type", "integer"}}},
        {"c", {{"type", "string"}}},
        {"field", {{"type", "string"}}},
        {"grading", {{"enum", {"Z", "Z2"}}}},
        {"basis",
         {{"type", "array"},
          {"items", {{"type", "object"}, {"properties", {{"name", {{"type", "string"}}}, {"degree", {{"type", "integer"}}}}}}}}},
        {"unit", {{"type", "string"}}},
        {"unitCombination", element},
        {"mult",
         {{"type", "array"},
          {"items", {{"type", "object"}, {"required", {"left", "right", "result"}}, {"properties", {{"result", element}}}}}}},
        {"d", {{"type", "array"}, {"items", {{"type", "object"}, {"required", {"of", "result"}}}}}},
        {"curvature", element}}}};
  const json quiver = {{"type", "object"},
                       {"required", {"vertices", "arrows"}},
                       {"properties",
                        {{"vertices", {{"type", "array"}, {"items", {{"type", "string"}}}}},
                         {"arrows",
                          {{"type", "array"},
                           {"items", {{"type", "object"}, {"required", {"name", "from", "to"}}}}}},
                         {"extending", {{"type", "integer"}}},
                         {"lambda", {{"type", "array"}, {"items", {{"type", "string"}}}}}}}};
  const std::map<std::string, json> table = {
      {"poly gb",
       {{"type", "object"},
        {"required", {"ring", "gens"}},
        {"properties", {{"ring", {{"type", "string"}}}, {"gens", {{"type", "array"}, {"items", {{"type", "string"}}}}}}}}},
      {"milnor", poly_input},
      {"tjurina", poly_input},
      {"mf", mf},
      {"stab",
       {{"type", "object"},
        {"required", {"ring", "sigma", "fs"}},
        {"properties",
         {{"ring", {{"type", "string"}}},
          {"sigma", {{"type", "string"}}},
          {"fs", {{"type", "array"}, {"items", {{"type", "string"}}}}},
          {"coeffs", {{"type", "array"}, {"items", {{"type", "string"}}}}}}}}},
      {"hh", algebra},
      {"koszul-dual", algebra},
      {"bar", algebra},
      {"cobar",
       {{"type", "object"},
        {"properties",
         {{"dualOf", algebra},
          {"barOf", algebra},
          {"maxLength", {{"type", "integer"}}},
          {"basis", {{"type", "array"}}},
          {"coaugmentation", {{"type", "string"}}},
          {"comult", {{"type", "array"}}},
          {"d", {{"type", "array"}}}}}}},
      {"quiver", quiver},
      {"quiver blocks",
       {{"type", "object"},
        {"properties", {{"type", {{"type", "string"}, {"example", "Atilde3"}}}, {"lambda", {{"type", "array"}}}, {"quiver", quiver}}}}},
      {"quiver drinfeld",
       {{"type", "object"},
        {"properties",
         {{"algebra", algebra},
          {"e", element},
          {"quiver", quiver},
          {"relations", {{"type", "array"}}},
          {"lambda", {{"type", "array"}}},
          {"maxLength", {{"type", "integer"}}}}}}}};
  std::string key = cmd;
  if (key == "endcoh") key = "stab";
  if (!table.count(key)) key = key.substr(0, key.find(' '));
  json out = table.at(key);
  out["command"] = cmd;
  return out;
}

// ---- output ---------------------------------------------------------------------------------

void render_text(const json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !flat(v)) {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      } else if (flat(v)) {
        os << pad << k << ":";
        for (const auto& x : v) os << ' ' << scalar(x);
        os << '\n';
      } else {
        os << pad << k << ": " << scalar(v) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << "- " << scalar(v) << '\n';
      }
    }
  } else {
    os << pad << scalar(j) << '\n';
  }
}

void emit(const json& j, const Options& o) {
  if (o.out == "text") render_text(j, std::cout, 0);
  else std::cout << j.dump(2) << '\n';
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotHomogeneous:
    case ErrorCode::NotQuasiDominant:
    case ErrorCode::NotInIdeal:
    case ErrorCode::NotInMaximalIdeal:
    case ErrorCode::CharTooSmall:
    case ErrorCode::QHofZeroUndefined:
    case ErrorCode::NotQuadratic:
    case ErrorCode::FieldLacksI:
    case ErrorCode::NotAugmented:
    case ErrorCode::NotConilpotent:
      return 3;
    case ErrorCode::WindowExceedsBound:
      return 4;
    default:
      return 2;
  }
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("inputs", o.inputs, "Input JSON file(s); '-' reads standard input");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singlab: exact computations for hypersurface singularities, matrix factorisations, "
               "Hochschild invariants, quivers and Koszul duality"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "Coefficient field: rat, gauss or gf:<p>");
  app.add_option("--weights", o.weights, "Variable weights, e.g. 1,1,2");
  app.add_option("--weight-bound", o.weight_bound, "Largest weight slice to compute");
  app.add_option("--trunc", o.trunc, "Truncation length or order bound");
  app.add_option("--window", o.window, "Largest degree (or depth) reported");
  app.add_option("--out", o.out, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--schema", o.schema, "Print the input schema of the command and exit");
  app.add_option("--ring", o.ring, "Variables, e.g. x,y,z");
  app.add_option("--sigma", o.sigma, "The polynomial σ");
  app.add_option("--gens", o.gens, "Comma-separated generators");
  app.add_option("--fs", o.fs, "Comma-separated generators f_i of L = A/(f)");
  app.add_option("--coeffs", o.coeffs, "Comma-separated cofactors σ_i");
  app.add_option("--type", o.type, "Extended Dynkin label, e.g. Atilde3");
  app.add_option("--lambda", o.lambda, "Comma-separated weights a+bi");
  app.add_option("--var", o.var, "Variable name");
  app.add_option("--vars", o.vars, "Two variable names u,v");
  app.add_option("--variant", o.variant, "cochain or chain");
  app.add_option("--support", o.support, "sum or product");
  app.add_flag("--unreduced", o.unreduced, "Use the unnormalised bar complex");
  app.add_option("--base", o.base, "Tensor base: field or vertices");

  std::string chosen;
  std::function<json()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<json()> fn,
                  const std::string& full) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    add_common(sub, o);
    sub->callback([&, fn, full] {
      chosen = full;
      action = fn;
    });
  };

  CLI::App* poly = app.add_subcommand("poly", "Polynomial ideals");
  poly->require_subcommand(1)->fallthrough();
  leaf(poly, "gb", "Reduced Gröbner basis", [&] { return cmd_gb(o); }, "poly gb");
  leaf(&app, "milnor", "Milnor number and basis", [&] { return cmd_milnor(o, false); }, "milnor");
  leaf(&app, "tjurina", "Tjurina number and basis", [&] { return cmd_milnor(o, true); }, "tjurina");
  CLI::App* mf = app.add_subcommand("mf", "Matrix factorisations");
  mf->require_subcommand(1)->fallthrough();
  for (const char* s : {"verify", "shift", "tensor", "unfold", "coker", "knoerrer-g", "knoerrer-h", "rho", "hom"}) {
    const std::string name = s;
    leaf(mf, name, "mf " + name, [&, name] { return cmd_mf(name, o); }, "mf " + name);
  }
  leaf(&app, "stab", "Stabilisation of A/(f) as a matrix factorisation", [&] { return cmd_stab(o); }, "stab");
  leaf(&app, "endcoh", "Cohomology of the endomorphism dg algebra of a stabilisation", [&] { return cmd_endcoh(o); },
       "endcoh");
  leaf(&app, "hh", "Hochschild (co)homology of a finite-dimensional curved algebra", [&] { return cmd_hh(o); }, "hh");
  CLI::App* quiver = app.add_subcommand("quiver", "Quivers and preprojective algebras");
  quiver->require_subcommand(1)->fallthrough();
  for (const char* s : {"paths", "preproj", "derived", "blocks", "drinfeld"}) {
    const std::string name = s;
    leaf(quiver, name, "quiver " + name, [&, name] { return cmd_quiver(name, o); }, "quiver " + name);
  }
  leaf(&app, "koszul-dual", "Cohomology of the dual bar construction", [&] { return cmd_koszul_dual(o); },
       "koszul-dual");
  leaf(&app, "bar", "Bar construction pieces", [&] { return cmd_bar(o); }, "bar");
  leaf(&app, "cobar", "Cobar construction of a conilpotent coalgebra", [&] { return cmd_cobar(o); }, "cobar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (o.schema) {
      std::cout << schema_for(chosen).dump(2) << '\n';
      return 0;
    }
    emit(action(), o);
    return 0;
  } catch (const Error& e) {
    const json err = {{"error", {{"code", std::string(error_name(e.code()))}, {"message", e.what()}}}};
    std::cout << err.dump(2) << '\n';
    std::cerr << "singlab: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const json::exception& e) {
    const json err = {{"error", {{"code", "ParseError"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << '\n';
    std::cerr << "singlab: " << e.what() << '\n';
    return 2;
  }
}
