// JSON conversions for the command-line front end.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "singlab/hochschild.hpp"
#include "singlab/koszuldual.hpp"
#include "singlab/matfac.hpp"
#include "singlab/quiverlab.hpp"
#include "singlab/stabilize.hpp"

namespace singlab::io {

using nlohmann::json;

/// Settings from the command line that override or complete the input document.
struct Context {
  std::optional<Field> field;
  std::optional<std::string> weights;
};

Field field_of(const json& doc, const Context& ctx);

/// "ring" as "x,y,z" or ["x","y","z"], with "weights" likewise.
Ring ring_of(const json& doc, const Context& ctx);
std::vector<Poly> polys_of(const Ring& ring, const json& list);
/// A comma-separated command-line list, or a JSON array of strings.
std::vector<std::string> split_list(const std::string& text);

json to_json(const Ring& ring);
json to_json(const PolyMatrix& m);

/// {"ring", "weights"?, "field"?, "sigma", "phi", "psi"}.
MatrixFactorisation mf_of(const json& doc, const Context& ctx);
json to_json(const MatrixFactorisation& m);

/// Structure-constant algebra: {"field", "grading", "basis": [{"name", "degree"}],
/// "unit", "mult": [{"left", "right", "result": {name: coef}}], "d": [{"of", "result"}],
/// "curvature": {name: coef}}, or {"preset": …}.
CurvedAlgebra algebra_of(const json& doc, const Context& ctx);
json to_json(const CurvedAlgebra& a);
/// {name: coef} over the algebra's basis.
Vector element_of(const CurvedAlgebra& a, const json& elem);
json element_json(const std::vector<std::string>& names, const Vector& v);

/// {"vertices": [...], "arrows": [{"name", "from", "to", "degree"?}], "extending"?}.
Quiver quiver_of(const json& doc);
json to_json(const Quiver& q);
/// "e0", or arrow names joined by '.'.
Path path_of(const Quiver& q, const std::string& text);
/// [{"path", "coef"}] terms.
PathElement path_element_of(const Quiver& q, const json& terms, Field f);
/// Weights as a JSON list of strings/numbers or a comma-separated string, over ℚ(i)
/// unless the context names another field.
std::vector<Scalar> lambda_of(const json& value, Field f);

/// {"field", "basis": [{"name", "degree", "weight"?}], "coaugmentation",
/// "comult": [{"of", "terms": [[left, right, coef]]}], "d": [{"of", "result"}]}, or
/// {"dualOf": algebra} or {"barOf": algebra, "maxLength": L}.
ConilpotentCoalgebra coalgebra_of(const json& doc, const Context& ctx);

}  // namespace singlab::io
