#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singlab/algebra.hpp"

namespace singlab {

struct Arrow {
  std::string name;
  std::size_t tail = 0, head = 0;
  int degree = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::optional<std::size_t> extending;

  std::size_t size() const { return vertices.size(); }
};

/// A path read left to right: arrows[0] first. With no arrows it is the idempotent e_start.
struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
  /// Length, then start vertex, then arrow indices.
  friend bool operator<(const Path& a, const Path& b);
};

std::size_t path_tail(const Quiver& q, const Path& p);
std::size_t path_head(const Quiver& q, const Path& p);
std::string path_to_string(const Quiver& q, const Path& p);

/// All paths of length ≤ max_len in Path order.
std::vector<Path> path_basis(const Quiver& q, std::size_t max_len);
/// p then q; nullopt when head(p) ≠ tail(q). So e_v·a = a for a with tail v.
std::optional<Path> path_multiply(const Quiver& q, const Path& a, const Path& b);

using PathElement = std::map<Path, Scalar>;

PathElement path_element(const Path& p, const Scalar& c);
PathElement multiply(const Quiver& q, const PathElement& a, const PathElement& b);
void add_into(PathElement& a, const PathElement& b, const Scalar& scale);
/// Terms in Path order, e.g. "a.a* - 2*e1"; the empty element prints as "0".
std::string to_string(const Quiver& q, const PathElement& x);

/// The double quiver: arrows of q, then a* : head(a) → tail(a) for each a, in order.
Quiver double_quiver(const Quiver& q);

/// Dims per path length 0..max_len of span(paths ≤ max_len) modulo the span of all
/// p·r·q with |p| + len(r) + |q| ≤ max_len, len(r) the longest term of r. For
/// inhomogeneous relations this is the associated graded of the length filtration.
std::vector<std::size_t> truncated_algebra_dim(const Quiver& q, const std::vector<PathElement>& relations,
                                               std::size_t max_len);

/// One relation per vertex on double_quiver(q): Σ_a e_i[a,a*]e_i − λ_i e_i, where
/// e_i[a,a*]e_i = a·a* when tail(a) = i, minus a*·a when head(a) = i.
std::vector<PathElement> preprojective_relations(const Quiver& q, const std::vector<Scalar>& lambda);

/// The derived (deformed) preprojective algebra: the double quiver in degree 0 plus a
/// loop t_i of degree −1 at each vertex, with d(t_i) the preprojective relation at i.
/// Paths are truncated by Adams length, where t_i counts 2 and other arrows 1.
struct DGQuiverAlgebra {
  Quiver graded;
  std::size_t first_loop = 0;  // arrows[first_loop + i] is t_i
  std::vector<Scalar> lambda;
  std::vector<PathElement> dt;

  int degree(const Path& p) const;
  std::size_t adams_length(const Path& p) const;
  /// Graded Leibniz rule; arrows of degree 0 are cycles.
  PathElement differential(const Path& p) const;
  /// Dims of H⁰ in each Adams length 0..max_len, from degree-0 paths modulo d of
  /// degree −1 paths, both truncated at max_len.
  std::vector<std::size_t> h0_dims(std::size_t max_len) const;
};

DGQuiverAlgebra derived_preprojective(const Quiver& q, const std::vector<Scalar>& lambda);

/// Each λ_i has positive real part, or zero real part and nonnegative imaginary part.
bool quasi_dominant(const std::vector<Scalar>& lambda);

/// "Atilde<n>", "Dtilde<n>", "Etilde6/7/8", with extending vertex 0 and arrows
/// oriented from the lower index to the higher (and n → 0 closing the Ã cycle).
Quiver extended_dynkin(const std::string& label);
/// The Kleinian polynomial for "A<n>", "D<n>", "E6/7/8", in canonical print.
std::string kleinian_polynomial(const std::string& type);
/// ADE label of a connected Dynkin graph given by its edges on `n` vertices;
/// InvalidInput when the graph is not Dynkin.
std::string classify_dynkin(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

struct Block {
  std::string type;
  std::string polynomial;
  std::vector<std::size_t> vertices;  // vertex indices of the extended quiver
};

/// Components of the zero-weight full subquiver of Q′ (Q minus the extending vertex),
/// ordered by smallest vertex. λ may list Q′ only or every vertex of Q (the
/// extending entry is then ignored). NotQuasiDominant when λ′ is not quasi-dominant.
std::vector<Block> dsg_blocks(const Quiver& extended, const std::vector<Scalar>& lambda);
std::vector<Block> dsg_blocks(const std::string& type, const std::vector<Scalar>& lambda);

/// Vertex data for an algebra whose basis consists of paths: the basis index of
/// each e_v and the (tail, head) of each basis element.
struct VertexLabels {
  std::vector<std::size_t> idempotents;
  std::vector<std::pair<std::size_t, std::size_t>> labels;
};

struct QuiverQuotient {
  CurvedAlgebra algebra;
  VertexLabels vertices;
  std::vector<Path> basis;
};

/// kQ/(relations) as a finite-dimensional algebra, computed at path length ≤ max_len.
/// InvalidInput unless every path of length max_len already vanishes.
QuiverQuotient quiver_quotient_algebra(const Quiver& q, const std::vector<PathElement>& relations,
                                       std::size_t max_len);

enum class TensorBase { Field, Vertices };

/// Q⁰ = A and Q^{−1−i} = Ae ⊗ R^{⊗i} ⊗ eA for i ≤ depth_bound, R = eAe, with the bar
/// differential Σ_j (−1)^j (multiply factors j and j+1). Tensors are over the field, or
/// over kQ₀ when base = Vertices.
struct DrinfeldComplex {
  CurvedAlgebra algebra;
  Vector e;
  TensorBase base = TensorBase::Field;
  int depth_bound = 0;
  /// dims[k] = dim Q^{−k} for k = 0..depth_bound+1.
  std::vector<std::size_t> dims;
  /// d[k] : Q^{−k−1} → Q^{−k}.
  std::vector<Matrix> d;
};

/// NotIdempotent unless e² = e. With base = Vertices, e must be a sum of the vertex
/// idempotents in `vertices` (InvalidInput otherwise).
DrinfeldComplex drinfeld_quotient(const CurvedAlgebra& a, const Vector& e, int depth_bound,
                                  TensorBase base = TensorBase::Field,
                                  const std::optional<VertexLabels>& vertices = std::nullopt);
/// dims of H^{−j} for j = 0..window_depth, keyed by the degree −j.
/// WindowExceedsBound unless window_depth < depth_bound − 1.
std::map<int, std::size_t> drinfeld_cohomology(const DrinfeldComplex& dc, int window_depth);
bool drinfeld_d_squared(const DrinfeldComplex& dc);

}  // namespace singlab
