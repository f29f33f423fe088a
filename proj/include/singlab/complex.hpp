#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "singlab/matrix.hpp"
#include "singlab/poly_matrix.hpp"

namespace singlab {

enum class Grading { Z, Z2 };

/// A complex of finite-rank free modules over a polynomial ring (optionally modulo
/// an ideal), cohomologically graded: d^i : C^i → C^{i+1}.
///
/// Internal weights: generator j of C^i sits in weight weights[i][j], a monomial m
/// has weight weight_scale·wt(m), and the differential raises weight by `dweight`.
/// So a homogeneous entry a_ts of d^i has weight g_s − g_t + dweight.
/// For Z2 grading the degrees are 0 and 1 and d^1 : C^1 → C^0.
/// `curvature` c, when set, means d∘d = c·id (a curved object such as an MF).
struct FreeComplex {
  Ring ring;
  Grading grading = Grading::Z;
  std::map<int, std::vector<long>> weights;
  std::map<int, PolyMatrix> d;
  long dweight = 0;
  int weight_scale = 1;
  std::optional<GroebnerBasis> quotient;
  std::optional<Poly> curvature;

  std::size_t rank(int i) const;
  std::vector<int> degrees() const;
  int next(int i) const { return grading == Grading::Z2 ? (i + 1) % 2 : i + 1; }
  int prev(int i) const { return grading == Grading::Z2 ? (i + 1) % 2 : i - 1; }
  /// d^i, or a zero matrix of the right shape when absent.
  PolyMatrix differential(int i) const;

  /// Adds a free module of the given generator weights in degree i.
  void set_module(int i, std::vector<long> gen_weights);
  /// Zero-generator-weight helper.
  void set_rank(int i, std::size_t r) { set_module(i, std::vector<long>(r, 0)); }
  void set_differential(int i, PolyMatrix m);

  /// Entry normal form (identity when there is no quotient).
  Poly reduce(const Poly& p) const;
  PolyMatrix reduce(const PolyMatrix& m) const;
};

/// First failure of d∘d = curvature·id, if any.
struct DSquareReport {
  bool ok = true;
  int degree = 0;
  std::size_t row = 0, col = 0;
};
DSquareReport check_d_squared(const FreeComplex& c);

/// Throws NotHomogeneous unless every entry has its required weight.
void check_homogeneous(const FreeComplex& c);

/// C[n]: (C[n])^i = C^{i+n} with d multiplied by (−1)^n.
FreeComplex shift(const FreeComplex& c, int n);

/// A morphism of complexes of the given degree: f[i] : M^i → N^{i+degree}.
struct ChainMap {
  int degree = 0;
  std::map<int, PolyMatrix> f;
};

/// d_N f = (−1)^{deg f} f d_M in every degree.
bool is_chain_map(const FreeComplex& m, const FreeComplex& n, const ChainMap& f);
ChainMap identity_map(const FreeComplex& c);
ChainMap zero_map(const FreeComplex& m, const FreeComplex& n, int degree = 0);

/// cone(f)^i = M^{i+1} ⊕ N^i. The block differential is [[d_M, f], [0, −d_N]] acting
/// on row vectors, i.e. [[d_M, 0], [f, −d_N]] on column vectors. DegreeMismatch
/// unless deg f = 0.
FreeComplex cone(const FreeComplex& m, const FreeComplex& n, const ChainMap& f);

/// Hom^n = ⊕_i Hom(M^i, N^{i+n}); ∂f = d_N f − (−1)^n f d_M.
/// Basis of each Hom(M^i, N^j): elementary matrices E_ts, row-major in (t, s).
FreeComplex hom_complex(const FreeComplex& m, const FreeComplex& n);
/// Coordinates of a homogeneous morphism in the hom complex, and back.
std::vector<Poly> hom_coordinates(const FreeComplex& m, const FreeComplex& n, const ChainMap& f);
ChainMap hom_element(const FreeComplex& m, const FreeComplex& n, int degree, const std::vector<Poly>& coords);

/// (M⊗N)^i = ⊕_{p+q=i} M^p⊗N^q with d(y⊗z) = dy⊗z + (−1)^p y⊗dz. Both complexes
/// must live over the same ring.
FreeComplex tensor(const FreeComplex& m, const FreeComplex& n);

/// The weight-w slice: degree i holds C^i in weight w + i·dweight.
struct SliceComplex {
  long weight = 0;
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> d;
};
SliceComplex slice(const FreeComplex& c, long weight);

/// Basis of C^i in internal weight w: pairs (generator, monomial).
std::vector<std::pair<std::size_t, Monomial>> slice_basis(const FreeComplex& c, int i, long w);
/// Scalar matrix of d^i from weight w to weight w + dweight.
Matrix slice_differential(const FreeComplex& c, int i, long w);

/// The element Σ v_k x^{m_k} e_{j_k} of C^i for a vector in the weight-w slice basis.
std::vector<Poly> slice_element(const FreeComplex& c, int i, long w, const Vector& v);
/// d^i applied to an element given by its coordinates (reduced modulo the quotient).
std::vector<Poly> apply_differential(const FreeComplex& c, int i, const std::vector<Poly>& x);

using CohomologyTable = std::map<std::pair<int, long>, std::size_t>;

/// dim H at (degree, weight) for weights from the lowest generator weight up to
/// `weight_bound`. Zero entries are kept. NotHomogeneous when slicing is impossible.
CohomologyTable slice_cohomology(const FreeComplex& c, long weight_bound);
/// The smallest internal weight any element can have.
long min_weight(const FreeComplex& c);

}  // namespace singlab
