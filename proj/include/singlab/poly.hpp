#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singlab/scalar.hpp"

namespace singlab {

using Monomial = std::vector<int>;

/// Polynomial ring k[x_1..x_n] with positive integer variable weights.
///
/// Monomials are ordered by weighted graded reverse-lexicographic order with
/// x_1 > x_2 > ... > x_n. Rings compare equal when names, weights and field agree.
class Ring {
 public:
  Ring();
  explicit Ring(std::vector<std::string> variables, Field field = Field::rationals(), std::vector<int> weights = {});

  std::size_t nvars() const { return data_->names.size(); }
  const std::string& name(std::size_t i) const { return data_->names[i]; }
  const std::vector<std::string>& names() const { return data_->names; }
  int weight(std::size_t i) const { return data_->weights[i]; }
  const std::vector<int>& weights() const { return data_->weights; }
  Field field() const { return data_->field; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  long weighted_degree(const Monomial& m) const;
  static long total_degree(const Monomial& m);
  /// <0, 0, >0 like strcmp, in the monomial order.
  int compare(const Monomial& a, const Monomial& b) const;

  Ring with_weights(std::vector<int> weights) const;
  Ring with_field(Field f) const;
  /// Appends fresh variables; VariableClash on a repeated name.
  Ring adjoin(const std::vector<std::string>& names, const std::vector<int>& weights = {}) const;
  Ring without(std::size_t var) const;
  /// Variables of `a` followed by those of `b`; VariableClash when names overlap.
  static Ring join(const Ring& a, const Ring& b);

  /// "x,y,z" style comma list.
  static Ring parse(std::string_view vars, Field f = Field::rationals(), std::string_view weights = "");

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<int> weights;
    Field field;
  };
  std::shared_ptr<const Data> data_;
};

/// Sparse multivariate polynomial; terms sorted in descending monomial order.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Scalar coef;
  };

  Poly() = default;
  explicit Poly(Ring ring);
  Poly(Ring ring, const Scalar& constant);
  static Poly constant(const Ring& ring, long c) { return Poly(ring, Scalar(ring.field(), c)); }
  static Poly variable(const Ring& ring, std::size_t i);
  static Poly monomial(const Ring& ring, Monomial m, const Scalar& c);
  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static Poly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading() const { return terms_.front(); }
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;
  long total_degree() const;
  long weighted_degree() const;
  /// Lowest total degree of a term (order of vanishing at the origin); -1 for zero.
  long order() const;
  /// Common weighted degree of all terms, when there is one.
  std::optional<long> homogeneous_weight() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& s) const;
  Poly times_monomial(const Monomial& m, const Scalar& c) const;
  Poly pow(unsigned e) const;
  friend bool operator==(const Poly& a, const Poly& b);

  Poly derivative(std::size_t var) const;
  /// Substitutes x_var := value (value must live in the same ring).
  Poly substitute(std::size_t var, const Poly& value) const;
  /// Re-expresses in `target`, mapping variables by name; absent names must have exponent 0.
  Poly to_ring(const Ring& target) const;
  /// Drops terms of total degree >= n.
  Poly truncate_order(long n) const;

  /// Canonical text form (see parse_poly for the grammar).
  std::string to_string() const;

 private:
  void check_ring(const Poly& o) const;
  Ring ring_;
  std::vector<Term> terms_;
};

/// Parses the polynomial grammar: terms joined by + or -, each `coef*mono`, `mono`
/// or `coef`; `mono` is `name^exp` factors joined by `*`; coefficients are
/// integers, p/q, or parenthesised Gaussian literals such as (1+2i), 3i, i.
Poly parse_poly(const Ring& ring, std::string_view text);

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& b, const Monomial& a);

/// All monomials of the given weighted degree, in descending order.
std::vector<Monomial> monomials_of_weight(const Ring& ring, long w);

}  // namespace singlab
