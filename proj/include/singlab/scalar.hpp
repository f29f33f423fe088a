#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "singlab/error.hpp"

namespace singlab {

enum class FieldKind : std::uint8_t { Rat, Gauss, GFp };

/// The base field k: ℚ, the Gaussian rationals ℚ(i), or a prime field GF(p).
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field(FieldKind::Rat, 0); }
  static constexpr Field gaussian() { return Field(FieldKind::Gauss, 0); }
  /// Throws InvalidInput unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Accepts "rat", "gauss" and "gf:<p>".
  static Field parse(std::string_view text);

  constexpr FieldKind kind() const { return kind_; }
  constexpr std::uint32_t characteristic() const { return p_; }
  bool has_sqrt_minus_one() const;
  std::string name() const;

  friend constexpr bool operator==(Field a, Field b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }

 private:
  constexpr Field(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}

  FieldKind kind_ = FieldKind::Rat;
  std::uint32_t p_ = 0;
};

/// An exact element of a Field.
///
/// Rationals are kept in lowest terms with positive denominator (GMP does this for
/// us); Gaussian rationals are a pair of rationals; GF(p) residues are integers in
/// [0, p) stored in the real part. Arithmetic between different fields throws
/// FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, long value);
  Scalar(Field f, const mpq_class& re, const mpq_class& im = 0);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }
  /// A square root of −1; FieldLacksI when the field has none.
  static Scalar imaginary_unit(Field f);

  Field field() const { return field_; }
  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text: "3", "-2/5", "(1+1/2i)", "-i", "(0)"-free. GF(p) prints the residue.
  std::string to_string() const;
  /// True when to_string() needs parentheses to be used as a product factor.
  bool needs_parens() const;

 private:
  void check(const Scalar& o) const;
  void reduce();

  Field field_{};
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Parses a coefficient literal: integer, p/q, or Gaussian forms a+bi, bi, i.
Scalar parse_scalar(Field f, std::string_view text);

}  // namespace singlab
