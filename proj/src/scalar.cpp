#include "singlab/scalar.hpp"

#include <cctype>
#include <string>

namespace singlab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) fail(ErrorCode::ParseError, "empty number");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+')
      fail(ErrorCode::ParseError, "bad number '" + std::string(text) + "'");
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) fail(ErrorCode::ParseError, "bad number '" + std::string(text) + "'");
  if (q.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) fail(ErrorCode::InvalidInput, "GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  return Field(FieldKind::GFp, p);
}

Field Field::parse(std::string_view text) {
  if (text == "rat" || text == "Q") return rationals();
  if (text == "gauss" || text == "Q(i)") return gaussian();
  if (text.rfind("gf:", 0) == 0) {
    const std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorCode::ParseError, "bad field '" + std::string(text) + "'");
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  fail(ErrorCode::ParseError, "unknown field '" + std::string(text) + "'");
}

bool Field::has_sqrt_minus_one() const {
  switch (kind_) {
    case FieldKind::Rat: return false;
    case FieldKind::Gauss: return true;
    case FieldKind::GFp: return p_ == 2 || p_ % 4 == 1;
  }
  return false;
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::Rat: return "rat";
    case FieldKind::Gauss: return "gauss";
    case FieldKind::GFp: return "gf:" + std::to_string(p_);
  }
  return "?";
}

Scalar::Scalar(Field f, long value) : field_(f), re_(value), im_(0) { reduce(); }

Scalar::Scalar(Field f, const mpq_class& re, const mpq_class& im) : field_(f), re_(re), im_(im) {
  re_.canonicalize();
  im_.canonicalize();
  if (f.kind() != FieldKind::Gauss && sgn(im_) != 0) fail(ErrorCode::FieldMismatch, "imaginary part outside ℚ(i)");
  reduce();
}

Scalar Scalar::imaginary_unit(Field f) {
  switch (f.kind()) {
    case FieldKind::Gauss: return Scalar(f, 0, 1);
    case FieldKind::Rat: fail(ErrorCode::FieldLacksI, "ℚ has no square root of -1");
    case FieldKind::GFp: {
      const std::uint32_t p = f.characteristic();
      if (p == 2) return one(f);
      if (p % 4 != 1) fail(ErrorCode::FieldLacksI, "GF(" + std::to_string(p) + ") has no square root of -1");
      // A quadratic non-residue g gives g^((p-1)/4) as a root of -1.
      for (std::uint64_t g = 2; g < p; ++g) {
        if (pow_mod(g, (p - 1) / 2, p) == p - 1) return Scalar(f, static_cast<long>(pow_mod(g, (p - 1) / 4, p)));
      }
      fail(ErrorCode::FieldLacksI, "no non-residue found");
    }
  }
  fail(ErrorCode::FieldLacksI, "unknown field");
}

void Scalar::reduce() {
  if (field_.kind() != FieldKind::GFp) return;
  const mpz_class p = field_.characteristic();
  if (re_.get_den() != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), re_.get_den_mpz_t(), p.get_mpz_t()) == 0)
      fail(ErrorCode::InvalidInput, "denominator divisible by the characteristic");
    mpz_class n = re_.get_num() * inv;
    re_ = n;
  }
  mpz_class r = re_.get_num() % p;
  if (r < 0) r += p;
  re_ = r;
}

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_)) fail(ErrorCode::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.re_ = -r.re_;
  r.im_ = -r.im_;
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidInput, "division by zero");
  Scalar r = *this;
  switch (field_.kind()) {
    case FieldKind::Rat: r.re_ = 1 / re_; break;
    case FieldKind::Gauss: {
      const mpq_class n = re_ * re_ + im_ * im_;
      r.re_ = re_ / n;
      r.im_ = -im_ / n;
      break;
    }
    case FieldKind::GFp: {
      mpz_class inv;
      const mpz_class p = field_.characteristic();
      mpz_invert(inv.get_mpz_t(), re_.get_num_mpz_t(), p.get_mpz_t());
      r.re_ = inv;
      break;
    }
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  re_ += o.re_;
  im_ += o.im_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  re_ -= o.re_;
  im_ -= o.im_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (field_.kind() == FieldKind::Gauss) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
  } else {
    re_ *= o.re_;
    reduce();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  return *this *= o.inverse();
}

bool Scalar::needs_parens() const {
  return field_.kind() == FieldKind::Gauss && sgn(im_) != 0 && sgn(re_) != 0;
}

std::string Scalar::to_string() const {
  if (field_.kind() != FieldKind::Gauss || sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) imag = "i";
  else if (im_ == -1) imag = "-i";
  else imag = im_.get_str() + "i";
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + re_.get_str();
  if (imag[0] != '-') out += "+";
  out += imag + ")";
  return out;
}

Scalar parse_scalar(Field f, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) fail(ErrorCode::ParseError, "empty coefficient");
  if (s.back() != 'i') return Scalar(f, parse_rational(s));
  if (f.kind() != FieldKind::Gauss) fail(ErrorCode::FieldMismatch, "Gaussian literal '" + s + "' outside ℚ(i)");
  // Split "a+bi" at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k)
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  im_part.pop_back();
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  if (im_part[0] == '+') im_part = im_part.substr(1);
  const mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part);
  return Scalar(f, re, parse_rational(im_part));
}

}  // namespace singlab
