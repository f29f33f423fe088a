#include "singlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

namespace singlab {

// ----------------------------------------------------------------------------- Ring

Ring::Ring() : Ring(std::vector<std::string>{}) {}

Ring::Ring(std::vector<std::string> variables, Field field, std::vector<int> weights) {
  if (weights.empty()) weights.assign(variables.size(), 1);
  if (weights.size() != variables.size()) fail(ErrorCode::InvalidInput, "one weight per variable required");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    const auto& v = variables[i];
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      fail(ErrorCode::InvalidInput, "bad variable name '" + v + "'");
    for (char c : v)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') fail(ErrorCode::InvalidInput, "bad variable name '" + v + "'");
    if (!seen.insert(v).second) fail(ErrorCode::VariableClash, "repeated variable '" + v + "'");
    if (weights[i] < 1) fail(ErrorCode::InvalidInput, "weights must be >= 1");
  }
  data_ = std::make_shared<const Data>(Data{std::move(variables), std::move(weights), field});
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < nvars(); ++i)
    if (data_->names[i] == name) return i;
  return std::nullopt;
}

long Ring::weighted_degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * data_->weights[i];
  return d;
}

long Ring::total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0L); }

int Ring::compare(const Monomial& a, const Monomial& b) const {
  const long da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

Ring Ring::with_weights(std::vector<int> weights) const { return Ring(names(), field(), std::move(weights)); }
Ring Ring::with_field(Field f) const { return Ring(names(), f, weights()); }

Ring Ring::adjoin(const std::vector<std::string>& extra, const std::vector<int>& extra_weights) const {
  auto n = names();
  auto w = weights();
  for (std::size_t i = 0; i < extra.size(); ++i) {
    if (index_of(extra[i])) fail(ErrorCode::VariableClash, "variable '" + extra[i] + "' already present");
    n.push_back(extra[i]);
    w.push_back(extra_weights.empty() ? 1 : extra_weights[i]);
  }
  return Ring(std::move(n), field(), std::move(w));
}

Ring Ring::without(std::size_t var) const {
  auto n = names();
  auto w = weights();
  n.erase(n.begin() + static_cast<long>(var));
  w.erase(w.begin() + static_cast<long>(var));
  return Ring(std::move(n), field(), std::move(w));
}

Ring Ring::join(const Ring& a, const Ring& b) {
  if (!(a.field() == b.field())) fail(ErrorCode::FieldMismatch, "joining rings over different fields");
  return a.adjoin(b.names(), b.weights());
}

Ring Ring::parse(std::string_view vars, Field f, std::string_view weights) {
  auto split = [](std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
  };
  std::vector<int> w;
  for (const auto& t : split(weights)) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) fail(ErrorCode::ParseError, "bad weight '" + t + "'");
    w.push_back(std::stoi(t));
  }
  return Ring(split(vars), f, std::move(w));
}

bool operator==(const Ring& a, const Ring& b) {
  return a.data_ == b.data_ || (a.names() == b.names() && a.weights() == b.weights() && a.field() == b.field());
}

// ----------------------------------------------------------------------------- monomials

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = b[i] - a[i];
  return m;
}

std::vector<Monomial> monomials_of_weight(const Ring& ring, long w) {
  std::vector<Monomial> out;
  if (w < 0) return out;
  Monomial cur(ring.nvars(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rest) {
    if (i == ring.nvars()) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (long e = rest / ring.weight(i); e >= 0; --e) {
      cur[i] = static_cast<int>(e);
      rec(i + 1, rest - e * ring.weight(i));
    }
    cur[i] = 0;
  };
  rec(0, w);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

// ----------------------------------------------------------------------------- Poly

Poly::Poly(Ring ring) : ring_(std::move(ring)) {}

Poly::Poly(Ring ring, const Scalar& constant) : ring_(std::move(ring)) {
  if (!(constant.field() == ring_.field())) fail(ErrorCode::FieldMismatch, "constant outside the ring's field");
  if (!constant.is_zero()) terms_.push_back({Monomial(ring_.nvars(), 0), constant});
}

Poly Poly::variable(const Ring& ring, std::size_t i) {
  Monomial m(ring.nvars(), 0);
  m[i] = 1;
  return monomial(ring, std::move(m), Scalar::one(ring.field()));
}

Poly Poly::monomial(const Ring& ring, Monomial m, const Scalar& c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  return p;
}

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  Poly p(ring);
  for (auto& t : terms) {
    if (t.mono.size() != ring.nvars()) fail(ErrorCode::InvalidInput, "monomial length mismatch");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) p.terms_.back().coef += t.coef;
    else p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coef.is_zero(); });
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && Ring::total_degree(terms_[0].mono) == 0); }

Scalar Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return Scalar::zero(ring_.field());
}

Scalar Poly::constant_term() const { return coefficient(Monomial(ring_.nvars(), 0)); }

long Poly::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, Ring::total_degree(t.mono));
  return d;
}

long Poly::weighted_degree() const { return terms_.empty() ? -1 : ring_.weighted_degree(terms_.front().mono); }

long Poly::order() const {
  long d = -1;
  for (const auto& t : terms_) {
    const long td = Ring::total_degree(t.mono);
    if (d < 0 || td < d) d = td;
  }
  return d;
}

std::optional<long> Poly::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  const long w = ring_.weighted_degree(terms_.front().mono);
  for (const auto& t : terms_)
    if (ring_.weighted_degree(t.mono) != w) return std::nullopt;
  return w;
}

void Poly::check_ring(const Poly& o) const {
  if (!(ring_ == o.ring_)) fail(ErrorCode::RingMismatch, "polynomials from different rings");
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = 0;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = ring_.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) out.push_back(std::move(terms_[i++]));
    else if (c < 0) out.push_back(o.terms_[j++]);
    else {
      Scalar s = terms_[i].coef + o.terms_[j].coef;
      if (!s.is_zero()) out.push_back({std::move(terms_[i].mono), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  std::vector<Poly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Monomial m(s.mono.size());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = s.mono[k] + t.mono[k];
      terms.push_back({std::move(m), s.coef * t.coef});
    }
  return Poly::from_terms(a.ring_, std::move(terms));
}

Poly Poly::scaled(const Scalar& s) const {
  Poly p(ring_);
  if (s.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coef * s});
  return p;
}

Poly Poly::times_monomial(const Monomial& m, const Scalar& c) const {
  Poly p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial n(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) n[k] = t.mono[k] + m[k];
    p.terms_.push_back({std::move(n), t.coef * c});
  }
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(ring_, 1);
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].mono != b.terms_[k].mono || !(a.terms_[k].coef == b.terms_[k].coef)) return false;
  return true;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Monomial m = t.mono;
    m[var] -= 1;
    terms.push_back({std::move(m), t.coef * Scalar(ring_.field(), static_cast<long>(t.mono[var]))});
  }
  return from_terms(ring_, std::move(terms));
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  check_ring(value);
  Poly out(ring_);
  std::vector<Poly> powers{Poly::constant(ring_, 1)};
  for (const auto& t : terms_) {
    const int e = t.mono[var];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    Monomial m = t.mono;
    m[var] = 0;
    out += powers[static_cast<std::size_t>(e)].times_monomial(m, t.coef);
  }
  return out;
}

Poly Poly::to_ring(const Ring& target) const {
  if (!(target.field() == ring_.field())) fail(ErrorCode::FieldMismatch, "ring change across fields");
  std::vector<std::optional<std::size_t>> map(ring_.nvars());
  for (std::size_t i = 0; i < ring_.nvars(); ++i) map[i] = target.index_of(ring_.name(i));
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    Monomial m(target.nvars(), 0);
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) fail(ErrorCode::RingMismatch, "variable '" + ring_.name(i) + "' missing from target ring");
      m[*map[i]] = t.mono[i];
    }
    terms.push_back({std::move(m), t.coef});
  }
  return from_terms(target, std::move(terms));
}

Poly Poly::truncate_order(long n) const {
  Poly p(ring_);
  for (const auto& t : terms_)
    if (Ring::total_degree(t.mono) < n) p.terms_.push_back(t);
  return p;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool has_mono = Ring::total_degree(t.mono) > 0;
    const Scalar& c = t.coef;
    bool negative = false;
    std::string body;
    if (c.needs_parens()) {
      body = c.to_string();
    } else {
      // Real, pure imaginary, or GF(p) residue: pull a sign out front.
      negative = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
      body = (negative ? -c : c).to_string();
    }
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.name(i);
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (first) out += negative ? "-" : "";
    else out += negative ? "-" : "+";
    first = false;
    if (!has_mono) out += body;
    else if (body == "1") out += mono;
    else out += body + "*" + mono;
  }
  return out;
}

// ----------------------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text) : ring_(ring) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  Poly parse() {
    if (s_.empty()) error("empty polynomial");
    Poly sum(ring_);
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = s_[pos_++] == '-';
      } else if (!first) {
        error("expected + or -");
      }
      Poly term = parse_term();
      sum += negative ? -term : term;
      first = false;
    }
    return sum;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  Poly parse_term() {
    Scalar coef = Scalar::one(ring_.field());
    Monomial mono(ring_.nvars(), 0);
    parse_factor(coef, mono);
    while (peek() == '*') {
      ++pos_;
      parse_factor(coef, mono);
    }
    return Poly::monomial(ring_, std::move(mono), coef);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected digits");
    return s_.substr(start, pos_ - start);
  }

  void parse_factor(Scalar& coef, Monomial& mono) {
    const char c = peek();
    if (c == '(') {
      const std::size_t close = s_.find(')', pos_);
      if (close == std::string::npos) error("unbalanced parenthesis");
      coef *= parse_scalar(ring_.field(), s_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      if (peek() == '/') {
        ++pos_;
        num += "/" + read_digits();
      }
      if (peek() == 'i' && !is_ident_char(pos_ + 1) && !ring_.index_of("i")) {
        ++pos_;
        num += "i";
      }
      coef *= parse_scalar(ring_.field(), num);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (is_ident_char(pos_)) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      int exp = 1;
      if (peek() == '^') {
        ++pos_;
        exp = std::stoi(read_digits());
      }
      if (auto idx = ring_.index_of(name)) {
        mono[*idx] += exp;
        return;
      }
      if (name == "i") {
        Scalar u = Scalar::imaginary_unit(ring_.field());
        for (int k = 0; k < exp; ++k) coef *= u;
        return;
      }
      fail(ErrorCode::ParseError, "unknown variable '" + name + "' in '" + s_ + "'");
    }
    error("unexpected character");
  }

  bool is_ident_char(std::size_t p) const {
    if (p >= s_.size()) return false;
    const char c = s_[p];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  const Ring& ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Ring& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

}  // namespace singlab
