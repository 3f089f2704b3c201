#pragma once

// Exact scalars in the tower Q ⊂ Q[params] ⊂ Q(params).

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homalg/error.hpp"
#include "homalg/polynomial.hpp"

namespace homalg {

enum class RingKind { rational = 0, polynomial = 1, fraction = 2 };

inline const char* to_string(RingKind k) {
  switch (k) {
    case RingKind::rational: return "rational";
    case RingKind::polynomial: return "polynomial";
    case RingKind::fraction: return "fraction";
  }
  return "?";
}

inline RingKind ring_kind_from_string(std::string_view s) {
  if (s == "rational") return RingKind::rational;
  if (s == "polynomial") return RingKind::polynomial;
  if (s == "fraction" || s == "fraction-field") return RingKind::fraction;
  throw RingError("unknown ring kind '" + std::string(s) + "'");
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || std::isalpha(static_cast<unsigned char>(s[0])) == 0) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

/// Coefficient ring description. In a fraction ring only the first
/// `denominator_vars` parameters may occur in denominators; the rest are
/// adjoined indeterminates that stay polynomial.
struct RingSpec {
  RingKind kind = RingKind::rational;
  std::vector<std::string> parameters;
  std::size_t denominator_vars = 0;

  std::size_t nvars() const noexcept { return parameters.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < parameters.size(); ++i) {
      if (parameters[i] == name) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline RingPtr make_ring(RingKind kind, std::vector<std::string> parameters) {
  if (kind == RingKind::rational && !parameters.empty())
    throw RingError("a rational ring takes no parameters");
  if (kind != RingKind::rational && parameters.empty()) kind = RingKind::rational;
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (!is_identifier(parameters[i]))
      throw RingError("invalid parameter name '" + parameters[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (parameters[i] == parameters[j])
        throw RingError("duplicate parameter '" + parameters[i] + "'");
    }
  }
  RingSpec r;
  r.kind = kind;
  r.denominator_vars = kind == RingKind::fraction ? parameters.size() : 0;
  r.parameters = std::move(parameters);
  return std::make_shared<const RingSpec>(std::move(r));
}

inline RingPtr rational_ring() {
  static const RingPtr q = make_ring(RingKind::rational, {});
  return q;
}

inline RingPtr polynomial_ring(std::vector<std::string> params) {
  return make_ring(RingKind::polynomial, std::move(params));
}

inline RingPtr fraction_ring(std::vector<std::string> params) {
  return make_ring(RingKind::fraction, std::move(params));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || *a == *b;
}

/// Smallest ring of the tower containing both; parameter lists must be
/// prefix-compatible.
inline RingPtr join_rings(const RingPtr& a, const RingPtr& b) {
  if (same_ring(a, b)) return a;
  const RingSpec& sa = *a;
  const RingSpec& sb = *b;
  const RingSpec& longer = sa.nvars() >= sb.nvars() ? sa : sb;
  const RingSpec& shorter = sa.nvars() >= sb.nvars() ? sb : sa;
  if (!std::equal(shorter.parameters.begin(), shorter.parameters.end(),
                  longer.parameters.begin()))
    throw RingError("incompatible parameter lists");
  RingSpec r;
  r.kind = std::max(sa.kind, sb.kind);
  r.parameters = longer.parameters;
  if (r.kind == RingKind::fraction) {
    r.denominator_vars = 0;
    for (const RingSpec* s : {&sa, &sb}) {
      if (s->kind == RingKind::fraction)
        r.denominator_vars = std::max(r.denominator_vars, s->denominator_vars);
    }
  }
  if (r == sa) return a;
  if (r == sb) return b;
  return std::make_shared<const RingSpec>(std::move(r));
}

/// Adjoins polynomial indeterminates; the base kind is kept (Q becomes Q[X]).
inline RingPtr adjoin_indeterminates(const RingPtr& ring,
                                     const std::vector<std::string>& names) {
  RingSpec r = *ring;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw RingError("invalid indeterminate name '" + n + "'");
    if (r.index_of(n)) throw RingError("indeterminate '" + n + "' collides with a parameter");
    r.parameters.push_back(n);
  }
  if (r.kind == RingKind::rational && !names.empty()) r.kind = RingKind::polynomial;
  return std::make_shared<const RingSpec>(std::move(r));
}

class Scalar {
 public:
  Scalar() : Scalar(rational_ring()) {}
  explicit Scalar(RingPtr ring) : ring_(std::move(ring)), num_(ring_->nvars()), den_(ring_->nvars()) {}

  Scalar(RingPtr ring, const mpq_class& value) : Scalar(std::move(ring)) {
    num_ = Polynomial::constant(ring_->nvars(), value);
  }

  static Scalar zero(const RingPtr& ring) { return Scalar(ring); }
  static Scalar one(const RingPtr& ring) { return Scalar(ring, 1); }
  static Scalar rational(const mpq_class& v) { return Scalar(rational_ring(), v); }

  static Scalar parameter(const RingPtr& ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx) throw RingError("undeclared parameter '" + std::string(name) + "'");
    Scalar s(ring);
    s.num_ = Polynomial::variable(ring->nvars(), *idx);
    return s;
  }

  /// Builds num/den in canonical form.
  static Scalar from_fraction(const RingPtr& ring, Polynomial num, const Polynomial& den) {
    if (den.is_zero()) throw DivisionError("zero denominator");
    Scalar s(ring);
    s.num_ = std::move(num);
    s.set_den(den);
    s.normalize();
    return s;
  }

  static Scalar from_polynomial(const RingPtr& ring, Polynomial num) {
    Scalar s(ring);
    s.num_ = std::move(num);
    return s;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const Polynomial& numerator() const noexcept { return num_; }
  Polynomial denominator() const { return den_one() ? Polynomial::one(ring_->nvars()) : den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_one(); }
  bool is_polynomial() const noexcept { return den_one(); }
  bool is_rational_constant() const noexcept { return num_.is_constant() && den_one(); }

  mpq_class rational_value() const {
    if (!is_rational_constant()) throw RingError("scalar is not a rational constant");
    return num_.constant_value();
  }

  /// Same value viewed in a larger ring of the tower.
  Scalar embed(const RingPtr& target) const {
    if (ring_ == target) return *this;
    if (same_ring(ring_, target)) {
      Scalar s = *this;
      s.ring_ = target;
      return s;
    }
    RingPtr j = join_rings(ring_, target);
    if (!same_ring(j, target)) throw RingError("cannot embed scalar into a smaller ring");
    Scalar s(target);
    s.num_ = num_.extended(target->nvars());
    s.den_ = den_.extended(target->nvars());
    return s;
  }

  Scalar operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b, false); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return add(a, b, true); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.ring_ != b.ring_ && !same_ring(a.ring_, b.ring_)) {
      RingPtr j = join_rings(a.ring_, b.ring_);
      return a.embed(j) * b.embed(j);
    }
    if (a.is_zero() || b.is_zero()) return Scalar(a.ring_);
    if (a.den_one() && b.den_one()) return from_polynomial(a.ring_, a.num_ * b.num_);
    // cross-cancel before multiplying
    Polynomial n1 = a.num_, d1 = a.denominator(), n2 = b.num_, d2 = b.denominator();
    cancel(n1, d2);
    cancel(n2, d1);
    Scalar s(a.ring_);
    s.num_ = n1 * n2;
    s.set_den(d1 * d2);
    s.pin_denominator();
    return s;
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.ring_ != b.ring_ && !same_ring(a.ring_, b.ring_)) {
      RingPtr j = join_rings(a.ring_, b.ring_);
      return a.embed(j) / b.embed(j);
    }
    if (b.is_zero()) throw DivisionError("division by zero");
    // Always computed in the fraction field, then recognized in the ring kind.
    Polynomial n1 = a.num_, d1 = a.denominator(), n2 = b.denominator(), d2 = b.num_;
    cancel(n1, d2);
    cancel(n2, d1);
    Scalar s(a.ring_);
    s.num_ = n1 * n2;
    s.set_den(d1 * d2);
    s.pin_denominator();
    s.check_kind();
    return s;
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar pow(long e) const {
    if (e < 0) return (Scalar::one(ring_) / *this).pow(-e);
    Scalar s(ring_);
    s.num_ = num_.pow(static_cast<unsigned>(e));
    if (!den_one()) s.den_ = den_.pow(static_cast<unsigned>(e));
    return s;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.ring_ != b.ring_ && !same_ring(a.ring_, b.ring_)) {
      RingPtr j = join_rings(a.ring_, b.ring_);
      return a.embed(j) == b.embed(j);
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Deterministic total order (not an ordering of values).
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (!(a.num_ == b.num_)) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  /// Renders in the coefficient-expression grammar; parse_scalar inverts it.
  std::string to_string() const {
    const auto& names = ring_->parameters;
    if (den_one()) return render_polynomial(num_, names);
    // Clear rational coefficients so the display has integer parts.
    mpz_class scale = 1;
    for (const auto* p : {&num_, &den_}) {
      for (const auto& t : p->terms())
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Polynomial d = den_.scaled(mpq_class(scale));
    Polynomial n = num_.scaled(mpq_class(scale));
    mpz_class g = 0;
    for (const auto* p : {&n, &d}) {
      for (const auto& t : p->terms())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    if (g > 1) {
      mpq_class inv(1, g);
      n = n.scaled(inv);
      d = d.scaled(inv);
    }
    std::string ns = render_polynomial(n, names);
    std::string ds = render_polynomial(d, names);
    if (n.size() > 1) ns = "(" + ns + ")";
    bool bare = d.is_constant();
    if (d.size() == 1 && d.leading_coeff() == 1) {
      const auto& e = d.leading().exps;
      bare = std::count_if(e.begin(), e.end(), [](std::uint32_t x) { return x != 0; }) == 1;
    }
    if (!bare) ds = "(" + ds + ")";
    return ns + "/" + ds;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  // An empty den_ stands for the denominator 1.
  bool den_one() const noexcept { return den_.is_zero(); }

  void set_den(const Polynomial& d) {
    if (d.is_one()) {
      den_ = Polynomial(ring_->nvars());
    } else {
      den_ = d;
    }
  }

  static void cancel(Polynomial& n, Polynomial& d) {
    if (d.is_constant() || n.is_zero()) return;
    Polynomial g = gcd(n, d);
    if (g.is_one()) return;
    n = divide_or_throw(n, g);
    d = divide_or_throw(d, g);
  }

  static Scalar add(const Scalar& a, const Scalar& b, bool subtract) {
    if (a.ring_ != b.ring_ && !same_ring(a.ring_, b.ring_)) {
      RingPtr j = join_rings(a.ring_, b.ring_);
      return add(a.embed(j), b.embed(j), subtract);
    }
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.den_ == b.den_) {
      Scalar s(a.ring_);
      s.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      if (a.den_one()) return s;
      s.den_ = a.den_;
      s.normalize();
      return s;
    }
    const Polynomial da = a.denominator();
    const Polynomial db = b.denominator();
    Polynomial g = gcd(da, db);
    Polynomial ca = divide_or_throw(db, g);
    Polynomial cb = divide_or_throw(da, g);
    Scalar s(a.ring_);
    s.num_ = subtract ? a.num_ * ca - b.num_ * cb : a.num_ * ca + b.num_ * cb;
    s.set_den(da * ca);
    s.normalize();
    return s;
  }

  void pin_denominator() {
    if (num_.is_zero() || den_one()) {
      den_ = Polynomial(ring_->nvars());
      return;
    }
    const mpq_class lc = den_.leading_coeff();
    if (lc != 1) {
      mpq_class inv = 1 / lc;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
    if (den_.is_one()) den_ = Polynomial(ring_->nvars());
    if (ring_->kind == RingKind::fraction && den_.uses_any_from(ring_->denominator_vars))
      throw std::logic_error("adjoined indeterminate in a denominator");
  }

  void normalize() {
    if (!den_one() && !den_.is_constant()) {
      Polynomial d = den_;
      cancel(num_, d);
      den_ = std::move(d);
    }
    pin_denominator();
    check_kind();
  }

  void check_kind() const {
    if (ring_->kind != RingKind::fraction && !den_one())
      throw DivisionError("quotient is not in the polynomial ring");
  }

  RingPtr ring_;
  Polynomial num_;
  Polynomial den_;
};

/// Evaluates s with each parameter replaced by values[i] (same ring for all).
inline Scalar substitute(const Scalar& s, const std::vector<Scalar>& values,
                         const RingPtr& target) {
  auto eval = [&](const Polynomial& p) {
    Scalar acc = Scalar::zero(target);
    for (const auto& t : p.terms()) {
      Scalar term(target, t.coeff);
      for (std::size_t i = 0; i < t.exps.size(); ++i) {
        if (t.exps[i] != 0) term *= values[i].embed(target).pow(t.exps[i]);
      }
      acc += term;
    }
    return acc;
  };
  Scalar d = s.is_polynomial() ? Scalar::one(target) : eval(s.denominator());
  if (d.is_zero()) throw DivisionError("substitution makes a denominator vanish");
  return eval(s.numerator()) / d;
}

namespace detail {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Scalar parse() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    Scalar v = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        Scalar d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        try {
          v /= d;
        } catch (const DivisionError& e) {
          throw ParseError(e.what(), at);
        }
      } else {
        return v;
      }
    }
  }

  // Unary minus binds looser than '^': -a^2 is -(a^2).
  Scalar factor() {
    if (accept('-')) return -factor();
    Scalar b = base();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", start);
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) throw ParseError("exponent too large", start);
      b = b.pow(std::stol(digits));
    }
    return b;
  }

  Scalar base() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -base();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      return Scalar(ring_, mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (!ring_->index_of(name)) throw ParseError("undeclared identifier '" + name + "'", start);
      return Scalar::parameter(ring_, name);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar parse_scalar(std::string_view text, const RingPtr& ring) {
  return detail::ScalarParser(text, ring).parse();
}

}  // namespace homalg
