#pragma once

// Sparse multivariate polynomials over the rationals, with exact division
// and a recursive primitive-PRS gcd. Terms are kept sorted in descending
// graded-lexicographic order, so equality is structural.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "homalg/error.hpp"

namespace homalg {

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exps;
  std::uint32_t degree = 0;
  mpq_class coeff;
};

/// Graded-lex comparison of the monomial parts; <0, 0 or >0.
inline int compare_monomials(const Term& a, const Term& b) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  }
  return 0;
}

class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const mpq_class& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back(Term{Exponents(nvars, 0), 0, c});
    return p;
  }

  static Polynomial one(std::size_t nvars) { return constant(nvars, 1); }

  static Polynomial variable(std::size_t nvars, std::size_t index) {
    assert(index < nvars);
    Polynomial p(nvars);
    Term t{Exponents(nvars, 0), 1, 1};
    t.exps[index] = 1;
    p.terms_.push_back(std::move(t));
    return p;
  }

  /// Builds a canonical polynomial from terms in any order (duplicates summed).
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return compare_monomials(a, b) > 0;
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && compare_monomials(p.terms_.back(), t) == 0) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].degree == 0);
  }

  bool is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].degree == 0 && terms_[0].coeff == 1;
  }

  mpq_class constant_value() const {
    assert(is_constant());
    return terms_.empty() ? mpq_class(0) : terms_[0].coeff;
  }

  const Term& leading() const {
    assert(!terms_.empty());
    return terms_.front();
  }

  const mpq_class& leading_coeff() const { return leading().coeff; }

  std::uint32_t total_degree() const {
    return terms_.empty() ? 0 : terms_.front().degree;
  }

  std::uint32_t degree_in(std::size_t v) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exps[v]);
    return d;
  }

  bool uses(std::size_t v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [v](const Term& t) { return t.exps[v] != 0; });
  }

  /// True if some term involves a variable with index >= first.
  bool uses_any_from(std::size_t first) const {
    for (const auto& t : terms_) {
      for (std::size_t v = first; v < nvars_; ++v) {
        if (t.exps[v] != 0) return true;
      }
    }
    return false;
  }

  /// Embeds into a ring with more trailing variables.
  Polynomial extended(std::size_t nvars) const {
    assert(nvars >= nvars_);
    if (nvars == nvars_) return *this;
    Polynomial p(nvars);
    p.terms_ = terms_;
    for (auto& t : p.terms_) t.exps.resize(nvars, 0);
    return p;
  }

  /// Drops trailing variables, which must not occur.
  Polynomial truncated(std::size_t nvars) const {
    assert(nvars <= nvars_);
    if (nvars == nvars_) return *this;
    assert(!uses_any_from(nvars));
    Polynomial p(nvars);
    p.terms_ = terms_;
    for (auto& t : p.terms_) t.exps.resize(nvars);
    return p;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  Polynomial scaled(const mpq_class& c) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
  }

  /// Multiplies by c * x^exps; order is preserved by a monomial order.
  Polynomial times_monomial(const Exponents& exps, std::uint32_t degree,
                            const mpq_class& c) const {
    Polynomial p(nvars_);
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Term u{t.exps, t.degree + degree, t.coeff * c};
      for (std::size_t i = 0; i < nvars_; ++i) u.exps[i] += exps[i];
      p.terms_.push_back(std::move(u));
    }
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, true);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    assert(a.nvars_ == b.nvars_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
    if (b.terms_.size() == 1) {
      const auto& t = b.terms_[0];
      return a.times_monomial(t.exps, t.degree, t.coeff);
    }
    if (a.terms_.size() == 1) {
      const auto& t = a.terms_[0];
      return b.times_monomial(t.exps, t.degree, t.coeff);
    }
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& large = a.size() <= b.size() ? b : a;
    std::vector<Term> out;
    out.reserve(small.size() * large.size());
    for (const auto& s : small.terms_) {
      for (const auto& l : large.terms_) {
        Term u{l.exps, l.degree + s.degree, l.coeff * s.coeff};
        for (std::size_t i = 0; i < a.nvars_; ++i) u.exps[i] += s.exps[i];
        out.push_back(std::move(u));
      }
    }
    return from_terms(a.nvars_, std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial result = one(nvars_);
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (compare_monomials(a.terms_[i], b.terms_[i]) != 0 ||
          a.terms_[i].coeff != b.terms_[i].coeff) {
        return false;
      }
    }
    return true;
  }

  /// Total order used for deterministic sorting of polynomial lists.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = compare_monomials(a.terms_[i], b.terms_[i]);
      if (c != 0) return c < 0;
      if (a.terms_[i].coeff != b.terms_[i].coeff)
        return a.terms_[i].coeff < b.terms_[i].coeff;
    }
    return a.terms_.size() < b.terms_.size();
  }

  /// Divides by the leading coefficient.
  Polynomial monic() const {
    if (is_zero() || leading_coeff() == 1) return *this;
    mpq_class inv = 1 / leading_coeff();
    return scaled(inv);
  }

  /// Integer coefficients with unit content and positive leading coefficient.
  Polynomial primitive_integer() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const auto& t : terms_) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              t.coeff.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
              t.coeff.get_num_mpz_t());
    }
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (leading_coeff() < 0) factor = -factor;
    return scaled(factor);
  }

  /// Coefficients with respect to variable v (index = power of v); the
  /// coefficient polynomials do not involve v.
  std::vector<Polynomial> coefficients_in(std::size_t v) const {
    std::vector<Polynomial> out(degree_in(v) + 1, Polynomial(nvars_));
    for (const auto& t : terms_) {
      Term u = t;
      const std::uint32_t e = u.exps[v];
      u.exps[v] = 0;
      u.degree -= e;
      out[e].terms_.push_back(std::move(u));
    }
    return out;
  }

  static Polynomial from_coefficients(std::size_t nvars,
                                      const std::vector<Polynomial>& coeffs,
                                      std::size_t v) {
    std::vector<Term> all;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      for (const auto& t : coeffs[e].terms_) {
        Term u = t;
        u.exps[v] += static_cast<std::uint32_t>(e);
        u.degree += static_cast<std::uint32_t>(e);
        all.push_back(std::move(u));
      }
    }
    return from_terms(nvars, std::move(all));
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    assert(a.nvars_ == b.nvars_);
    Polynomial p(a.nvars_);
    p.terms_.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      if (i == a.size()) {
        c = -1;
      } else if (j == b.size()) {
        c = 1;
      } else {
        c = compare_monomials(a.terms_[i], b.terms_[j]);
      }
      if (c > 0) {
        p.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        p.terms_.push_back(b.terms_[j++]);
        if (subtract) p.terms_.back().coeff = -p.terms_.back().coeff;
      } else {
        mpq_class s = subtract ? mpq_class(a.terms_[i].coeff - b.terms_[j].coeff)
                               : mpq_class(a.terms_[i].coeff + b.terms_[j].coeff);
        if (s != 0) p.terms_.push_back(Term{a.terms_[i].exps, a.terms_[i].degree, s});
        ++i;
        ++j;
      }
    }
    return p;
  }

  std::size_t nvars_;
  std::vector<Term> terms_;
};

namespace detail {

inline bool monomial_divides(const Term& d, const Term& t) {
  if (d.degree > t.degree) return false;
  for (std::size_t i = 0; i < d.exps.size(); ++i) {
    if (d.exps[i] > t.exps[i]) return false;
  }
  return true;
}

}  // namespace detail

/// Exact quotient a / b, or nullopt when b does not divide a.
inline std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionError("polynomial division by zero");
  const std::size_t n = a.nvars();
  if (a.is_zero()) return Polynomial(n);
  if (b.is_constant()) return a.scaled(1 / b.constant_value());
  const Term& lb = b.leading();
  if (b.size() == 1) {
    std::vector<Term> q;
    q.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!detail::monomial_divides(lb, t)) return std::nullopt;
      Term u{t.exps, t.degree - lb.degree, t.coeff / lb.coeff};
      for (std::size_t i = 0; i < n; ++i) u.exps[i] -= lb.exps[i];
      q.push_back(std::move(u));
    }
    Polynomial out(n);
    out = Polynomial::from_terms(n, std::move(q));
    return out;
  }
  Polynomial r = a;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!detail::monomial_divides(lb, lr)) return std::nullopt;
    Term u{lr.exps, lr.degree - lb.degree, lr.coeff / lb.coeff};
    for (std::size_t i = 0; i < n; ++i) u.exps[i] -= lb.exps[i];
    r -= b.times_monomial(u.exps, u.degree, u.coeff);
    q.push_back(std::move(u));
  }
  return Polynomial::from_terms(n, std::move(q));
}

inline Polynomial divide_or_throw(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw DivisionError("inexact polynomial division");
  return std::move(*q);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

/// Monic gcd of all coefficients of p with respect to v.
inline Polynomial content_in(const Polynomial& p, std::size_t v) {
  auto coeffs = p.coefficients_in(v);
  Polynomial g(p.nvars());
  // smallest first tends to terminate sooner
  std::sort(coeffs.begin(), coeffs.end(),
            [](const Polynomial& x, const Polynomial& y) { return x.size() < y.size(); });
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

inline Polynomial primitive_in(const Polynomial& p, std::size_t v) {
  if (p.is_zero()) return p;
  return divide_or_throw(p, content_in(p, v)).monic();
}

/// Pseudo-remainder of a by b in variable v (lazy multiplier form).
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t v) {
  const std::size_t n = a.nvars();
  auto r = a.coefficients_in(v);
  const auto bc = b.coefficients_in(v);
  const std::size_t db = bc.size() - 1;
  const Polynomial& lc = bc.back();
  while (r.size() > db && !r.empty()) {
    const std::size_t dr = r.size() - 1;
    if (r.back().is_zero()) {
      r.pop_back();
      continue;
    }
    const Polynomial lead = r.back();
    const std::size_t shift = dr - db;
    for (std::size_t k = 0; k < dr; ++k) r[k] = r[k] * lc;
    for (std::size_t k = 0; k < db; ++k) r[k + shift] -= lead * bc[k];
    r.pop_back();
  }
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return Polynomial::from_coefficients(n, r, v);
}

inline Polynomial monomial_gcd(const Term& m, const Polynomial& p) {
  Exponents e = m.exps;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], t.exps[i]);
  }
  std::uint32_t deg = 0;
  for (auto x : e) deg += x;
  Polynomial out(p.nvars());
  out = Polynomial::from_terms(p.nvars(), {Term{std::move(e), deg, 1}});
  return out;
}

}  // namespace detail

/// Monic greatest common divisor over Q.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return Polynomial::one(n);
  if (a.size() == 1) return detail::monomial_gcd(a.leading(), b);
  if (b.size() == 1) return detail::monomial_gcd(b.leading(), a);
  if (a == b) return a.monic();

  // A variable present in only one operand contributes only through content.
  for (std::size_t v = 0; v < n; ++v) {
    const bool ua = a.uses(v);
    const bool ub = b.uses(v);
    if (ua && !ub) return gcd(detail::content_in(a, v), b);
    if (ub && !ua) return gcd(a, detail::content_in(b, v));
  }

  std::size_t v = n;
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.uses(i)) continue;
    const std::uint32_t d = std::max(a.degree_in(i), b.degree_in(i));
    if (v == n || d < best) {
      v = i;
      best = d;
    }
  }
  assert(v < n);

  const Polynomial ca = detail::content_in(a, v);
  const Polynomial cb = detail::content_in(b, v);
  const Polynomial c = gcd(ca, cb);
  Polynomial r0 = divide_or_throw(a, ca).monic();
  Polynomial r1 = divide_or_throw(b, cb).monic();
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  for (;;) {
    Polynomial r = detail::pseudo_remainder(r0, r1, v);
    if (r.is_zero()) return (c * detail::primitive_in(r1, v)).monic();
    if (r.degree_in(v) == 0) return c.monic();
    r0 = std::move(r1);
    r1 = detail::primitive_in(r, v);
  }
}

/// Renders in the coefficient-expression grammar, terms in canonical order.
inline std::string render_polynomial(const Polynomial& p,
                                     std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (t.exps[i] > 1) mono += '^' + std::to_string(t.exps[i]);
    }
    const bool negative = t.coeff < 0;
    const mpq_class mag = abs(t.coeff);
    std::string body;
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace homalg
