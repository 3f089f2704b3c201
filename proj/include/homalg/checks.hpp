#pragma once

// Identity checkers. Multilinear identities are decided on basis tuples;
// identities of higher degree in one variable on generic elements.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/report.hpp"

namespace homalg {

struct CheckOptions {
  std::size_t witness_cap = 16;
  bool generic = false;      // decide multilinear forms on generic elements instead
  bool cross_checks = true;  // also run the equivalent reformulations
  bool first_failure = false;  // stop each clause at its first failing tuple (verdict only, partial constraints)
};

/// Argument symmetries used to skip redundant basis tuples. For the swap
/// kinds the form is symmetric up to sign, and on the diagonal it equals
/// twice the underlying identity, so the defect is halved there.
enum class Symmetry { none, swap01, swap02, swap12, anti01, anti12 };

using FormFn = std::function<Element(const HomAlgebra&, const std::vector<Element>&,
                                     const std::vector<int>&)>;

struct Form {
  std::string clause;
  std::size_t arity;
  Symmetry symmetry = Symmetry::none;
  FormFn eval;
};

enum class Subgroup { G1 = 1, G2, G3, G4, G5, G6 };

inline std::vector<Perm> subgroup_members(Subgroup g) {
  switch (g) {
    case Subgroup::G1: return {Perm::id};
    case Subgroup::G2: return {Perm::id, Perm::s1};
    case Subgroup::G3: return {Perm::id, Perm::s2};
    case Subgroup::G4: return {Perm::id, Perm::s2s1s2};
    case Subgroup::G5: return {Perm::id, Perm::s1s2, Perm::s2s1};
    case Subgroup::G6: return {all_perms.begin(), all_perms.end()};
  }
  return {};
}

inline std::string subgroup_name(Subgroup g) { return "g" + std::to_string(static_cast<int>(g)); }

namespace detail {

inline bool has_odd(const HomAlgebra& a) {
  if (!a.grading) return false;
  for (int g : *a.grading) {
    if (g != 0) return true;
  }
  return false;
}

inline std::string generic_label(std::size_t arity, const std::vector<int>& ps, bool graded) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::string s = "generic(";
  for (std::size_t m = 0; m < arity; ++m) {
    if (m != 0) s += ',';
    s += names[m];
    if (graded) s += ":" + std::to_string(ps[m]);
  }
  return s + ")";
}

inline void run_basis(ReportBuilder& b, const HomAlgebra& a, const Form& f, bool first_failure = false) {
  const std::size_t n = a.dim();
  const std::size_t k = f.arity;
  std::vector<std::size_t> t(k, 0);
  std::vector<Element> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(a.e(i));
  const Scalar half(a.ring, mpq_class(1, 2));
  for (;;) {
    bool skip = false;
    bool diagonal = false;
    switch (f.symmetry) {
      case Symmetry::none: break;
      case Symmetry::swap01: skip = t[0] > t[1]; diagonal = t[0] == t[1]; break;
      case Symmetry::swap02: skip = t[0] > t[2]; diagonal = t[0] == t[2]; break;
      case Symmetry::swap12: skip = t[1] > t[2]; diagonal = t[1] == t[2]; break;
      case Symmetry::anti01: skip = t[0] >= t[1]; break;
      case Symmetry::anti12: skip = t[1] >= t[2]; break;
    }
    if (!skip) {
      std::vector<Element> xs;
      std::vector<int> ps;
      for (std::size_t m = 0; m < k; ++m) {
        xs.push_back(basis[t[m]]);
        ps.push_back(a.parity(t[m]));
      }
      Element d = f.eval(a, xs, ps);
      if (diagonal && !d.is_zero()) d = half * d;
      if (!d.is_zero()) {
        b.add_failure(f.clause, a, d, t, tuple_label(a, t), false);
        if (first_failure) return;
      }
    }
    std::size_t m = k;
    while (m > 0) {
      --m;
      if (++t[m] < n) break;
      t[m] = 0;
      if (m == 0) return;
    }
    if (k == 0) return;
  }
}

inline void run_generic(ReportBuilder& b, const HomAlgebra& a, const Form& f, bool first_failure = false) {
  const std::size_t k = f.arity;
  const bool graded = a.graded();
  const std::size_t combos = graded ? (std::size_t{1} << k) : 1;
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::vector<int> ps(k, 0);
    for (std::size_t m = 0; m < k; ++m) ps[m] = static_cast<int>((mask >> (k - 1 - m)) & 1U);
    GenericView v = generic_elements(a, k, graded ? &ps : nullptr);
    Element d = f.eval(v.algebra, v.elements, ps);
    if (!d.is_zero()) {
      b.add_failure(f.clause, a, d, {}, generic_label(k, ps, graded), true);
      if (first_failure) return;
    }
  }
}

inline void run_form(ReportBuilder& b, const HomAlgebra& a, const Form& f, bool generic, bool first_failure = false) {
  b.begin_clause(f.clause);
  if (generic) {
    run_generic(b, a, f, first_failure);
  } else {
    run_basis(b, a, f, first_failure);
  }
}

inline CheckReport run_forms(const std::string& identity, const HomAlgebra& a,
                             const std::vector<Form>& forms, const CheckOptions& o) {
  ReportBuilder b(identity, a.ring, o.witness_cap);
  for (const auto& f : forms) run_form(b, a, f, o.generic, o.first_failure);
  return b.finish();
}

inline Element M(const HomAlgebra& a, const Element& x, const Element& y) { return mul(a.product, x, y); }
inline Element Al(const HomAlgebra& a, const Element& x) { return apply_matrix(a.twist, x); }

inline Element signed_(int sign, const Element& x) { return sign > 0 ? x : -x; }

}  // namespace detail

/// as(x,y,z) = μ(α(x), μ(y,z)) − μ(μ(x,y), α(z)).
inline Element hom_associator(const HomAlgebra& a, const Element& x, const Element& y, const Element& z) {
  using detail::Al;
  using detail::M;
  return M(a, Al(a, x), M(a, y, z)) - M(a, M(a, x, y), Al(a, z));
}

/// Supercommutator [x,y] = μ(x,y) − (−1)^{|x||y|} μ(y,x) on homogeneous x, y.
inline Element supercommutator(const HomAlgebra& a, const Element& x, const Element& y, int px, int py) {
  return detail::M(a, x, y) - detail::signed_(koszul_int(px, py), detail::M(a, y, x));
}

/// Signed cyclic sum (−1)^{|x||z|}[α(x),[y,z]] + ... for the product of `a`.
inline Element super_jacobiator(const HomAlgebra& a, const std::vector<Element>& v, const std::vector<int>& p) {
  using detail::Al;
  using detail::M;
  const Element &x = v[0], &y = v[1], &z = v[2];
  Element j = detail::signed_(koszul_int(p[0], p[2]), M(a, Al(a, x), M(a, y, z)));
  j += detail::signed_(koszul_int(p[2], p[1]), M(a, Al(a, z), M(a, x, y)));
  j += detail::signed_(koszul_int(p[1], p[0]), M(a, Al(a, y), M(a, z, x)));
  return j;
}

/// Same cyclic sum, with the bracket taken to be the supercommutator of μ.
inline Element commutator_jacobiator(const HomAlgebra& a, const std::vector<Element>& v,
                                     const std::vector<int>& p) {
  auto br = [&](const Element& u, int pu, const Element& w, int pw) { return supercommutator(a, u, w, pu, pw); };
  const Element &x = v[0], &y = v[1], &z = v[2];
  const int px = p[0], py = p[1], pz = p[2];
  Element j = detail::signed_(koszul_int(px, pz), br(detail::Al(a, x), px, br(y, py, z, pz), (py + pz) & 1));
  j += detail::signed_(koszul_int(pz, py), br(detail::Al(a, z), pz, br(x, px, y, py), (px + py) & 1));
  j += detail::signed_(koszul_int(py, px), br(detail::Al(a, y), py, br(z, pz, x, px), (pz + px) & 1));
  return j;
}

// ---------------------------------------------------------------------------
// forms

namespace forms {

inline Form multiplicative() {
  return {"multiplicative", 2, Symmetry::none, [](const HomAlgebra& a, const auto& v, const auto&) {
            return detail::Al(a, detail::M(a, v[0], v[1])) -
                   detail::M(a, detail::Al(a, v[0]), detail::Al(a, v[1]));
          }};
}

inline Form hom_associative() {
  return {"hom-associative", 3, Symmetry::none, [](const HomAlgebra& a, const auto& v, const auto&) {
            return hom_associator(a, v[0], v[1], v[2]);
          }};
}

inline Form flexible() {
  return {"flexible", 3, Symmetry::swap02, [](const HomAlgebra& a, const auto& v, const auto&) {
            return hom_associator(a, v[0], v[1], v[2]) + hom_associator(a, v[2], v[1], v[0]);
          }};
}

inline Form flexible_direct() {
  return {"as(x,y,x)", 2, Symmetry::none, [](const HomAlgebra& a, const auto& v, const auto&) {
            return hom_associator(a, v[0], v[1], v[0]);
          }};
}

/// μ⁻(α(x), μ⁺(y,z)) − μ⁺(μ⁻(x,y), α(z)) − μ⁺(α(y), μ⁻(x,z)).
inline Form flexible_plus_minus() {
  return {"plus-minus", 3, Symmetry::none, [](const HomAlgebra& a, const auto& v, const auto&) {
            const Scalar half(a.ring, mpq_class(1, 2));
            auto plus = [&](const Element& u, const Element& w) {
              return half * (detail::M(a, u, w) + detail::M(a, w, u));
            };
            auto minus = [&](const Element& u, const Element& w) {
              return half * (detail::M(a, u, w) - detail::M(a, w, u));
            };
            const Element &x = v[0], &y = v[1], &z = v[2];
            return minus(detail::Al(a, x), plus(y, z)) - plus(minus(x, y), detail::Al(a, z)) -
                   plus(detail::Al(a, y), minus(x, z));
          }};
}

inline Form left_alternative() {
  return {"left", 3, Symmetry::swap01, [](const HomAlgebra& a, const auto& v, const auto&) {
            return hom_associator(a, v[0], v[1], v[2]) + hom_associator(a, v[1], v[0], v[2]);
          }};
}

inline Form right_alternative() {
  return {"right", 3, Symmetry::swap12, [](const HomAlgebra& a, const auto& v, const auto&) {
            return hom_associator(a, v[0], v[1], v[2]) + hom_associator(a, v[0], v[2], v[1]);
          }};
}

inline Form left_alternative_raw() {
  return {"as(x,x,y)", 2, Symmetry::none, [](const HomAlgebra& a, const auto& v, const auto&) {
            return hom_associator(a, v[0], v[0], v[1]);
          }};
}

inline Form right_alternative_raw() {
  return {"as(x,y,y)", 2, Symmetry::none, [](const HomAlgebra& a, const auto& v, const auto&) {
            return hom_associator(a, v[0], v[1], v[1]);
          }};
}

inline Form commutative() {
  return {"commutativity", 2, Symmetry::anti01, [](const HomAlgebra& a, const auto& v, const auto&) {
            return detail::M(a, v[0], v[1]) - detail::M(a, v[1], v[0]);
          }};
}

/// [x,y] + (−1)^{|x||y|}[y,x]; all-even gives plain skew-symmetry.
inline Form super_skew(std::string clause) {
  return {std::move(clause), 2, Symmetry::swap01, [](const HomAlgebra& a, const auto& v, const auto& p) {
            return detail::M(a, v[0], v[1]) + detail::signed_(koszul_int(p[0], p[1]), detail::M(a, v[1], v[0]));
          }};
}

inline Form super_jacobi(std::string clause) {
  return {std::move(clause), 3, Symmetry::none,
          [](const HomAlgebra& a, const auto& v, const auto& p) { return super_jacobiator(a, v, p); }};
}

inline Form commutator_jacobi() {
  return {"commutator-hom-jacobi", 3, Symmetry::none,
          [](const HomAlgebra& a, const auto& v, const auto& p) { return commutator_jacobiator(a, v, p); }};
}

/// Σ_{τ∈G} sgn(τ) (−1)^{|τ(x1,x2,x3)|} as(τ(x1,x2,x3)).
inline Form g_associator(Subgroup g) {
  auto members = subgroup_members(g);
  return {subgroup_name(g), 3, Symmetry::none, [members](const HomAlgebra& a, const auto& v, const auto& p) {
            Element sum = Element::zero(a.ring, a.dim());
            for (Perm t : members) {
              auto pos = perm_positions(t);
              int sign = perm_signature(t);
              if (permutation_parity(t, p[0], p[1], p[2]) != 0) sign = -sign;
              Element as = hom_associator(a, v[pos[0]], v[pos[1]], v[pos[2]]);
              sum += detail::signed_(sign, as);
            }
            return sum;
          }};
}

/// S̃(x,y,z) − (−1)^{|x||y|+|x||z|+|y||z|} S̃(x,z,y), with S̃ the signed cyclic
/// sum of Hom-associators (plain S when everything is even).
inline Form s_map() {
  return {"s-map", 3, Symmetry::none, [](const HomAlgebra& a, const auto& v, const auto& p) {
            auto st = [&](std::size_t i, std::size_t j, std::size_t k) {
              const Element &x = v[i], &y = v[j], &z = v[k];
              const int px = p[i], py = p[j], pz = p[k];
              Element s = detail::signed_(koszul_int(px, pz), hom_associator(a, x, y, z));
              s += detail::signed_(koszul_int(py, px), hom_associator(a, y, z, x));
              s += detail::signed_(koszul_int(pz, py), hom_associator(a, z, x, y));
              return s;
            };
            const int e = (p[0] * p[1] + p[0] * p[2] + p[1] * p[2]) & 1;
            return st(0, 1, 2) - detail::signed_(e != 0 ? -1 : 1, st(0, 2, 1));
          }};
}

inline Form leibniz() {
  return {"hom-leibniz", 3, Symmetry::none, [](const HomAlgebra& a, const auto& v, const auto&) {
            using detail::Al;
            using detail::M;
            const Element &x = v[0], &y = v[1], &z = v[2];
            return M(a, M(a, x, y), Al(a, z)) - M(a, M(a, x, z), Al(a, y)) - M(a, Al(a, x), M(a, y, z));
          }};
}

inline Form novikov_extra() {
  return {"novikov", 3, Symmetry::anti12, [](const HomAlgebra& a, const auto& v, const auto&) {
            using detail::Al;
            using detail::M;
            return M(a, M(a, v[0], v[1]), Al(a, v[2])) - M(a, M(a, v[0], v[2]), Al(a, v[1]));
          }};
}

/// μ(α²(x), μ(y, μ(x,x))) − μ(μ(α(x), y), α(μ(x,x))).
inline Form jordan() {
  return {"hom-jordan", 2, Symmetry::none, [](const HomAlgebra& a, const auto& v, const auto&) {
            using detail::Al;
            using detail::M;
            const Element &x = v[0], &y = v[1];
            const Element xx = M(a, x, x);
            const Element ax = Al(a, x);
            return M(a, Al(a, ax), M(a, y, xx)) - M(a, M(a, ax, y), Al(a, xx));
          }};
}

}  // namespace forms

// ---------------------------------------------------------------------------
// checkers

inline CheckReport check_multiplicative(const HomAlgebra& a, const CheckOptions& o = {}) {
  return detail::run_forms("multiplicative", a, {forms::multiplicative()}, o);
}

inline CheckReport check_hom_associative(const HomAlgebra& a, const CheckOptions& o = {}) {
  return detail::run_forms("hom-associative", a, {forms::hom_associative()}, o);
}

inline CheckReport check_hom_flexible(const HomAlgebra& a, const CheckOptions& o = {}) {
  CheckReport r = detail::run_forms("hom-flexible", a, {forms::flexible()}, o);
  if (o.cross_checks) {
    CheckOptions g = o;
    g.generic = true;
    CheckReport direct = detail::run_forms("hom-flexible", a, {forms::flexible_direct()}, g);
    CheckOptions bo = o;
    bo.generic = false;
    CheckReport pm = detail::run_forms("hom-flexible", a, {forms::flexible_plus_minus()}, bo);
    for (const CheckReport* c : {&direct, &pm}) {
      r.cross_checks.push_back({c->clauses.front().name, c->verdict, c->verdict == r.verdict});
      if (c->verdict != r.verdict) r.notes.push_back("cross-check disagreement: " + c->clauses.front().name);
    }
  }
  return r;
}

/// Flexibility decided only by the generic as(x,y,x) route.
inline CheckReport check_hom_flexible_direct(const HomAlgebra& a, const CheckOptions& o = {}) {
  CheckOptions g = o;
  g.generic = true;
  return detail::run_forms("hom-flexible", a, {forms::flexible_direct()}, g);
}

/// Flexibility decided only by the plus/minus product identity.
inline CheckReport check_hom_flexible_plus_minus(const HomAlgebra& a, const CheckOptions& o = {}) {
  return detail::run_forms("hom-flexible", a, {forms::flexible_plus_minus()}, o);
}

inline CheckReport check_hom_dialgebra(const HomDialgebra& d, const CheckOptions& o = {}) {
  const HomAlgebra& a = d.left;
  HomAlgebra r = a;
  r.product = d.right.embed(a.ring);
  auto L = [&](const Element& x, const Element& y) { return detail::M(a, x, y); };
  auto R = [&](const Element& x, const Element& y) { return detail::M(r, x, y); };
  auto A = [&](const Element& x) { return detail::Al(a, x); };
  auto form = [](std::string name, auto fn) {
    return Form{std::move(name), 3, Symmetry::none,
                [fn](const HomAlgebra&, const auto& v, const auto&) { return fn(v[0], v[1], v[2]); }};
  };
  std::vector<Form> fs{
      form("left-associative",
           [=](const Element& x, const Element& y, const Element& z) { return L(A(x), L(y, z)) - L(L(x, y), A(z)); }),
      form("left-absorbs-right",
           [=](const Element& x, const Element& y, const Element& z) { return L(A(x), L(y, z)) - L(A(x), R(y, z)); }),
      form("right-absorbs-left",
           [=](const Element& x, const Element& y, const Element& z) { return R(L(x, y), A(z)) - R(A(x), R(y, z)); }),
      form("right-associative",
           [=](const Element& x, const Element& y, const Element& z) { return R(A(x), R(y, z)) - R(R(x, y), A(z)); }),
      form("middle-associative",
           [=](const Element& x, const Element& y, const Element& z) { return L(R(x, y), A(z)) - R(A(x), L(y, z)); }),
  };
  if (o.generic) {
    // generic route needs the products over the extended ring
    ReportBuilder b("hom-dialgebra", a.ring, o.witness_cap);
    for (const auto& f : fs) {
      b.begin_clause(f.clause);
      GenericView v = generic_elements(a, 3);
      HomAlgebra ra = v.algebra;
      ra.product = d.right.embed(v.algebra.ring);
      auto Lg = [&](const Element& x, const Element& y) { return detail::M(v.algebra, x, y); };
      auto Rg = [&](const Element& x, const Element& y) { return detail::M(ra, x, y); };
      auto Ag = [&](const Element& x) { return detail::Al(v.algebra, x); };
      const Element &x = v.elements[0], &y = v.elements[1], &z = v.elements[2];
      Element dft;
      if (f.clause == "left-associative") dft = Lg(Ag(x), Lg(y, z)) - Lg(Lg(x, y), Ag(z));
      if (f.clause == "left-absorbs-right") dft = Lg(Ag(x), Lg(y, z)) - Lg(Ag(x), Rg(y, z));
      if (f.clause == "right-absorbs-left") dft = Rg(Lg(x, y), Ag(z)) - Rg(Ag(x), Rg(y, z));
      if (f.clause == "right-associative") dft = Rg(Ag(x), Rg(y, z)) - Rg(Rg(x, y), Ag(z));
      if (f.clause == "middle-associative") dft = Lg(Rg(x, y), Ag(z)) - Rg(Ag(x), Lg(y, z));
      if (!dft.is_zero()) b.add_failure(f.clause, a, dft, {}, "generic(x,y,z)", true);
    }
    return b.finish();
  }
  CheckOptions bo = o;
  return detail::run_forms("hom-dialgebra", a, fs, bo);
}

namespace detail {

/// Right adjoint matrices Ad_{e_j}: row i is [e_i, e_j].
inline std::vector<Matrix> right_adjoints(const HomAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> ad;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix m(a.ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [k, c] : a.product.cell(i, j)) m(i, k) = c;
    }
    ad.push_back(std::move(m));
  }
  return ad;
}

inline Matrix adjoint_of(const std::vector<Matrix>& ad, const Element& w, const RingPtr& ring) {
  const std::size_t n = ad.size();
  Matrix m(ring, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (w.coords[j].is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!ad[j](r, c).is_zero()) m(r, c) += w.coords[j] * ad[j](r, c);
      }
    }
  }
  return m;
}

}  // namespace detail

inline CheckReport check_hom_leibniz(const HomAlgebra& a, const CheckOptions& o = {}) {
  return detail::run_forms("hom-leibniz", a, {forms::leibniz()}, o);
}

/// Ad_{α(z)}([x,y]) = [Ad_z(x), α(y)] + [α(x), Ad_z(y)], adjoints as matrices.
inline CheckReport check_hom_leibniz_adjoint(const HomAlgebra& a, const CheckOptions& o = {}) {
  const auto ad = detail::right_adjoints(a);
  Form f{"adjoint-derivation", 3, Symmetry::none, [ad](const HomAlgebra& h, const auto& v, const auto&) {
           using detail::Al;
           using detail::M;
           const Element &x = v[0], &y = v[1], &z = v[2];
           const Matrix adz = detail::adjoint_of(ad, z, h.ring);
           const Matrix adaz = detail::adjoint_of(ad, Al(h, z), h.ring);
           return apply_matrix(adaz, M(h, x, y)) - M(h, apply_matrix(adz, x), Al(h, y)) -
                  M(h, Al(h, x), apply_matrix(adz, y));
         }};
  CheckOptions bo = o;
  bo.generic = false;
  return detail::run_forms("hom-leibniz", a, {f}, bo);
}

/// Operator form Ad_{α(z)} ∘ Ad_y = Ad_{α(y)} ∘ Ad_z + Ad_{Ad_z(y)} ∘ α,
/// compared as matrices for every basis pair (y,z); row i of the defect is
/// reported at the tuple (i, y, z).
inline CheckReport check_hom_leibniz_operator(const HomAlgebra& a, const CheckOptions& o = {}) {
  const std::size_t n = a.dim();
  const auto ad = detail::right_adjoints(a);
  ReportBuilder b("hom-leibniz", a.ring, o.witness_cap);
  b.begin_clause("operator-form");
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Element y = a.e(j), z = a.e(k);
      // row convention: f then g is F*G
      const Matrix lhs = ad[j] * detail::adjoint_of(ad, detail::Al(a, z), a.ring);
      const Matrix r1 = ad[k] * detail::adjoint_of(ad, detail::Al(a, y), a.ring);
      const Matrix r2 = a.twist * detail::adjoint_of(ad, apply_matrix(ad[k], y), a.ring);
      for (std::size_t i = 0; i < n; ++i) {
        Element d = lhs.row(i) - r1.row(i) - r2.row(i);
        if (!d.is_zero()) b.add_failure("operator-form", a, d, {i, j, k}, tuple_label(a, {i, j, k}), false);
      }
    }
  }
  return b.finish();
}

inline CheckReport check_hom_lie(const HomAlgebra& a, const CheckOptions& o = {}) {
  if (detail::has_odd(a))
    return CheckReport::not_applicable("hom-lie", "algebra has odd basis vectors; use hom-lie-super");
  return detail::run_forms("hom-lie", a, {forms::super_skew("skew-symmetry"), forms::super_jacobi("hom-jacobi")}, o);
}

inline CheckReport check_parity_homogeneity(const HomAlgebra& a, const CheckOptions& o = {}) {
  if (!a.graded()) return CheckReport::not_applicable("parity", "no grading declared");
  const std::size_t n = a.dim();
  ReportBuilder b("parity", a.ring, o.witness_cap);
  b.begin_clause("product-parity");
  b.begin_clause("twist-parity");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element d = Element::zero(a.ring, n);
      for (const auto& [k, c] : a.product.cell(i, j)) {
        if (((a.parity(i) + a.parity(j)) & 1) != a.parity(k)) d.coords[k] = c;
      }
      if (!d.is_zero()) b.add_failure("product-parity", a, d, {i, j}, tuple_label(a, {i, j}), false);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Element d = Element::zero(a.ring, n);
    for (std::size_t j = 0; j < n; ++j) {
      if (a.parity(i) != a.parity(j) && !a.twist(i, j).is_zero()) d.coords[j] = a.twist(i, j);
    }
    if (!d.is_zero()) b.add_failure("twist-parity", a, d, {i}, tuple_label(a, {i}), false);
  }
  return b.finish();
}

namespace detail {

inline bool homogeneous(const HomAlgebra& a) {
  return !a.graded() || check_parity_homogeneity(a, {1, false, false}).holds();
}

}  // namespace detail

inline CheckReport check_hom_lie_super(const HomAlgebra& a, const CheckOptions& o = {}) {
  if (!detail::homogeneous(a))
    return CheckReport::not_applicable("hom-lie-super", "product or twist is not parity-homogeneous");
  return detail::run_forms("hom-lie-super", a,
                           {forms::super_skew("super-skew-symmetry"), forms::super_jacobi("hom-super-jacobi")}, o);
}

inline CheckReport check_g_hom_associative_super(const HomAlgebra& a, Subgroup g, const CheckOptions& o = {}) {
  if (!detail::homogeneous(a))
    return CheckReport::not_applicable(subgroup_name(g), "product or twist is not parity-homogeneous");
  return detail::run_forms(subgroup_name(g), a, {forms::g_associator(g)}, o);
}

/// Graded input with odd vectors is routed to the super variant.
inline CheckReport check_g_hom_associative(const HomAlgebra& a, Subgroup g, const CheckOptions& o = {}) {
  if (detail::has_odd(a)) return check_g_hom_associative_super(a, g, o);
  return detail::run_forms(subgroup_name(g), a, {forms::g_associator(g)}, o);
}

/// Hom-Lie-admissibility: (super) Hom-Jacobi of the (super)commutator, with
/// the S-map characterization evaluated alongside.
inline CheckReport check_hom_lie_admissible(const HomAlgebra& a, const CheckOptions& o = {}) {
  if (!detail::homogeneous(a))
    return CheckReport::not_applicable("hom-lie-admissible", "product or twist is not parity-homogeneous");
  CheckReport r = detail::run_forms("hom-lie-admissible", a, {forms::commutator_jacobi()}, o);
  if (o.cross_checks) {
    CheckReport s = detail::run_forms("hom-lie-admissible", a, {forms::s_map()}, o);
    r.cross_checks.push_back({"s-map", s.verdict, s.verdict == r.verdict});
    if (s.verdict != r.verdict) r.notes.push_back("cross-check disagreement: s-map");
  }
  return r;
}

/// S-map route alone.
inline CheckReport check_hom_lie_admissible_smap(const HomAlgebra& a, const CheckOptions& o = {}) {
  return detail::run_forms("hom-lie-admissible", a, {forms::s_map()}, o);
}

enum class Side { left, right, both };

inline CheckReport check_hom_alternative(const HomAlgebra& a, Side side, const CheckOptions& o = {}) {
  const std::string name = side == Side::left ? "alternative-left"
                           : side == Side::right ? "alternative-right"
                                                 : "alternative";
  if (detail::has_odd(a)) return CheckReport::not_applicable(name, "defined for ungraded algebras");
  std::vector<Form> fs;
  if (side != Side::right) fs.push_back(forms::left_alternative());
  if (side != Side::left) fs.push_back(forms::right_alternative());
  CheckReport r = detail::run_forms(name, a, fs, o);
  if (o.cross_checks) {
    CheckOptions g = o;
    g.generic = true;
    if (side != Side::right) {
      CheckReport raw = detail::run_forms(name, a, {forms::left_alternative_raw()}, g);
      const bool agrees = raw.verdict == r.clause_verdict("left");
      r.cross_checks.push_back({"as(x,x,y)", raw.verdict, agrees});
      if (!agrees) r.notes.push_back("cross-check disagreement: as(x,x,y)");
    }
    if (side != Side::left) {
      CheckReport raw = detail::run_forms(name, a, {forms::right_alternative_raw()}, g);
      const bool agrees = raw.verdict == r.clause_verdict("right");
      r.cross_checks.push_back({"as(x,y,y)", raw.verdict, agrees});
      if (!agrees) r.notes.push_back("cross-check disagreement: as(x,y,y)");
    }
  }
  return r;
}

inline CheckReport check_hom_jordan(const HomAlgebra& a, const CheckOptions& o = {}) {
  if (detail::has_odd(a)) return CheckReport::not_applicable("hom-jordan", "defined for ungraded algebras only");
  ReportBuilder b("hom-jordan", a.ring, o.witness_cap);
  detail::run_form(b, a, forms::commutative(), o.generic, o.first_failure);
  detail::run_form(b, a, forms::jordan(), true, o.first_failure);
  return b.finish();
}

inline CheckReport check_hom_novikov(const HomAlgebra& a, const CheckOptions& o = {}) {
  if (detail::has_odd(a)) return CheckReport::not_applicable("hom-novikov", "defined for ungraded algebras");
  Form vinberg = forms::g_associator(Subgroup::G2);
  vinberg.clause = "hom-vinberg";
  return detail::run_forms("hom-novikov", a, {forms::multiplicative(), vinberg, forms::novikov_extra()}, o);
}

namespace detail {

inline Form poisson_compatibility(const StructureTensor& br) {
  return {"compatibility", 3, Symmetry::none, [br](const HomAlgebra& a, const auto& v, const auto&) {
            const StructureTensor& b = br;
            auto B = [&](const Element& x, const Element& y) { return mul(b, x, y); };
            const Element &x = v[0], &y = v[1], &z = v[2];
            return B(Al(a, x), M(a, y, z)) - M(a, Al(a, y), B(x, z)) - M(a, Al(a, z), B(x, y));
          }};
}

inline Form poisson_leibniz_form(const StructureTensor& br) {
  return {"compatibility-leibniz-form", 3, Symmetry::none, [br](const HomAlgebra& a, const auto& v, const auto&) {
            const StructureTensor& b = br;
            auto B = [&](const Element& x, const Element& y) { return mul(b, x, y); };
            const Element &x = v[0], &y = v[1], &z = v[2];
            return B(M(a, x, y), Al(a, z)) - M(a, B(x, z), Al(a, y)) - M(a, Al(a, x), B(y, z));
          }};
}

}  // namespace detail

inline CheckReport check_hom_poisson(const HomPoissonStructure& p, const CheckOptions& o = {}) {
  const HomAlgebra& a = p.algebra;
  if (detail::has_odd(a)) return CheckReport::not_applicable("hom-poisson", "defined for ungraded algebras");
  const HomAlgebra br = p.bracket_algebra();
  ReportBuilder b("hom-poisson", a.ring, o.witness_cap);
  detail::run_form(b, a, forms::commutative(), o.generic, o.first_failure);
  detail::run_form(b, a, forms::hom_associative(), o.generic, o.first_failure);
  detail::run_form(b, br, forms::super_skew("skew-symmetry"), o.generic, o.first_failure);
  detail::run_form(b, br, forms::super_jacobi("hom-jacobi"), o.generic, o.first_failure);
  detail::run_form(b, a, detail::poisson_compatibility(p.bracket), o.generic, o.first_failure);
  CheckReport r = b.finish();
  if (o.cross_checks) {
    CheckReport alt = detail::run_forms("hom-poisson", a, {detail::poisson_leibniz_form(p.bracket)}, o);
    const bool agrees = alt.verdict == r.clause_verdict("compatibility");
    r.cross_checks.push_back({"compatibility-leibniz-form", alt.verdict, agrees});
    if (!agrees) r.notes.push_back("cross-check disagreement: compatibility-leibniz-form");
  }
  return r;
}

/// Compatibility clause in its Leibniz-like reformulation only.
inline CheckReport check_poisson_leibniz_form(const HomPoissonStructure& p, const CheckOptions& o = {}) {
  return detail::run_forms("hom-poisson", p.algebra, {detail::poisson_leibniz_form(p.bracket)}, o);
}

/// as∘τ = sgn(τ)·as for all τ ∈ S3, on basis triples.
inline CheckReport check_alternating_associator(const HomAlgebra& a, const CheckOptions& o = {}) {
  std::vector<Form> fs;
  for (Perm t : all_perms) {
    if (t == Perm::id) continue;
    fs.push_back({std::string("as o ") + perm_name(t), 3, Symmetry::none,
                  [t](const HomAlgebra& h, const auto& v, const auto&) {
                    auto pos = perm_positions(t);
                    Element lhs = hom_associator(h, v[pos[0]], v[pos[1]], v[pos[2]]);
                    return lhs - detail::signed_(perm_signature(t), hom_associator(h, v[0], v[1], v[2]));
                  }});
  }
  return detail::run_forms("alternating-associator", a, fs, o);
}

/// For basis pairs with μ(e_i,e_j) = −μ(e_j,e_i): μ(α(x),μ(y,z)) = −μ(α(y),μ(x,z))
/// and μ(μ(z,x),α(y)) = −μ(μ(z,y),α(x)) for every basis z. Returns the report
/// and the number of anticommuting pairs examined.
inline std::pair<CheckReport, std::size_t> check_anticommutation(const HomAlgebra& a, const CheckOptions& o = {}) {
  using detail::Al;
  using detail::M;
  const std::size_t n = a.dim();
  ReportBuilder b("anticommutation", a.ring, o.witness_cap);
  b.begin_clause("left");
  b.begin_clause("right");
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element x = a.e(i), y = a.e(j);
      if (!(M(a, x, y) + M(a, y, x)).is_zero()) continue;
      ++pairs;
      for (std::size_t k = 0; k < n; ++k) {
        const Element z = a.e(k);
        Element l = M(a, Al(a, x), M(a, y, z)) + M(a, Al(a, y), M(a, x, z));
        Element r = M(a, M(a, z, x), Al(a, y)) + M(a, M(a, z, y), Al(a, x));
        if (!l.is_zero()) b.add_failure("left", a, l, {i, j, k}, tuple_label(a, {i, j, k}), false);
        if (!r.is_zero()) b.add_failure("right", a, r, {i, j, k}, tuple_label(a, {i, j, k}), false);
      }
    }
  }
  return {b.finish(), pairs};
}

/// S(x,y,z) + [μ(x,y),α(z)] + [μ(y,z),α(x)] + [μ(z,x),α(y)] on generic elements,
/// with S the cyclic sum of Hom-associators and [,] the commutator.
inline CheckReport check_smap_expansion(const HomAlgebra& a, const CheckOptions& o = {}) {
  Form f{"s-map-expansion", 3, Symmetry::none, [](const HomAlgebra& h, const auto& v, const auto&) {
           using detail::Al;
           using detail::M;
           auto br = [&](const Element& u, const Element& w) { return M(h, u, w) - M(h, w, u); };
           const Element &x = v[0], &y = v[1], &z = v[2];
           Element s = hom_associator(h, x, y, z) + hom_associator(h, y, z, x) + hom_associator(h, z, x, y);
           return s + br(M(h, x, y), Al(h, z)) + br(M(h, y, z), Al(h, x)) + br(M(h, z, x), Al(h, y));
         }};
  HomAlgebra plain = a;
  plain.grading.reset();
  CheckOptions g = o;
  g.generic = true;
  return detail::run_forms("s-map-expansion", plain, {f}, g);
}

// ---------------------------------------------------------------------------
// dispatch by identity name

/// A definition as read from a file: an algebra, optionally with a second
/// product (dialgebra) or a bracket (Poisson structure).
struct Definition {
  HomAlgebra algebra;
  std::optional<StructureTensor> right;
  std::optional<StructureTensor> bracket;
};

inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{
      "hom-associative", "multiplicative", "hom-flexible", "hom-dialgebra", "hom-leibniz",
      "hom-lie",         "hom-lie-super",  "g1",           "g2",            "g3",
      "g4",              "g5",             "g6",           "hom-vinberg",   "hom-pre-lie",
      "hom-lie-admissible", "hom-novikov", "alternative-left", "alternative-right", "alternative",
      "hom-jordan",      "hom-poisson",    "parity"};
  return names;
}

inline bool is_identity_name(const std::string& s) {
  const auto& n = identity_names();
  return std::find(n.begin(), n.end(), s) != n.end();
}

/// Identities worth checking on a definition: the ungraded list, plus the
/// graded, dialgebra and Poisson ones when the definition has that structure.
inline std::vector<std::string> default_identities(const Definition& d) {
  std::vector<std::string> ids{"hom-associative", "multiplicative", "hom-flexible", "hom-leibniz", "hom-lie",
                               "g1", "g2", "g3", "g4", "g5", "g6", "hom-lie-admissible", "hom-novikov",
                               "alternative", "hom-jordan"};
  if (d.algebra.graded()) {
    ids.push_back("hom-lie-super");
    ids.push_back("parity");
  }
  if (d.right) ids.push_back("hom-dialgebra");
  if (d.bracket) ids.push_back("hom-poisson");
  return ids;
}

inline CheckReport check_identity(const Definition& d, const std::string& name, const CheckOptions& o = {}) {
  const HomAlgebra& a = d.algebra;
  auto renamed = [&](CheckReport r) {
    r.identity = name;
    return r;
  };
  if (name == "hom-associative") return check_hom_associative(a, o);
  if (name == "multiplicative") return check_multiplicative(a, o);
  if (name == "hom-flexible") return check_hom_flexible(a, o);
  if (name == "hom-dialgebra") {
    if (!d.right) return CheckReport::not_applicable(name, "definition has no right product");
    return check_hom_dialgebra(HomDialgebra{a, *d.right}, o);
  }
  if (name == "hom-leibniz") return check_hom_leibniz(a, o);
  if (name == "hom-lie") return check_hom_lie(a, o);
  if (name == "hom-lie-super") return check_hom_lie_super(a, o);
  if (name.size() == 2 && name[0] == 'g' && name[1] >= '1' && name[1] <= '6')
    return check_g_hom_associative(a, static_cast<Subgroup>(name[1] - '0'), o);
  if (name == "hom-vinberg") return renamed(check_g_hom_associative(a, Subgroup::G2, o));
  if (name == "hom-pre-lie") return renamed(check_g_hom_associative(a, Subgroup::G3, o));
  if (name == "hom-lie-admissible") return check_hom_lie_admissible(a, o);
  if (name == "hom-novikov") return check_hom_novikov(a, o);
  if (name == "alternative-left") return check_hom_alternative(a, Side::left, o);
  if (name == "alternative-right") return check_hom_alternative(a, Side::right, o);
  if (name == "alternative") return check_hom_alternative(a, Side::both, o);
  if (name == "hom-jordan") return check_hom_jordan(a, o);
  if (name == "hom-poisson") {
    if (!d.bracket) return CheckReport::not_applicable(name, "definition has no bracket");
    return check_hom_poisson(HomPoissonStructure{a, *d.bracket}, o);
  }
  if (name == "parity") return check_parity_homogeneity(a, o);
  throw DefinitionError("unknown identity '" + name + "'");
}

/// Deduplicated, content-normalized constraint polynomials for one identity.
inline std::vector<Polynomial> extract_constraints(const Definition& d, const std::string& name) {
  CheckOptions o;
  o.cross_checks = false;
  return check_identity(d, name, o).constraints;
}

}  // namespace homalg
