#pragma once

// Worked examples as parameterized fixtures with their expected verdicts.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homalg/checks.hpp"
#include "homalg/constructions.hpp"
#include "homalg/qwitt.hpp"

namespace homalg {

enum class EntryKind { algebra, dialgebra, poisson, endomorphism, qwitt };

inline const char* to_string(EntryKind k) {
  switch (k) {
    case EntryKind::algebra: return "algebra";
    case EntryKind::dialgebra: return "dialgebra";
    case EntryKind::poisson: return "poisson";
    case EntryKind::endomorphism: return "endomorphism";
    case EntryKind::qwitt: return "qwitt";
  }
  return "?";
}

/// One regression oracle. `subject` selects what is checked: "" for the entry
/// itself, "identity-twist" for the entry with α replaced by the identity,
/// or, for endomorphism entries, the name of the algebra being twisted.
/// For endomorphism entries the identity "endomorphism" means the product
/// compatibility test against that algebra.
struct ExpectedVerdict {
  std::string identity;
  Verdict verdict;
  std::string subject;
  std::string citation;
  std::string discrepancy;  // set when the computed verdict contradicts the printed claim
};

struct CatalogObject {
  Definition def;                 // the algebra, or the twisted algebra's source for maps
  std::optional<LinearMap> map;   // endomorphism entries
};

struct CatalogEntry {
  std::string name;
  EntryKind kind;
  std::string summary;
  std::string citation;
  std::vector<std::string> parameters;
  std::vector<std::string> nonzero;  // admissibility: these expressions must not vanish
  std::vector<std::string> targets;  // algebras an endomorphism entry acts on
  std::function<CatalogObject()> build;
  std::vector<ExpectedVerdict> expected;
};

// ---------------------------------------------------------------------------
// parameter binding

namespace catalog_detail {

struct Binder {
  RingPtr target;
  std::vector<Scalar> values;

  Binder(const RingPtr& source, const std::map<std::string, std::string>& bindings) {
    std::vector<std::string> rest;
    for (const auto& [k, v] : bindings) {
      if (!source->index_of(k)) throw DefinitionError("unknown parameter '" + k + "'");
    }
    for (const auto& p : source->parameters) {
      if (!bindings.count(p)) rest.push_back(p);
    }
    target = rest.empty() ? rational_ring() : make_ring(source->kind, rest);
    for (const auto& p : source->parameters) {
      auto it = bindings.find(p);
      values.push_back(it == bindings.end() ? Scalar::parameter(target, p) : parse_scalar(it->second, target));
    }
  }

  Scalar operator()(const Scalar& s) const { return substitute(s, values, target); }

  StructureTensor operator()(const StructureTensor& t) const {
    StructureTensor out(target, t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i) {
      for (std::size_t j = 0; j < t.dim(); ++j) {
        for (const auto& [k, c] : t.cell(i, j)) out.set(i, j, k, (*this)(c));
      }
    }
    return out;
  }

  Matrix operator()(const Matrix& m) const {
    Matrix out(target, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = (*this)(m(i, j));
    }
    return out;
  }
};

}  // namespace catalog_detail

/// Replaces parameters by expressions in the remaining parameters.
inline Definition bind_definition(const Definition& d, const std::map<std::string, std::string>& bindings) {
  if (bindings.empty()) return d;
  catalog_detail::Binder b(d.algebra.ring, bindings);
  Definition out = d;
  out.algebra.ring = b.target;
  out.algebra.product = b(d.algebra.product);
  out.algebra.twist = b(d.algebra.twist);
  if (d.right) out.right = b(*d.right);
  if (d.bracket) out.bracket = b(*d.bracket);
  return out;
}

inline LinearMap bind_map(const LinearMap& f, const std::map<std::string, std::string>& bindings) {
  if (bindings.empty()) return f;
  catalog_detail::Binder b(f.matrix.ring(), bindings);
  LinearMap out = f;
  out.matrix = b(f.matrix);
  return out;
}

namespace catalog_detail {

inline RingPtr ring_for(const std::vector<std::string>& params) {
  return params.empty() ? rational_ring() : fraction_ring(params);
}

/// Builds an algebra from labelled entries: prod(x, y, {{coeff, label}, ...}).
class Table {
 public:
  Table(std::string name, RingPtr ring, std::vector<std::string> basis, std::optional<std::vector<int>> grading = {}) {
    a_.name = std::move(name);
    a_.ring = std::move(ring);
    a_.basis = std::move(basis);
    a_.grading = std::move(grading);
    a_.product = StructureTensor(a_.ring, a_.dim());
    a_.twist = Matrix::identity(a_.ring, a_.dim());
  }

  Table& prod(const std::string& x, const std::string& y,
              std::initializer_list<std::pair<const char*, const char*>> rhs) {
    for (const auto& [c, l] : rhs) a_.product.add(at(x), at(y), at(l), parse_scalar(c, a_.ring));
    return *this;
  }

  /// prod(x,y) and prod(y,x) = -prod(x,y).
  Table& skew(const std::string& x, const std::string& y,
              std::initializer_list<std::pair<const char*, const char*>> rhs) {
    for (const auto& [c, l] : rhs) {
      const Scalar s = parse_scalar(c, a_.ring);
      a_.product.add(at(x), at(y), at(l), s);
      a_.product.add(at(y), at(x), at(l), -s);
    }
    return *this;
  }

  Table& alpha(const std::string& x, std::initializer_list<std::pair<const char*, const char*>> rhs) {
    const std::size_t i = at(x);
    for (std::size_t j = 0; j < a_.dim(); ++j) a_.twist(i, j) = Scalar::zero(a_.ring);
    for (const auto& [c, l] : rhs) a_.twist(i, at(l)) += parse_scalar(c, a_.ring);
    return *this;
  }

  Table& diagonal_alpha(std::initializer_list<const char*> d) {
    std::size_t i = 0;
    for (const char* c : d) {
      for (std::size_t j = 0; j < a_.dim(); ++j) a_.twist(i, j) = Scalar::zero(a_.ring);
      a_.twist(i, i) = parse_scalar(c, a_.ring);
      ++i;
    }
    return *this;
  }

  HomAlgebra get() const {
    validate_algebra(a_, true);
    return a_;
  }

  std::size_t at(const std::string& label) const {
    auto i = a_.index_of(label);
    if (!i) throw DefinitionError("unknown basis label '" + label + "'");
    return *i;
  }

 private:
  HomAlgebra a_;
};

inline std::vector<std::string> labels(const std::string& prefix, std::size_t from, std::size_t to) {
  std::vector<std::string> out;
  for (std::size_t i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline const std::vector<std::string>& octonion_basis() {
  static const std::vector<std::string> b{"u", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  return b;
}

/// Octonion table as printed: row i times column j.
inline const std::vector<std::vector<std::string>>& octonion_table() {
  static const std::vector<std::vector<std::string>> t{
      {"u", "e1", "e2", "e3", "e4", "e5", "e6", "e7"},
      {"e1", "-u", "e4", "e7", "-e2", "e6", "-e5", "-e3"},
      {"e2", "-e4", "-u", "e5", "e1", "-e3", "e7", "-e6"},
      {"e3", "-e7", "-e5", "-u", "e6", "e2", "-e4", "e1"},
      {"e4", "e2", "-e1", "-e6", "-u", "e7", "e3", "-e5"},
      {"e5", "-e6", "e3", "-e2", "-e7", "-u", "e1", "e4"},
      {"e6", "e5", "-e7", "e4", "-e3", "-e1", "-u", "e2"},
      {"e7", "e3", "e6", "-e1", "e5", "-e4", "-e2", "-u"},
  };
  return t;
}

/// Printed table of the octonions twisted by diag(1,a,b,c,ab,bc,abc,ac).
inline const std::vector<std::vector<std::string>>& twisted_octonion_table() {
  static const std::vector<std::vector<std::string>> t{
      {"u", "a e1", "b e2", "c e3", "ab e4", "bc e5", "abc e6", "ac e7"},
      {"a e1", "-u", "ab e4", "ac e7", "-b e2", "abc e6", "-bc e5", "-c e3"},
      {"b e2", "-ab e4", "-u", "bc e5", "a e1", "-c e3", "ac e7", "-abc e6"},
      {"c e3", "-ac e7", "-bc e5", "-u", "abc e6", "b e2", "-ab e4", "a e1"},
      {"ab e4", "b e2", "-a e1", "-abc e6", "-u", "ac e7", "c e3", "-bc e5"},
      {"bc e5", "-abc e6", "c e3", "-b e2", "-ac e7", "-u", "a e1", "ab e4"},
      {"abc e6", "bc e5", "-ac e7", "ab e4", "-c e3", "-a e1", "-u", "b e2"},
      {"ac e7", "c e3", "abc e6", "-a e1", "bc e5", "-ab e4", "-b e2", "-u"},
  };
  return t;
}

/// Reads a printed cell "[-][letters ]label": each letter is a one-letter parameter.
inline Element octonion_cell(const std::string& cell, const RingPtr& ring) {
  std::string s = cell;
  Scalar c = Scalar::one(ring);
  if (!s.empty() && s[0] == '-') {
    c = -c;
    s = s.substr(1);
  }
  const auto sp = s.find(' ');
  if (sp != std::string::npos) {
    for (char p : s.substr(0, sp)) c *= Scalar::parameter(ring, std::string(1, p));
    s = s.substr(sp + 1);
  }
  const auto& b = octonion_basis();
  const auto it = std::find(b.begin(), b.end(), s);
  if (it == b.end()) throw DefinitionError("bad table cell '" + cell + "'");
  Element e = Element::zero(ring, b.size());
  e.coords[static_cast<std::size_t>(it - b.begin())] = c;
  return e;
}

inline HomAlgebra octonions() {
  Table t("octonions", rational_ring(), octonion_basis());
  HomAlgebra a = t.get();
  const auto& tab = octonion_table();
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      Element v = octonion_cell(tab[i][j], a.ring);
      for (std::size_t k = 0; k < 8; ++k) a.product.set(i, j, k, v.coords[k]);
    }
  }
  return a;
}

inline HomAlgebra assoc3() {
  return Table("assoc3", ring_for({"a", "b"}), {"e1", "e2", "e3"})
      .prod("e1", "e1", {{"a", "e1"}})
      .prod("e1", "e2", {{"a", "e2"}})
      .prod("e2", "e1", {{"a", "e2"}})
      .prod("e1", "e3", {{"b", "e3"}})
      .prod("e3", "e1", {{"b", "e3"}})
      .prod("e2", "e2", {{"a", "e2"}})
      .prod("e2", "e3", {{"b", "e3"}})
      .diagonal_alpha({"a", "a", "b"})
      .get();
}

inline HomAlgebra homlie3() {
  return Table("homlie3", ring_for({"a", "b", "c", "d"}), {"e1", "e2", "e3"})
      .skew("e1", "e2", {{"a", "e1"}, {"b", "e3"}})
      .skew("e1", "e3", {{"c", "e2"}})
      .skew("e2", "e3", {{"d", "e1"}, {"2*a", "e3"}})
      .diagonal_alpha({"1", "2", "2"})
      .get();
}

inline HomAlgebra jackson_sl2() {
  return Table("jackson-sl2", ring_for({"t"}), {"e1", "e2", "e3"})
      .skew("e1", "e2", {{"2", "e2"}})
      .skew("e1", "e3", {{"-2-2*t", "e3"}})
      .skew("e2", "e3", {{"1+t/2", "e1"}})
      .diagonal_alpha({"1", "(2+t)/(2*(1+t))", "1+t/2"})
      .get();
}

inline HomPoissonStructure hom_poisson3() {
  const std::vector<std::string> p{"a", "b", "c", "d", "lambda1", "lambda2", "lambda3", "lambda4", "lambda5", "lambda6"};
  Table mu("homPoisson3", ring_for(p), {"e1", "e2", "e3"});
  mu.prod("e1", "e1", {{"1", "e1"}})
      .prod("e1", "e2", {{"1", "e3"}})
      .prod("e2", "e1", {{"1", "e3"}})
      .alpha("e1", {{"lambda1", "e2"}, {"lambda2", "e3"}})
      .alpha("e2", {{"lambda3", "e2"}, {"lambda4", "e3"}})
      .alpha("e3", {{"lambda5", "e2"}, {"lambda6", "e3"}});
  Table br("homPoisson3.bracket", ring_for(p), {"e1", "e2", "e3"});
  br.skew("e1", "e2", {{"a", "e2"}, {"b", "e3"}}).skew("e1", "e3", {{"c", "e2"}, {"d", "e3"}});
  return HomPoissonStructure{mu.get(), br.get().product};
}

inline HomAlgebra abelian_super2() {
  return Table("abelian-super2", ring_for({"r", "s", "p"}), {"x", "y"}, std::vector<int>{0, 1})
      .prod("y", "y", {{"r", "x"}})
      .diagonal_alpha({"s", "p"})
      .get();
}

inline HomAlgebra affine_super3() {
  return Table("affine-super3", ring_for({"m11", "m12", "m21", "m22", "m33"}), {"e1", "e2", "e3"},
               std::vector<int>{0, 0, 1})
      .skew("e1", "e2", {{"1", "e1"}})
      .alpha("e1", {{"m11", "e1"}, {"m12", "e2"}})
      .alpha("e2", {{"m21", "e1"}, {"m22", "e2"}})
      .alpha("e3", {{"m33", "e3"}})
      .get();
}

/// osp(1,2) with its bracket either classical (lambda absent) or twisted by α_λ,
/// including the orientations implied by supersymmetry.
inline HomAlgebra osp12(bool twisted) {
  const RingPtr r = twisted ? ring_for({"lambda"}) : rational_ring();
  const char* l2 = twisted ? "lambda^2" : "1";
  const char* il2 = twisted ? "1/lambda^2" : "1";
  const char* l = twisted ? "lambda" : "1";
  const char* il = twisted ? "1/lambda" : "1";
  const std::string hx = std::string("2*") + l2, hy = std::string("-2*") + il2, yg = il, xf = l,
                    hf = std::string("-") + il, hg = l, gg = std::string("-2*") + l2, ff = std::string("2*") + il2;
  Table t(twisted ? "osp12" : "osp12-classical", r, {"H", "X", "Y", "F", "G"}, std::vector<int>{0, 0, 0, 1, 1});
  t.skew("H", "X", {{hx.c_str(), "X"}})
      .skew("H", "Y", {{hy.c_str(), "Y"}})
      .skew("X", "Y", {{"1", "H"}})
      .skew("Y", "G", {{yg.c_str(), "F"}})
      .skew("X", "F", {{xf.c_str(), "G"}})
      .skew("H", "F", {{hf.c_str(), "F"}})
      .skew("H", "G", {{hg.c_str(), "G"}})
      .prod("G", "F", {{"1", "H"}})
      .prod("F", "G", {{"1", "H"}})
      .prod("G", "G", {{gg.c_str(), "X"}})
      .prod("F", "F", {{ff.c_str(), "Y"}});
  if (twisted) t.diagonal_alpha({"1", "lambda^2", "1/lambda^2", "1/lambda", "lambda"});
  return t.get();
}

/// α_λ as a map on osp(1,2) over Q(λ).
inline LinearMap osp12_alpha() {
  return map_of(osp12(true).twist, "alpha_lambda");
}

inline HomAlgebra clifford_super2() {
  return Table("clifford-super2", rational_ring(), {"u", "v"}, std::vector<int>{0, 1})
      .prod("u", "u", {{"1", "u"}})
      .prod("u", "v", {{"1", "v"}})
      .prod("v", "u", {{"1", "v"}})
      .prod("v", "v", {{"1", "u"}})
      .get();
}

inline HomAlgebra alt4(int which) {
  Table t(which == 1 ? "alt4-1" : "alt4-2", rational_ring(), labels("e", 0, 3));
  if (which == 1) {
    t.prod("e0", "e0", {{"1", "e0"}})
        .prod("e0", "e1", {{"1", "e1"}})
        .prod("e2", "e0", {{"1", "e2"}})
        .prod("e2", "e3", {{"1", "e1"}})
        .prod("e3", "e0", {{"1", "e3"}})
        .prod("e3", "e2", {{"-1", "e1"}});
  } else {
    t.prod("e0", "e0", {{"1", "e0"}})
        .prod("e0", "e2", {{"1", "e2"}})
        .prod("e0", "e3", {{"1", "e3"}})
        .prod("e1", "e0", {{"1", "e1"}})
        .prod("e2", "e3", {{"1", "e1"}})
        .prod("e3", "e2", {{"-1", "e1"}});
  }
  return t.get();
}

inline LinearMap alt4_endo(int which) {
  if (which == 1) {
    Table t("alpha1", ring_for(labels("a", 1, 5)), labels("e", 0, 3));
    t.alpha("e0", {{"1", "e0"}, {"a1", "e1"}, {"a2", "e2"}, {"a3", "e3"}})
        .alpha("e1", {})
        .alpha("e2", {{"a4", "e2"}, {"a4*a3/a2", "e3"}})
        .alpha("e3", {{"a5", "e2"}, {"a5*a3/a2", "e3"}});
    return map_of(t.get().twist, "alpha1");
  }
  Table t("alpha2", ring_for(labels("a", 1, 6)), labels("e", 0, 3));
  t.alpha("e0", {{"1", "e0"}, {"a1", "e1"}, {"a2", "e2"}, {"a3", "e3"}})
      .alpha("e1", {{"a4", "e1"}})
      .alpha("e2", {{"-a4*a2/a5", "e2"}, {"-a4*a3/a5", "e3"}})
      .alpha("e3", {{"a5", "e1"}, {"a6", "e2"}, {"(a6*a3-a5)/a2", "e3"}});
  return map_of(t.get().twist, "alpha2");
}

inline LinearMap oct_endo() {
  Table t("oct-endo", ring_for({"a", "b", "c"}), octonion_basis());
  t.diagonal_alpha({"1", "a", "b", "c", "a*b", "b*c", "a*b*c", "a*c"});
  return map_of(t.get().twist, "oct-endo");
}

/// The Hom-Jordan example; `as_printed` keeps μ̃(e3,e2) = 0 from the printed table.
inline HomAlgebra homjordan3(bool as_printed = false) {
  Table t("homjordan3", ring_for({"a", "b"}), {"e1", "e2", "e3"});
  t.prod("e1", "e1", {{"a", "e1"}})
      .prod("e1", "e2", {{"a", "e2"}})
      .prod("e2", "e1", {{"a", "e2"}})
      .prod("e1", "e3", {{"b", "e3"}})
      .prod("e3", "e1", {{"b", "e3"}})
      .prod("e2", "e2", {{"a", "e2"}})
      .prod("e2", "e3", {{"b/2", "e3"}});
  if (!as_printed) t.prod("e3", "e2", {{"b/2", "e3"}});
  return t.diagonal_alpha({"a", "a", "b"}).get();
}

inline HomAlgebra novikov2() {
  return Table("novikov2", rational_ring(), {"e1", "e2"}).prod("e1", "e1", {{"1", "e2"}}).get();
}

inline LinearMap novikov2_endo() {
  Table t("novikov2-endo", ring_for({"p", "q"}), {"e1", "e2"});
  t.alpha("e1", {{"p", "e1"}, {"q", "e2"}}).alpha("e2", {{"p^2", "e2"}});
  return map_of(t.get().twist, "novikov2-endo");
}

inline HomDialgebra assoc3_dialgebra() {
  HomAlgebra a = assoc3();
  a.name = "assoc3-dialgebra";
  return HomDialgebra{a, a.product};
}

inline ExpectedVerdict ev(std::string identity, Verdict v, std::string citation, std::string subject = "",
                          std::string discrepancy = "") {
  return ExpectedVerdict{std::move(identity), v, std::move(subject), std::move(citation), std::move(discrepancy)};
}

inline std::vector<CatalogEntry> make_entries() {
  using V = Verdict;
  std::vector<CatalogEntry> es;
  auto alg = [](HomAlgebra (*f)()) { return [f]() { return CatalogObject{Definition{f(), {}, {}}, {}}; }; };

  es.push_back({"assoc3", EntryKind::algebra, "3-dim Hom-associative algebra, parameters a, b", "Hom-associative example",
                {"a", "b"}, {}, {}, alg(assoc3),
                {ev("hom-associative", V::holds, "Hom-associative example"),
                 ev("hom-associative", V::fails, "Hom-associative example, (a-b)b e3", "identity-twist"),
                 ev("multiplicative", V::fails, "derived: (a^2-a^3) e1 at (e1,e1)"),
                 ev("hom-flexible", V::holds, "Hom-associative implies Hom-flexible"),
                 ev("g1", V::holds, "G-Hom-associative classes"),
                 ev("hom-lie-admissible", V::holds, "Hom-associative implies Hom-Lie-admissible"),
                 ev("g6", V::holds, "Hom-associative implies Hom-Lie-admissible"),
                 ev("hom-novikov", V::fails, "derived: ab^2 e3 at (e2,e2,e3)")}});
  es.push_back({"homlie3", EntryKind::algebra, "3-dim Hom-Lie algebra, parameters a, b, c, d", "Hom-Lie example",
                {"a", "b", "c", "d"}, {}, {}, alg(homlie3),
                {ev("hom-lie", V::holds, "Hom-Lie example"),
                 ev("hom-lie", V::fails, "Hom-Lie example, a c e2", "identity-twist"),
                 ev("hom-leibniz", V::holds, "Hom-Lie and Hom-Leibniz algebras"),
                 ev("hom-lie-admissible", V::holds, "Hom-associative implies Hom-Lie-admissible")}});
  es.push_back({"jackson-sl2", EntryKind::algebra, "Jackson sl2 over Q(t)", "Hom-Lie and Hom-Leibniz algebras", {"t"}, {"t", "1+t"}, {},
                alg(jackson_sl2), {ev("hom-lie", V::holds, "Jackson sl2 example")}});
  es.push_back({"homPoisson3", EntryKind::poisson, "3-dim Hom-Poisson structure, parameters a..d, lambda1..lambda6",
                "Hom-Poisson example", {"a", "b", "c", "d", "lambda1", "lambda2", "lambda3", "lambda4", "lambda5", "lambda6"},
                {}, {},
                []() {
                  HomPoissonStructure p = hom_poisson3();
                  return CatalogObject{Definition{p.algebra, {}, p.bracket}, {}};
                },
                {ev("hom-poisson", V::fails, "Hom-Poisson example", "",
                    "printed as a Hom-Poisson algebra for all parameters; the clauses constrain the parameters")}});
  es.push_back({"homPoisson3-pinned", EntryKind::poisson,
                "homPoisson3 with lambda1..lambda6 on the common zero lambda_i = 0", "Hom-Poisson example",
                {"a", "b", "c", "d"}, {}, {},
                []() {
                  HomPoissonStructure p = hom_poisson3();
                  Definition d{p.algebra, {}, p.bracket};
                  d.algebra.name = "homPoisson3-pinned";
                  std::map<std::string, std::string> zero;
                  for (int i = 1; i <= 6; ++i) zero["lambda" + std::to_string(i)] = "0";
                  return CatalogObject{bind_definition(d, zero), {}};
                },
                {ev("hom-poisson", V::holds, "Hom-Poisson example (constrained sub-family)")}});
  es.push_back({"abelian-super2", EntryKind::algebra, "2-dim Hom-Lie superalgebra with [x,y] = 0", "Hom-Lie superalgebras",
                {"r", "s", "p"}, {}, {}, alg(abelian_super2),
                {ev("parity", V::holds, "Hom-Lie superalgebras"), ev("hom-lie-super", V::holds, "Hom-Lie superalgebras")}});
  es.push_back({"affine-super3", EntryKind::algebra, "affine Hom-Lie superalgebra, any even twist", "Hom-Lie superalgebras",
                {"m11", "m12", "m21", "m22", "m33"}, {}, {}, alg(affine_super3),
                {ev("parity", V::holds, "Hom-Lie superalgebras"), ev("hom-lie-super", V::holds, "Hom-Lie superalgebras")}});
  es.push_back({"osp12", EntryKind::algebra, "osp(1,2) twisted by alpha_lambda", "Hom-Lie superalgebras", {"lambda"},
                {"lambda"}, {}, []() { return CatalogObject{Definition{osp12(true), {}, {}}, {}}; },
                {ev("parity", V::holds, "Hom-Lie superalgebras"), ev("hom-lie-super", V::holds, "Hom-Lie superalgebras"),
                 ev("hom-lie-super", V::fails, "Hom-Lie superalgebras, printed super-Jacobi defects", "identity-twist")}});
  es.push_back({"osp12-classical", EntryKind::algebra, "the Lie superalgebra osp(1,2)", "Hom-Lie superalgebras", {}, {}, {},
                []() { return CatalogObject{Definition{osp12(false), {}, {}}, {}}; },
                {ev("parity", V::holds, "Hom-Lie superalgebras"), ev("hom-lie-super", V::holds, "Hom-Lie superalgebras")}});
  es.push_back({"clifford-super2", EntryKind::algebra, "2-dim associative superalgebra u^2 = u, uv = vu = v, v^2 = u",
                "derived fixture", {}, {}, {}, alg(clifford_super2),
                {ev("parity", V::holds, "derived fixture"), ev("g1", V::holds, "derived fixture"),
                 ev("hom-lie-admissible", V::holds, "G-Hom-associative superalgebras")}});
  es.push_back({"alt4-1", EntryKind::algebra, "4-dim alternative, not associative (first)", "4-dim alternative examples", {}, {}, {},
                []() { return CatalogObject{Definition{alt4(1), {}, {}}, {}}; },
                {ev("alternative", V::holds, "4-dim alternative examples"), ev("hom-associative", V::fails, "4-dim alternative examples"),
                 ev("hom-flexible", V::holds, "Hom-alternative implies Hom-flexible")}});
  es.push_back({"alt4-2", EntryKind::algebra, "4-dim alternative, not associative (second)", "4-dim alternative examples", {}, {}, {},
                []() { return CatalogObject{Definition{alt4(2), {}, {}}, {}}; },
                {ev("alternative", V::holds, "4-dim alternative examples"), ev("hom-associative", V::fails, "4-dim alternative examples"),
                 ev("hom-flexible", V::holds, "Hom-alternative implies Hom-flexible")}});
  es.push_back({"alt4-endo1", EntryKind::endomorphism, "endomorphism alpha1 of alt4-1 and alt4-2", "4-dim alternative examples",
                labels("a", 1, 5), {"a2"}, {"alt4-1", "alt4-2"},
                []() { return CatalogObject{Definition{alt4(1), {}, {}}, alt4_endo(1)}; },
                {ev("endomorphism", V::holds, "4-dim alternative examples", "alt4-1"),
                 ev("endomorphism", V::holds, "4-dim alternative examples", "alt4-2"),
                 ev("alternative", V::holds, "Yau twist of alternative algebras", "alt4-1"),
                 ev("alternative", V::holds, "Yau twist of alternative algebras", "alt4-2")}});
  es.push_back({"alt4-endo2", EntryKind::endomorphism, "endomorphism alpha2 of alt4-1 and alt4-2", "4-dim alternative examples",
                labels("a", 1, 6), {"a2", "a5"}, {"alt4-1", "alt4-2"},
                []() { return CatalogObject{Definition{alt4(1), {}, {}}, alt4_endo(2)}; },
                {ev("endomorphism", V::holds, "4-dim alternative examples", "alt4-1"),
                 ev("endomorphism", V::fails, "4-dim alternative examples", "alt4-2",
                    "printed as an endomorphism of both algebras; on mu2 the pair (e0,e3) leaves 2*a5*e1"),
                 ev("alternative", V::holds, "Yau twist of alternative algebras", "alt4-1"),
                 ev("alternative", V::fails, "Yau twist of alternative algebras", "alt4-2",
                    "the twist of mu2 by alpha2 fails right alternativity by 2*a4*a5*e1")}});
  es.push_back({"octonions", EntryKind::algebra, "the octonions", "octonions", {}, {}, {}, alg(octonions),
                {ev("alternative", V::holds, "octonions"), ev("hom-associative", V::fails, "octonions"),
                 ev("hom-flexible", V::holds, "Hom-alternative implies Hom-flexible")}});
  es.push_back({"oct-endo", EntryKind::endomorphism, "diagonal map diag(1,a,b,c,ab,bc,abc,ac) of the octonions",
                "octonions", {"a", "b", "c"}, {}, {"octonions"},
                []() { return CatalogObject{Definition{octonions(), {}, {}}, oct_endo()}; },
                {ev("endomorphism", V::fails, "octonions", "octonions",
                    "printed as an endomorphism for all a,b,c; e1*e1 = -u forces a^2 = 1 (likewise b, c)"),
                 ev("alternative", V::fails, "Yau twist of alternative algebras", "octonions",
                    "the twist is Hom-alternative only where the map is an endomorphism")}});
  es.push_back({"homjordan3", EntryKind::algebra, "3-dim Hom-Jordan algebra (symmetrized)", "Hom-Jordan example", {"a", "b"},
                {}, {}, []() { return CatalogObject{Definition{homjordan3(false), {}, {}}, {}}; },
                {ev("hom-jordan", V::holds, "Hom-Jordan example")}});
  es.push_back({"novikov2", EntryKind::algebra, "2-dim Novikov algebra e1*e1 = e2", "derived fixture", {}, {}, {},
                alg(novikov2), {ev("hom-novikov", V::holds, "derived fixture")}});
  es.push_back({"novikov2-endo", EntryKind::endomorphism, "endomorphism e1 -> p e1 + q e2, e2 -> p^2 e2 of novikov2",
                "derived fixture", {"p", "q"}, {}, {"novikov2"},
                []() { return CatalogObject{Definition{novikov2(), {}, {}}, novikov2_endo()}; },
                {ev("endomorphism", V::holds, "derived fixture", "novikov2"),
                 ev("hom-novikov", V::holds, "Hom-Novikov algebras", "novikov2")}});
  es.push_back({"assoc3-dialgebra", EntryKind::dialgebra, "assoc3 with both dialgebra products equal to mu",
                "Hom-dialgebras", {"a", "b"}, {}, {},
                []() {
                  HomDialgebra d = assoc3_dialgebra();
                  return CatalogObject{Definition{d.left, d.right, {}}, {}};
                },
                {ev("hom-dialgebra", V::holds, "Hom-dialgebras")}});
  es.push_back({"qwitt", EntryKind::qwitt, "q-deformed Witt superalgebra (windowed)", "Hom-Lie superalgebras", {"q"},
                {"q", "q-1"}, {}, []() -> CatalogObject { throw DefinitionError("qwitt is infinite-dimensional; use the qwitt command"); },
                {ev("qwitt", V::holds, "Hom-Lie superalgebras")}});
  return es;
}

}  // namespace catalog_detail

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> es = catalog_detail::make_entries();
  return es;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  throw DefinitionError("unknown catalog entry '" + name + "'");
}

/// Builds an entry, symbolic in any parameters left unbound. Bindings that
/// violate an admissibility condition are rejected.
inline CatalogObject instantiate(const std::string& name, const std::map<std::string, std::string>& bindings = {}) {
  const CatalogEntry& e = catalog_entry(name);
  for (const auto& [k, v] : bindings) {
    if (std::find(e.parameters.begin(), e.parameters.end(), k) == e.parameters.end())
      throw DefinitionError("entry '" + name + "' has no parameter '" + k + "'");
  }
  if (!bindings.empty() && !e.nonzero.empty()) {
    const RingPtr r = catalog_detail::ring_for(e.parameters);
    catalog_detail::Binder b(r, bindings);
    for (const auto& cond : e.nonzero) {
      if (b(parse_scalar(cond, r)).is_zero())
        throw DefinitionError("admissibility violated for '" + name + "': " + cond + " must be nonzero");
    }
  }
  CatalogObject o = e.build();
  if (o.map) {
    o.map = bind_map(*o.map, bindings);
  } else {
    o.def = bind_definition(o.def, bindings);
  }
  return o;
}

/// Evaluates one expected verdict of an entry.
inline CheckReport evaluate_expected(const CatalogEntry& e, const ExpectedVerdict& x, const CheckOptions& o = {}) {
  if (e.kind == EntryKind::qwitt) {
    CheckReport r = check_qwitt(mpq_class(2), 8, o.witness_cap);
    r.identity = x.identity;
    return r;
  }
  CatalogObject obj = e.build();
  if (e.kind == EntryKind::endomorphism) {
    const CatalogObject target = catalog_entry(x.subject).build();
    const HomAlgebra& a = target.def.algebra;
    if (x.identity == "endomorphism") {
      MorphismResult m = is_morphism(*obj.map, a, a, MorphismMode::product_only);
      if (m.ok) {
        CheckReport r;
        r.identity = "endomorphism";
        r.clauses.push_back({"product", Verdict::holds, 0});
        return r;
      }
      const RingPtr r0 = join_rings(a.ring, obj.map->matrix.ring());
      ReportBuilder b("endomorphism", r0, o.witness_cap);
      b.add_failure(m.clause, a.over(r0), m.defect, m.tuple, tuple_label(a, m.tuple), false);
      return b.finish();
    }
    Definition t{yau_twist(a, *obj.map, false), {}, {}};
    return check_identity(t, x.identity, o);
  }
  Definition d = obj.def;
  if (x.subject == "identity-twist") d.algebra = d.algebra.with_identity_twist();
  return check_identity(d, x.identity, o);
}

// ---------------------------------------------------------------------------
// printed tables

struct TableMismatch {
  std::string table;
  std::string entry;     // e.g. "(e3,e0)"
  std::string printed;
  std::string computed;
};

namespace catalog_detail {

using PrintedCell = std::pair<std::pair<int, int>, std::vector<std::pair<int, const char*>>>;

inline std::vector<TableMismatch> compare_table(const std::string& table, const HomAlgebra& computed,
                                                const std::vector<PrintedCell>& printed) {
  const std::size_t n = computed.dim();
  StructureTensor p(computed.ring, n);
  for (const auto& [ij, terms] : printed) {
    for (const auto& [k, c] : terms)
      p.set(static_cast<std::size_t>(ij.first), static_cast<std::size_t>(ij.second), static_cast<std::size_t>(k),
            parse_scalar(c, computed.ring));
  }
  std::vector<TableMismatch> out;
  HomAlgebra pa = computed;
  pa.product = p;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element x = p.value(i, j), y = computed.product.value(i, j);
      if (!(x == y)) out.push_back({table, tuple_label(computed, {i, j}), render_element(pa, x), render_element(computed, y)});
    }
  }
  return out;
}

}  // namespace catalog_detail

/// Entrywise comparison of the four printed twisted tables of the 4-dim
/// alternative algebras with the computed α∘μ.
inline std::vector<TableMismatch> compare_alt4_tables() {
  using catalog_detail::PrintedCell;
  const std::vector<PrintedCell> e00{{{0, 0}, {{0, "1"}, {1, "a1"}, {2, "a2"}, {3, "a3"}}}};
  auto with = [&](std::vector<PrintedCell> rest) {
    std::vector<PrintedCell> v = e00;
    v.insert(v.end(), rest.begin(), rest.end());
    return v;
  };
  const auto m11 = with({{{2, 0}, {{2, "a4"}, {3, "a4*a3/a2"}}}, {{3, 0}, {{2, "a5"}, {3, "a5*a3/a2"}}}});
  const auto m12 = with({{{0, 2}, {{2, "a4"}, {3, "a4*a3/a2"}}}, {{0, 3}, {{2, "a5"}, {3, "a5*a3/a2"}}}});
  const auto m21 = with({{{0, 1}, {{1, "a4"}}},
                         {{2, 0}, {{2, "-a4*a2/a5"}, {3, "-a4*a3/a5"}}},
                         {{2, 3}, {{1, "a4"}}},
                         {{3, 0}, {{3, "1"}}},
                         {{3, 2}, {{1, "-a4"}}}});
  const auto m22 = with({{{0, 2}, {{2, "-a4*a2/a5"}, {3, "-a4*a3/a5"}}},
                         {{0, 3}, {{1, "a5"}, {2, "a6"}, {3, "(a6*a3-a5)/a2"}}},
                         {{1, 0}, {{1, "a4"}}},
                         {{2, 3}, {{1, "a4"}}},
                         {{3, 2}, {{1, "-a4"}}}});
  std::vector<TableMismatch> out;
  auto run = [&](const std::string& name, int alg, int endo, const std::vector<PrintedCell>& printed) {
    HomAlgebra t = yau_twist(catalog_detail::alt4(alg), catalog_detail::alt4_endo(endo), false);
    auto v = catalog_detail::compare_table(name, t, printed);
    out.insert(out.end(), v.begin(), v.end());
  };
  run("mu^1_1", 1, 1, m11);
  run("mu^1_2", 2, 1, m12);
  run("mu^2_1", 1, 2, m21);
  run("mu^2_2", 2, 2, m22);
  return out;
}

/// Entrywise comparison of the printed twisted octonion table with α∘μ.
inline std::vector<TableMismatch> compare_octonion_table() {
  HomAlgebra t = yau_twist(catalog_detail::octonions(), catalog_detail::oct_endo(), false);
  const auto& tab = catalog_detail::twisted_octonion_table();
  std::vector<TableMismatch> out;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const Element printed = catalog_detail::octonion_cell(tab[i][j], t.ring);
      const Element computed = t.product.value(i, j);
      if (!(printed == computed))
        out.push_back({"twisted octonions", tuple_label(t, {i, j}), render_element(t, printed), render_element(t, computed)});
    }
  }
  return out;
}

/// Printed Hom-Jordan table against its symmetrization.
inline std::vector<TableMismatch> compare_homjordan_table() {
  const HomAlgebra printed = catalog_detail::homjordan3(true);
  const HomAlgebra sym = catalog_detail::homjordan3(false);
  std::vector<TableMismatch> out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Element x = printed.product.value(i, j), y = sym.product.value(i, j);
      if (!(x == y)) out.push_back({"homjordan3", tuple_label(sym, {i, j}), render_element(sym, x), render_element(sym, y)});
    }
  }
  return out;
}

}  // namespace homalg
