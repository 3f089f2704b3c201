#pragma once

// Shared fixtures for property tests and the acceptance binary: random
// parameter bindings, random invertible maps, transport of whole
// definitions, and the implication / twist-theorem suites.

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "homalg/catalog.hpp"

namespace fixtures {

using namespace homalg;

using Bindings = std::map<std::string, std::string>;

inline std::string rat(const mpq_class& q) { return q.get_str(); }

inline Bindings random_bindings(const std::vector<std::string>& params) {
  Bindings b;
  for (const auto& p : params) b[p] = rat(testgen::nonzero_rational(6, 3));
  return b;
}

/// Random admissible binding of an entry, retried until admissible.
inline Bindings admissible_bindings(const CatalogEntry& e) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Bindings b = random_bindings(e.parameters);
    try {
      instantiate(e.name, b);
      return b;
    } catch (const DefinitionError&) {
    }
  }
  throw std::runtime_error("no admissible binding found for " + e.name);
}

inline bool is_algebra_kind(EntryKind k) {
  return k == EntryKind::algebra || k == EntryKind::dialgebra || k == EntryKind::poisson;
}

struct Sample {
  std::string label;
  Definition def;
};

/// Every algebra-like catalog entry: symbolic, with identity twist, and
/// `count` random admissible bindings of each (parameter-free entries once).
inline std::vector<Sample> catalog_samples(int count) {
  std::vector<Sample> out;
  for (const auto& e : catalog_entries()) {
    if (!is_algebra_kind(e.kind)) continue;
    auto push = [&](const std::string& tag, const Definition& d) {
      out.push_back({e.name + tag, d});
      Definition id = d;
      id.algebra = d.algebra.with_identity_twist();
      out.push_back({e.name + tag + "|id", id});
    };
    push("", instantiate(e.name).def);
    if (e.parameters.empty()) continue;
    for (int i = 0; i < count; ++i) {
      const Bindings b = admissible_bindings(e);
      std::string tag = "{";
      for (const auto& [k, v] : b) tag += k + "=" + v + ",";
      tag.back() = '}';
      push(tag, instantiate(e.name, b).def);
    }
  }
  return out;
}

/// Random invertible rational matrix that is even for the given parities:
/// dense blocks when `dense`, otherwise a monomial matrix times a
/// unitriangular one with a few random entries.
inline Matrix random_invertible(const std::vector<int>& parity, bool dense = true) {
  const std::size_t n = parity.size();
  const RingPtr q = rational_ring();
  if (dense) {
    for (;;) {
      Matrix m(q, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (parity[i] == parity[j]) m(i, j) = Scalar::rational(testgen::small_rational(3, 2));
      if (!m.determinant().is_zero()) return m;
    }
  }
  std::vector<std::size_t> perm(n);
  for (int p = 0; p < 2; ++p) {
    std::vector<std::size_t> cls;
    for (std::size_t i = 0; i < n; ++i)
      if (parity[i] == p) cls.push_back(i);
    std::vector<std::size_t> img = cls;
    std::shuffle(img.begin(), img.end(), testgen::rng());
    for (std::size_t k = 0; k < cls.size(); ++k) perm[cls[k]] = img[k];
  }
  Matrix mono(q, n, n);
  for (std::size_t i = 0; i < n; ++i) mono(i, perm[i]) = Scalar::rational(testgen::nonzero_rational(3, 2));
  Matrix u = Matrix::identity(q, n);
  for (std::size_t k = 0; k < std::max<std::size_t>(3, n * (n - 1) / 2); ++k) {
    const auto i = static_cast<std::size_t>(testgen::uniform(0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(testgen::uniform(0, static_cast<long>(n) - 1));
    if (i < j && parity[i] == parity[j]) u(i, j) = Scalar::rational(testgen::nonzero_rational(3, 2));
  }
  return mono * u;
}

inline std::vector<int> parities(const HomAlgebra& a) {
  std::vector<int> p;
  for (std::size_t i = 0; i < a.dim(); ++i) p.push_back(a.parity(i));
  return p;
}

/// Transports the product, the twist and any second product or bracket.
inline Definition transport_definition(const Definition& d, const Matrix& f) {
  Definition out;
  out.algebra = transport_structure(d.algebra, f);
  auto carry = [&](const StructureTensor& t) {
    HomAlgebra h = d.algebra;
    h.product = t;
    return transport_structure(h, f).product;
  };
  if (d.right) out.right = carry(*d.right);
  if (d.bracket) out.bracket = carry(*d.bracket);
  return out;
}

inline CheckOptions verdict_only() {
  CheckOptions o;
  o.witness_cap = 1;
  o.cross_checks = false;
  o.first_failure = true;
  return o;
}

inline bool holds(const Definition& d, const std::string& id) { return check_identity(d, id, verdict_only()).holds(); }
inline bool holds(const HomAlgebra& a, const std::string& id) { return holds(Definition{a, {}, {}}, id); }

inline bool has_odd(const HomAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.parity(i) == 1) return true;
  return false;
}

/// Premise/conclusion tally for one implication.
struct Tally {
  Tally(std::string n) : name(std::move(n)) {}

  std::string name;
  int applicable = 0;
  int counterexamples = 0;
  std::vector<std::string> examples;

  void record(bool premise, const std::function<bool()>& conclusion, const std::string& where) {
    if (!premise) return;
    ++applicable;
    if (!conclusion()) {
      ++counterexamples;
      if (examples.size() < 5) examples.push_back(where);
    }
  }

  bool ok() const { return applicable > 0 && counterexamples == 0; }

  std::string summary() const {
    std::ostringstream s;
    s << name << ": " << applicable << " applicable, " << counterexamples << " counterexamples";
    for (const auto& e : examples) s << " [" << e << "]";
    return s.str();
  }
};

/// Implications on single definitions (functor theorems and corollaries).
inline std::vector<Tally> functor_suite(const std::vector<Sample>& samples) {
  Tally comm{"hom-associative => commutator hom-lie"};
  Tally scomm{"graded hom-associative => supercommutator hom-lie-super"};
  Tally dia{"hom-dialgebra => leibniz bracket hom-leibniz"};
  Tally jord{"hom-associative => plus algebra hom-jordan"};
  Tally flex{"hom-associative => hom-flexible"};
  Tally altflex{"alternative => hom-flexible"};
  std::vector<Tally> gadm;
  for (int g = 1; g <= 6; ++g) gadm.push_back({"g" + std::to_string(g) + " => hom-lie-admissible"});
  for (const auto& s : samples) {
    const HomAlgebra& a = s.def.algebra;
    const bool odd = has_odd(a);
    const bool assoc = holds(s.def, "hom-associative");
    flex.record(assoc, [&] { return holds(a, "hom-flexible"); }, s.label);
    if (!odd) {
      comm.record(assoc, [&] { return holds(commutator_algebra(a), "hom-lie"); }, s.label);
      jord.record(assoc, [&] { return holds(pm_algebra(a, PlusMinus::plus), "hom-jordan"); }, s.label);
    } else {
      scomm.record(assoc, [&] { return holds(commutator_algebra(a), "hom-lie-super"); }, s.label);
    }
    if (!odd) altflex.record(holds(a, "alternative"), [&] { return holds(a, "hom-flexible"); }, s.label);
    const bool adm = holds(a, "hom-lie-admissible");
    for (int g = 1; g <= 6; ++g)
      gadm[g - 1].record(holds(a, "g" + std::to_string(g)), [&] { return adm; }, s.label);
    if (s.def.right) {
      dia.record(holds(s.def, "hom-dialgebra"),
                 [&] { return holds(leibniz_from_dialgebra(HomDialgebra{a, *s.def.right}), "hom-leibniz"); }, s.label);
    }
  }
  std::vector<Tally> out{comm, scomm, dia, jord, flex, altflex};
  out.insert(out.end(), gadm.begin(), gadm.end());
  return out;
}

struct TwistPair {
  std::string label;
  HomAlgebra source;  // identity twist
  LinearMap endo;
};

/// (ordinary algebra, linear map) pairs for the twist theorems: every
/// endomorphism entry on each target and on the target's plus algebra, and
/// every algebra entry with its own twist as the map. Octonion diagonal maps
/// are sampled on their sign locus. Pairs whose map is not an endomorphism
/// are kept; the suite only uses the ones that are.
inline std::vector<TwistPair> twist_pairs(int count) {
  std::vector<TwistPair> out;
  for (const auto& e : catalog_entries()) {
    if (e.kind == EntryKind::endomorphism) {
      for (int i = 0; i < count; ++i) {
        Bindings b;
        if (e.name == "oct-endo") {
          for (const auto& p : e.parameters) b[p] = testgen::uniform(0, 1) ? "1" : "-1";
        } else {
          b = admissible_bindings(e);
        }
        const LinearMap f = *instantiate(e.name, b).map;
        for (const auto& t : e.targets) {
          const HomAlgebra src = instantiate(t).def.algebra.with_identity_twist();
          out.push_back({e.name + " on " + t + " #" + std::to_string(i), src, f});
          out.push_back({e.name + " on plus(" + t + ") #" + std::to_string(i), pm_algebra(src, PlusMinus::plus), f});
        }
      }
    } else if (is_algebra_kind(e.kind) && !e.parameters.empty()) {
      for (int i = 0; i < count; ++i) {
        const HomAlgebra a = instantiate(e.name, admissible_bindings(e)).def.algebra;
        out.push_back({e.name + " own twist #" + std::to_string(i), a.with_identity_twist(), map_of(a.twist, "alpha")});
      }
    } else if (is_algebra_kind(e.kind)) {
      const HomAlgebra a = instantiate(e.name).def.algebra;
      if (!a.twist.is_identity()) out.push_back({e.name + " own twist", a.with_identity_twist(), map_of(a.twist, "alpha")});
    }
  }
  // classical osp(1,2) with the automorphisms alpha_lambda
  const HomAlgebra osp = instantiate("osp12-classical").def.algebra;
  for (int i = 0; i < count; ++i) {
    const Matrix al = instantiate("osp12", admissible_bindings(catalog_entry("osp12"))).def.algebra.twist;
    out.push_back({"alpha_lambda on osp12-classical #" + std::to_string(i), osp, map_of(al, "alpha_lambda")});
  }
  return out;
}

/// Twist theorems: properties of an ordinary algebra carried to its Yau twist.
inline std::vector<Tally> twist_suite(const std::vector<TwistPair>& pairs) {
  std::vector<Tally> gs;
  for (int g = 1; g <= 6; ++g) gs.push_back({"g" + std::to_string(g) + " source => g" + std::to_string(g) + " Yau twist"});
  Tally alt{"alternative source => alternative Yau twist"};
  Tally jor{"Jordan source => hom-jordan Yau twist"};
  Tally lie{"Lie superalgebra source, even endomorphism => hom-lie-super Yau twist"};
  for (const auto& p : pairs) {
    if (!is_morphism(p.endo, p.source, p.source, MorphismMode::product_only).ok) continue;
    const HomAlgebra t = yau_twist(p.source, p.endo);
    const bool odd = has_odd(p.source);
    for (int g = 1; g <= 6; ++g) {
      const std::string id = "g" + std::to_string(g);
      gs[g - 1].record(holds(p.source, id), [&] { return holds(t, id); }, p.label);
    }
    if (!odd) {
      alt.record(holds(p.source, "alternative"), [&] { return holds(t, "alternative"); }, p.label);
      jor.record(holds(p.source, "hom-jordan"), [&] { return holds(t, "hom-jordan"); }, p.label);
    } else {
      lie.record(holds(p.source, "hom-lie-super"), [&] { return holds(t, "hom-lie-super"); }, p.label);
    }
  }
  std::vector<Tally> out = gs;
  out.push_back(alt);
  out.push_back(jor);
  out.push_back(lie);
  return out;
}

}  // namespace fixtures
