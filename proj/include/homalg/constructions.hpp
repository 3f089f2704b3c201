#pragma once

// Derived algebras: Yau twists, plus/minus and commutator algebras, the
// dialgebra bracket, matrix lifts, opposites and transport of structure.

#include <optional>
#include <string>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/report.hpp"

namespace homalg {

struct MorphismResult {
  bool ok = true;
  std::string clause;  // "product", "twist" or "parity"
  std::vector<std::size_t> tuple;
  Element defect;
  std::string message;
};

enum class MorphismMode { product_only, full };

/// Whether f: A -> B intertwines the products (and the twists in full mode).
/// With gradings on both sides f must also be even.
inline MorphismResult is_morphism(const LinearMap& f, const HomAlgebra& a, const HomAlgebra& b,
                                  MorphismMode mode = MorphismMode::product_only) {
  if (f.matrix.rows() != a.dim() || f.matrix.cols() != b.dim())
    throw DefinitionError("morphism shape does not match source and target dimensions");
  MorphismResult r;
  auto fail = [&](std::string clause, std::vector<std::size_t> t, Element d, std::string msg) {
    r.ok = false;
    r.clause = std::move(clause);
    r.tuple = std::move(t);
    r.defect = std::move(d);
    r.message = std::move(msg);
  };
  if (a.graded() && b.graded()) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < b.dim(); ++j) {
        if (a.parity(i) != b.parity(j) && !f.matrix(i, j).is_zero()) {
          Element d = Element::zero(f.matrix.ring(), b.dim());
          d.coords[j] = f.matrix(i, j);
          fail("parity", {i}, d, "map is not even at " + a.basis[i]);
          return r;
        }
      }
    }
  }
  std::vector<Element> img;
  for (std::size_t i = 0; i < a.dim(); ++i) img.push_back(f.matrix.row(i));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Element d = apply_matrix(f.matrix, mul(a.product, a.e(i), a.e(j))) - mul(b.product, img[i], img[j]);
      if (!d.is_zero()) {
        fail("product", {i, j}, d, "f(μ(" + a.basis[i] + "," + a.basis[j] + ")) != μ'(f(" + a.basis[i] + "),f(" +
                                       a.basis[j] + "))");
        return r;
      }
    }
  }
  if (mode == MorphismMode::full) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Element d = apply_matrix(f.matrix, apply_matrix(a.twist, a.e(i))) - apply_matrix(b.twist, img[i]);
      if (!d.is_zero()) {
        fail("twist", {i}, d, "f(α(" + a.basis[i] + ")) != α'(f(" + a.basis[i] + "))");
        return r;
      }
    }
  }
  return r;
}

inline MorphismResult is_endomorphism(const LinearMap& f, const HomAlgebra& a,
                                      MorphismMode mode = MorphismMode::product_only) {
  return is_morphism(f, a, a, mode);
}

/// g∘f, i.e. f first (row convention: F*G).
inline LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.target_dim != g.source_dim) throw DefinitionError("cannot compose maps of mismatched dimensions");
  return LinearMap{f.source_dim, g.target_dim, f.matrix * g.matrix, g.name + "∘" + f.name};
}

inline LinearMap map_of(const Matrix& m, std::string name = "f") {
  return LinearMap{m.rows(), m.cols(), m, std::move(name)};
}

/// μ_α = α∘μ with twist α. The endomorphism precondition is checked on the
/// product only; a failure throws DefinitionError naming the offending pair.
inline HomAlgebra yau_twist(const HomAlgebra& a, const LinearMap& endo, bool require_endomorphism = true) {
  if (endo.matrix.rows() != a.dim() || endo.matrix.cols() != a.dim())
    throw DefinitionError("twisting map must be a square map on the algebra");
  if (require_endomorphism) {
    MorphismResult m = is_morphism(endo, a, a, MorphismMode::product_only);
    if (!m.ok) throw DefinitionError("not an algebra endomorphism: " + m.message + " at " + tuple_label(a, m.tuple));
  }
  const RingPtr r = join_rings(a.ring, endo.matrix.ring());
  HomAlgebra src = a.over(r);
  const Matrix f = endo.matrix.embed(r);
  HomAlgebra t = src;
  t.name = a.name + "^" + (endo.name.empty() ? "alpha" : endo.name);
  t.product = StructureTensor(r, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Element v = apply_matrix(f, src.product.value(i, j));
      for (std::size_t k = 0; k < a.dim(); ++k) t.product.set(i, j, k, v.coords[k]);
    }
  }
  t.twist = f;
  if (!a.twist.is_identity()) t.notes.push_back("theorem precondition not met (source twist is not the identity): verify directly");
  return t;
}

enum class PlusMinus { plus, minus };

/// μ±(x,y) = ½(μ(x,y) ± μ(y,x)), same twist, no Koszul signs.
inline HomAlgebra pm_algebra(const HomAlgebra& a, PlusMinus sign) {
  HomAlgebra r = a;
  r.name = a.name + (sign == PlusMinus::plus ? "+" : "-");
  r.product = StructureTensor(a.ring, a.dim());
  const Scalar half(a.ring, mpq_class(1, 2));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Scalar c = a.product.get(i, j, k);
        Scalar d = a.product.get(j, i, k);
        r.product.set(i, j, k, half * (sign == PlusMinus::plus ? c + d : c - d));
      }
    }
  }
  return r;
}

/// [x,y] = μ(x,y) − (−1)^{|x||y|} μ(y,x) on basis vectors, unscaled.
inline HomAlgebra commutator_algebra(const HomAlgebra& a) {
  HomAlgebra r = a;
  r.name = "[" + a.name + "]";
  r.product = StructureTensor(a.ring, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const int s = koszul_int(a.parity(i), a.parity(j));
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Scalar c = a.product.get(i, j, k);
        Scalar d = a.product.get(j, i, k);
        r.product.set(i, j, k, s > 0 ? c - d : c + d);
      }
    }
  }
  // super-skew by construction
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const int s = koszul_int(a.parity(i), a.parity(j));
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Scalar lhs = r.product.get(i, j, k);
        Scalar rhs = r.product.get(j, i, k);
        if (!(s > 0 ? lhs + rhs : lhs - rhs).is_zero()) throw Error("commutator is not super-skew");
      }
    }
  }
  return r;
}

/// [x,y] = x⊣y − y⊢x.
inline HomAlgebra leibniz_from_dialgebra(const HomDialgebra& d) {
  const HomAlgebra& a = d.left;
  HomAlgebra r = a;
  r.name = "leibniz(" + a.name + ")";
  r.product = StructureTensor(a.ring, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < a.dim(); ++k) {
        r.product.set(i, j, k, a.product.get(i, j, k) - d.right.get(j, i, k).embed(a.ring));
      }
    }
  }
  return r;
}

/// M_m(A): basis e_i⊗E_rs in row-major (i, r, s) order, matrix product with
/// entrywise μ and entrywise α.
inline HomAlgebra matrix_lift(const HomAlgebra& a, std::size_t m) {
  if (m == 0) throw DefinitionError("matrix size must be positive");
  const std::size_t n = a.dim();
  const std::size_t N = n * m * m;
  auto idx = [&](std::size_t i, std::size_t r, std::size_t s) { return (i * m + r) * m + s; };
  HomAlgebra out;
  out.name = a.name + "⊗M" + std::to_string(m);
  out.ring = a.ring;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t s = 0; s < m; ++s) {
        out.basis.push_back(m == 1 ? a.basis[i]
                                   : a.basis[i] + "⊗E" + std::to_string(r + 1) + std::to_string(s + 1));
      }
    }
  }
  if (a.grading) {
    std::vector<int> g;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < m * m; ++r) g.push_back((*a.grading)[i]);
    }
    out.grading = g;
  }
  out.product = StructureTensor(a.ring, N);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : a.product.cell(i, j)) {
        for (std::size_t r = 0; r < m; ++r) {
          for (std::size_t s = 0; s < m; ++s) {
            for (std::size_t t = 0; t < m; ++t) out.product.set(idx(i, r, s), idx(j, s, t), idx(k, r, t), c);
          }
        }
      }
    }
  }
  out.twist = Matrix(a.ring, N, N);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a.twist(i, j).is_zero()) continue;
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s < m; ++s) out.twist(idx(i, r, s), idx(j, r, s)) = a.twist(i, j);
      }
    }
  }
  return out;
}

inline HomAlgebra opposite_algebra(const HomAlgebra& a) {
  HomAlgebra r = a;
  r.name = a.name + "^op";
  r.product = StructureTensor(a.ring, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (const auto& [k, c] : a.product.cell(j, i)) r.product.set(i, j, k, c);
    }
  }
  return r;
}

/// f·μ(x,y) = f⁻¹μ(f(x),f(y)), f·α = f⁻¹∘α∘f. The determinant of f is
/// recorded in the result's notes; a singular f throws DivisionError.
inline HomAlgebra transport_structure(const HomAlgebra& a, const Matrix& f) {
  const std::size_t n = a.dim();
  if (f.rows() != n || f.cols() != n) throw DefinitionError("transport map must be square of the algebra dimension");
  const Scalar det = f.determinant();
  if (det.is_zero()) throw DivisionError("transport map is singular");
  const Matrix finv = f.inverse();
  RingPtr r = join_rings(join_rings(a.ring, f.ring()), finv.ring());
  HomAlgebra src = a.over(r);
  const Matrix F = f.embed(r);
  const Matrix Fi = finv.embed(r);
  HomAlgebra out = src;
  out.name = a.name + "^f";
  out.product = StructureTensor(r, n);
  std::vector<Element> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(F.row(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element v = apply_matrix(Fi, mul(src.product, img[i], img[j]));
      for (std::size_t k = 0; k < n; ++k) out.product.set(i, j, k, v.coords[k]);
    }
  }
  // f then α then f⁻¹
  out.twist = F * src.twist * Fi;
  out.notes.push_back("transport determinant: " + det.to_string());
  return out;
}

}  // namespace homalg
