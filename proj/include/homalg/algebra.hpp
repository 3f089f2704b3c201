#pragma once

// Finite-dimensional (super-)Hom-algebras given by structure constants.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homalg/error.hpp"
#include "homalg/scalar.hpp"

namespace homalg {

/// Coordinate vector over a scalar ring.
struct Element {
  RingPtr ring;
  std::vector<Scalar> coords;

  static Element zero(const RingPtr& ring, std::size_t n) {
    return Element{ring, std::vector<Scalar>(n, Scalar::zero(ring))};
  }

  static Element basis(const RingPtr& ring, std::size_t n, std::size_t i) {
    Element e = zero(ring, n);
    e.coords[i] = Scalar::one(ring);
    return e;
  }

  std::size_t size() const noexcept { return coords.size(); }

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  Element embed(const RingPtr& target) const {
    if (ring == target) return *this;
    Element e{target, {}};
    e.coords.reserve(coords.size());
    for (const auto& c : coords) e.coords.push_back(c.embed(target));
    return e;
  }

  Element& operator+=(const Element& o) {
    unify(o);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!o.coords[i].is_zero()) coords[i] += o.coords[i].embed(ring);
    }
    return *this;
  }

  Element& operator-=(const Element& o) {
    unify(o);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!o.coords[i].is_zero()) coords[i] -= o.coords[i].embed(ring);
    }
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }

  friend Element operator*(const Scalar& s, const Element& x) {
    RingPtr r = join_rings(s.ring(), x.ring);
    Element out = Element::zero(r, x.size());
    if (s.is_zero()) return out;
    Scalar se = s.embed(r);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x.coords[i].is_zero()) out.coords[i] = se * x.coords[i].embed(r);
    }
    return out;
  }

  Element operator-() const {
    Element e = *this;
    for (auto& c : e.coords) c = -c;
    return e;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.coords == b.coords;
  }

 private:
  void unify(const Element& o) {
    if (o.coords.size() != coords.size()) throw DefinitionError("element dimension mismatch");
    if (ring != o.ring && !same_ring(ring, o.ring)) *this = embed(join_rings(ring, o.ring));
  }
};

/// Sparse structure constants: entry (i,j) lists the (k, C_ij^k) pairs.
class StructureTensor {
 public:
  StructureTensor() = default;
  StructureTensor(RingPtr ring, std::size_t n)
      : ring_(std::move(ring)), n_(n), cells_(n * n) {}

  std::size_t dim() const noexcept { return n_; }
  const RingPtr& ring() const noexcept { return ring_; }

  const std::vector<std::pair<std::size_t, Scalar>>& cell(std::size_t i, std::size_t j) const {
    return cells_[i * n_ + j];
  }

  Scalar get(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& [kk, s] : cell(i, j)) {
      if (kk == k) return s;
    }
    return Scalar::zero(ring_);
  }

  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
    if (i >= n_ || j >= n_ || k >= n_) throw DefinitionError("structure constant index out of range");
    auto& c = cells_[i * n_ + j];
    auto it = std::lower_bound(c.begin(), c.end(), k,
                               [](const auto& p, std::size_t key) { return p.first < key; });
    if (it != c.end() && it->first == k) {
      if (value.is_zero()) {
        c.erase(it);
      } else {
        it->second = value.embed(ring_);
      }
    } else if (!value.is_zero()) {
      c.insert(it, {k, value.embed(ring_)});
    }
  }

  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
    set(i, j, k, get(i, j, k) + value);
  }

  Element value(std::size_t i, std::size_t j) const {
    Element e = Element::zero(ring_, n_);
    for (const auto& [k, s] : cell(i, j)) e.coords[k] = s;
    return e;
  }

  bool is_zero() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const auto& c) { return c.empty(); });
  }

  StructureTensor embed(const RingPtr& target) const {
    StructureTensor t(target, n_);
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      for (const auto& [k, s] : cells_[c]) t.cells_[c].emplace_back(k, s.embed(target));
    }
    return t;
  }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t c = 0; c < a.cells_.size(); ++c) {
      if (a.cells_[c].size() != b.cells_[c].size()) return false;
      for (std::size_t m = 0; m < a.cells_[c].size(); ++m) {
        if (a.cells_[c][m].first != b.cells_[c][m].first ||
            !(a.cells_[c][m].second == b.cells_[c][m].second))
          return false;
      }
    }
    return true;
  }

 private:
  RingPtr ring_ = rational_ring();
  std::size_t n_ = 0;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cells_;
};

/// Dense matrix. For linear maps, row i holds the coordinates of f(e_i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        data_(rows * cols, Scalar::zero(ring_)) {}

  static Matrix identity(const RingPtr& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
    return m;
  }

  static Matrix diagonal(const std::vector<Scalar>& d) {
    RingPtr r = rational_ring();
    for (const auto& s : d) r = join_rings(r, s.ring());
    Matrix m(r, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i].embed(r);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const RingPtr& ring() const noexcept { return ring_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Element row(std::size_t i) const {
    Element e{ring_, {}};
    e.coords.assign(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return e;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const Scalar& s = (*this)(i, j);
        if (i == j ? !s.is_one() : !s.is_zero()) return false;
      }
    }
    return true;
  }

  Matrix embed(const RingPtr& target) const {
    Matrix m = *this;
    m.ring_ = target;
    for (auto& s : m.data_) s = s.embed(target);
    return m;
  }

  /// Composition as maps: (this then g), i.e. row convention product A*B.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DefinitionError("matrix shape mismatch");
    RingPtr r = join_rings(a.ring_, b.ring_);
    Matrix m(r, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
        }
      }
    }
    for (auto& s : m.data_) s = s.embed(r);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Determinant by Gaussian elimination in the fraction field.
  Scalar determinant() const {
    if (rows_ != cols_) throw DefinitionError("determinant of a non-square matrix");
    RingPtr f = fraction_view();
    std::vector<Scalar> a;
    a.reserve(data_.size());
    for (const auto& s : data_) a.push_back(s.embed(f));
    const std::size_t n = rows_;
    Scalar det = Scalar::one(f);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && a[p * n + c].is_zero()) ++p;
      if (p == n) return Scalar::zero(f);
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
        det = -det;
      }
      const Scalar piv = a[c * n + c];
      det *= piv;
      for (std::size_t r = c + 1; r < n; ++r) {
        if (a[r * n + c].is_zero()) continue;
        const Scalar factor = a[r * n + c] / piv;
        for (std::size_t j = c; j < n; ++j) a[r * n + j] -= factor * a[c * n + j];
      }
    }
    return det;
  }

  /// Inverse over the fraction field; throws DivisionError when singular.
  Matrix inverse() const {
    if (rows_ != cols_) throw DefinitionError("inverse of a non-square matrix");
    RingPtr f = fraction_view();
    const std::size_t n = rows_;
    Matrix a = embed(f);
    Matrix inv = identity(f, n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && a(p, c).is_zero()) ++p;
      if (p == n) throw DivisionError("singular matrix");
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(p, j), a(c, j));
          std::swap(inv(p, j), inv(c, j));
        }
      }
      const Scalar piv = a(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(c, j) /= piv;
        inv(c, j) /= piv;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || a(r, c).is_zero()) continue;
        const Scalar factor = a(r, c);
        for (std::size_t j = 0; j < n; ++j) {
          a(r, j) -= factor * a(c, j);
          inv(r, j) -= factor * inv(c, j);
        }
      }
    }
    // Come back down the tower when the inverse needs no denominators.
    bool poly = std::all_of(inv.data_.begin(), inv.data_.end(),
                            [](const Scalar& s) { return s.is_polynomial(); });
    if (poly && ring_->kind != RingKind::fraction) {
      Matrix out(ring_, n, n);
      for (std::size_t i = 0; i < n * n; ++i)
        out.data_[i] = Scalar::from_polynomial(ring_, inv.data_[i].numerator());
      return out;
    }
    return inv;
  }

 private:
  RingPtr fraction_view() const {
    if (ring_->kind != RingKind::polynomial) return ring_;
    return fraction_ring(ring_->parameters);
  }

  RingPtr ring_ = rational_ring();
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Image of x under the map with matrix m (row convention).
inline Element apply_matrix(const Matrix& m, const Element& x) {
  if (m.rows() != x.size()) throw DefinitionError("map source dimension mismatch");
  RingPtr r = join_rings(m.ring(), x.ring);
  Element out = Element::zero(r, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Scalar& xi = x.coords[i];
    if (xi.is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) out.coords[j] += xi * m(i, j);
    }
  }
  for (auto& c : out.coords) c = c.embed(r);
  return out;
}

struct HomAlgebra {
  std::string name;
  RingPtr ring = rational_ring();
  std::vector<std::string> basis;
  StructureTensor product;
  Matrix twist;
  std::optional<std::vector<int>> grading;
  std::vector<std::string> notes;

  std::size_t dim() const noexcept { return basis.size(); }
  bool graded() const noexcept { return grading.has_value(); }
  int parity(std::size_t i) const { return grading ? (*grading)[i] : 0; }

  /// Same algebra viewed over a larger ring.
  HomAlgebra over(const RingPtr& target) const {
    if (ring == target) return *this;
    HomAlgebra a = *this;
    a.ring = target;
    a.product = product.embed(target);
    a.twist = twist.embed(target);
    return a;
  }

  HomAlgebra with_twist(const Matrix& m) const {
    HomAlgebra a = *this;
    RingPtr r = join_rings(ring, m.ring());
    a = a.over(r);
    a.twist = m.embed(r);
    return a;
  }

  HomAlgebra with_identity_twist() const { return with_twist(Matrix::identity(ring, dim())); }

  Element e(std::size_t i) const { return Element::basis(ring, dim(), i); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == label) return i;
    }
    return std::nullopt;
  }
};

/// Tuple of basis indices rendered with labels, e.g. "(e1,e1,e3)".
inline std::string tuple_label(const HomAlgebra& a, const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t m = 0; m < idx.size(); ++m) {
    if (m != 0) s += ',';
    s += a.basis[idx[m]];
  }
  return s + ")";
}

struct HomDialgebra {
  HomAlgebra left;   // carries ⊣ and the twist
  StructureTensor right;  // ⊢
};

struct HomPoissonStructure {
  HomAlgebra algebra;  // commutative product μ and the twist
  StructureTensor bracket;

  HomAlgebra bracket_algebra() const {
    HomAlgebra b = algebra;
    b.product = bracket;
    b.name = algebra.name + ".bracket";
    return b;
  }
};

struct LinearMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Matrix matrix;
  std::string name;
};

/// Bilinear product through the structure constants.
inline Element mul(const StructureTensor& t, const Element& x, const Element& y) {
  const std::size_t n = t.dim();
  if (x.size() != n || y.size() != n) throw DefinitionError("element dimension mismatch");
  RingPtr r = join_rings(join_rings(t.ring(), x.ring), y.ring);
  Element out = Element::zero(r, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& xi = x.coords[i];
    if (xi.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& yj = y.coords[j];
      if (yj.is_zero()) continue;
      const auto& cell = t.cell(i, j);
      if (cell.empty()) continue;
      const Scalar w = xi * yj;
      for (const auto& [k, c] : cell) out.coords[k] += w * c;
    }
  }
  for (auto& c : out.coords) c = c.embed(r);
  return out;
}

inline Element mul(const HomAlgebra& a, const Element& x, const Element& y) {
  return mul(a.product, x, y);
}

inline Element apply_map(const HomAlgebra& a, const Element& x) { return apply_matrix(a.twist, x); }

inline Element apply_map(const LinearMap& m, const Element& x) { return apply_matrix(m.matrix, x); }

/// (-1)^{pq} as a rational scalar.
inline Scalar koszul_sign(int p, int q) { return Scalar::rational(((p & q) & 1) != 0 ? -1 : 1); }

inline int koszul_int(int p, int q) { return ((p & q) & 1) != 0 ? -1 : 1; }

/// The six elements of S3 as words in the transpositions s1 = (12), s2 = (23).
enum class Perm { id, s1, s2, s1s2, s2s1, s2s1s2 };

inline constexpr std::array<Perm, 6> all_perms{Perm::id, Perm::s1, Perm::s2,
                                                Perm::s1s2, Perm::s2s1, Perm::s2s1s2};

inline const char* perm_name(Perm p) {
  switch (p) {
    case Perm::id: return "id";
    case Perm::s1: return "s1";
    case Perm::s2: return "s2";
    case Perm::s1s2: return "s1s2";
    case Perm::s2s1: return "s2s1";
    case Perm::s2s1s2: return "s2s1s2";
  }
  return "?";
}

/// Positions picked by tau: tau(x1,x2,x3) = (x[a], x[b], x[c]).
inline std::array<int, 3> perm_positions(Perm p) {
  switch (p) {
    case Perm::id: return {0, 1, 2};
    case Perm::s1: return {1, 0, 2};
    case Perm::s2: return {0, 2, 1};
    case Perm::s1s2: return {2, 0, 1};
    case Perm::s2s1: return {1, 2, 0};
    case Perm::s2s1s2: return {2, 1, 0};
  }
  return {0, 1, 2};
}

inline int perm_signature(Perm p) {
  switch (p) {
    case Perm::id:
    case Perm::s1s2:
    case Perm::s2s1: return 1;
    default: return -1;
  }
}

/// Parity |tau(x1,x2,x3)| from the transposition-parity table.
inline int permutation_parity(Perm p, int p1, int p2, int p3) {
  switch (p) {
    case Perm::id: return 0;
    case Perm::s1: return (p1 * p2) & 1;
    case Perm::s2: return (p2 * p3) & 1;
    case Perm::s1s2: return (p2 * p3 + p1 * p3) & 1;
    case Perm::s2s1: return (p1 * p2 + p1 * p3) & 1;
    case Perm::s2s1s2: return (p2 * p3 + p1 * p3 + p1 * p2) & 1;
  }
  return 0;
}

/// Validates shapes, label uniqueness and ring coherence; with strict
/// grading also parity homogeneity.
inline void validate_algebra(const HomAlgebra& a, bool strict_grading) {
  const std::size_t n = a.dim();
  if (n == 0) throw DefinitionError("dimension must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (a.basis[i].empty()) throw DefinitionError("empty basis label");
    for (std::size_t j = 0; j < i; ++j) {
      if (a.basis[i] == a.basis[j]) throw DefinitionError("duplicate basis label '" + a.basis[i] + "'");
    }
  }
  if (a.product.dim() != n) throw DefinitionError("product tensor dimension mismatch");
  if (a.twist.rows() != n || a.twist.cols() != n) throw DefinitionError("twist matrix shape mismatch");
  if (!same_ring(a.product.ring(), a.ring) || !same_ring(a.twist.ring(), a.ring))
    throw DefinitionError("structure constants are not over the algebra ring");
  if (a.grading) {
    if (a.grading->size() != n) throw DefinitionError("grading length mismatch");
    for (int g : *a.grading) {
      if (g != 0 && g != 1) throw DefinitionError("grading entries must be 0 or 1");
    }
    if (strict_grading) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (const auto& [k, c] : a.product.cell(i, j)) {
            if (((a.parity(i) + a.parity(j)) & 1) != a.parity(k))
              throw DefinitionError("product " + tuple_label(a, {i, j}) + " has a component on " +
                                    a.basis[k] + " of the wrong parity");
          }
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (!a.twist(i, j).is_zero() && a.parity(i) != a.parity(j))
            throw DefinitionError("twist is not even at " + a.basis[i] + " -> " + a.basis[j]);
        }
      }
    }
  }
}

struct GenericView {
  HomAlgebra algebra;
  std::vector<Element> elements;
};

/// Adjoins fresh indeterminates X{m}_{i} and returns generic elements
/// x_m = sum_i X{m}_{i} e_i. With parities, element m only has coordinates
/// on basis vectors of parity parities[m].
inline GenericView generic_elements(const HomAlgebra& a, std::size_t count,
                                    const std::vector<int>* parities = nullptr) {
  if (count == 0 || count > 4) throw DefinitionError("generic element count must be 1..4");
  const std::size_t n = a.dim();
  std::string prefix = "X";
  auto collides = [&](const std::string& p) {
    for (const auto& name : a.ring->parameters) {
      if (name.rfind(p, 0) == 0) return true;
    }
    return false;
  };
  while (collides(prefix)) prefix += "X";
  std::vector<std::string> names;
  std::vector<std::vector<std::optional<std::size_t>>> slots(count);
  for (std::size_t m = 0; m < count; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      const bool used = parities == nullptr || a.parity(i) == (*parities)[m];
      if (used) {
        slots[m].push_back(a.ring->nvars() + names.size());
        names.push_back(prefix + std::to_string(m + 1) + "_" + std::to_string(i + 1));
      } else {
        slots[m].push_back(std::nullopt);
      }
    }
  }
  RingPtr ext = adjoin_indeterminates(a.ring, names);
  GenericView v{a.over(ext), {}};
  for (std::size_t m = 0; m < count; ++m) {
    Element x = Element::zero(ext, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (slots[m][i]) {
        x.coords[i] = Scalar::from_polynomial(ext, Polynomial::variable(ext->nvars(), *slots[m][i]));
      }
    }
    v.elements.push_back(std::move(x));
  }
  return v;
}

}  // namespace homalg
