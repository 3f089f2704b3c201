#pragma once

// Windowed check of the q-deformed Witt superalgebra spanned by X_n (even)
// and G_n (odd), n >= 0.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homalg/report.hpp"

namespace homalg {

/// {n} = (1 - q^n)/(1 - q) = 1 + q + ... + q^(n-1).
inline Scalar q_number(long n, const Scalar& q) {
  if (n < 0) throw DefinitionError("q-number index must be non-negative");
  Scalar acc = Scalar::zero(q.ring());
  Scalar pw = Scalar::one(q.ring());
  for (long k = 0; k < n; ++k) {
    acc += pw;
    pw *= q;
  }
  return acc;
}

struct WittGen {
  char kind;  // 'X' or 'G'
  long index;

  int parity() const { return kind == 'G' ? 1 : 0; }
  std::string label() const { return std::string(1, kind) + std::to_string(index); }
  friend bool operator<(const WittGen& a, const WittGen& b) {
    return a.kind != b.kind ? a.kind > b.kind : a.index < b.index;  // X before G
  }
  friend bool operator==(const WittGen& a, const WittGen& b) { return a.kind == b.kind && a.index == b.index; }
};

/// Sparse element: generator -> nonzero coefficient.
using WittElement = std::map<WittGen, Scalar>;

class QWitt {
 public:
  explicit QWitt(const mpq_class& q) : q_(Scalar::rational(q)) {
    if (q == 0 || q == 1) throw DefinitionError("q must differ from 0 and 1");
  }

  const Scalar& q() const { return q_; }

  Scalar qn(long n) const {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    Scalar v = q_number(n, q_);
    cache_.emplace(n, v);
    return v;
  }

  WittElement bracket(const WittGen& a, const WittGen& b) const {
    WittElement out;
    auto put = [&](WittGen g, const Scalar& c) {
      if (!c.is_zero()) out[g] = c;
    };
    if (a.kind == 'X' && b.kind == 'X') {
      put({'X', a.index + b.index}, qn(b.index) - qn(a.index));
    } else if (a.kind == 'X' && b.kind == 'G') {
      put({'G', a.index + b.index}, xg(a.index, b.index));
    } else if (a.kind == 'G' && b.kind == 'X') {
      put({'G', a.index + b.index}, -xg(b.index, a.index));
    }
    return out;
  }

  WittElement bracket(const WittElement& x, const WittElement& y) const {
    WittElement out;
    for (const auto& [a, ca] : x) {
      for (const auto& [b, cb] : y) {
        for (const auto& [g, c] : bracket(a, b)) accumulate(out, g, ca * cb * c);
      }
    }
    return out;
  }

  Scalar twist_coefficient(const WittGen& g) const {
    return Scalar::one(q_.ring()) + q_.pow(g.kind == 'X' ? g.index : g.index + 1);
  }

  WittElement twist(const WittElement& x) const {
    WittElement out;
    for (const auto& [g, c] : x) accumulate(out, g, c * twist_coefficient(g));
    return out;
  }

  static void accumulate(WittElement& e, const WittGen& g, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = e.find(g);
    if (it == e.end()) {
      e.emplace(g, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) e.erase(it);
    }
  }

 private:
  // [X_n, G_m] coefficient q^n {m+1} - q^{m+1} {n}
  Scalar xg(long n, long m) const { return q_.pow(n) * qn(m + 1) - q_.pow(m + 1) * qn(n); }

  Scalar q_;
  mutable std::map<long, Scalar> cache_;
};

inline std::string render_witt(const WittElement& e) {
  std::vector<DefectTerm> d;
  for (const auto& [g, c] : e) d.push_back({0, g.label(), c});
  return render_defect(d);
}

/// Super-skew-symmetry on all generator pairs and the Hom-super-Jacobi
/// identity on all generator triples with indices 0..max_index. Brackets
/// leaving the window are computed in full.
inline CheckReport check_qwitt(const mpq_class& q, long max_index, std::size_t witness_cap = 16) {
  if (max_index < 2) throw DefinitionError("max index must be at least 2");
  QWitt w(q);
  std::vector<WittGen> gens;
  for (long n = 0; n <= max_index; ++n) gens.push_back({'X', n});
  for (long n = 0; n <= max_index; ++n) gens.push_back({'G', n});
  auto single = [](const WittGen& g) { return WittElement{{g, Scalar::one(rational_ring())}}; };
  auto terms = [](const WittElement& e) {
    std::vector<DefectTerm> d;
    std::size_t i = 0;
    for (const auto& [g, c] : e) d.push_back({i++, g.label(), c});
    return d;
  };
  auto label = [](std::initializer_list<WittGen> gs) {
    std::string s = "(";
    bool first = true;
    for (const auto& g : gs) {
      if (!first) s += ',';
      s += g.label();
      first = false;
    }
    return s + ")";
  };
  ReportBuilder b("qwitt", rational_ring(), witness_cap);
  b.begin_clause("super-skew-symmetry");
  b.begin_clause("hom-super-jacobi");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      const WittGen &x = gens[i], &y = gens[j];
      WittElement d = w.bracket(x, y);
      const int s = koszul_int(x.parity(), y.parity());
      for (const auto& [g, c] : w.bracket(y, x)) QWitt::accumulate(d, g, s > 0 ? c : -c);
      if (!d.empty()) b.add_failure_terms("super-skew-symmetry", terms(d), {i, j}, label({x, y}), false);
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const WittGen &x = gens[i], &y = gens[j], &z = gens[k];
        const int px = x.parity(), py = y.parity(), pz = z.parity();
        WittElement d;
        auto add = [&](int sign, const WittGen& a, const WittGen& u, const WittGen& v) {
          for (const auto& [g, c] : w.bracket(w.twist(single(a)), w.bracket(u, v)))
            QWitt::accumulate(d, g, sign > 0 ? c : -c);
        };
        add(koszul_int(px, pz), x, y, z);
        add(koszul_int(pz, py), z, x, y);
        add(koszul_int(py, px), y, z, x);
        if (!d.empty()) b.add_failure_terms("hom-super-jacobi", terms(d), {i, j, k}, label({x, y, z}), false);
      }
    }
  }
  CheckReport r = b.finish();
  r.notes.push_back("window: indices 0.." + std::to_string(max_index) + ", q = " + w.q().to_string());
  return r;
}

}  // namespace homalg
