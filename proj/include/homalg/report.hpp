#pragma once

// Check verdicts, witnesses and extracted parameter constraints.

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "homalg/algebra.hpp"

namespace homalg {

enum class Verdict { holds, fails, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

struct DefectTerm {
  std::size_t index;
  std::string label;
  Scalar coeff;
};

struct Witness {
  std::string clause;
  std::vector<std::size_t> tuple;  // empty for generic witnesses
  std::string label;               // "(e1,e1,e3)" or "generic(x,y)"
  bool generic = false;
  std::vector<DefectTerm> defect;

  Scalar coeff(std::size_t index) const {
    for (const auto& t : defect) {
      if (t.index == index) return t.coeff;
    }
    return Scalar();
  }
};

struct ClauseResult {
  std::string name;
  Verdict verdict = Verdict::holds;
  std::size_t failures = 0;  // number of failing tuples, independent of the cap
};

struct CrossCheck {
  std::string name;
  Verdict verdict;
  bool agrees;
};

struct CheckReport {
  std::string identity;
  Verdict verdict = Verdict::holds;
  std::string reason;
  std::vector<ClauseResult> clauses;
  std::vector<Witness> witnesses;
  std::vector<std::string> parameters;   // names the constraint polynomials use
  std::vector<Polynomial> constraints;   // integer-primitive, sorted, unique
  std::vector<CrossCheck> cross_checks;
  std::vector<std::string> notes;

  bool holds() const { return verdict == Verdict::holds; }
  bool fails() const { return verdict == Verdict::fails; }

  const ClauseResult* clause(const std::string& name) const {
    for (const auto& c : clauses) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  Verdict clause_verdict(const std::string& name) const {
    const ClauseResult* c = clause(name);
    return c ? c->verdict : Verdict::not_applicable;
  }

  const Witness* find_witness(const std::vector<std::size_t>& tuple,
                              const std::string& clause_name = "") const {
    for (const auto& w : witnesses) {
      if (w.tuple == tuple && (clause_name.empty() || w.clause == clause_name)) return &w;
    }
    return nullptr;
  }

  std::vector<std::string> constraint_strings() const {
    std::vector<std::string> out;
    for (const auto& p : constraints) out.push_back(render_polynomial(p, parameters));
    return out;
  }

  bool has_constraint(const std::string& text) const {
    auto cs = constraint_strings();
    return std::find(cs.begin(), cs.end(), text) != cs.end();
  }

  static CheckReport not_applicable(const std::string& identity, const std::string& why) {
    CheckReport r;
    r.identity = identity;
    r.verdict = Verdict::not_applicable;
    r.reason = why;
    return r;
  }
};

/// Renders a coefficient so it can prefix a basis label.
inline std::string coefficient_prefix(const Scalar& c) {
  if (c.is_one()) return "";
  if ((-c).is_one()) return "-";
  const std::string s = c.to_string();
  if (c.is_polynomial() && c.numerator().size() == 1) return s + "*";
  return "(" + s + ")*";
}

inline std::string render_defect(const std::vector<DefectTerm>& d) {
  if (d.empty()) return "0";
  std::string out;
  for (std::size_t m = 0; m < d.size(); ++m) {
    std::string term = coefficient_prefix(d[m].coeff) + d[m].label;
    if (m == 0) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

inline std::string render_element(const HomAlgebra& a, const Element& x) {
  std::vector<DefectTerm> d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.coords[i].is_zero()) d.push_back({i, a.basis[i], x.coords[i]});
  }
  return render_defect(d);
}

/// Accumulates clause results, capped witnesses and the full constraint set.
class ReportBuilder {
 public:
  ReportBuilder(std::string identity, const RingPtr& base, std::size_t cap = 16)
      : base_(base), cap_(cap) {
    report_.identity = std::move(identity);
    report_.parameters = base->parameters;
  }

  void begin_clause(const std::string& name) {
    for (const auto& c : report_.clauses) {
      if (c.name == name) return;
    }
    report_.clauses.push_back({name, Verdict::holds, 0});
  }

  /// Records a nonzero defect; coordinates may live in an extension of the base ring.
  void add_failure(const std::string& clause, const HomAlgebra& a, const Element& defect,
                   std::vector<std::size_t> tuple, std::string label, bool generic) {
    std::vector<DefectTerm> d;
    for (std::size_t i = 0; i < defect.size(); ++i) {
      if (!defect.coords[i].is_zero()) d.push_back({i, a.basis[i], defect.coords[i]});
    }
    add_failure_terms(clause, std::move(d), std::move(tuple), std::move(label), generic);
  }

  /// Same, with the defect already expanded into labelled terms.
  void add_failure_terms(const std::string& clause, std::vector<DefectTerm> defect,
                         std::vector<std::size_t> tuple, std::string label, bool generic) {
    begin_clause(clause);
    ClauseResult* c = nullptr;
    for (auto& cl : report_.clauses) {
      if (cl.name == clause) c = &cl;
    }
    c->verdict = Verdict::fails;
    ++c->failures;
    for (const auto& t : defect) add_constraints(t.coeff);
    if (c->failures > cap_) return;
    report_.witnesses.push_back(Witness{clause, std::move(tuple), std::move(label), generic, std::move(defect)});
  }

  void note(std::string s) { report_.notes.push_back(std::move(s)); }

  void cross_check(std::string name, Verdict v, bool agrees) {
    report_.cross_checks.push_back({std::move(name), v, agrees});
    if (!agrees) report_.notes.push_back("cross-check disagreement: " + report_.cross_checks.back().name);
  }

  CheckReport finish() {
    report_.verdict = Verdict::holds;
    for (const auto& c : report_.clauses) {
      if (c.verdict == Verdict::fails) report_.verdict = Verdict::fails;
    }
    report_.constraints.assign(constraints_.begin(), constraints_.end());
    std::sort(report_.constraints.begin(), report_.constraints.end(),
              [](const Polynomial& a, const Polynomial& b) { return b < a; });
    // stable witness order: clause order, then tuple
    std::vector<std::string> order;
    for (const auto& c : report_.clauses) order.push_back(c.name);
    std::stable_sort(report_.witnesses.begin(), report_.witnesses.end(),
                     [&](const Witness& x, const Witness& y) {
                       auto px = std::find(order.begin(), order.end(), x.clause) - order.begin();
                       auto py = std::find(order.begin(), order.end(), y.clause) - order.begin();
                       if (px != py) return px < py;
                       return x.tuple < y.tuple;
                     });
    return report_;
  }

 private:
  struct PolyLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const { return a < b; }
  };

  // Numerator coefficients with respect to adjoined indeterminates, restricted
  // to the base parameters and made integer-primitive.
  void add_constraints(const Scalar& s) {
    const std::size_t nb = base_->nvars();
    const Polynomial& num = s.numerator();
    if (num.nvars() == nb) {
      constraints_.insert(num.primitive_integer());
      return;
    }
    std::map<Exponents, std::vector<Term>> groups;
    for (const auto& t : num.terms()) {
      Exponents tail(t.exps.begin() + static_cast<std::ptrdiff_t>(nb), t.exps.end());
      Term head{Exponents(t.exps.begin(), t.exps.begin() + static_cast<std::ptrdiff_t>(nb)), 0, t.coeff};
      for (auto e : head.exps) head.degree += e;
      groups[tail].push_back(std::move(head));
    }
    for (auto& [tail, terms] : groups) {
      Polynomial p = Polynomial::from_terms(nb, std::move(terms));
      if (!p.is_zero()) constraints_.insert(p.primitive_integer());
    }
  }

  RingPtr base_;
  std::size_t cap_;
  CheckReport report_;
  std::set<Polynomial, PolyLess> constraints_;
};

/// Merges several reports into one compound report (clauses concatenated).
inline CheckReport merge_reports(const std::string& identity, const RingPtr& base,
                                 const std::vector<CheckReport>& parts) {
  CheckReport r;
  r.identity = identity;
  r.parameters = base->parameters;
  std::vector<Polynomial> all;
  for (const auto& p : parts) {
    for (const auto& c : p.clauses) r.clauses.push_back(c);
    for (const auto& w : p.witnesses) r.witnesses.push_back(w);
    for (const auto& c : p.constraints) all.push_back(c);
    for (const auto& x : p.cross_checks) r.cross_checks.push_back(x);
    for (const auto& n : p.notes) r.notes.push_back(n);
    if (p.verdict == Verdict::fails) r.verdict = Verdict::fails;
  }
  std::sort(all.begin(), all.end(), [](const Polynomial& a, const Polynomial& b) { return b < a; });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  r.constraints = std::move(all);
  return r;
}

inline std::string render_text(const CheckReport& r) {
  std::string out = r.identity + ": ";
  switch (r.verdict) {
    case Verdict::holds: out += "HOLDS"; break;
    case Verdict::fails: out += "FAILS"; break;
    case Verdict::not_applicable: out += "NOT APPLICABLE (" + r.reason + ")"; break;
  }
  out += "\n";
  if (r.clauses.size() > 1 || r.verdict == Verdict::fails) {
    for (const auto& c : r.clauses) {
      out += "  clause " + c.name + ": " + to_string(c.verdict);
      if (c.failures != 0) out += " (" + std::to_string(c.failures) + " failing tuples)";
      out += "\n";
    }
  }
  for (const auto& w : r.witnesses) {
    out += "  witness [" + w.clause + "] " + w.label + ": " + render_defect(w.defect) + "\n";
  }
  if (!r.constraints.empty()) {
    out += "  constraints:\n";
    for (const auto& s : r.constraint_strings()) out += "    " + s + "\n";
  }
  for (const auto& x : r.cross_checks) {
    out += "  cross-check " + x.name + ": " + to_string(x.verdict) + (x.agrees ? " (agrees)" : " (DISAGREES)") + "\n";
  }
  for (const auto& n : r.notes) out += "  note: " + n + "\n";
  return out;
}

inline nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["verdict"] = to_string(r.verdict);
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["clauses"] = nlohmann::ordered_json::array();
  for (const auto& c : r.clauses) {
    j["clauses"].push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"failures", c.failures}});
  }
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json jw;
    jw["clause"] = w.clause;
    jw["tuple"] = w.tuple;
    jw["label"] = w.label;
    jw["generic"] = w.generic;
    jw["defect"] = nlohmann::ordered_json::array();
    for (const auto& t : w.defect) {
      jw["defect"].push_back({{"index", t.index}, {"label", t.label}, {"coeff", t.coeff.to_string()}});
    }
    j["witnesses"].push_back(std::move(jw));
  }
  j["constraints"] = r.constraint_strings();
  j["cross_checks"] = nlohmann::ordered_json::array();
  for (const auto& x : r.cross_checks) {
    j["cross_checks"].push_back({{"name", x.name}, {"verdict", to_string(x.verdict)}, {"agrees", x.agrees}});
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace homalg
