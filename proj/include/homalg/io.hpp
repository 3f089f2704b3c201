#pragma once

// JSON definition files: algebras, dialgebras, Poisson structures and maps.

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "homalg/checks.hpp"

namespace homalg {

/// Input error with the JSON pointer of the offending value.
class FormatError : public Error {
 public:
  FormatError(const std::string& pointer, const std::string& what)
      : Error(pointer.empty() ? what : pointer + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

namespace detail {

using json = nlohmann::json;

inline const json& member(const json& j, const std::string& key, const std::string& at) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(at, "missing field '" + key + "'");
  return j.at(key);
}

inline std::size_t index_value(const json& j, std::size_t n, const std::string& at) {
  if (!j.is_number_integer()) throw FormatError(at, "expected a basis index");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= n) throw FormatError(at, "index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

inline std::size_t key_index(const std::string& key, std::size_t n, const std::string& at) {
  std::size_t pos = 0;
  long long v = -1;
  try {
    v = std::stoll(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || key.empty()) throw FormatError(at, "result key '" + key + "' is not an index");
  if (v < 0 || static_cast<std::size_t>(v) >= n) throw FormatError(at, "index " + key + " out of range");
  return static_cast<std::size_t>(v);
}

inline Scalar coefficient(const json& j, const RingPtr& ring, const std::string& at) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<long long>());
  } else {
    throw FormatError(at, "coefficient must be a string expression");
  }
  try {
    return parse_scalar(text, ring);
  } catch (const ParseError& e) {
    throw FormatError(at, std::string(e.what()) + " (at offset " + std::to_string(e.position()) + ")");
  } catch (const Error& e) {
    throw FormatError(at, e.what());
  }
}

inline std::string escape_pointer(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

inline StructureTensor read_products(const json& arr, const RingPtr& ring, std::size_t n, const std::string& at) {
  StructureTensor t(ring, n);
  if (!arr.is_array()) throw FormatError(at, "expected an array of products");
  for (std::size_t m = 0; m < arr.size(); ++m) {
    const std::string p = at + "/" + std::to_string(m);
    const json& e = arr[m];
    const std::size_t i = index_value(member(e, "left", p), n, p + "/left");
    const std::size_t j = index_value(member(e, "right", p), n, p + "/right");
    const json& res = member(e, "result", p);
    if (!res.is_object()) throw FormatError(p + "/result", "expected an object of index: coefficient");
    for (auto it = res.begin(); it != res.end(); ++it) {
      const std::string rp = p + "/result/" + escape_pointer(it.key());
      const std::size_t k = key_index(it.key(), n, rp);
      t.add(i, j, k, coefficient(it.value(), ring, rp));
    }
  }
  return t;
}

inline Matrix read_map_rows(const json& arr, const RingPtr& ring, std::size_t rows, std::size_t cols,
                            const std::string& at) {
  Matrix m(ring, rows, cols);
  if (!arr.is_array()) throw FormatError(at, "expected an array of images");
  std::vector<bool> seen(rows, false);
  for (std::size_t r = 0; r < arr.size(); ++r) {
    const std::string p = at + "/" + std::to_string(r);
    const std::size_t i = index_value(member(arr[r], "arg", p), rows, p + "/arg");
    if (seen[i]) throw FormatError(p + "/arg", "image of index " + std::to_string(i) + " given twice");
    seen[i] = true;
    const json& res = member(arr[r], "result", p);
    if (!res.is_object()) throw FormatError(p + "/result", "expected an object of index: coefficient");
    for (auto it = res.begin(); it != res.end(); ++it) {
      const std::string rp = p + "/result/" + escape_pointer(it.key());
      const std::size_t j = key_index(it.key(), cols, rp);
      m(i, j) += coefficient(it.value(), ring, rp);
    }
  }
  return m;
}

inline RingPtr read_ring(const json& doc) {
  if (!doc.contains("scalars")) return rational_ring();
  const json& s = doc.at("scalars");
  if (!s.is_object()) throw FormatError("/scalars", "expected an object");
  RingKind kind = RingKind::rational;
  if (s.contains("kind")) {
    if (!s.at("kind").is_string()) throw FormatError("/scalars/kind", "expected a string");
    try {
      kind = ring_kind_from_string(s.at("kind").get<std::string>());
    } catch (const Error& e) {
      throw FormatError("/scalars/kind", e.what());
    }
  }
  std::vector<std::string> params;
  if (s.contains("parameters")) {
    const json& p = s.at("parameters");
    if (!p.is_array()) throw FormatError("/scalars/parameters", "expected an array of names");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!p[i].is_string()) throw FormatError("/scalars/parameters/" + std::to_string(i), "expected a name");
      params.push_back(p[i].get<std::string>());
    }
  }
  if (!s.contains("kind")) kind = params.empty() ? RingKind::rational : RingKind::fraction;
  try {
    return make_ring(kind, params);
  } catch (const Error& e) {
    throw FormatError("/scalars", e.what());
  }
}

inline nlohmann::ordered_json ring_json(const RingPtr& r) {
  nlohmann::ordered_json s;
  s["kind"] = r->kind == RingKind::fraction ? "fraction-field" : to_string(r->kind);
  s["parameters"] = r->parameters;
  return s;
}

inline nlohmann::ordered_json products_json(const StructureTensor& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const auto& cell = t.cell(i, j);
      if (cell.empty()) continue;
      nlohmann::ordered_json res = nlohmann::ordered_json::object();
      for (const auto& [k, c] : cell) res[std::to_string(k)] = c.to_string();
      arr.push_back(nlohmann::ordered_json{{"left", i}, {"right", j}, {"result", res}});
    }
  }
  return arr;
}

inline nlohmann::ordered_json map_json(const Matrix& m) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json res = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) res[std::to_string(j)] = m(i, j).to_string();
    }
    if (!res.empty()) arr.push_back(nlohmann::ordered_json{{"arg", i}, {"result", res}});
  }
  return arr;
}

inline json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // locate the byte offset as line:column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError("", "malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

}  // namespace detail

/// Reads a definition document. With strict_grading, a declared grading
/// must be respected by the product and the twist.
inline Definition read_definition(const nlohmann::json& doc, bool strict_grading = false) {
  using detail::member;
  if (!doc.is_object()) throw FormatError("", "definition must be a JSON object");
  Definition d;
  HomAlgebra& a = d.algebra;
  a.name = doc.contains("name") && doc.at("name").is_string() ? doc.at("name").get<std::string>() : "algebra";
  a.ring = detail::read_ring(doc);
  const nlohmann::json& dimj = member(doc, "dimension", "");
  if (!dimj.is_number_integer() || dimj.get<long long>() <= 0)
    throw FormatError("/dimension", "dimension must be a positive integer");
  const auto n = static_cast<std::size_t>(dimj.get<long long>());
  if (doc.contains("basis")) {
    const auto& b = doc.at("basis");
    if (!b.is_array() || b.size() != n) throw FormatError("/basis", "basis must list " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i].is_string()) throw FormatError("/basis/" + std::to_string(i), "expected a label");
      a.basis.push_back(b[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) a.basis.push_back("e" + std::to_string(i + 1));
  }
  if (doc.contains("grading")) {
    const auto& g = doc.at("grading");
    if (!g.is_array() || g.size() != n) throw FormatError("/grading", "grading must list " + std::to_string(n) + " parities");
    std::vector<int> par;
    for (std::size_t i = 0; i < n; ++i) {
      if (!g[i].is_number_integer() || (g[i].get<int>() != 0 && g[i].get<int>() != 1))
        throw FormatError("/grading/" + std::to_string(i), "parity must be 0 or 1");
      par.push_back(g[i].get<int>());
    }
    a.grading = par;
  }
  const bool dialgebra = doc.contains("products_left") || doc.contains("products_right");
  if (dialgebra) {
    a.product = detail::read_products(member(doc, "products_left", ""), a.ring, n, "/products_left");
    d.right = detail::read_products(member(doc, "products_right", ""), a.ring, n, "/products_right");
  } else {
    a.product = doc.contains("products") ? detail::read_products(doc.at("products"), a.ring, n, "/products")
                                         : StructureTensor(a.ring, n);
  }
  if (doc.contains("bracket")) d.bracket = detail::read_products(doc.at("bracket"), a.ring, n, "/bracket");
  // a missing twist is the identity
  if (doc.contains("alpha")) {
    a.twist = detail::read_map_rows(doc.at("alpha"), a.ring, n, n, "/alpha");
  } else {
    a.twist = Matrix::identity(a.ring, n);
  }
  try {
    validate_algebra(a, strict_grading);
  } catch (const DefinitionError& e) {
    throw FormatError("", e.what());
  }
  return d;
}

inline Definition read_definition_text(const std::string& text, bool strict_grading = false) {
  return read_definition(detail::parse_document(text), strict_grading);
}

inline nlohmann::ordered_json write_definition(const Definition& d) {
  const HomAlgebra& a = d.algebra;
  nlohmann::ordered_json j;
  j["name"] = a.name;
  j["scalars"] = detail::ring_json(a.ring);
  j["dimension"] = a.dim();
  j["basis"] = a.basis;
  if (a.grading) j["grading"] = *a.grading;
  if (d.right) {
    j["products_left"] = detail::products_json(a.product);
    j["products_right"] = detail::products_json(*d.right);
  } else {
    j["products"] = detail::products_json(a.product);
  }
  if (d.bracket) j["bracket"] = detail::products_json(*d.bracket);
  j["alpha"] = detail::map_json(a.twist);
  return j;
}

/// Map files share the definition header; images are listed under "map"
/// (or "alpha"). Target dimension defaults to the source dimension.
inline LinearMap read_map(const nlohmann::json& doc) {
  if (!doc.is_object()) throw FormatError("", "map must be a JSON object");
  const RingPtr ring = detail::read_ring(doc);
  const nlohmann::json& dimj = detail::member(doc, "dimension", "");
  if (!dimj.is_number_integer() || dimj.get<long long>() <= 0)
    throw FormatError("/dimension", "dimension must be a positive integer");
  const auto n = static_cast<std::size_t>(dimj.get<long long>());
  std::size_t m = n;
  if (doc.contains("target_dimension")) {
    const auto& t = doc.at("target_dimension");
    if (!t.is_number_integer() || t.get<long long>() <= 0)
      throw FormatError("/target_dimension", "dimension must be a positive integer");
    m = static_cast<std::size_t>(t.get<long long>());
  }
  const std::string key = doc.contains("map") ? "map" : "alpha";
  LinearMap f;
  f.source_dim = n;
  f.target_dim = m;
  f.matrix = detail::read_map_rows(detail::member(doc, key, ""), ring, n, m, "/" + key);
  f.name = doc.contains("name") && doc.at("name").is_string() ? doc.at("name").get<std::string>() : "f";
  return f;
}

inline LinearMap read_map_text(const std::string& text) { return read_map(detail::parse_document(text)); }

inline nlohmann::ordered_json write_map(const LinearMap& f) {
  nlohmann::ordered_json j;
  j["name"] = f.name;
  j["scalars"] = detail::ring_json(f.matrix.ring());
  j["dimension"] = f.source_dim;
  if (f.target_dim != f.source_dim) j["target_dimension"] = f.target_dim;
  j["map"] = detail::map_json(f.matrix);
  return j;
}

/// Reads a whole file, or stdin for "-".
inline std::string read_source(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

}  // namespace homalg
