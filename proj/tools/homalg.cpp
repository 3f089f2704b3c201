// homalg: check identities, build derived algebras, browse the catalog.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "homalg/catalog.hpp"
#include "homalg/io.hpp"
#include "homalg/qwitt.hpp"

using namespace homalg;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

Definition load_definition(const std::string& path, bool strict) {
  try {
    return read_definition_text(read_source(path), strict);
  } catch (const FormatError& e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

LinearMap load_map(const std::string& path) {
  try {
    return read_map_text(read_source(path));
  } catch (const FormatError& e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

std::map<std::string, std::string> parse_bindings(const std::vector<std::string>& items) {
  std::map<std::string, std::string> b;
  for (const auto& s : items) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("binding '" + s + "' must look like name=value");
    b[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return b;
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_check(const std::string& file, std::vector<std::string> ids, bool all, const std::string& override_twist,
              bool constraints, const std::string& format, bool strict, bool generic, std::size_t cap) {
  Definition d = load_definition(file, strict);
  if (!override_twist.empty()) {
    if (override_twist != "identity") throw UsageError("--override-twist only accepts 'identity'");
    d.algebra = d.algebra.with_identity_twist();
  }
  if (all) {
    for (const auto& id : default_identities(d)) {
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
  }
  if (ids.empty()) throw UsageError("no identity requested (use --identity NAME or --all)");
  for (const auto& id : ids) {
    if (!is_identity_name(id)) throw UsageError("unknown identity '" + id + "'");
  }
  CheckOptions o;
  o.witness_cap = cap;
  o.generic = generic;
  std::vector<CheckReport> reports;
  for (const auto& id : ids) reports.push_back(check_identity(d, id, o));
  bool failed = false;
  for (const auto& r : reports) failed = failed || r.fails();
  if (format == "json") {
    nlohmann::ordered_json j;
    j["algebra"] = d.algebra.name;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    print_json(j);
  } else if (constraints) {
    for (const auto& r : reports) {
      if (reports.size() > 1) std::cout << "# " << r.identity << "\n";
      for (const auto& c : r.constraint_strings()) std::cout << c << "\n";
    }
  } else {
    for (const auto& r : reports) std::cout << render_text(r);
  }
  return failed ? kFails : kHolds;
}

int cmd_twist(const std::string& file, const std::string& endo_file, bool force) {
  const Definition d = load_definition(file, false);
  const LinearMap f = load_map(endo_file);
  if (f.matrix.rows() != d.algebra.dim() || f.matrix.cols() != d.algebra.dim())
    throw UsageError(endo_file + ": map dimension does not match the algebra");
  const MorphismResult m = is_morphism(f, d.algebra, d.algebra, MorphismMode::product_only);
  if (!m.ok) {
    std::cerr << "homalg: precondition failed: " << m.message << " at " << tuple_label(d.algebra, m.tuple)
              << ", difference " << render_element(d.algebra.over(join_rings(d.algebra.ring, f.matrix.ring())), m.defect)
              << "\n";
    if (!force) return kFails;
  }
  Definition t{yau_twist(d.algebra, f, false), {}, {}};
  print_json(write_definition(t));
  return m.ok ? kHolds : kFails;
}

int cmd_construct(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("construct needs a kind and a file");
  const std::string& kind = args[0];
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw UsageError("construct " + kind + ": wrong number of arguments");
  };
  Definition out;
  if (kind == "plus" || kind == "minus" || kind == "commutator" || kind == "opposite" || kind == "leibniz") {
    need(2);
    const Definition d = load_definition(args[1], false);
    if (kind == "plus") out.algebra = pm_algebra(d.algebra, PlusMinus::plus);
    if (kind == "minus") out.algebra = pm_algebra(d.algebra, PlusMinus::minus);
    if (kind == "commutator") out.algebra = commutator_algebra(d.algebra);
    if (kind == "opposite") out.algebra = opposite_algebra(d.algebra);
    if (kind == "leibniz") {
      if (!d.right) throw UsageError(args[1] + ": leibniz needs a dialgebra (products_left/products_right)");
      out.algebra = leibniz_from_dialgebra(HomDialgebra{d.algebra, *d.right});
    }
  } else if (kind == "matrix-lift") {
    need(3);
    std::size_t m = 0;
    try {
      m = std::stoul(args[1]);
    } catch (const std::exception&) {
      throw UsageError("matrix-lift size must be a positive integer");
    }
    if (m == 0) throw UsageError("matrix-lift size must be a positive integer");
    out.algebra = matrix_lift(load_definition(args[2], false).algebra, m);
  } else if (kind == "transport") {
    need(3);
    const LinearMap f = load_map(args[1]);
    const Definition d = load_definition(args[2], false);
    try {
      out.algebra = transport_structure(d.algebra, f.matrix);
    } catch (const DivisionError& e) {
      throw UsageError(args[1] + ": " + e.what());
    } catch (const DefinitionError& e) {
      throw UsageError(args[1] + ": " + e.what());
    }
    for (const auto& n : out.algebra.notes) std::cerr << "homalg: " << n << "\n";
  } else {
    throw UsageError("unknown construction '" + kind + "'");
  }
  print_json(write_definition(out));
  return kHolds;
}

int cmd_catalog_list() {
  for (const auto& e : catalog_entries()) {
    std::string dim = "-";
    if (e.kind != EntryKind::qwitt) {
      const CatalogObject o = e.build();
      dim = std::to_string(o.map ? o.map->source_dim : o.def.algebra.dim());
    }
    std::string params;
    for (const auto& p : e.parameters) params += (params.empty() ? "" : ",") + p;
    std::cout << e.name << "\t" << to_string(e.kind) << "\tdim " << dim << "\tparameters (" << params << ")\t"
              << e.citation << "\n";
  }
  return kHolds;
}

int cmd_catalog_export(const std::string& name, const std::vector<std::string>& binds) {
  const CatalogEntry& e = catalog_entry(name);
  if (e.kind == EntryKind::qwitt) throw UsageError("qwitt is infinite-dimensional; use the qwitt command");
  const CatalogObject o = instantiate(name, parse_bindings(binds));
  if (o.map) {
    print_json(write_map(*o.map));
  } else {
    print_json(write_definition(o.def));
  }
  return kHolds;
}

int cmd_catalog_verify(const std::string& only) {
  bool ok = true;
  for (const auto& e : catalog_entries()) {
    if (!only.empty() && e.name != only) continue;
    for (const auto& x : e.expected) {
      const CheckReport r = evaluate_expected(e, x);
      const bool pass = r.verdict == x.verdict;
      ok = ok && pass;
      std::cout << (pass ? "PASS " : "FAIL ") << e.name << " " << x.identity;
      if (!x.subject.empty()) std::cout << " [" << x.subject << "]";
      std::cout << ": expected " << to_string(x.verdict) << ", computed " << to_string(r.verdict) << " (" << x.citation
                << ")\n";
      if (!x.discrepancy.empty()) std::cout << "  finding: " << x.discrepancy << "\n";
    }
  }
  if (only.empty() || only == "alt4-endo1" || only == "alt4-endo2") {
    for (const auto& m : compare_alt4_tables())
      std::cout << "  table " << m.table << " " << m.entry << ": printed " << m.printed << ", computed " << m.computed << "\n";
  }
  if (only.empty() || only == "oct-endo") {
    for (const auto& m : compare_octonion_table())
      std::cout << "  table " << m.table << " " << m.entry << ": printed " << m.printed << ", computed " << m.computed << "\n";
  }
  if (only.empty() || only == "homjordan3") {
    for (const auto& m : compare_homjordan_table())
      std::cout << "  table " << m.table << " " << m.entry << ": printed " << m.printed << ", used " << m.computed << "\n";
  }
  return ok ? kHolds : kFails;
}

int cmd_qwitt(const std::string& q, long n, const std::string& format) {
  mpq_class qv;
  try {
    const Scalar s = parse_scalar(q, rational_ring());
    qv = s.rational_value();
  } catch (const Error& e) {
    throw UsageError("--q: " + std::string(e.what()));
  }
  CheckReport r;
  try {
    r = check_qwitt(qv, n);
  } catch (const DefinitionError& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    print_json(to_json(r));
  } else {
    std::cout << render_text(r);
  }
  return r.fails() ? kFails : kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hom-algebra identities"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "check identities of a definition file ('-' for stdin)");
  std::string file;
  std::vector<std::string> ids;
  bool all = false, constraints = false, strict = false, generic = false;
  std::string override_twist, format = "text";
  std::size_t cap = 16;
  check->add_option("file", file, "definition file")->required();
  check->add_option("--identity", ids, "identity to check (repeatable)");
  check->add_flag("--all", all, "check every applicable identity");
  check->add_option("--override-twist", override_twist, "replace the twist before checking (identity)");
  check->add_flag("--constraints", constraints, "print the constraint polynomials only");
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--strict", strict, "reject gradings the product or twist do not respect");
  check->add_flag("--generic", generic, "decide multilinear identities on generic elements");
  check->add_option("--cap", cap, "witnesses kept per clause");

  auto* twist = app.add_subcommand("twist", "Yau twist by an endomorphism file");
  std::string endo;
  bool force = false;
  twist->add_option("file", file, "definition file")->required();
  twist->add_option("endomorphism", endo, "map file")->required();
  twist->add_flag("--force", force, "emit the twist even when the map is not an endomorphism");

  auto* construct = app.add_subcommand("construct", "plus|minus|commutator|opposite|leibniz FILE, matrix-lift N FILE, transport MAP FILE");
  std::vector<std::string> cargs;
  construct->add_option("args", cargs, "construction and its arguments")->required();

  auto* catalog = app.add_subcommand("catalog", "catalog of worked examples");
  catalog->require_subcommand(1);
  auto* clist = catalog->add_subcommand("list", "list entries");
  auto* cexport = catalog->add_subcommand("export", "export an entry as a definition file");
  std::string name;
  std::vector<std::string> binds;
  cexport->add_option("name", name, "entry name")->required();
  cexport->add_option("--bind", binds, "parameter binding name=value (repeatable)");
  auto* cverify = catalog->add_subcommand("verify", "reproduce the expected verdicts");
  std::string vname;
  cverify->add_option("name", vname, "entry name");

  auto* qwitt = app.add_subcommand("qwitt", "windowed q-Witt superalgebra check");
  std::string q;
  long max_index = 8;
  std::string qformat = "text";
  qwitt->add_option("--q", q, "rational q, not 0 or 1")->required();
  qwitt->add_option("--max-index", max_index, "largest generator index");
  qwitt->add_option("--format", qformat, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(file, ids, all, override_twist, constraints, format, strict, generic, cap);
    if (*twist) return cmd_twist(file, endo, force);
    if (*construct) return cmd_construct(cargs);
    if (*clist) return cmd_catalog_list();
    if (*cexport) return cmd_catalog_export(name, binds);
    if (*cverify) {
      if (!vname.empty()) catalog_entry(vname);
      return cmd_catalog_verify(vname);
    }
    if (*qwitt) return cmd_qwitt(q, max_index, qformat);
  } catch (const UsageError& e) {
    std::cerr << "homalg: error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "homalg: error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "homalg: internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
