#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "homalg/catalog.hpp"
#include "oracle.hpp"

using namespace homalg;

namespace {

HomAlgebra entry(const std::string& n) { return instantiate(n).def.algebra; }

Scalar expr(const std::string& s, const RingPtr& r) { return parse_scalar(s, r); }

/// Small algebra over Q from a list of (i, j, k, coefficient).
HomAlgebra small(std::size_t n, std::vector<std::tuple<int, int, int, int>> table) {
  HomAlgebra a;
  a.name = "small";
  for (std::size_t i = 0; i < n; ++i) a.basis.push_back("e" + std::to_string(i + 1));
  a.product = StructureTensor(a.ring, n);
  for (const auto& [i, j, k, c] : table)
    a.product.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k),
                  Scalar::rational(c));
  a.twist = Matrix::identity(a.ring, n);
  return a;
}

bool single(const Witness* w, std::size_t index, const Scalar& c) {
  return w != nullptr && w->defect.size() == 1 && w->defect[0].index == index && w->defect[0].coeff == c;
}

}  // namespace

TEST(HomAssociator, Assoc3Examples) {
  const HomAlgebra a = entry("assoc3");
  EXPECT_TRUE(hom_associator(a, a.e(0), a.e(0), a.e(2)).is_zero());
  const HomAlgebra id = a.with_identity_twist();
  // as(e1,e1,e3) = μ(e1, b e3) − μ(a e1, e3) = (b² − ab) e3
  Element want = Element::zero(id.ring, 3);
  want.coords[2] = expr("b^2 - a*b", id.ring);
  EXPECT_EQ(hom_associator(id, id.e(0), id.e(0), id.e(2)), want);
}

TEST(HomAssociator, AssociativeProductWithIdentityTwistVanishes) {
  const HomAlgebra c = entry("clifford-super2").with_identity_twist();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) EXPECT_TRUE(hom_associator(c, c.e(i), c.e(j), c.e(k)).is_zero());
}

TEST(HomAssociator, AgreesWithDenseOracle) {
  for (const std::string n : {"assoc3", "homlie3", "alt4-1", "homjordan3", "octonions"}) {
    const HomAlgebra a = entry(n);
    const oracle::Dense d(a);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t k = 0; k < a.dim(); ++k) {
          const Element h = hom_associator(a, a.e(i), a.e(j), a.e(k));
          const auto o = d.associator(i, j, k);
          for (std::size_t m = 0; m < a.dim(); ++m) ASSERT_EQ(h.coords[m], o[m]) << n;
        }
  }
}

TEST(Multiplicative, Examples) {
  const HomAlgebra a = entry("assoc3");
  const CheckReport r = check_multiplicative(a);
  ASSERT_TRUE(r.fails());
  EXPECT_TRUE(single(r.find_witness({0, 0}), 0, expr("a^2 - a^3", a.ring)));
  EXPECT_TRUE(check_multiplicative(a.with_identity_twist()).holds());
  const LinearMap f = *instantiate("oct-endo", {{"a", "-1"}, {"b", "1"}, {"c", "-1"}}).map;
  EXPECT_TRUE(check_multiplicative(yau_twist(entry("octonions"), f)).holds());
}

TEST(HomAssociative, Examples) {
  const HomAlgebra a = entry("assoc3");
  EXPECT_TRUE(check_hom_associative(a).holds());
  const CheckReport r = check_hom_associative(a.with_identity_twist());
  ASSERT_TRUE(r.fails());
  EXPECT_TRUE(single(r.find_witness({0, 0, 2}), 2, expr("b^2 - a*b", a.ring)));
  const HomAlgebra m = matrix_lift(a, 2);
  EXPECT_EQ(m.dim(), 12u);
  EXPECT_TRUE(check_hom_associative(m).holds());
}

TEST(HomFlexible, Examples) {
  EXPECT_TRUE(check_hom_flexible(entry("assoc3")).holds());
  EXPECT_TRUE(check_hom_flexible(entry("octonions")).holds());
  const HomAlgebra s = small(2, {{0, 0, 1, 1}, {0, 1, 0, 1}});
  const CheckReport r = check_hom_flexible(s);
  ASSERT_TRUE(r.fails());
  EXPECT_TRUE(single(r.find_witness({0, 0, 0}), 0, Scalar::rational(1)));
  for (const auto& c : r.cross_checks) EXPECT_TRUE(c.agrees) << c.name;
}

TEST(HomDialgebra, Examples) {
  const HomAlgebra a = entry("assoc3");
  EXPECT_TRUE(check_hom_dialgebra(HomDialgebra{a, a.product}).holds());
  const HomAlgebra o = entry("octonions");
  const CheckReport r = check_hom_dialgebra(HomDialgebra{o, o.product});
  ASSERT_TRUE(r.fails());
  EXPECT_NE(r.find_witness({1, 2, 3}), nullptr);
  const CheckReport op = check_hom_dialgebra(HomDialgebra{a, opposite_algebra(a).product});
  EXPECT_TRUE(op.fails());
  EXPECT_FALSE(op.constraints.empty());
}

TEST(HomDialgebra, CatalogDialgebraHolds) {
  EXPECT_TRUE(check_identity(instantiate("assoc3-dialgebra").def, "hom-dialgebra").holds());
}

TEST(HomLeibniz, Examples) {
  EXPECT_TRUE(check_hom_leibniz(entry("homlie3")).holds());
  const HomAlgebra a = entry("assoc3");
  const HomAlgebra l = leibniz_from_dialgebra(HomDialgebra{a, a.product});
  EXPECT_TRUE(check_hom_leibniz(l).holds());
  EXPECT_TRUE(check_hom_leibniz(small(3, {})).holds());
}

TEST(HomLie, Examples) {
  const HomAlgebra h = entry("homlie3");
  EXPECT_TRUE(check_hom_lie(h).holds());
  const CheckReport r = check_hom_lie(h.with_identity_twist());
  ASSERT_TRUE(r.fails());
  EXPECT_EQ(r.clause_verdict("skew-symmetry"), Verdict::holds);
  EXPECT_EQ(r.clause_verdict("hom-jacobi"), Verdict::fails);
  EXPECT_TRUE(single(r.find_witness({0, 1, 2}, "hom-jacobi"), 1, expr("a*c", h.ring)));
  EXPECT_TRUE(check_hom_lie(entry("jackson-sl2")).holds());
  EXPECT_EQ(check_hom_lie(entry("osp12")).verdict, Verdict::not_applicable);
}

TEST(HomLie, JacobiWitnessesMatchOracle) {
  const HomAlgebra h = entry("homlie3").with_identity_twist();
  const oracle::Dense d(h);
  const CheckReport r = check_hom_lie(h);
  for (const auto& w : r.witnesses) {
    if (w.clause != "hom-jacobi") continue;
    const auto o = d.jacobiator(w.tuple[0], w.tuple[1], w.tuple[2]);
    for (std::size_t m = 0; m < h.dim(); ++m) EXPECT_EQ(w.coeff(m).is_zero() ? Scalar::zero(h.ring) : w.coeff(m), o[m]);
  }
}

TEST(HomLieSuper, Examples) {
  const HomAlgebra o = entry("osp12");
  EXPECT_TRUE(check_hom_lie_super(o).holds());
  const HomAlgebra id = o.with_identity_twist();
  const CheckReport r = check_hom_lie_super(id);
  ASSERT_TRUE(r.fails());
  const oracle::Dense d(id);
  // (F,F,H): basis H, X, Y, F, G
  const auto ffh = d.super_jacobiator(3, 3, 0);
  EXPECT_EQ(ffh[2], expr("4*(lambda-1)/lambda^4", id.ring));
  const auto xyh = d.super_jacobiator(1, 2, 0);
  EXPECT_EQ(xyh[0], expr("2*(1-lambda^4)/lambda^2", id.ring));
  for (int t = 0; t < 10; ++t) {
    const auto b = fixtures::admissible_bindings(catalog_entry("abelian-super2"));
    EXPECT_TRUE(check_hom_lie_super(instantiate("abelian-super2", b).def.algebra).holds());
  }
}

TEST(HomLieSuper, WitnessesMatchOracle) {
  const HomAlgebra id = entry("osp12").with_identity_twist();
  const oracle::Dense d(id);
  const CheckReport r = check_hom_lie_super(id);
  for (const auto& w : r.witnesses) {
    if (w.tuple.size() != 3) continue;
    const auto o = d.super_jacobiator(w.tuple[0], w.tuple[1], w.tuple[2]);
    for (std::size_t m = 0; m < id.dim(); ++m)
      EXPECT_EQ(w.coeff(m).is_zero() ? Scalar::zero(id.ring) : w.coeff(m), o[m]) << w.label;
  }
}

TEST(GHomAssociative, Examples) {
  const HomAlgebra a = entry("assoc3");
  EXPECT_TRUE(check_g_hom_associative(a, Subgroup::G1).holds());
  EXPECT_TRUE(check_g_hom_associative(commutator_algebra(a), Subgroup::G5).holds());
  EXPECT_TRUE(check_g_hom_associative(a, Subgroup::G6).holds());
  EXPECT_TRUE(check_g_hom_associative(entry("clifford-super2"), Subgroup::G1).holds());
  EXPECT_TRUE(check_g_hom_associative(entry("osp12"), Subgroup::G6).holds());
  HomAlgebra z = entry("osp12");
  z.product = StructureTensor(z.ring, z.dim());
  for (int g = 1; g <= 6; ++g) EXPECT_TRUE(check_g_hom_associative(z, static_cast<Subgroup>(g)).holds());
}

TEST(GHomAssociative, SubgroupMembers) {
  EXPECT_EQ(subgroup_members(Subgroup::G1).size(), 1u);
  EXPECT_EQ(subgroup_members(Subgroup::G4), (std::vector<Perm>{Perm::id, Perm::s2s1s2}));
  EXPECT_EQ(subgroup_members(Subgroup::G5).size(), 3u);
  for (Perm p : subgroup_members(Subgroup::G5)) EXPECT_EQ(perm_signature(p), 1);
  EXPECT_EQ(subgroup_members(Subgroup::G6).size(), 6u);
}

TEST(HomLieAdmissible, Examples) {
  EXPECT_TRUE(check_hom_lie_admissible(entry("assoc3")).holds());
  EXPECT_TRUE(check_hom_lie_admissible(entry("homlie3")).holds());
  const HomAlgebra s = small(3, {{0, 1, 0, 1}, {1, 2, 1, 1}});
  const CheckReport r = check_hom_lie_admissible(s);
  ASSERT_TRUE(r.fails());
  // cyclic sum of [x,[y,z]] in the commutator bracket; the [[x,y],z] form gives −e1
  const oracle::Dense d(commutator_algebra(s));
  const auto j = d.jacobiator(0, 1, 2);
  EXPECT_EQ(j[0], Scalar::rational(1));
  EXPECT_TRUE(single(r.find_witness({0, 1, 2}), 0, Scalar::rational(1)));
  for (const auto& c : r.cross_checks) EXPECT_TRUE(c.agrees);
}

TEST(HomAlternative, Examples) {
  const HomAlgebra a = entry("alt4-1");
  EXPECT_TRUE(check_hom_alternative(a, Side::left).holds());
  EXPECT_TRUE(check_hom_alternative(a, Side::right).holds());
  const HomAlgebra t = yau_twist(entry("octonions"), *instantiate("oct-endo").map, false).with_identity_twist();
  const CheckReport r = check_hom_alternative(t, Side::left);
  ASSERT_TRUE(r.fails());
  EXPECT_TRUE(single(r.find_witness({0, 0, 1}), 1, expr("a^2 - a", t.ring)));
  for (const auto& c : r.cross_checks) EXPECT_TRUE(c.agrees);
}

TEST(HomAlternative, SignedTwistOfOctonionsHolds) {
  const LinearMap f = *instantiate("oct-endo", {{"a", "-1"}, {"b", "-1"}, {"c", "1"}}).map;
  EXPECT_TRUE(check_hom_alternative(yau_twist(entry("octonions"), f), Side::both).holds());
}

TEST(HomJordan, Examples) {
  EXPECT_TRUE(check_hom_jordan(entry("homjordan3")).holds());
  EXPECT_TRUE(check_hom_jordan(pm_algebra(entry("assoc3"), PlusMinus::plus)).holds());
  const CheckReport r = check_hom_jordan(commutator_algebra(entry("assoc3")));
  ASSERT_TRUE(r.fails());
  EXPECT_EQ(r.clause_verdict("commutativity"), Verdict::fails);
}

TEST(HomNovikov, Examples) {
  EXPECT_TRUE(check_hom_novikov(small(3, {{0, 0, 0, 1}, {1, 1, 1, 1}, {2, 2, 2, 1}})).holds());
  const HomAlgebra a = entry("assoc3");
  const CheckReport r = check_hom_novikov(a);
  ASSERT_TRUE(r.fails());
  EXPECT_TRUE(single(r.find_witness({1, 1, 2}, "novikov"), 2, expr("a*b^2", a.ring)));
  const LinearMap f = *instantiate("novikov2-endo", {{"p", "3"}, {"q", "5"}}).map;
  const HomAlgebra n = entry("novikov2");
  ASSERT_TRUE(is_endomorphism(f, n).ok);
  EXPECT_TRUE(check_hom_novikov(yau_twist(n, f)).holds());
}

TEST(HomPoisson, Examples) {
  const HomAlgebra h = entry("homlie3");
  HomAlgebra zero = h;
  zero.product = StructureTensor(h.ring, 3);
  EXPECT_TRUE(check_hom_poisson(HomPoissonStructure{zero, h.product}).holds());
  const HomAlgebra d = small(3, {{0, 0, 0, 1}, {1, 1, 1, 1}, {2, 2, 2, 1}});
  EXPECT_TRUE(check_hom_poisson(HomPoissonStructure{d, StructureTensor(d.ring, 3)}).holds());
  const CheckReport r = check_identity(instantiate("homPoisson3").def, "hom-poisson");
  EXPECT_TRUE(r.fails());
  EXPECT_FALSE(r.constraints.empty());
  for (const auto& c : r.cross_checks) EXPECT_TRUE(c.agrees);
  EXPECT_TRUE(check_identity(instantiate("homPoisson3-pinned").def, "hom-poisson").holds());
}

TEST(Constraints, Examples) {
  const Definition a{entry("assoc3").with_identity_twist(), {}, {}};
  const CheckReport r = check_identity(a, "hom-associative");
  EXPECT_TRUE(r.has_constraint("a*b - b^2"));
  const Definition h{entry("homlie3").with_identity_twist(), {}, {}};
  EXPECT_TRUE(check_identity(h, "hom-lie").has_constraint("a*c"));
  EXPECT_TRUE(extract_constraints(Definition{entry("assoc3"), {}, {}}, "hom-associative").empty());
  EXPECT_THROW(extract_constraints(a, "hom-nonsense"), DefinitionError);
}

TEST(Constraints, Multiplicative) {
  const CheckReport r = check_identity(Definition{entry("assoc3"), {}, {}}, "multiplicative");
  EXPECT_EQ(r.constraint_strings(), (std::vector<std::string>{"a^3 - a^2", "a*b^2 - b^2"}));
}

TEST(Aliases, VinbergAndPreLie) {
  const Definition d{entry("novikov2"), {}, {}};
  const CheckReport v = check_identity(d, "hom-vinberg");
  EXPECT_EQ(v.identity, "hom-vinberg");
  EXPECT_EQ(v.verdict, check_g_hom_associative(d.algebra, Subgroup::G2).verdict);
  EXPECT_EQ(check_identity(d, "hom-pre-lie").verdict, check_g_hom_associative(d.algebra, Subgroup::G3).verdict);
}

TEST(Report, InvariantsOnCatalog) {
  for (const auto& s : fixtures::catalog_samples(1)) {
    for (const auto& id : default_identities(s.def)) {
      const CheckReport r = check_identity(s.def, id);
      if (r.verdict == Verdict::not_applicable) continue;
      EXPECT_EQ(r.holds(), r.witnesses.empty()) << s.label << " " << id;
      EXPECT_EQ(r.holds(), r.constraints.empty()) << s.label << " " << id;
      for (const auto& w : r.witnesses) EXPECT_FALSE(w.defect.empty()) << s.label << " " << id;
      for (const auto& w : r.witnesses)
        for (const auto& t : w.defect) EXPECT_FALSE(t.coeff.is_zero());
    }
  }
}

TEST(Report, WitnessOrderIsLexicographicPerClause) {
  const CheckReport r = check_hom_lie(entry("homlie3").with_identity_twist());
  std::map<std::string, std::vector<std::vector<std::size_t>>> by;
  for (const auto& w : r.witnesses) by[w.clause].push_back(w.tuple);
  for (const auto& [c, ts] : by) EXPECT_TRUE(std::is_sorted(ts.begin(), ts.end())) << c;
}

TEST(Report, WitnessCapKeepsCountsAndConstraints) {
  CheckOptions o;
  o.witness_cap = 2;
  const HomAlgebra a = entry("assoc3");
  const CheckReport capped = check_multiplicative(a, o);
  const CheckReport full = check_multiplicative(a);
  EXPECT_EQ(capped.witnesses.size(), 2u);
  EXPECT_EQ(capped.clause("multiplicative")->failures, full.clause("multiplicative")->failures);
  EXPECT_EQ(capped.constraint_strings(), full.constraint_strings());
}

TEST(Report, FirstFailureKeepsVerdict) {
  CheckOptions o;
  o.first_failure = true;
  for (const auto& s : fixtures::catalog_samples(0))
    for (const auto& id : default_identities(s.def))
      EXPECT_EQ(check_identity(s.def, id, o).verdict, check_identity(s.def, id).verdict) << s.label << " " << id;
}

TEST(Report, RenderingIsDeterministic) {
  const Definition d{entry("assoc3"), {}, {}};
  const CheckReport a = check_identity(d, "multiplicative");
  const CheckReport b = check_identity(d, "multiplicative");
  EXPECT_EQ(render_text(a), render_text(b));
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  const auto j = to_json(a);
  EXPECT_EQ(j["identity"], "multiplicative");
  EXPECT_EQ(j["verdict"], "fails");
  EXPECT_EQ(j["constraints"][0], "a^3 - a^2");
}
