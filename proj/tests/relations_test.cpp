#include <gtest/gtest.h>

#include "odsq/catalog.hpp"
#include "odsq/coloring.hpp"
#include "odsq/diagram.hpp"
#include "odsq/dsl.hpp"
#include "odsq/families.hpp"

namespace {

using namespace odsq;

// Any quandle extends to a disingquandle with projection crossing maps;
// handy for exercising classical-only systems.
OrientedDisingquandle projection_structure(const OpTable& star) {
  const int n = star.n();
  return make_oriented_disingquandle(
      star, star, MapTable::from_fn(n, [](int i, int) { return i; }),
      MapTable::from_fn(n, [](int, int j) { return j; }));
}

OpTable dihedral(int n) {
  return OpTable::from_fn(n, [n](int i, int j) { return mod_reduce(2 * j - i, n); });
}

TEST(Dsl, SingleEquation) {
  RelationSystem s = parse_relation_dsl("x*y=z");
  EXPECT_EQ(s.variable_count(), 3);
  EXPECT_EQ(s.equation_count(), 1);
  EXPECT_EQ(s.variables(), (std::vector<std::string>{"x", "y", "z"}));
}

TEST(Dsl, TrefoilLikeSystemMatchesCatalogEntry) {
  RelationSystem s = parse_relation_dsl("z*R1(x,y)=R2(x,y)\ny*z=R1(x,y)\nx*y=z");
  const CatalogEntry* e = find_catalog_entry("3_1^2");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(s.print(), e->system.print());
  EXPECT_EQ(s.variables(), (std::vector<std::string>{"z", "x", "y"}));
}

TEST(Dsl, NestedTermsRoundTripThroughThePrinter) {
  RelationSystem s = parse_relation_dsl("x*1(y*2z)=w");
  std::string printed = s.print();
  RelationSystem t = parse_relation_dsl(printed);
  EXPECT_EQ(t.print(), printed);
  EXPECT_EQ(s.variable_count(), 4);
  // left-associativity: a*b*c parses as (a*b)*c and prints without parens
  RelationSystem u = parse_relation_dsl("a*b*c=d");
  EXPECT_EQ(u.print(), "vars a b c d\na*1b*1c=d\n");
  RelationSystem v = parse_relation_dsl(u.print());
  EXPECT_EQ(v.print(), u.print());
}

TEST(Dsl, BareOperatorsAliasTheFirstOperation) {
  RelationSystem a = parse_relation_dsl("x*y=z\nu/v=w");
  RelationSystem b = parse_relation_dsl("x*1y=z\nu/1v=w");
  EXPECT_EQ(a.print(), b.print());
}

TEST(Dsl, CommentsAndBlankLines) {
  RelationSystem s = parse_relation_dsl("# a comment\n\nx*y=z  # trailing\n");
  EXPECT_EQ(s.equation_count(), 1);
}

TEST(Dsl, VarsDeclarationKeepsFreeVariables) {
  RelationSystem s = parse_relation_dsl("vars a b\n");
  EXPECT_EQ(s.variable_count(), 2);
  EXPECT_EQ(s.equation_count(), 0);
  RelationSystem t = parse_relation_dsl(s.print());
  EXPECT_EQ(t.variables(), s.variables());
}

TEST(Dsl, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_relation_dsl("x*y=z\nq*=w\n");
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.col(), 1);
  }
  EXPECT_THROW(parse_relation_dsl("x*y"), parse_error);
  EXPECT_THROW(parse_relation_dsl("x*(y=z"), parse_error);
  EXPECT_THROW(parse_relation_dsl("=x"), parse_error);
  EXPECT_THROW(parse_relation_dsl("x*y=z extra"), parse_error);
}

TEST(Dsl, UnknownCrossingMapsAreRejected) {
  EXPECT_THROW(parse_relation_dsl("R3(x,y)=z"), parse_error);
  EXPECT_THROW(parse_relation_dsl("R1(x)=z"), parse_error);
  EXPECT_THROW(parse_relation_dsl("R2=z"), parse_error);
  EXPECT_THROW(parse_relation_dsl("x*3y=z"), parse_error);
}

TEST(Dsl, RelationFileNeedsFormatLine) {
  EXPECT_THROW(parse_relation_file("x*y=z\n"), structural_error);
  RelationSystem s = parse_relation_file("format=1\nx*y=z\n");
  EXPECT_EQ(s.equation_count(), 1);
}

TEST(Catalog, EighteenEntriesAllSingular) {
  const auto& entries = catalog();
  ASSERT_EQ(entries.size(), 18u);
  for (const auto& e : entries) {
    EXPECT_TRUE(e.system.mentions(OpKind::R1)) << e.name;
    EXPECT_TRUE(e.system.mentions(OpKind::R2)) << e.name;
    EXPECT_FALSE(e.system.mentions(OpKind::Bar1)) << e.name;
    EXPECT_FALSE(e.system.mentions(OpKind::Bar2)) << e.name;
  }
  EXPECT_EQ(entries.front().name, "1_1^2");
  EXPECT_EQ(entries.back().name, "6_12^2");
}

TEST(Catalog, KnownShapes) {
  const CatalogEntry* four = find_catalog_entry("4_1^2");
  ASSERT_NE(four, nullptr);
  EXPECT_EQ(four->system.equation_count(), 4);
  std::vector<std::string> vars = four->system.variables();
  std::sort(vars.begin(), vars.end());
  EXPECT_EQ(vars, (std::vector<std::string>{"w", "x", "y", "z"}));

  const CatalogEntry* last = find_catalog_entry("6_12^2");
  ASSERT_NE(last, nullptr);
  EXPECT_EQ(last->system.equation_count(), 6);
  EXPECT_EQ(last->system.variable_count(), 6);

  EXPECT_EQ(find_catalog_entry("1_1^2")->system.equation_count(), 2);
  EXPECT_EQ(find_catalog_entry("nope"), nullptr);
}

// ---------------------------------------------------------------------------
// Diagrams
// ---------------------------------------------------------------------------

LinkDiagram trefoil() {
  LinkDiagram d;
  d.add_crossing(CrossingKind::Positive, "a", "b", "c", "b");
  d.add_crossing(CrossingKind::Positive, "b", "c", "a", "c");
  d.add_crossing(CrossingKind::Positive, "c", "a", "b", "a");
  d.set_component("k", {"a", "b", "c"}, 1);
  return d;
}

// One singular crossing feeding one positive crossing; the strand through
// the singular point on the left closes onto itself on the right.
LinkDiagram singular_two_crossing() {
  LinkDiagram d;
  d.add_crossing(CrossingKind::Singular, "x", "y", "p", "x");
  d.add_crossing(CrossingKind::Positive, "p", "x", "y", "x");
  d.set_component("c1", {"x"}, 1);
  d.set_component("c2", {"y", "p"}, 2);
  return d;
}

TEST(Diagram, FreeCircleIsValid) {
  LinkDiagram d;
  d.set_component("c1", {"a"}, 1);
  EXPECT_TRUE(validate_diagram(d).ok());
  RelationSystem s = relations_from_diagram(d);
  EXPECT_EQ(s.variable_count(), 1);
  EXPECT_EQ(s.equation_count(), 0);
}

TEST(Diagram, TrefoilIsValidAndCompiles) {
  LinkDiagram d = trefoil();
  EXPECT_TRUE(validate_diagram(d).ok());
  RelationSystem s = relations_from_diagram(d);
  EXPECT_EQ(s.variable_count(), 3);
  EXPECT_EQ(s.equation_count(), 3);
  EXPECT_EQ(s.print(), "vars a b c\na*1b=c\nb*1c=a\nc*1a=b\n");
  // monochromatic label-1 diagram: no second-operation symbol may occur
  EXPECT_FALSE(s.mentions(OpKind::Star2));
  EXPECT_FALSE(s.mentions(OpKind::Bar2));
}

TEST(Diagram, TrefoilHasNineDihedralColorings) {
  RelationSystem s = relations_from_diagram(trefoil());
  OrientedDisingquandle d3 = projection_structure(dihedral(3));
  EXPECT_EQ(count_colorings(s, d3).count, 9);
  EXPECT_EQ(count_colorings_exhaustive(s, d3).count, 9);
}

TEST(Diagram, SingularCrossingEmitsBothMapsOnce) {
  LinkDiagram d = singular_two_crossing();
  EXPECT_TRUE(validate_diagram(d).ok());
  RelationSystem s = relations_from_diagram(d);
  // crossings contribute one equation each, singular ones two
  EXPECT_EQ(s.equation_count(), 3);
  EXPECT_EQ(s.variable_count(), 3);
  int r1_uses = 0, r2_uses = 0;
  for (const auto& t : s.nodes()) {
    if (t.kind == Term::Kind::App && t.op == OpKind::R1) ++r1_uses;
    if (t.kind == Term::Kind::App && t.op == OpKind::R2) ++r2_uses;
  }
  EXPECT_EQ(r1_uses, 1);
  EXPECT_EQ(r2_uses, 1);
}

// The two-crossing singular diagram is the first census link: eliminating
// the forced arc gives exactly its relation system, so the counts agree.
TEST(Diagram, SingularTwoCrossingMatchesFirstCatalogCount) {
  RelationSystem s = relations_from_diagram(singular_two_crossing());
  const OrientedDisingquandle& d = builtin("z10_canonical");
  long long direct = count_colorings(s, d).count;
  long long from_catalog = count_colorings(find_catalog_entry("1_1^2")->system, d).count;
  EXPECT_EQ(direct, from_catalog);
  EXPECT_EQ(direct, 50);
}

TEST(Diagram, NegativeCrossingsStoreFlippedEquations) {
  LinkDiagram d;
  d.add_crossing(CrossingKind::Negative, "a", "b", "a", "b");
  d.add_crossing(CrossingKind::Negative, "b", "a", "b", "a");
  d.set_component("c1", {"a"}, 1);
  d.set_component("c2", {"b"}, 2);
  EXPECT_TRUE(validate_diagram(d).ok());
  RelationSystem s = relations_from_diagram(d);
  EXPECT_FALSE(s.mentions(OpKind::Bar1));
  EXPECT_FALSE(s.mentions(OpKind::Bar2));
  EXPECT_EQ(s.print(), "vars a b\na*2b=a\nb*1a=b\n");
  // under 3x-2y on Z10 both equations force a = b mod 5
  EXPECT_EQ(count_colorings(s, builtin("z10_canonical")).count, 20);
}

TEST(Diagram, ComponentMismatchesAreReported) {
  LinkDiagram d;
  d.add_crossing(CrossingKind::Positive, "a", "b", "c", "b");
  d.set_component("c1", {"a", "b"}, 1);
  d.set_component("c2", {"c"}, 2);
  DiagramReport rep = validate_diagram(d);
  EXPECT_FALSE(rep.ok());
  bool mentions_crossing0 = false;
  for (const auto& v : rep.violations)
    mentions_crossing0 = mentions_crossing0 || v.find("crossing 0") != std::string::npos;
  EXPECT_TRUE(mentions_crossing0);
}

TEST(Diagram, EndpointCountsAreChecked) {
  LinkDiagram d;
  // arc 'a' ends twice, never begins
  d.add_crossing(CrossingKind::Positive, "a", "b", "c", "b");
  d.add_crossing(CrossingKind::Positive, "a", "c", "b", "c");
  d.set_component("c1", {"a", "b", "c"}, 1);
  DiagramReport rep = validate_diagram(d);
  EXPECT_FALSE(rep.ok());
  bool mentions_a = false;
  for (const auto& v : rep.violations) mentions_a = mentions_a || v.find("'a'") != std::string::npos;
  EXPECT_TRUE(mentions_a);
}

TEST(Diagram, ArcNamesMustSurviveTheRelationRoundTrip) {
  LinkDiagram d;
  d.set_component("c1", {"R12"}, 1);  // reserved crossing-map form
  EXPECT_FALSE(validate_diagram(d).ok());
  LinkDiagram e;
  e.set_component("c1", {"a-b"}, 1);  // not an identifier
  EXPECT_FALSE(validate_diagram(e).ok());
  LinkDiagram f;
  f.set_component("c1", {"R1x"}, 1);  // fine: not R<digits>
  EXPECT_TRUE(validate_diagram(f).ok());
}

TEST(Diagram, MissingLabelReported) {
  LinkDiagram d;
  d.set_component("c1", {"a"}, 3);
  EXPECT_FALSE(validate_diagram(d).ok());
  LinkDiagram e;
  e.add_arc("a");
  EXPECT_FALSE(validate_diagram(e).ok());
}

TEST(Diagram, FileFormatRoundTrip) {
  std::string text =
      "format=1\n"
      "# singular one-crossing tangle closed with one classical crossing\n"
      "sing(x, y, p, x)\n"
      "pos(p, x, y, x)\n"
      "component c1 = {x} label 1\n"
      "component c2 = {y, p} label 2\n";
  LinkDiagram d = parse_diagram_text(text);
  EXPECT_TRUE(validate_diagram(d).ok());
  RelationSystem s = relations_from_diagram(d);
  EXPECT_EQ(s.equation_count(), 3);
  EXPECT_THROW(parse_diagram_text("sing(a,b,c,d)\n"), structural_error);
  EXPECT_THROW(parse_diagram_text("format=1\nwhat(a,b,c,d)\n"), structural_error);
  EXPECT_THROW(parse_diagram_text("format=1\npos(a,b,c)\n"), structural_error);
  EXPECT_THROW(parse_diagram_text("format=1\ncomponent c = {a} banana\n"), structural_error);
}

// Compile -> print -> parse must preserve counts under every structure.
TEST(Diagram, PrintParseKeepsCounts) {
  for (const LinkDiagram& d : {trefoil(), singular_two_crossing()}) {
    RelationSystem s = relations_from_diagram(d);
    RelationSystem t = parse_relation_dsl(s.print());
    for (const char* name : {"z10_canonical", "z10_uno"}) {
      const OrientedDisingquandle& st = builtin(name);
      EXPECT_EQ(count_colorings(s, st).count, count_colorings(t, st).count) << name;
    }
  }
}

}  // namespace
