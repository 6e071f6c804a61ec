#include "rgm/semantics.hpp"

#include <doctest.h>

using namespace rgm;

namespace {

std::vector<std::string> jprints(const Model& m, const InterpResult& r) {
  std::vector<std::string> out;
  for (auto& [j, d] : r.judgments) out.push_back(print_judgment(m, j));
  return out;
}

}  // namespace

TEST_CASE("membership on bounded prefixes") {
  Model ds = Model::builtin("Dstar");
  Model e = Model::builtin("E");
  Environment empty;

  SUBCASE("identity inhabits the atom in Dstar") {
    auto r = member(ds, combinator("I"), empty, ds.parse_element("*"), 6, 200);
    CHECK(r.verdict == MemberVerdict::Member);
    REQUIRE(r.witness);
    CHECK(check_derivation(ds, r.witness).ok);
    CHECK(ds.print_element(r.witness->type) == "*");
    CHECK(print_term(r.prefix) == "\\x.x");
  }

  SUBCASE("unsolvable term gives a bottom prefix") {
    auto r = member(ds, combinator("Omega"), empty, ds.parse_element("*"), 6, 200);
    CHECK(r.verdict == MemberVerdict::NonMemberAtBound);
    CHECK(r.prefix->kind == TermKind::Bot);
    CHECK(!r.witness);
  }

  SUBCASE("infinite eta spine never reaches the atom") {
    auto r = member(ds, combinator("J"), empty, ds.parse_element("*"), 6, 200);
    CHECK(r.verdict == MemberVerdict::MemberNotFoundAtBound);
    CHECK(has_bottom(r.prefix));
  }

  SUBCASE("truncated argument is fine when the position is untyped") {
    // \x.x Omega : [[]->*]->* needs no premise for the Omega argument
    auto r = member(ds, parse_term("\\x.x ((\\y.y y) (\\y.y y))"), empty,
                    ds.parse_element("[[]->*]->*"), 6, 200);
    CHECK(r.verdict == MemberVerdict::Member);
    CHECK(print_term(r.prefix) == "\\x.x _|_");
  }

  SUBCASE("identity vs its eta expansion at an atomic arrow in E") {
    auto ty = e.parse_element("[<0>]-><0>");
    CHECK(member(e, combinator("I"), empty, ty, 6, 200).verdict == MemberVerdict::Member);
    CHECK(member(e, combinator("one1"), empty, ty, 6, 200).verdict ==
          MemberVerdict::MemberNotFoundAtBound);
  }

  SUBCASE("free variable uses the ambient environment") {
    auto g = parse_environment(ds, "x:[*]");
    auto r = member(ds, parse_term("x"), g, ds.parse_element("*"), 6, 200);
    CHECK(r.verdict == MemberVerdict::Member);
  }

  SUBCASE("step budget surfaces as its own verdict") {
    SearchBudget tiny;
    tiny.max_steps = 1;
    auto r = member(ds, combinator("I"), empty, ds.parse_element("*"), 6, 200, tiny);
    CHECK(r.verdict == MemberVerdict::SearchExhausted);
  }
}

TEST_CASE("bounded interpretation lists prefix judgments") {
  Model ds = Model::builtin("Dstar");
  auto r = interp_bounded(ds, combinator("I"), 2, 6, 200);
  CHECK(jprints(ds, r) == std::vector<std::string>{
                          "{} |- \\x.x : *",
                          "{} |- \\x.x : [[]->*]->[]->*",
                      });
  for (auto& [j, d] : r.judgments) CHECK(check_derivation(ds, d).ok);
  CHECK(print_term(r.prefix) == "\\x.x");

  // the prefix of an unsolvable term has no judgments at all
  CHECK(interp_bounded(ds, combinator("Omega"), 3, 6, 200).judgments.empty());
}

TEST_CASE("comparison of bounded interpretations") {
  Model dw = Model::builtin("Domega");
  Model ds = Model::builtin("Dstar");
  Model e = Model::builtin("E");

  SUBCASE("identity equals its eta expansion in the extensional models") {
    for (Model* m : {&dw, &ds}) {
      auto r = compare(*m, combinator("I"), combinator("one1"), 3, 6, 200);
      CHECK(r.verdict == CompareVerdict::EqualAtBound);
      CHECK(r.left_only.empty());
      CHECK(r.right_only.empty());
    }
  }

  SUBCASE("eta expansion sits strictly below identity in E") {
    auto r = compare(e, combinator("one1"), combinator("I"), 2, 6, 200);
    CHECK(r.verdict == CompareVerdict::LeftSubRightAtBound);
    CHECK(r.left_only.empty());
    REQUIRE(r.right_only.size() == 2);
    CHECK(e.print_element(r.right_only[0].type) == "[<0>]-><0>");
    CHECK(e.print_element(r.right_only[1].type) == "[<1>]-><1>");
    CHECK(r.right_only[0].env.bind.empty());

    auto flipped = compare(e, combinator("I"), combinator("one1"), 2, 6, 200);
    CHECK(flipped.verdict == CompareVerdict::RightSubLeftAtBound);
    CHECK(flipped.right_only.empty());
    CHECK(flipped.left_only.size() == 2);
  }

  SUBCASE("distinct hereditary permutators are incomparable in E") {
    // \x y.x y vs \x y.y x separate in both directions
    auto r = compare(e, parse_term("\\x y.x y"), parse_term("\\x y.y x"), 2, 6, 200);
    CHECK(r.verdict == CompareVerdict::IncomparableAtBound);
    CHECK(!r.left_only.empty());
    CHECK(!r.right_only.empty());
  }

  SUBCASE("beta conversion preserves the bounded interpretation") {
    auto r = compare(ds, parse_term("(\\f x.f x) (\\y.y)"), combinator("one1"), 3, 6, 200);
    CHECK(r.verdict == CompareVerdict::EqualAtBound);
  }

  SUBCASE("shallow prefixes do not fake separations") {
    // at depth 2 the prefix of one2 is \x z0.x (\z1.z0 _|_), which misses
    // several judgments of one1; re-checking them on one2 at doubled depth
    // recovers every one, so the verdict stays equal
    auto r = compare(ds, combinator("one1"), combinator("one2"), 3, 2, 200);
    CHECK(r.verdict == CompareVerdict::EqualAtBound);
    CHECK(r.left_only.empty());
    CHECK(r.right_only.empty());
  }

  SUBCASE("genuine separations survive re-verification") {
    // J at depth 1 types two arrows, both shared with I; of I's remaining
    // judgments one is recovered on the depth-2 prefix of J and three are not
    auto r = compare(ds, combinator("J"), combinator("I"), 3, 1, 200);
    CHECK(r.verdict == CompareVerdict::LeftSubRightAtBound);
    CHECK(r.left_only.empty());
    REQUIRE(r.right_only.size() == 3);
    CHECK(ds.print_element(r.right_only[0].type) == "*");
  }
}

TEST_CASE("eta-bottom order probe on prefixes") {
  SUBCASE("the infinite eta expansion lies below identity") {
    auto r = ler_probe(combinator("J"), combinator("I"), 6, 200);
    CHECK(r.holds_at_bound);
    CHECK(!r.offending);
    CHECK(print_term(r.right_prefix) == "\\x.x");
  }

  SUBCASE("identity does not lie below the infinite eta expansion") {
    auto r = ler_probe(combinator("I"), combinator("J"), 6, 200);
    CHECK(!r.holds_at_bound);
    REQUIRE(r.offending);
    CHECK(print_term(r.offending) == "\\x.x");
  }

  SUBCASE("finite eta expansions are one-directional") {
    CHECK(ler_probe(combinator("one2"), combinator("one1"), 6, 200).holds_at_bound);
    CHECK(!ler_probe(combinator("one1"), combinator("one2"), 6, 200).holds_at_bound);
  }

  SUBCASE("bottom lies below everything, nothing solvable lies below bottom") {
    CHECK(ler_probe(combinator("Omega"), combinator("I"), 6, 200).holds_at_bound);
    CHECK(!ler_probe(combinator("I"), combinator("Omega"), 6, 200).holds_at_bound);
  }

  SUBCASE("reflexive on normalizing terms") {
    for (const char* s : {"I", "K", "c2", "J"}) {
      CHECK(ler_probe(combinator(s), combinator(s), 5, 200).holds_at_bound);
    }
  }
}
