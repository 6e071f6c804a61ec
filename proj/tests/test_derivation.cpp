#include "doctest.h"
#include "rgm/derivation.hpp"

using namespace rgm;

static TermPtr P(const std::string& s) { return parse_term(s, true); }

static const Model& DS() {
  static Model m = Model::builtin("Dstar");
  return m;
}
static const Model& EE() {
  static Model m = Model::builtin("E");
  return m;
}

// {x:[[]->*]} |- x Omega : * with the argument left untyped
static DerivPtr x_omega(const Model& m) {
  auto fn = deriv_var("x", m.parse_element("[]->*"));
  return deriv_app(m, fn, {}, P("@Omega"));
}

TEST_CASE("smart constructors build the expected judgments") {
  auto v = deriv_var("x", DS().parse_element("*"));
  CHECK(print_environment(DS(), v->env) == "{x:[*]}");
  CHECK(DS().print_element(v->type) == "*");

  auto i = deriv_lam(DS(), "x", v);
  CHECK(print_environment(DS(), i->env) == "{}");
  CHECK(DS().print_element(i->type) == "*");  // [*]->* collapses
  CHECK(print_term(i->subject) == "\\x.x");

  auto d = x_omega(DS());
  CHECK(print_environment(DS(), d->env) == "{x:[[]->*]}");
  CHECK(DS().print_element(d->type) == "*");
  CHECK(print_term(d->subject) == "x ((\\x.x x) (\\x.x x))");
  CHECK(d->kids.size() == 1);  // just the function premise

  auto outer = deriv_lam(DS(), "x", d);
  CHECK(print_environment(DS(), outer->env) == "{}");
  CHECK(DS().print_element(outer->type) == "[[]->*]->*");
  CHECK(app_count(outer) == 1);

  CHECK(check_derivation(DS(), outer).ok);

  // a premise type that does not fit the function type is rejected
  auto wrong = deriv_var("y", DS().parse_element("[]->*"));
  CHECK_THROWS_AS(deriv_app(DS(), v, {wrong}, P("y")), std::invalid_argument);
  // the function type must expose an arrow
  auto yv = deriv_var("y", EE().parse_element("<0>"));
  CHECK_THROWS_AS(deriv_app(EE(), yv, {}, P("z")), std::invalid_argument);
}

TEST_CASE("derivation serialization") {
  auto i = deriv_lam(DS(), "x", deriv_var("x", DS().parse_element("*")));
  CHECK(deriv_sexpr(DS(), i) == "(lam {} \"\\x.x\" * (var {x:[*]} \"x\" *))");
  CHECK(deriv_sexpr(DS(), x_omega(DS())) ==
        "(app {x:[[]->*]} \"x ((\\x.x x) (\\x.x x))\" * (var {x:[[]->*]} \"x\" []->*))");
}

TEST_CASE("shape equivalence ignores subjects") {
  auto d1 = deriv_app(DS(), deriv_var("x", DS().parse_element("[]->*")), {}, P("@Omega"));
  auto d2 = deriv_app(DS(), deriv_var("x", DS().parse_element("[]->*")), {}, P("@I @I"));
  CHECK(deriv_shape_eq(d1, d2));
  CHECK(!alpha_eq(d1->subject, d2->subject));
  auto d3 = deriv_var("x", DS().parse_element("*"));
  CHECK(!deriv_shape_eq(d1, d3));
}

TEST_CASE("checker flags broken trees") {
  auto v = deriv_var("x", DS().parse_element("*"));
  CHECK(check_derivation(DS(), v).ok);
  // forge a bad node: lam whose stored type skips canonicalization
  auto forged = std::make_shared<Derivation>(
      Derivation{Rule::Lam, Environment{}, P("\\x.x"),
                 std::make_shared<Element>(Element{false, 0, {mk_atom(0)}, mk_atom(0)}),
                 {v}});
  auto r = check_derivation(DS(), forged);
  CHECK(!r.ok);
  CHECK(!r.reason.empty());
}

TEST_CASE("directed search on normal forms") {
  SearchBudget b;

  auto r = derive(DS(), {}, P("@I"), DS().parse_element("*"), b);
  REQUIRE(r.status == DeriveStatus::Found);
  CHECK(check_derivation(DS(), r.deriv).ok);

  CHECK(derive(DS(), {}, P("@I"), DS().parse_element("[]->*"), b).status ==
        DeriveStatus::NotDerivable);

  r = derive(DS(), {}, P("@K"), DS().parse_element("[*]->[]->*"), b);
  REQUIRE(r.status == DeriveStatus::Found);
  CHECK(check_derivation(DS(), r.deriv).ok);

  // untyped argument: _|_ under a head expecting nothing
  Environment g = parse_environment(DS(), "x:[[]->*]");
  r = derive(DS(), g, P("x _|_"), DS().parse_element("*"), b);
  REQUIRE(r.status == DeriveStatus::Found);
  CHECK(r.deriv->kids.size() == 1);

  Environment g2 = parse_environment(DS(), "x:[*]");
  CHECK(derive(DS(), g2, P("x _|_"), DS().parse_element("*"), b).status ==
        DeriveStatus::NotDerivable);

  // relevance: environments are consumed exactly
  CHECK(derive(DS(), parse_environment(DS(), "x:[*,*]"), P("x"), DS().parse_element("*"), b)
            .status == DeriveStatus::NotDerivable);
  CHECK(derive(DS(), parse_environment(DS(), "y:[*]"), P("x"), DS().parse_element("*"), b)
            .status == DeriveStatus::NotDerivable);

  // _|_ itself has no typing
  CHECK(derive(DS(), {}, P("_|_"), DS().parse_element("*"), b).status ==
        DeriveStatus::NotDerivable);

  CHECK(derive(DS(), {}, P("@Omega"), DS().parse_element("*"), b).status ==
        DeriveStatus::NonNormalSubject);

  auto church = EE().parse_element("[[<0>]-><0>,[<0>]-><0>]->[<0>]-><0>");
  r = derive(EE(), {}, P("@c2"), church, b);
  REQUIRE(r.status == DeriveStatus::Found);
  CHECK(check_derivation(EE(), r.deriv).ok);
  CHECK(derive(EE(), {}, P("@c3"), church, b).status == DeriveStatus::NotDerivable);

  SearchBudget tiny;
  tiny.max_steps = 1;
  CHECK(derive(DS(), {}, P("@K"), DS().parse_element("[*]->[]->*"), tiny).status ==
        DeriveStatus::BudgetExhausted);
}

TEST_CASE("bounded judgment enumeration") {
  auto js = enumerate_derivations(DS(), P("@I"), 1);
  REQUIRE(js.size() == 1);
  CHECK(print_judgment(DS(), js[0].first) == "{} |- \\x.x : *");
  CHECK(check_derivation(DS(), js[0].second).ok);

  js = enumerate_derivations(DS(), P("@I"), 2);
  REQUIRE(js.size() == 2);
  CHECK(print_judgment(DS(), js[0].first) == "{} |- \\x.x : *");
  CHECK(print_judgment(DS(), js[1].first) == "{} |- \\x.x : [[]->*]->[]->*");

  js = enumerate_derivations(EE(), P("@I"), 1);
  REQUIRE(js.size() == 1);
  CHECK(print_judgment(EE(), js[0].first) == "{} |- \\x.x : [<0>]-><0>");

  js = enumerate_derivations(DS(), P("x _|_"), 1);
  CHECK(js.empty());
  js = enumerate_derivations(DS(), P("x _|_"), 2);
  REQUIRE(js.size() == 1);
  CHECK(print_judgment(DS(), js[0].first) == "{x:[[]->*]} |- x _|_ : *");

  // every enumerated witness checks out
  for (auto& [j, d] : enumerate_derivations(DS(), P("\\f z.f (f z)"), 2)) {
    CHECK(check_derivation(DS(), d).ok);
    CHECK(env_eq(j.env, d->env));
    CHECK(elem_eq(j.type, d->type));
  }

  CHECK_THROWS_AS(enumerate_derivations(DS(), P("@Omega"), 2), std::invalid_argument);
}

TEST_CASE("substitution on derivations") {
  // {x:[[]->*]} |- x Omega : *  with  F : []->*  gives  {} |- F Omega : *
  auto d = x_omega(DS());
  auto pf = derive(DS(), {}, P("@F"), DS().parse_element("[]->*"), SearchBudget{});
  REQUIRE(pf.status == DeriveStatus::Found);
  auto out = weighted_substitution_probe(DS(), d, "x", {pf.deriv}, P("@F"));
  CHECK(print_environment(DS(), out->env) == "{}");
  CHECK(DS().print_element(out->type) == "*");
  CHECK(alpha_eq(out->subject, P("@F @Omega")));
  CHECK(check_derivation(DS(), out).ok);
  CHECK(app_count(out) == 1);

  // zero parts: x only renames untyped arguments
  auto dz = deriv_app(DS(), deriv_var("y", DS().parse_element("[]->*")), {}, P("x x"));
  auto out2 = weighted_substitution_probe(DS(), dz, "x", {}, P("@I"));
  CHECK(alpha_eq(out2->subject, P("y (@I @I)")));
  CHECK(env_eq(out2->env, dz->env));
  CHECK(check_derivation(DS(), out2).ok);

  // part type mismatch is rejected
  auto star = derive(DS(), {}, P("@I"), DS().parse_element("*"), SearchBudget{});
  REQUIRE(star.status == DeriveStatus::Found);
  CHECK_THROWS_AS(weighted_substitution_probe(DS(), d, "x", {star.deriv}, P("@I")),
                  std::invalid_argument);
}

TEST_CASE("subject reduction probe") {
  SearchBudget b;
  // typed redex at the root: (\x.x Omega) F
  auto lam = deriv_lam(DS(), "x", x_omega(DS()));
  auto pf = derive(DS(), {}, P("@F"), DS().parse_element("[]->*"), b);
  REQUIRE(pf.status == DeriveStatus::Found);
  auto root = deriv_app(DS(), lam, {pf.deriv}, P("@F"));
  CHECK(app_count(root) == 2);
  auto rep = weighted_subject_reduction_probe(DS(), root, {});
  CHECK(rep.disjunct == 1);
  CHECK(rep.app_before == 2);
  CHECK(rep.app_after == 1);
  CHECK(alpha_eq(rep.reduced->subject, P("@F @Omega")));
  CHECK(check_derivation(DS(), rep.reduced).ok);

  // redex inside an untyped argument
  auto du = deriv_app(DS(), deriv_var("x", DS().parse_element("[]->*")), {}, P("(\\y.y) z"));
  auto rep2 = weighted_subject_reduction_probe(DS(), du, {1});
  CHECK(rep2.disjunct == 2);
  CHECK(alpha_eq(rep2.reduced->subject, P("x z")));
  CHECK(alpha_eq(rep2.bot_variant->subject, P("x _|_")));
  CHECK(deriv_shape_eq(rep2.reduced, du));
  CHECK(deriv_shape_eq(rep2.bot_variant, du));
  CHECK(rep2.app_before == rep2.app_after);
  CHECK(check_derivation(DS(), rep2.reduced).ok);
  CHECK(check_derivation(DS(), rep2.bot_variant).ok);

  // redex inside a typed argument premise
  auto py = deriv_lam(DS(), "y", deriv_var("y", DS().parse_element("*")));
  auto pyz = deriv_app(DS(), py, {deriv_var("z", DS().parse_element("*"))}, P("z"));
  auto dt = deriv_app(DS(), deriv_var("x", DS().parse_element("*")), {pyz}, P("(\\y.y) z"));
  CHECK(print_environment(DS(), dt->env) == "{x:[*], z:[*]}");
  auto rep3 = weighted_subject_reduction_probe(DS(), dt, {1});
  CHECK(rep3.disjunct == 1);
  CHECK(rep3.app_before == 2);
  CHECK(rep3.app_after == 1);
  CHECK(alpha_eq(rep3.reduced->subject, P("x z")));
  CHECK(check_derivation(DS(), rep3.reduced).ok);

  // the path must name a redex
  CHECK_THROWS_AS(weighted_subject_reduction_probe(DS(), du, {}), std::invalid_argument);
}
