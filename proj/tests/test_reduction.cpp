#include "doctest.h"
#include "rgm/reduction.hpp"

using namespace rgm;

static TermPtr P(const std::string& s) { return parse_term(s, true); }

TEST_CASE("single leftmost-outermost step") {
  CHECK(print_term(*beta_step(P("(\\x.x x) y"))) == "y y");
  CHECK(!beta_step(P("\\x.x")).has_value());
  CHECK(!beta_step(P("x _|_")).has_value());
  // the outer redex fires before the one inside the argument
  CHECK(print_term(*beta_step(P("(\\x.y) ((\\z.z) w)"))) == "y");
  // under a head variable the leftmost redex inside an argument fires
  CHECK(print_term(*beta_step(P("x ((\\z.z) w)"))) == "x w");
  // leftmost means the function part before the argument part
  CHECK(print_term(*beta_step(P("(x ((\\z.z) u)) ((\\z.z) w)"))) == "x u ((\\z.z) w)");
  // an Omega step reproduces Omega
  CHECK(alpha_eq(*beta_step(P("@Omega")), P("@Omega")));
}

TEST_CASE("normalization with fuel") {
  auto r = beta_normalize(P("@I x"), 10);
  CHECK(r.completed);
  CHECK(r.steps == 1);
  CHECK(print_term(r.result) == "x");

  r = beta_normalize(P("@K x @Omega"), 10);
  CHECK(r.completed);
  CHECK(r.steps == 2);
  CHECK(print_term(r.result) == "x");

  r = beta_normalize(P("@c2 @c2"), 100);
  CHECK(r.completed);
  CHECK(alpha_eq(r.result, combinator("c4")));

  r = beta_normalize(P("@Omega"), 50);
  CHECK(!r.completed);
  CHECK(r.steps == 50);
  CHECK(alpha_eq(r.result, P("@Omega")));

  r = beta_normalize(P("@Y f"), 25);
  CHECK(!r.completed);

  r = beta_normalize(P("@I x"), 0);
  CHECK(!r.completed);
  CHECK(r.steps == 0);

  r = beta_normalize(P("\\x.x"), 0);
  CHECK(r.completed);
  CHECK(r.steps == 0);
}

TEST_CASE("head reduction") {
  auto r = head_reduce(P("\\x.x @Omega"), 10);
  CHECK(r.completed);
  CHECK(r.steps == 0);

  r = head_reduce(P("@c2 @c2"), 10);
  CHECK(r.completed);
  CHECK(r.steps == 4);
  CHECK(alpha_eq(r.result, P("\\z z'.z (z ((\\f v.f (f v)) z z'))")));

  r = head_reduce(P("@J"), 10);
  CHECK(r.completed);
  CHECK(r.steps == 3);
  CHECK(decompose(r.result).head->name == "x");

  r = head_reduce(P("@Omega"), 30);
  CHECK(!r.completed);
  CHECK(r.steps == 30);

  // an undefined head is terminal
  r = head_reduce(P("\\x._|_ y"), 10);
  CHECK(r.completed);
  CHECK(r.steps == 0);
  CHECK(decompose(r.result).head->kind == TermKind::Bot);

  // head reduction leaves arguments untouched
  r = head_reduce(P("x ((\\z.z) w)"), 10);
  CHECK(r.completed);
  CHECK(print_term(r.result) == "x ((\\z.z) w)");
}

TEST_CASE("eta normal form") {
  CHECK(print_term(eta_nf(P("\\x.y x"))) == "y");
  CHECK(alpha_eq(eta_nf(combinator("one1")), combinator("I")));
  CHECK(alpha_eq(eta_nf(combinator("one2")), combinator("I")));
  CHECK(alpha_eq(eta_nf(combinator("one3")), combinator("I")));
  CHECK(print_term(eta_nf(P("\\x.x x"))) == "\\x.x x");
  CHECK(print_term(eta_nf(P("\\x.y x x"))) == "\\x.y x x");
  CHECK(print_term(eta_nf(P("\\x.(\\y.f y) x"))) == "f");
  CHECK(print_term(eta_nf(P("\\x._|_ x"))) == "_|_");
  CHECK(print_term(eta_nf(P("x"))) == "x");
}

TEST_CASE("bot normal form") {
  CHECK(print_term(bot_normalize(P("\\x._|_"))) == "_|_");
  CHECK(print_term(bot_normalize(P("_|_ x y"))) == "_|_");
  CHECK(print_term(bot_normalize(P("\\x y._|_"))) == "_|_");
  CHECK(print_term(bot_normalize(P("x _|_"))) == "x _|_");
  CHECK(print_term(bot_normalize(P("\\x.x _|_ (\\y._|_)"))) == "\\x.x _|_ _|_");
  CHECK(print_term(bot_normalize(P("(\\x._|_) y"))) == "_|_");
  CHECK(print_term(bot_normalize(P("\\x.x"))) == "\\x.x");
}

TEST_CASE("redex count") {
  CHECK(count_beta_redexes(P("@Omega")) == 1);
  CHECK(count_beta_redexes(P("@c2 @c2")) == 1);
  CHECK(count_beta_redexes(P("@I (@I @I)")) == 2);
  CHECK(count_beta_redexes(P("\\x.x")) == 0);
  CHECK(count_beta_redexes(P("x _|_")) == 0);
}

TEST_CASE("prefix order on normal forms") {
  CHECK(le_bot(P("_|_"), P("\\x.x x")));
  CHECK(le_bot(P("\\x.x _|_"), P("\\x.x x")));
  CHECK(le_bot(P("\\x.x"), P("\\y.y")));
  CHECK(!le_bot(P("\\x.x x"), P("\\x.x")));
  CHECK(!le_bot(P("x"), P("y")));
  CHECK(!le_bot(P("\\x.x"), P("_|_")));
  CHECK(!le_bot(P("\\x.x"), P("\\x y.x y")));
  CHECK(le_bot(P("\\x z0.x _|_"), P("\\x z0.x (\\z1.z0 (\\z2.z1 _|_))")));
  CHECK(!le_bot(P("\\x z0.x (\\z1.z1 _|_)"), P("\\x z0.x (\\z1.z0 _|_)")));
  CHECK_THROWS_AS(le_bot(P("@Omega"), P("\\x.x")), std::invalid_argument);
  CHECK_THROWS_AS(le_bot(P("_|_"), P("\\x._|_")), std::invalid_argument);
}
