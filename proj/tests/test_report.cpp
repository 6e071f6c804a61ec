#include <doctest.h>

#include "rgm/report.hpp"

using namespace rgm;
namespace rp = rgm::report;

static const Model& DS() {
  static Model m = Model::builtin("Dstar");
  return m;
}
static const Model& DW() {
  static Model m = Model::builtin("Domega");
  return m;
}
static const Model& EE() {
  static Model m = Model::builtin("E");
  return m;
}

TEST_CASE("parse and reduce reports") {
  TermPtr t = parse_term("(\\x.x) y");
  CHECK(rp::parse_report(t, rp::Fmt::Text) ==
        "query: parse\n"
        "term: (\\x.x) y\n"
        "free: y\n"
        "normal: no\n"
        "bot-normal: no\n");
  CHECK(rp::parse_report(t, rp::Fmt::Json) ==
        R"rr({"query":"parse","term":"(\\x.x) y","free":["y"],"normal":false,"bot-normal":false})rr"
        "\n");
  CHECK(rp::parse_report(parse_term("\\x.x"), rp::Fmt::Text) ==
        "query: parse\n"
        "term: \\x.x\n"
        "free: (none)\n"
        "normal: yes\n"
        "bot-normal: yes\n");

  auto out = beta_normalize(t, 10);
  CHECK(rp::reduce_report("beta", t, out, 10, rp::Fmt::Text) ==
        "query: reduce\n"
        "mode: beta\n"
        "term: (\\x.x) y\n"
        "result: y\n"
        "steps: 1\n"
        "completed: yes\n"
        "bounds: fuel=10\n");
}

TEST_CASE("bt report") {
  TermPtr om = combinator("Omega");
  TermPtr pre = bt_approximant(om, 3, 50);
  CHECK(rp::bt_report(om, pre, 3, 50, rp::Fmt::Text) ==
        "query: bt\n"
        "term: (\\x.x x) (\\x.x x)\n"
        "prefix: _|_\n"
        "bottom: yes\n"
        "bounds: depth=3 fuel=50\n");
}

TEST_CASE("type report") {
  TermPtr i = combinator("I");
  Environment g;
  ElemPtr star = DS().parse_element("*");
  auto r = derive(DS(), g, i, star, {});
  std::string expect =
      "query: type\n"
      "model: Dstar\n"
      "term: \\x.x\n"
      "elem: *\n"
      "env: {}\n"
      "verdict: derivable\n"
      "witness: (lam {} \"\\x.x\" * (var {x:[*]} \"x\" *))\n"
      "steps: " +
      std::to_string(r.steps_used) +
      "\n"
      "bounds: max-steps=200000\n";
  CHECK(rp::type_report(DS(), g, i, star, r, 200000, rp::Fmt::Text) == expect);
}

TEST_CASE("member reports, both formats") {
  TermPtr i = combinator("I");
  Environment g;
  ElemPtr star = DS().parse_element("*");
  auto r = member(DS(), i, g, star, 6, 200);
  CHECK(rp::member_report(DS(), i, g, star, r, rp::Fmt::Text) ==
        "query: member\n"
        "model: Dstar\n"
        "term: \\x.x\n"
        "elem: *\n"
        "env: {}\n"
        "verdict: member\n"
        "witness: (lam {} \"\\x.x\" * (var {x:[*]} \"x\" *))\n"
        "prefix: \\x.x\n"
        "bounds: depth=6 fuel=200\n");
  CHECK(rp::member_report(DS(), i, g, star, r, rp::Fmt::Json) ==
        R"rr({"query":"member","model":"Dstar","term":"\\x.x","elem":"*","env":"{}",)rr"
        R"rr("verdict":"member","witness":"(lam {} \"\\x.x\" * (var {x:[*]} \"x\" *))",)rr"
        R"rr("prefix":"\\x.x","bounds":{"depth":6,"fuel":200}})rr"
        "\n");

  TermPtr om = combinator("Omega");
  auto r2 = member(DS(), om, g, star, 6, 200);
  CHECK(rp::member_report(DS(), om, g, star, r2, rp::Fmt::Text) ==
        "query: member\n"
        "model: Dstar\n"
        "term: (\\x.x x) (\\x.x x)\n"
        "elem: *\n"
        "env: {}\n"
        "verdict: non-member-at-bound\n"
        "prefix: _|_\n"
        "bounds: depth=6 fuel=200\n");
}

TEST_CASE("interp report json") {
  TermPtr i = combinator("I");
  auto r = interp_bounded(DS(), i, 2, 6, 200);
  CHECK(rp::interp_report(DS(), i, r, rp::Fmt::Json) ==
        R"rr({"query":"interp","model":"Dstar","term":"\\x.x","prefix":"\\x.x","count":2,)rr"
        R"rr("judgments":["{} |- \\x.x : *","{} |- \\x.x : [[]->*]->[]->*"],)rr"
        R"rr("bounds":{"size":2,"depth":6,"fuel":200}})rr"
        "\n");
}

TEST_CASE("compare reports") {
  TermPtr i = combinator("I");
  TermPtr one = combinator("one1");
  auto eq = compare(DW(), i, one, 3, 6, 200);
  CHECK(rp::compare_report(DW(), i, one, eq, rp::Fmt::Text) ==
        "query: compare\n"
        "model: Domega\n"
        "left: \\x.x\n"
        "right: \\x z0.x z0\n"
        "verdict: equal-at-bound\n"
        "left-only: 0\n"
        "right-only: 0\n"
        "bounds: size=3 depth=6 fuel=200\n");

  auto sub = compare(EE(), one, i, 2, 6, 200);
  CHECK(rp::compare_report(EE(), one, i, sub, rp::Fmt::Text) ==
        "query: compare\n"
        "model: E\n"
        "left: \\x z0.x z0\n"
        "right: \\x.x\n"
        "verdict: left-sub-right-at-bound\n"
        "left-only: 0\n"
        "right-only: 2\n"
        "right-only judgment: {} |- \\x.x : [<0>]-><0>\n"
        "right-only judgment: {} |- \\x.x : [<1>]-><1>\n"
        "bounds: size=2 depth=6 fuel=200\n");
}

TEST_CASE("ler reports") {
  TermPtr one = combinator("one1");
  TermPtr two = combinator("one2");
  auto up = ler_probe(two, one, 4, 200);
  CHECK(rp::ler_report(two, one, up, rp::Fmt::Text) ==
        "query: ler\n"
        "left: \\x z0.x (\\z1.z0 z1)\n"
        "right: \\x z0.x z0\n"
        "verdict: holds-at-bound\n"
        "left-prefix: \\x z0.x (\\z1.z0 z1)\n"
        "right-prefix: \\x z0.x z0\n"
        "bounds: depth=4 fuel=200\n");
  auto down = ler_probe(one, two, 4, 200);
  CHECK(rp::ler_report(one, two, down, rp::Fmt::Text) ==
        "query: ler\n"
        "left: \\x z0.x z0\n"
        "right: \\x z0.x (\\z1.z0 z1)\n"
        "verdict: fails-at-bound\n"
        "offending: \\x z0.x z0\n"
        "left-prefix: \\x z0.x z0\n"
        "right-prefix: \\x z0.x (\\z1.z0 z1)\n"
        "bounds: depth=4 fuel=200\n");
}

TEST_CASE("polarity report json") {
  ElemPtr a = EE().parse_element("[[]-><0>]-><1>");
  auto p = polarity(EE(), a);
  CHECK(rp::polarity_report(EE(), a, p, rp::Fmt::Json) ==
        R"rr({"query":"polarity","model":"E","elem":"[[]-><0>]-><1>",)rr"
        R"rr("positive":true,"negative":false,"exact":true})rr"
        "\n");
}

TEST_CASE("has-nf reports") {
  TermPtr i = combinator("I");
  auto r = has_nf_oracle(i, 3, 6, 200);
  CHECK(rp::hasnf_report(i, r, rp::Fmt::Text) ==
        "query: has-nf\n"
        "term: \\x.x\n"
        "verdict: normalizable\n"
        "witness: {} |- \\x.x : [<0>]-><0>\n"
        "witness-bound: 1\n"
        "bounds: size=3 depth=6 fuel=200\n");
  TermPtr om = combinator("Omega");
  auto r2 = has_nf_oracle(om, 3, 6, 200);
  CHECK(rp::hasnf_report(om, r2, rp::Fmt::Text) ==
        "query: has-nf\n"
        "term: (\\x.x x) (\\x.x x)\n"
        "verdict: no-evidence-at-bound\n"
        "bounds: size=3 depth=6 fuel=200\n");
}

TEST_CASE("witness report json, both verdicts") {
  RecTree unary = parse_rec_tree("1");
  PathSpec f0 = parse_path_spec("0");
  ElemPtr star = DS().parse_element("*");
  auto w = witness_probe(DS(), star, unary, f0, 3);
  CHECK(rp::witness_report(DS(), star, unary, f0, w, rp::Fmt::Json) ==
        R"rr({"query":"witness","model":"Dstar","elem":"*","tree":"1","path":"0",)rr"
        R"rr("verdict":"witness-to-depth","path-prefix":[0,0,0],"elems":["*","*","*"],)rr"
        R"rr("levels":3,"bounds":{"depth":3}})rr"
        "\n");
  ElemPtr dstar = DW().parse_element("*");
  auto w2 = witness_probe(DW(), dstar, unary, f0, 3);
  CHECK(rp::witness_report(DW(), dstar, unary, f0, w2, rp::Fmt::Text) ==
        "query: witness\n"
        "model: Domega\n"
        "elem: *\n"
        "tree: 1\n"
        "path: 0\n"
        "verdict: refuted\n"
        "path-prefix: 0\n"
        "levels: 1\n"
        "bounds: depth=3\n");
}

TEST_CASE("koenig and hyper reports") {
  RecTree unary = parse_rec_tree("1");
  auto k = lambda_koenig_probe(DS(), unary, 1, 4);
  CHECK(rp::koenig_report(DS(), unary, k, rp::Fmt::Text) ==
        "query: koenig\n"
        "model: Dstar\n"
        "tree: 1\n"
        "verdict: witness-found\n"
        "elem: *\n"
        "path: 0 0 0 0\n"
        "elems: * * * *\n"
        "bounds: size=1 depth=4\n");
  auto k2 = lambda_koenig_probe(DW(), unary, 1, 3);
  CHECK(rp::koenig_report(DW(), unary, k2, rp::Fmt::Text) ==
        "query: koenig\n"
        "model: Domega\n"
        "tree: 1\n"
        "verdict: no-witness-at-bound\n"
        "bounds: size=1 depth=3\n");

  auto h = hyperimmunity_probe(DW(), unary, 5, 10);
  CHECK(rp::hyper_report(DW(), unary, h, rp::Fmt::Text) ==
        "query: hyper\n"
        "model: Domega\n"
        "tree: 1\n"
        "verdict: no-witness-at-bound\n"
        "bounds: size=5 depth=10\n");
  auto h2 = hyperimmunity_probe(DS(), unary, 1, 3);
  CHECK(rp::hyper_report(DS(), unary, h2, rp::Fmt::Text) ==
        "query: hyper\n"
        "model: Dstar\n"
        "tree: 1\n"
        "verdict: witness-exists\n"
        "counterexample: *\n"
        "path: 0 0 0\n"
        "bounds: size=1 depth=3\n");
}

TEST_CASE("charwt report") {
  RecTree unary = parse_rec_tree("1");
  ElemPtr star = DS().parse_element("*");
  auto r = char_wt_crosscheck(DS(), star, unary, 3, 50);
  CHECK(rp::charwt_report(DS(), star, unary, r, rp::Fmt::Text) ==
        "query: charwt\n"
        "model: Dstar\n"
        "elem: *\n"
        "tree: 1\n"
        "consistent: yes\n"
        "witnessed: yes\n"
        "member: member-not-found-at-bound\n"
        "path: 0 0 0\n"
        "bounds: depth=3 fuel=50\n");
}

TEST_CASE("jt report") {
  RecTree unary = parse_rec_tree("1");
  TermPtr pre = jt_approximant(unary, "x", 3);
  CHECK(rp::jt_report(unary, "x", 3, pre, rp::Fmt::Text) ==
        "query: jt\n"
        "tree: 1\n"
        "head: x\n"
        "prefix: \\z0.x (\\z1.z0 (\\z2.z1 _|_))\n"
        "bounds: depth=3\n");
}

TEST_CASE("format parsing and stability") {
  CHECK(rp::parse_fmt("text") == rp::Fmt::Text);
  CHECK(rp::parse_fmt("json") == rp::Fmt::Json);
  CHECK_THROWS_AS(rp::parse_fmt("yaml"), std::invalid_argument);

  TermPtr i = combinator("I");
  Environment g;
  ElemPtr star = DS().parse_element("*");
  auto r1 = member(DS(), i, g, star, 6, 200);
  auto r2 = member(DS(), i, g, star, 6, 200);
  CHECK(rp::member_report(DS(), i, g, star, r1, rp::Fmt::Json) ==
        rp::member_report(DS(), i, g, star, r2, rp::Fmt::Json));
}
