#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "rgm_capi.h"

// handle holder; frees on scope exit
template <class T, void (*F)(T*)>
struct H {
  T* p = nullptr;
  H() = default;
  H(T* q) : p(q) {}
  H(const H&) = delete;
  H& operator=(const H&) = delete;
  ~H() {
    if (p) F(p);
  }
  T* get() const { return p; }
  explicit operator bool() const { return p != nullptr; }
};

using Term = H<rgm_term, rgm_term_free>;
using Mod = H<rgm_model, rgm_model_free>;
using Elem = H<rgm_elem, rgm_elem_free>;
using Env = H<rgm_env, rgm_env_free>;
using Tree = H<rgm_tree, rgm_tree_free>;
using Path = H<rgm_path, rgm_path_free>;

namespace {

[[noreturn]] void die() {
  std::fprintf(stderr, "error: %s\n", rgm_last_error());
  std::exit(1);
}

int emit(char* s) {
  if (!s) die();
  std::fputs(s, stdout);
  rgm_string_free(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relational graph models as executable type systems"};
  app.require_subcommand(1);

  std::string model = "E", term, left, right, elem, env = "{}", tree, path;
  std::string head = "x", mode = "beta", format = "text";
  unsigned depth = 6, size = 3;
  unsigned long fuel = 200, steps = 0;

  auto add_format = [&](CLI::App* c) { c->add_option("--format", format, "text or json"); };
  auto add_model = [&](CLI::App* c) {
    c->add_option("--model", model, "builtin (E, Domega, Dstar) or model file");
  };

  CLI::App* parse = app.add_subcommand("parse", "parse a term and classify it");
  parse->add_option("--term", term, "lambda term; @Name for builtin combinators")->required();
  add_format(parse);

  CLI::App* reduce = app.add_subcommand("reduce", "reduce a term");
  reduce->add_option("--term", term)->required();
  reduce->add_option("--mode", mode, "beta, head, eta or bot");
  reduce->add_option("--fuel", fuel, "step budget");
  add_format(reduce);

  CLI::App* bt = app.add_subcommand("bt", "tree prefix of a term");
  bt->add_option("--term", term)->required();
  bt->add_option("--depth", depth);
  bt->add_option("--fuel", fuel, "head steps per node");
  add_format(bt);

  CLI::App* type = app.add_subcommand("type", "decide one judgment");
  add_model(type);
  type->add_option("--env", env, "x:[a,b] y:[c] or {}");
  type->add_option("--term", term)->required();
  type->add_option("--elem", elem)->required();
  type->add_option("--steps", steps, "search budget (0 = default)");
  add_format(type);

  CLI::App* interp = app.add_subcommand("interp", "bounded interpretation");
  add_model(interp);
  interp->add_option("--term", term)->required();
  interp->add_option("--size", size, "element size bound");
  interp->add_option("--depth", depth);
  interp->add_option("--fuel", fuel);
  add_format(interp);

  CLI::App* member = app.add_subcommand("member", "is the element in the interpretation");
  add_model(member);
  member->add_option("--term", term)->required();
  member->add_option("--env", env);
  member->add_option("--elem", elem)->required();
  member->add_option("--depth", depth);
  member->add_option("--fuel", fuel);
  add_format(member);

  CLI::App* cmp = app.add_subcommand("compare", "compare two interpretations");
  add_model(cmp);
  cmp->add_option("--left", left)->required();
  cmp->add_option("--right", right)->required();
  cmp->add_option("--size", size);
  cmp->add_option("--depth", depth);
  cmp->add_option("--fuel", fuel);
  add_format(cmp);

  CLI::App* ler = app.add_subcommand("ler", "eta-bottom tree order probe");
  ler->add_option("--left", left)->required();
  ler->add_option("--right", right)->required();
  ler->add_option("--depth", depth);
  ler->add_option("--fuel", fuel);
  add_format(ler);

  CLI::App* pol = app.add_subcommand("polarity", "empty-multiset polarity of an element");
  add_model(pol);
  pol->add_option("--elem", elem)->required();
  add_format(pol);

  CLI::App* hasnf = app.add_subcommand("has-nf", "normalizability evidence");
  hasnf->add_option("--term", term)->required();
  hasnf->add_option("--size", size, "element size bound");
  hasnf->add_option("--depth", depth);
  hasnf->add_option("--fuel", fuel);
  add_format(hasnf);

  CLI::App* wit = app.add_subcommand("witness", "unfold an element along a tree path");
  add_model(wit);
  wit->add_option("--elem", elem)->required();
  wit->add_option("--tree", tree, "branching expression over len, last")->required();
  wit->add_option("--path", path, "branch choice expression over n")->required();
  wit->add_option("--depth", depth);
  add_format(wit);

  CLI::App* koe = app.add_subcommand("koenig", "search elements and branches for a witness");
  add_model(koe);
  koe->add_option("--tree", tree)->required();
  koe->add_option("--size", size, "element size bound");
  koe->add_option("--depth", depth);
  add_format(koe);

  CLI::App* hyp = app.add_subcommand("hyper", "witness search read as hyperimmunity evidence");
  add_model(hyp);
  hyp->add_option("--tree", tree)->required();
  hyp->add_option("--size", size, "element size bound");
  hyp->add_option("--depth", depth);
  add_format(hyp);

  CLI::App* cw = app.add_subcommand("charwt", "witness vs typability cross-check");
  add_model(cw);
  cw->add_option("--elem", elem)->required();
  cw->add_option("--tree", tree)->required();
  cw->add_option("--depth", depth);
  cw->add_option("--fuel", fuel);
  add_format(cw);

  CLI::App* jt = app.add_subcommand("jt", "tree-shaped term prefix");
  jt->add_option("--tree", tree)->required();
  jt->add_option("--head", head, "head variable");
  jt->add_option("--depth", depth);
  add_format(jt);

  CLI::App* st = app.add_subcommand("selftest", "run the acceptance battery");

  CLI11_PARSE(app, argc, argv);

  if (parse->parsed()) {
    Term t{rgm_term_parse(term.c_str())};
    if (!t) die();
    return emit(rgm_parse_report(t.get(), format.c_str()));
  }
  if (reduce->parsed()) {
    Term t{rgm_term_parse(term.c_str())};
    if (!t) die();
    return emit(rgm_reduce_report(t.get(), mode.c_str(), fuel, format.c_str()));
  }
  if (bt->parsed()) {
    Term t{rgm_term_parse(term.c_str())};
    if (!t) die();
    return emit(rgm_bt_report(t.get(), depth, fuel, format.c_str()));
  }
  if (type->parsed()) {
    Mod m{rgm_model_open(model.c_str())};
    if (!m) die();
    Env g{rgm_env_parse(m.get(), env.c_str())};
    Term t{rgm_term_parse(term.c_str())};
    Elem a{rgm_elem_parse(m.get(), elem.c_str())};
    if (!g || !t || !a) die();
    return emit(rgm_type_report(m.get(), g.get(), t.get(), a.get(), steps, format.c_str()));
  }
  if (interp->parsed()) {
    Mod m{rgm_model_open(model.c_str())};
    Term t{rgm_term_parse(term.c_str())};
    if (!m || !t) die();
    return emit(rgm_interp_report(m.get(), t.get(), size, depth, fuel, format.c_str()));
  }
  if (member->parsed()) {
    Mod m{rgm_model_open(model.c_str())};
    if (!m) die();
    Term t{rgm_term_parse(term.c_str())};
    Env g{rgm_env_parse(m.get(), env.c_str())};
    Elem a{rgm_elem_parse(m.get(), elem.c_str())};
    if (!t || !g || !a) die();
    return emit(
        rgm_member_report(m.get(), t.get(), g.get(), a.get(), depth, fuel, format.c_str()));
  }
  if (cmp->parsed()) {
    Mod m{rgm_model_open(model.c_str())};
    Term l{rgm_term_parse(left.c_str())};
    Term r{rgm_term_parse(right.c_str())};
    if (!m || !l || !r) die();
    return emit(
        rgm_compare_report(m.get(), l.get(), r.get(), size, depth, fuel, format.c_str()));
  }
  if (ler->parsed()) {
    Term l{rgm_term_parse(left.c_str())};
    Term r{rgm_term_parse(right.c_str())};
    if (!l || !r) die();
    return emit(rgm_ler_report(l.get(), r.get(), depth, fuel, format.c_str()));
  }
  if (pol->parsed()) {
    Mod m{rgm_model_open(model.c_str())};
    if (!m) die();
    Elem a{rgm_elem_parse(m.get(), elem.c_str())};
    if (!a) die();
    return emit(rgm_polarity_report(m.get(), a.get(), format.c_str()));
  }
  if (hasnf->parsed()) {
    Term t{rgm_term_parse(term.c_str())};
    if (!t) die();
    return emit(rgm_hasnf_report(t.get(), size, depth, fuel, format.c_str()));
  }
  if (wit->parsed()) {
    Mod m{rgm_model_open(model.c_str())};
    if (!m) die();
    Elem a{rgm_elem_parse(m.get(), elem.c_str())};
    Tree tr{rgm_tree_parse(tree.c_str())};
    Path pa{rgm_path_parse(path.c_str())};
    if (!a || !tr || !pa) die();
    return emit(
        rgm_witness_report(m.get(), a.get(), tr.get(), pa.get(), depth, format.c_str()));
  }
  if (koe->parsed()) {
    Mod m{rgm_model_open(model.c_str())};
    Tree tr{rgm_tree_parse(tree.c_str())};
    if (!m || !tr) die();
    return emit(rgm_koenig_report(m.get(), tr.get(), size, depth, format.c_str()));
  }
  if (hyp->parsed()) {
    Mod m{rgm_model_open(model.c_str())};
    Tree tr{rgm_tree_parse(tree.c_str())};
    if (!m || !tr) die();
    return emit(rgm_hyper_report(m.get(), tr.get(), size, depth, format.c_str()));
  }
  if (cw->parsed()) {
    Mod m{rgm_model_open(model.c_str())};
    if (!m) die();
    Elem a{rgm_elem_parse(m.get(), elem.c_str())};
    Tree tr{rgm_tree_parse(tree.c_str())};
    if (!a || !tr) die();
    return emit(rgm_charwt_report(m.get(), a.get(), tr.get(), depth, fuel, format.c_str()));
  }
  if (jt->parsed()) {
    Tree tr{rgm_tree_parse(tree.c_str())};
    if (!tr) die();
    return emit(rgm_jt_report(tr.get(), head.c_str(), depth, format.c_str()));
  }
  if (st->parsed()) {
    // verdicts are data; the exit code only says the battery ran
    return emit(rgm_selftest_report(nullptr));
  }
  return 1;
}
