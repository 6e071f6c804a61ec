#include "rgm/selftest.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "rgm/analysis.hpp"
#include "rgm/reduction.hpp"

namespace rgm::selftest {
namespace {

const Model& ME() {
  static Model m = Model::builtin("E");
  return m;
}
const Model& MW() {
  static Model m = Model::builtin("Domega");
  return m;
}
const Model& MS() {
  static Model m = Model::builtin("Dstar");
  return m;
}

// ---- closed term corpus ----------------------------------------------

// all terms of exact syntax size with free variables among v0..v<depth-1>;
// binders are named by nesting depth, so each alpha class appears once
std::vector<TermPtr> terms_of(unsigned size, unsigned depth) {
  std::vector<TermPtr> out;
  if (size == 0) return out;
  if (size == 1) {
    for (unsigned i = 0; i < depth; i++) out.push_back(mk_var("v" + std::to_string(i)));
    return out;
  }
  for (const auto& b : terms_of(size - 1, depth + 1))
    out.push_back(mk_lam("v" + std::to_string(depth), b));
  for (unsigned ls = 1; ls + 1 < size; ls++)
    for (const auto& f : terms_of(ls, depth))
      for (const auto& a : terms_of(size - 1 - ls, depth)) out.push_back(mk_app(f, a));
  return out;
}

const std::vector<TermPtr>& closed_corpus() {
  static std::vector<TermPtr> all = [] {
    std::vector<TermPtr> v;
    for (unsigned s = 2; s <= 7; s++)
      for (auto& t : terms_of(s, 0)) v.push_back(t);
    return v;
  }();
  return all;
}

// ---- judgment keys ----------------------------------------------------

std::string jkey(const Model& m, const Environment& g, const ElemPtr& a) {
  return print_environment(m, g) + " : " + m.print_element(a);
}

std::vector<std::string> interp_keys(const Model& m, const InterpResult& r) {
  std::vector<std::string> ks;
  ks.reserve(r.judgments.size());
  for (const auto& [j, d] : r.judgments) ks.push_back(jkey(m, j.env, j.type));
  std::sort(ks.begin(), ks.end());
  return ks;
}

std::vector<std::string> dedup(std::vector<std::string> ks) {
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

// ---- criterion 1: worked interpretations ------------------------------

// second, deliberately naive enumerator: recurse on the subject, take the
// cartesian product of argument premises, no sharing, no memoization
using BJ = std::pair<Environment, ElemPtr>;

std::vector<BJ> brute(const Model& m, const TermPtr& t, const std::vector<ElemPtr>& pool) {
  std::vector<BJ> out;
  switch (t->kind) {
    case TermKind::Bot:
      break;
    case TermKind::Var:
      for (const auto& e : pool) {
        Environment g;
        g.add(t->name, e);
        out.push_back({g, e});
      }
      break;
    case TermKind::Lam:
      for (const auto& [g, b] : brute(m, t->a, pool)) {
        MultiSet src = g.get(t->name);
        out.push_back({g.without(t->name), m.arrow(src, b)});
      }
      break;
    case TermKind::App: {
      auto fns = brute(m, t->a, pool);
      auto args = brute(m, t->b, pool);
      std::map<std::string, std::vector<const BJ*>> by_type;
      for (const auto& j : args) by_type[m.print_element(j.second)].push_back(&j);
      for (const auto& [g0, tau] : fns) {
        auto ar = m.as_arrow(tau);
        if (!ar) continue;
        const auto& [b, beta] = *ar;
        std::vector<const std::vector<const BJ*>*> cands;
        bool ok = true;
        for (const auto& want : b) {
          auto it = by_type.find(m.print_element(want));
          if (it == by_type.end()) {
            ok = false;
            break;
          }
          cands.push_back(&it->second);
        }
        if (!ok) continue;
        std::vector<size_t> pick(b.size(), 0);
        while (true) {
          Environment g = g0;
          for (size_t i = 0; i < b.size(); i++) g = env_sum(g, (*cands[i])[pick[i]]->first);
          out.push_back({g, beta});
          size_t i = 0;
          for (; i < b.size(); i++) {
            if (++pick[i] < cands[i]->size()) break;
            pick[i] = 0;
          }
          if (i == b.size()) break;
        }
      }
      break;
    }
  }
  return out;
}

std::vector<std::string> brute_keys(const Model& m, const TermPtr& t,
                                    const std::vector<ElemPtr>& pool) {
  std::vector<std::string> ks;
  for (const auto& [g, a] : brute(m, t, pool)) ks.push_back(jkey(m, g, a));
  return dedup(ks);
}

CriterionResult c1() {
  const Model& m = ME();
  auto pool = m.enumerate_elements(4);
  Environment empty;

  std::vector<std::string> exp_i, exp_one, exp_delta, exp_xomega, exp_omega;
  for (const auto& a : pool) {
    exp_i.push_back(jkey(m, empty, m.arrow({a}, a)));
    if (!a->atom) {
      exp_one.push_back(jkey(m, empty, m.arrow({a}, a)));
      exp_delta.push_back(jkey(m, empty, m.arrow(ms_sum(a->src, {a}), a->tgt)));
    }
    ElemPtr e = m.arrow({}, a);
    if (elem_size(e) <= 4) exp_xomega.push_back(jkey(m, empty, m.arrow({e}, a)));
  }

  struct Case {
    const char* label;
    TermPtr t;
    std::vector<std::string> expect;
  };
  std::vector<Case> cases = {
      {"I", combinator("I"), dedup(exp_i)},
      {"1", combinator("one1"), dedup(exp_one)},
      {"Delta", combinator("Delta"), dedup(exp_delta)},
      {"Omega", combinator("Omega"), dedup(exp_omega)},
      {"xOmega", parse_term("\\x.x @Omega", true), dedup(exp_xomega)},
  };

  bool pass = true;
  std::ostringstream d;
  d << "pool=" << pool.size();
  for (const auto& c : cases) {
    auto r = interp_bounded(m, c.t, 4, 6, 200);
    auto direct = interp_keys(m, r);
    auto indep = brute_keys(m, r.prefix, pool);
    bool ok = direct == indep && direct == c.expect;
    if (!ok) pass = false;
    d << " " << c.label << "=" << direct.size() << (ok ? "" : "!");
  }
  return {1, "worked-interpretations", pass, d.str()};
}

// ---- criterion 2: quotient pins ---------------------------------------

CriterionResult c2() {
  TermPtr i = combinator("I"), one = combinator("one1"), j = combinator("J");
  Environment empty;
  ElemPtr star = MS().parse_element("*");
  bool pass = true;
  std::ostringstream d;

  auto a = compare(MW(), i, one, 3, 6, 200).verdict;
  pass &= a == CompareVerdict::EqualAtBound;
  auto b = compare(MS(), i, one, 3, 6, 200).verdict;
  pass &= b == CompareVerdict::EqualAtBound;
  auto mj = member(MS(), j, empty, star, 6, 200).verdict;
  pass &= mj == MemberVerdict::MemberNotFoundAtBound;
  auto mi = member(MS(), i, empty, star, 6, 200).verdict;
  pass &= mi == MemberVerdict::Member;
  auto c = compare(MW(), i, j, 3, 6, 200).verdict;
  pass &= c == CompareVerdict::EqualAtBound;

  d << "I~1[Domega]=" << (a == CompareVerdict::EqualAtBound) << " I~1[Dstar]=" << (b == CompareVerdict::EqualAtBound)
    << " J@*[Dstar]=" << (mj == MemberVerdict::MemberNotFoundAtBound)
    << " I@*[Dstar]=" << (mi == MemberVerdict::Member)
    << " I~J[Domega]=" << (c == CompareVerdict::EqualAtBound);
  return {2, "theory-separation", pass, d.str()};
}

// ---- criterion 3: beta invariance -------------------------------------

CriterionResult c3() {
  std::vector<std::pair<TermPtr, TermPtr>> pairs;
  for (const auto& t : closed_corpus()) {
    TermPtr cur = t;
    for (int k = 1; k <= 3; k++) {
      auto s = beta_step(cur);
      if (!s) break;
      cur = *s;
      pairs.push_back({t, cur});
    }
  }
  const Model* models[] = {&ME(), &MW(), &MS()};
  std::map<std::string, std::vector<std::string>> cache;
  auto keys_of = [&](const Model& m, const TermPtr& t) {
    std::string ck = m.name + "|" + print_term(t);
    auto it = cache.find(ck);
    if (it != cache.end()) return it->second;
    auto ks = interp_keys(m, interp_bounded(m, t, 3, 6, 200));
    cache[ck] = ks;
    return ks;
  };
  bool pass = pairs.size() >= 50;
  unsigned checked = 0, bad = 0;
  for (const auto& [a, b] : pairs) {
    if (!beta_normalize(a, 200).completed || !beta_normalize(b, 200).completed) continue;
    for (const Model* m : models)
      if (keys_of(*m, a) != keys_of(*m, b)) bad++;
    checked++;
  }
  pass = pass && bad == 0 && checked >= 50;
  std::ostringstream d;
  d << "pairs=" << pairs.size() << " checked=" << checked << " models=3 mismatches=" << bad;
  return {3, "beta-invariance", pass, d.str()};
}

// ---- criterion 4: reduction probes ------------------------------------

TermPtr contract_at(const TermPtr& t, const std::vector<int>& path) {
  TermPtr red = subterm_at(t, path);
  return replace_at(t, path, subst(red->a->a, red->a->name, red->b));
}

CriterionResult c4() {
  std::mt19937_64 rng(0x52474d5350524f42ULL);
  std::vector<TermPtr> lams, nargs;
  for (const auto& t : closed_corpus()) {
    if (!is_beta_normal(t)) continue;
    if (t->kind == TermKind::Lam) lams.push_back(t);
    nargs.push_back(t);
  }
  struct RArg {
    TermPtr t;
    std::vector<int> redex;
  };
  std::vector<RArg> rargs = {
      {combinator("Omega"), {}},
      {parse_term("(\\x.x) (\\y.y)"), {}},
      {parse_term("\\y.(\\z.z) y"), {0}},
      {parse_term("(\\x.x x) (\\y.y y)"), {}},
  };
  const Model* models[] = {&ME(), &MS(), &MW()};
  std::map<std::string, std::vector<std::pair<Judgment, DerivPtr>>> cache;
  auto enumed = [&](const Model& m, const TermPtr& t) {
    std::string ck = m.name + "|" + print_term(t);
    auto it = cache.find(ck);
    if (it == cache.end()) it = cache.emplace(ck, enumerate_derivations(m, t, 2)).first;
    return it->second;
  };

  unsigned probes = 0, typed = 0, untyped = 0, hr_checked = 0;
  bool pass = true;
  std::string why;
  auto fail = [&](const std::string& r) {
    if (pass) why = r;
    pass = false;
  };

  for (unsigned iter = 0; iter < 6000 && probes < 120 && pass; iter++) {
    const Model& m = *models[rng() % 3];
    const TermPtr& fn = lams[rng() % lams.size()];
    const auto& js = enumed(m, fn);
    if (js.empty()) continue;
    const auto& [jd, dv] = js[rng() % js.size()];
    auto ar = m.as_arrow(jd.type);
    if (!ar) continue;
    const auto& [b, beta] = *ar;

    DerivPtr root;
    std::vector<int> path;
    bool expect_typed;
    if (b.empty() && (rng() % 2)) {
      const RArg& ra = rargs[rng() % rargs.size()];
      root = deriv_app(m, dv, {}, ra.t);
      path = {1};
      path.insert(path.end(), ra.redex.begin(), ra.redex.end());
      expect_typed = false;
    } else {
      const TermPtr& arg = nargs[rng() % nargs.size()];
      const auto& ja = enumed(m, arg);
      std::vector<DerivPtr> parts;
      bool got = true;
      for (const auto& want : b) {
        std::vector<DerivPtr> c;
        for (const auto& [j2, d2] : ja)
          if (elem_eq(j2.type, want)) c.push_back(d2);
        if (c.empty()) {
          got = false;
          break;
        }
        parts.push_back(c[rng() % c.size()]);
      }
      if (!got) continue;
      root = deriv_app(m, dv, parts, arg);
      expect_typed = true;
    }
    if (rng() % 3 == 0) {
      root = deriv_lam(m, "w", root);
      path.insert(path.begin(), 0);
    }
    if (!check_derivation(m, root).ok) {
      fail("generator built an invalid derivation");
      break;
    }

    auto rep = weighted_subject_reduction_probe(m, root, path);
    probes++;
    if (expect_typed) {
      typed++;
      if (rep.disjunct != 1) fail("expected the typed disjunct");
      // the redex is the unique typed application on the path, so the
      // weighted measure drops by exactly one
      if (rep.app_after + 1 != rep.app_before) fail("typed contraction must drop one application");
    } else {
      untyped++;
      if (rep.disjunct != 2) fail("expected the untyped disjunct");
      if (rep.app_after != rep.app_before) fail("untyped contraction must keep the measure");
      if (!rep.bot_variant || !check_derivation(m, rep.bot_variant).ok)
        fail("missing or invalid bottom variant");
      else if (!alpha_eq(rep.bot_variant->subject, replace_at(root->subject, path, mk_bot())))
        fail("bottom variant types the wrong subject");
    }
    if (!rep.reduced || !check_derivation(m, rep.reduced).ok) fail("reduced derivation invalid");
    else {
      if (!alpha_eq(rep.reduced->subject, contract_at(root->subject, path)))
        fail("reduced derivation types the wrong subject");
      if (!elem_eq(rep.reduced->type, root->type) || !env_eq(rep.reduced->env, root->env))
        fail("contraction changed the judgment");
    }
    if (free_vars(root->subject).empty()) {
      if (!head_reduce(root->subject, app_count(root)).completed)
        fail("head reduction exceeded the application count");
      hr_checked++;
    }
  }
  pass = pass && probes >= 100 && typed >= 20 && untyped >= 20;
  std::ostringstream d;
  d << "probes=" << probes << " typed=" << typed << " untyped=" << untyped
    << " head-bounded=" << hr_checked;
  if (!why.empty()) d << " first-failure: " << why;
  return {4, "reduction-probes", pass, d.str()};
}

// ---- criterion 5: two routes to membership ----------------------------

CriterionResult c5() {
  std::vector<TermPtr> sel = {combinator("I"), combinator("K"), combinator("Delta"),
                              combinator("one2"),
                              mk_app(combinator("c2"), combinator("c2"))};
  const auto& corpus = closed_corpus();
  for (size_t i = 0; i < corpus.size(); i += 6) sel.push_back(corpus[i]);
  const Model* models[] = {&ME(), &MS(), &MW()};
  Environment empty;
  unsigned terms = 0, queries = 0, bad = 0;
  for (const auto& t : sel) {
    auto nf = beta_normalize(t, 200);
    if (!nf.completed) continue;
    terms++;
    if (!alpha_eq(bt_approximant(t, 16, 400), nf.result)) bad++;
    for (const Model* m : models) {
      for (const auto& a : m->enumerate_elements(2)) {
        bool via_nf = derive(*m, empty, nf.result, a, {}).status == DeriveStatus::Found;
        bool via_bt = member(*m, t, empty, a, 16, 400).verdict == MemberVerdict::Member;
        if (via_nf != via_bt) bad++;
        queries++;
      }
    }
  }
  bool pass = terms >= 30 && bad == 0;
  std::ostringstream d;
  d << "terms=" << terms << " queries=" << queries << " mismatches=" << bad;
  return {5, "dual-route-membership", pass, d.str()};
}

// ---- criterion 6: normalization oracle --------------------------------

CriterionResult c6() {
  const auto& corpus = closed_corpus();
  std::vector<TermPtr> all = corpus;
  all.push_back(combinator("I"));
  all.push_back(combinator("K"));
  all.push_back(combinator("Delta"));
  all.push_back(combinator("Omega"));
  all.push_back(combinator("Y"));
  all.push_back(parse_term("\\x.x @Omega", true));
  all.push_back(mk_app(combinator("c2"), combinator("c2")));

  unsigned norm = 0, nonorm = 0, mism = 0;
  std::string first;
  for (const auto& t : all) {
    bool oracle = has_nf_oracle(t, 5, 8, 300).status == HasNfStatus::Normalizable;
    bool red = beta_normalize(t, 1000).completed;
    if (red) norm++;
    else nonorm++;
    if (oracle != red && first.empty()) {
      mism++;
      first = print_term(t);
    } else if (oracle != red) {
      mism++;
    }
  }
  bool pass = corpus.size() == 201 && mism == 0;
  std::ostringstream d;
  d << "corpus=" << corpus.size() << " extra=7 normalizing=" << norm << " diverging=" << nonorm
    << " mismatches=" << mism;
  if (!first.empty()) d << " first: " << first;
  return {6, "normalization-oracle", pass, d.str()};
}

// ---- criterion 7: eta separation --------------------------------------

CriterionResult c7() {
  TermPtr i = combinator("I"), j = combinator("J");
  auto cr = compare(ME(), j, i, 2, 6, 200);
  bool sub = cr.verdict == CompareVerdict::LeftSubRightAtBound;
  bool atom_diag = false;
  for (const auto& w : cr.right_only)
    if (ME().print_element(w.type) == "[<0>]-><0>") atom_diag = true;
  auto up = ler_probe(j, i, 6, 200);
  auto down = ler_probe(i, j, 6, 200);
  bool refut = !down.holds_at_bound && print_term(down.offending) == "\\x.x";
  bool pass = sub && atom_diag && up.holds_at_bound && refut;
  std::ostringstream d;
  d << "J<I[E]=" << sub << " atom-diagonal=" << atom_diag << " ler(J,I)=" << up.holds_at_bound
    << " ler(I,J)-refuted=" << refut;
  return {7, "eta-separation", pass, d.str()};
}

// ---- criterion 8: tree witnesses --------------------------------------

CriterionResult c8() {
  RecTree unary = parse_rec_tree("1");
  RecTree binary = parse_rec_tree("2");
  RecTree mixed = parse_rec_tree("if len < 3 then 2 else 1");
  PathSpec f0 = parse_path_spec("0");
  PathSpec f1 = parse_path_spec("1");
  PathSpec fstep = parse_path_spec("if n < 1 then 1 else 0");
  ElemPtr ss = MS().parse_element("*");
  ElemPtr ws = MW().parse_element("*");
  ElemPtr sa = MS().parse_element("[]->*");

  bool pass = true;
  unsigned witnessed = 0, refuted = 0, consistent = 0;
  for (const RecTree* t : {&unary, &binary, &mixed}) {
    auto w = witness_probe(MS(), ss, *t, f0, 10);
    if (w.status == WitnessStatus::WitnessToDepth && w.depth == 10) witnessed++;
    else pass = false;
    auto r = witness_probe(MW(), ws, *t, f0, 10);
    if (r.status == WitnessStatus::Refuted && r.depth == 1 &&
        r.path_prefix == std::vector<unsigned long>{0})
      refuted++;
    else pass = false;
  }
  if (witness_probe(MS(), ss, binary, f1, 10).status != WitnessStatus::WitnessToDepth) pass = false;
  if (witness_probe(MS(), ss, mixed, fstep, 10).status != WitnessStatus::WitnessToDepth)
    pass = false;

  struct Combo {
    const Model* m;
    ElemPtr a;
  };
  std::vector<Combo> combos = {{&MS(), ss}, {&MW(), ws}, {&MS(), sa}};
  for (const auto& c : combos)
    for (const RecTree* t : {&unary, &binary, &mixed}) {
      if (char_wt_crosscheck(*c.m, c.a, *t, 4, 100).consistent) consistent++;
      else pass = false;
    }

  std::ostringstream d;
  d << "witnessed=" << witnessed << "/3 refuted=" << refuted << "/3 crosschecks=" << consistent
    << "/9";
  return {8, "tree-witnesses", pass, d.str()};
}

// ---- criterion 9: jt prefixes -----------------------------------------

bool erase_ok(const RecTree& tr, const TermPtr& t, std::vector<unsigned long>& sigma,
              const std::string& head) {
  if (t->kind == TermKind::Bot) return true;
  Spine s = decompose(t);
  unsigned long k = tr.branching(sigma);
  if (s.binders.size() != k || s.args.size() != k) return false;
  if (s.head->kind != TermKind::Var || s.head->name != head) return false;
  for (unsigned long i = 0; i < k; i++) {
    sigma.push_back(i);
    if (!erase_ok(tr, s.args[i], sigma, s.binders[i])) return false;
    sigma.pop_back();
  }
  return true;
}

CriterionResult c9() {
  RecTree unary = parse_rec_tree("1");
  TermPtr j = combinator("J");
  bool pass = true;
  unsigned depths = 0;
  for (unsigned d = 1; d <= 5; d++) {
    if (alpha_eq(mk_lam("x", jt_approximant(unary, "x", d)), bt_approximant(j, d, 100))) depths++;
    else pass = false;
  }
  std::vector<std::string> trees = {"1", "2", "if len < 3 then 2 else 1", "min(len + 1, 3)",
                                    "if last < 1 then 2 else 1", "if len < 2 then 1 else 0"};
  unsigned erased = 0;
  for (const auto& s : trees) {
    RecTree t = parse_rec_tree(s);
    std::vector<unsigned long> sigma;
    if (erase_ok(t, jt_approximant(t, "x", 4), sigma, "x")) erased++;
    else pass = false;
  }
  std::ostringstream d;
  d << "bt-matches=" << depths << "/5 erasures=" << erased << "/" << trees.size();
  return {9, "jt-prefixes", pass, d.str()};
}

}  // namespace

std::vector<CriterionResult> run_battery() {
  return {c1(), c2(), c3(), c4(), c5(), c6(), c7(), c8(), c9()};
}

std::vector<CriterionResult> run_all() {
  auto rs = run_battery();
  std::string once = machine_lines(rs);
  bool same = machine_lines(run_battery()) == once;
  rs.push_back({10, "determinism", same, "bytes=" + std::to_string(once.size())});
  return rs;
}

std::string machine_lines(const std::vector<CriterionResult>& rs) {
  std::string out;
  for (const auto& r : rs) {
    out += "criterion=" + std::to_string(r.number) + " name=" + r.name +
           " status=" + (r.pass ? "pass" : "fail");
    if (!r.detail.empty()) out += " detail=" + r.detail;
    out += "\n";
  }
  return out;
}

}  // namespace rgm::selftest
