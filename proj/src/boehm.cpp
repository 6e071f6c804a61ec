#include "rgm/boehm.hpp"

#include <algorithm>
#include <map>

#include "rgm/reduction.hpp"

namespace rgm {

TermPtr direct_approximant(const TermPtr& t) {
  Spine s = decompose(t);
  if (s.head->kind != TermKind::Var) return mk_bot();
  Spine out;
  out.binders = s.binders;
  out.head = s.head;
  for (const auto& a : s.args) out.args.push_back(direct_approximant(a));
  return recompose(out);
}

TermPtr bt_approximant(const TermPtr& t, unsigned depth, unsigned long node_fuel) {
  if (depth == 0) return mk_bot();
  ReductionOutcome hr = head_reduce(t, node_fuel);
  if (!hr.completed) return mk_bot();
  Spine s = decompose(hr.result);
  if (s.head->kind != TermKind::Var) return mk_bot();
  Spine out;
  out.binders = s.binders;
  out.head = s.head;
  for (const auto& a : s.args) out.args.push_back(bt_approximant(a, depth - 1, node_fuel));
  return recompose(out);
}

static void cuts(const TermPtr& t, std::vector<TermPtr>& out) {
  out.push_back(mk_bot());
  if (t->kind == TermKind::Bot) return;
  Spine s = decompose(t);
  std::vector<std::vector<TermPtr>> argcuts(s.args.size());
  for (size_t i = 0; i < s.args.size(); i++) cuts(s.args[i], argcuts[i]);
  std::vector<size_t> pick(s.args.size(), 0);
  while (true) {
    Spine v;
    v.binders = s.binders;
    v.head = s.head;
    for (size_t i = 0; i < s.args.size(); i++) v.args.push_back(argcuts[i][pick[i]]);
    out.push_back(recompose(v));
    size_t i = 0;
    for (; i < pick.size(); i++) {
      if (++pick[i] < argcuts[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
}

std::vector<TermPtr> approximants(const TermPtr& t, unsigned depth, unsigned long node_fuel) {
  TermPtr prefix = bt_approximant(t, depth, node_fuel);
  std::vector<TermPtr> all;
  cuts(prefix, all);
  std::map<std::string, TermPtr> dedup;
  for (auto& c : all) dedup.emplace(print_term(c), c);
  std::vector<TermPtr> out;
  for (auto& [k, v] : dedup) out.push_back(v);
  std::stable_sort(out.begin(), out.end(), [](const TermPtr& a, const TermPtr& b) {
    unsigned long sa = size_nf(a), sb = size_nf(b);
    if (sa != sb) return sa < sb;
    return print_term(a) < print_term(b);
  });
  return out;
}

// binders renamed apart so the eta matcher can bind synthetic variables
// without clashing with free names
static TermPtr freshen(const TermPtr& t, std::map<std::string, std::string>& env,
                       unsigned long& counter, const char* prefix) {
  switch (t->kind) {
    case TermKind::Bot:
      return t;
    case TermKind::Var: {
      auto it = env.find(t->name);
      return it == env.end() ? t : mk_var(it->second);
    }
    case TermKind::App:
      return mk_app(freshen(t->a, env, counter, prefix), freshen(t->b, env, counter, prefix));
    case TermKind::Lam: {
      std::string f = std::string(prefix) + std::to_string(counter++);
      auto env2 = env;
      env2[t->name] = f;
      return mk_lam(f, freshen(t->a, env2, counter, prefix));
    }
  }
  return t;
}

static bool meb(const TermPtr& t, const TermPtr& s, std::map<std::string, int> mt,
                std::map<std::string, int> ms, int depth) {
  if (t->kind == TermKind::Bot) return true;
  if (s->kind == TermKind::Bot) return false;
  Spine st = decompose(t), ss = decompose(s);
  size_t q = st.binders.size(), m = ss.binders.size();
  if (q < m) return false;
  size_t r = q - m;
  if (st.args.size() != ss.args.size() + r) return false;
  for (size_t i = 0; i < q; i++) mt[st.binders[i]] = depth + (int)i;
  for (size_t i = 0; i < m; i++) ms[ss.binders[i]] = depth + (int)i;
  for (size_t l = 0; l < r; l++) ms[st.binders[m + l]] = depth + (int)(m + l);
  int d2 = depth + (int)q;
  auto ht = mt.find(st.head->name), hs = ms.find(ss.head->name);
  if (ht != mt.end() || hs != ms.end()) {
    if (ht == mt.end() || hs == ms.end() || ht->second != hs->second) return false;
  } else if (st.head->name != ss.head->name) {
    return false;
  }
  for (size_t j = 0; j < ss.args.size(); j++)
    if (!meb(st.args[j], ss.args[j], mt, ms, d2)) return false;
  for (size_t l = 0; l < r; l++)
    if (!meb(st.args[ss.args.size() + l], mk_var(st.binders[m + l]), mt, ms, d2)) return false;
  return true;
}

bool matches_eta_bot(const TermPtr& t, const TermPtr& s) {
  if (!is_beta_bot_normal(t)) throw std::invalid_argument("matcher: left side not normal: " + print_term(t));
  if (!is_beta_bot_normal(s)) throw std::invalid_argument("matcher: right side not normal: " + print_term(s));
  std::map<std::string, std::string> env;
  unsigned long c1 = 0, c2 = 0;
  TermPtr tf = freshen(t, env, c1, "#l");
  env.clear();
  TermPtr sf = freshen(s, env, c2, "#r");
  return meb(tf, sf, {}, {}, 0);
}

TermPtr jt_approximant(const RecTree& tree, const std::string& headvar, unsigned depth) {
  unsigned long counter = 0;
  std::vector<unsigned long> sigma;
  // head var of each node is the enclosing binder routed to that child
  std::function<TermPtr(const std::string&, unsigned)> rec =
      [&](const std::string& head, unsigned d) -> TermPtr {
    if (d == 0) return mk_bot();
    unsigned long m = tree.branching(sigma);
    if (m > 4096) throw std::invalid_argument("tree branching too large: " + std::to_string(m));
    std::vector<std::string> binders;
    for (unsigned long i = 0; i < m; i++) binders.push_back("z" + std::to_string(counter++));
    Spine node;
    node.binders = binders;
    node.head = mk_var(head);
    for (unsigned long i = 0; i < m; i++) {
      sigma.push_back(i);
      node.args.push_back(rec(binders[i], d - 1));
      sigma.pop_back();
    }
    return recompose(node);
  };
  return rec(headvar, depth);
}

}  // namespace rgm
