#include "rgm/derivation.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace rgm {

// ---------- multiset and environment helpers ----------

static bool ms_includes(const MultiSet& sub, const MultiSet& super) {
  size_t j = 0;
  for (const auto& e : sub) {
    while (j < super.size() && cmp_elem(super[j], e) < 0) j++;
    if (j == super.size() || cmp_elem(super[j], e) != 0) return false;
    j++;
  }
  return true;
}

static bool env_includes(const Environment& sub, const Environment& super) {
  for (const auto& [x, ms] : sub.bind)
    if (!ms_includes(ms, super.get(x))) return false;
  return true;
}

// remove one occurrence; element must be present
static MultiSet ms_remove_one(const MultiSet& ms, const ElemPtr& e) {
  MultiSet out;
  bool done = false;
  for (const auto& m : ms) {
    if (!done && elem_eq(m, e)) {
      done = true;
      continue;
    }
    out.push_back(m);
  }
  return out;
}

// ---------- constructors ----------

DerivPtr deriv_var(const std::string& x, const ElemPtr& a) {
  Environment g;
  g.add(x, a);
  return std::make_shared<Derivation>(Derivation{Rule::Var, std::move(g), mk_var(x), a, {}});
}

DerivPtr deriv_lam(const Model& m, const std::string& x, const DerivPtr& body) {
  ElemPtr ty = m.arrow(body->env.get(x), body->type);
  return std::make_shared<Derivation>(
      Derivation{Rule::Lam, body->env.without(x), mk_lam(x, body->subject), ty, {body}});
}

DerivPtr deriv_app(const Model& m, const DerivPtr& fn, const std::vector<DerivPtr>& args,
                   const TermPtr& arg_term) {
  auto ar = m.as_arrow(fn->type);
  if (!ar)
    throw std::invalid_argument("app premise: function type " + m.print_element(fn->type) +
                                " is not an arrow");
  MultiSet got;
  for (const auto& a : args) got.push_back(a->type);
  if (!ms_eq(ms_sorted(std::move(got)), ar->first))
    throw std::invalid_argument("app premise: argument types do not match " +
                                m.print_ms(ar->first));
  Environment env = fn->env;
  std::vector<DerivPtr> kids{fn};
  for (const auto& a : args) {
    if (!alpha_eq(a->subject, arg_term))
      throw std::invalid_argument("app premise: subject differs from the argument");
    env = env_sum(env, a->env);
    kids.push_back(a);
  }
  return std::make_shared<Derivation>(Derivation{
      Rule::App, std::move(env), mk_app(fn->subject, arg_term), ar->second, std::move(kids)});
}

unsigned long app_count(const DerivPtr& d) {
  unsigned long n = d->rule == Rule::App ? 1 : 0;
  for (const auto& k : d->kids) n += app_count(k);
  return n;
}

bool deriv_shape_eq(const DerivPtr& a, const DerivPtr& b) {
  if (a->rule != b->rule || !env_eq(a->env, b->env) || !elem_eq(a->type, b->type) ||
      a->kids.size() != b->kids.size())
    return false;
  for (size_t i = 0; i < a->kids.size(); i++)
    if (!deriv_shape_eq(a->kids[i], b->kids[i])) return false;
  return true;
}

// ---------- checking ----------

static CheckResult check_at(const Model& m, const DerivPtr& d, const std::string& path) {
  auto bad = [&](const std::string& why) { return CheckResult{false, path, why}; };
  if (!elem_eq(m.canonicalize(d->type), d->type)) return bad("type not canonical");
  switch (d->rule) {
    case Rule::Var: {
      if (d->subject->kind != TermKind::Var || !d->kids.empty()) return bad("malformed var node");
      Environment want;
      want.add(d->subject->name, d->type);
      if (!env_eq(d->env, want)) return bad("var environment is not {x:[type]}");
      return {};
    }
    case Rule::Lam: {
      if (d->subject->kind != TermKind::Lam || d->kids.size() != 1) return bad("malformed lam node");
      const DerivPtr& kid = d->kids[0];
      if (!alpha_eq(kid->subject, d->subject->a)) return bad("body subject mismatch");
      if (!elem_eq(d->type, m.arrow(kid->env.get(d->subject->name), kid->type)))
        return bad("lam type mismatch");
      if (!env_eq(d->env, kid->env.without(d->subject->name))) return bad("lam environment mismatch");
      return check_at(m, kid, path.empty() ? "0" : path + ".0");
    }
    case Rule::App: {
      if (d->subject->kind != TermKind::App || d->kids.empty()) return bad("malformed app node");
      const DerivPtr& fn = d->kids[0];
      if (!alpha_eq(fn->subject, d->subject->a)) return bad("function subject mismatch");
      auto ar = m.as_arrow(fn->type);
      if (!ar) return bad("function type is not an arrow");
      if (!elem_eq(d->type, ar->second)) return bad("app type mismatch");
      MultiSet got;
      Environment env = fn->env;
      for (size_t i = 1; i < d->kids.size(); i++) {
        if (!alpha_eq(d->kids[i]->subject, d->subject->b)) return bad("argument subject mismatch");
        got.push_back(d->kids[i]->type);
        env = env_sum(env, d->kids[i]->env);
      }
      if (!ms_eq(ms_sorted(std::move(got)), ar->first)) return bad("premise types mismatch");
      if (!env_eq(env, d->env)) return bad("app environment mismatch");
      for (size_t i = 0; i < d->kids.size(); i++) {
        auto r = check_at(m, d->kids[i], path.empty() ? std::to_string(i) : path + "." + std::to_string(i));
        if (!r.ok) return r;
      }
      return {};
    }
  }
  return bad("unknown rule");
}

CheckResult check_derivation(const Model& m, const DerivPtr& d) { return check_at(m, d, ""); }

std::string deriv_sexpr(const Model& m, const DerivPtr& d) {
  static const char* names[] = {"var", "lam", "app"};
  std::string out = "(";
  out += names[(int)d->rule];
  out += " " + print_environment(m, d->env);
  out += " \"" + print_term(d->subject) + "\"";
  out += " " + m.print_element(d->type);
  for (const auto& k : d->kids) out += " " + deriv_sexpr(m, k);
  return out + ")";
}

int cmp_judgment(const Judgment& a, const Judgment& b) {
  if (int c = cmp_elem(a.type, b.type)) return c;
  return cmp_env(a.env, b.env);
}

std::string print_judgment(const Model& m, const Judgment& j) {
  return print_environment(m, j.env) + " |- " + print_term(j.subject) + " : " +
         m.print_element(j.type);
}

// ---------- directed search ----------

namespace {

struct BudgetOut {};

struct Search {
  const Model& m;
  unsigned long steps;

  void tick() {
    if (steps == 0) throw BudgetOut{};
    steps--;
  }

  // all (env, derivation) with env included in bound, deduplicated by env
  std::vector<std::pair<Environment, DerivPtr>> all(const Environment& bound, const TermPtr& t,
                                                    const ElemPtr& a) {
    tick();
    std::vector<std::pair<Environment, DerivPtr>> out;
    auto push = [&](const Environment& e, const DerivPtr& d) {
      for (auto& [e2, d2] : out)
        if (env_eq(e2, e)) return;
      out.emplace_back(e, d);
    };

    if (t->kind == TermKind::Bot) return out;

    if (t->kind == TermKind::Var) {
      for (const auto& e : bound.get(t->name))
        if (elem_eq(e, a)) {
          push(deriv_var(t->name, a)->env, deriv_var(t->name, a));
          break;
        }
      return out;
    }

    if (t->kind == TermKind::Lam) {
      auto ar = m.as_arrow(a);
      if (!ar) return out;
      std::string x = t->name;
      TermPtr body = t->a;
      if (!bound.get(x).empty()) {  // rename apart from the outer environment
        std::string x2 = x;
        auto fv = free_vars(body);
        do x2 += '\''; while (!bound.get(x2).empty() || fv.count(x2));
        body = subst(body, x, mk_var(x2));
        x = x2;
      }
      Environment inner = bound;
      for (const auto& e : ar->first) inner.add(x, e);
      for (auto& [env, d] : all(inner, body, ar->second)) {
        if (!ms_eq(env.get(x), ar->first)) continue;
        push(env.without(x), deriv_lam(m, x, d));
      }
      return out;
    }

    // application spine with a variable head
    Spine sp = decompose(t);
    if (!sp.binders.empty() || sp.head->kind != TermKind::Var) return out;  // not normal here
    const std::string& h = sp.head->name;
    size_t k = sp.args.size();

    MultiSet taus;
    for (const auto& tau : bound.get(h))
      if (taus.empty() || !elem_eq(taus.back(), tau)) taus.push_back(tau);

    for (const auto& tau : taus) {
      std::vector<MultiSet> bs;
      ElemPtr cur = tau;
      bool fits = true;
      for (size_t i = 0; i < k; i++) {
        auto ar = m.as_arrow(cur);
        if (!ar) {
          fits = false;
          break;
        }
        bs.push_back(ar->first);
        cur = ar->second;
      }
      if (!fits || !elem_eq(cur, a)) continue;

      Environment rem = bound;
      rem.bind[h] = ms_remove_one(bound.get(h), tau);
      if (rem.bind[h].empty()) rem.bind.erase(h);

      struct Unit {
        size_t arg;
        ElemPtr ty;
      };
      std::vector<Unit> units;
      for (size_t i = 0; i < k; i++)
        for (const auto& beta : bs[i]) units.push_back({i, beta});

      std::vector<std::vector<std::pair<Environment, DerivPtr>>> cand(units.size());
      bool feasible = true;
      for (size_t u = 0; u < units.size(); u++) {
        cand[u] = all(rem, sp.args[units[u].arg], units[u].ty);
        if (cand[u].empty()) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;

      std::vector<size_t> pick(units.size(), 0);
      std::function<void(size_t, const Environment&)> walk = [&](size_t u, const Environment& used) {
        tick();
        if (u == units.size()) {
          // assemble: head leaf, then one app node per argument position
          DerivPtr fn = deriv_var(h, tau);
          for (size_t i = 0; i < k; i++) {
            std::vector<DerivPtr> premises;
            for (size_t v = 0; v < units.size(); v++)
              if (units[v].arg == i) premises.push_back(cand[v][pick[v]].second);
            fn = deriv_app(m, fn, premises, sp.args[i]);
          }
          push(fn->env, fn);
          return;
        }
        for (size_t c = 0; c < cand[u].size(); c++) {
          Environment next = env_sum(used, cand[u][c].first);
          if (!env_includes(next, rem)) continue;
          pick[u] = c;
          walk(u + 1, next);
        }
      };
      walk(0, {});
    }
    return out;
  }
};

}  // namespace

DeriveResult derive(const Model& m, const Environment& g, const TermPtr& t, const ElemPtr& a,
                    const SearchBudget& budget) {
  if (!is_beta_bot_normal(t)) return {DeriveStatus::NonNormalSubject, nullptr, 0};
  Search s{m, budget.max_steps};
  try {
    for (auto& [env, d] : s.all(g, t, m.canonicalize(a)))
      if (env_eq(env, g)) return {DeriveStatus::Found, d, budget.max_steps - s.steps};
  } catch (BudgetOut&) {
    return {DeriveStatus::BudgetExhausted, nullptr, budget.max_steps};
  }
  return {DeriveStatus::NotDerivable, nullptr, budget.max_steps - s.steps};
}

// ---------- bounded enumeration ----------

namespace {

struct JdLess {
  bool operator()(const std::pair<Environment, ElemPtr>& a,
                  const std::pair<Environment, ElemPtr>& b) const {
    if (int c = cmp_elem(a.second, b.second)) return c < 0;
    return cmp_env(a.first, b.first) < 0;
  }
};

using JdMap = std::map<std::pair<Environment, ElemPtr>, DerivPtr, JdLess>;

struct Enumerator {
  const Model& m;
  unsigned bound;
  std::vector<ElemPtr> pool;
  const JudgmentFilter& keep;

  bool member_ok(const ElemPtr& e) const {
    if (elem_size(e) > bound) return false;
    if (m.countable && max_atom_id(e) >= (long)bound) return false;
    return true;
  }

  void insert(JdMap& out, const DerivPtr& d) const {
    if (keep && !keep(Judgment{d->env, d->subject, d->type})) return;
    out.emplace(std::make_pair(d->env, d->type), d);
  }

  JdMap run(const TermPtr& t) {
    JdMap out;
    switch (t->kind) {
      case TermKind::Bot:
        return out;
      case TermKind::Var: {
        for (const auto& a : pool) {
          insert(out, deriv_var(t->name, a));
        }
        return out;
      }
      case TermKind::Lam: {
        for (auto& [key, d] : run(t->a)) {
          insert(out, deriv_lam(m, t->name, d));
        }
        return out;
      }
      case TermKind::App: {
        JdMap fns = run(t->a);
        JdMap args = run(t->b);
        // JdLess keys type-major, so equal arg types sit in one contiguous
        // run; bucket them once instead of rescanning args per function
        std::vector<std::pair<ElemPtr, std::vector<DerivPtr>>> groups;
        for (auto& [akey, ad] : args) {
          if (groups.empty() || !elem_eq(groups.back().first, akey.second))
            groups.emplace_back(akey.second, std::vector<DerivPtr>{});
          groups.back().second.push_back(ad);
        }
        auto find_group = [&](const ElemPtr& e) -> const std::vector<DerivPtr>* {
          size_t lo = 0, hi = groups.size();
          while (lo < hi) {
            size_t mid = lo + (hi - lo) / 2;
            int c = cmp_elem(groups[mid].first, e);
            if (c == 0) return &groups[mid].second;
            if (c < 0)
              lo = mid + 1;
            else
              hi = mid;
          }
          return nullptr;
        };
        for (auto& [fkey, fd] : fns) {
          auto ar = m.as_arrow(fkey.second);
          if (!ar) continue;
          bool ok = true;
          for (const auto& e : ar->first)
            if (!member_ok(e)) {
              ok = false;
              break;
            }
          if (!ok) continue;

          // premise needs, grouped by distinct type
          std::vector<std::pair<ElemPtr, size_t>> need;
          for (const auto& e : ar->first) {
            if (!need.empty() && elem_eq(need.back().first, e))
              need.back().second++;
            else
              need.emplace_back(e, 1);
          }
          std::vector<const std::vector<DerivPtr>*> cands(need.size());
          for (size_t i = 0; i < need.size() && ok; i++) {
            cands[i] = find_group(need[i].first);
            if (!cands[i]) ok = false;
          }
          if (!ok) continue;

          std::vector<DerivPtr> chosen;
          std::function<void(size_t)> assemble = [&](size_t gi) {
            if (gi == need.size()) {
              insert(out, deriv_app(m, fd, chosen, t->b));
              return;
            }
            size_t want = need[gi].second;
            std::function<void(size_t, size_t)> choose = [&](size_t start, size_t left) {
              if (left == 0) {
                assemble(gi + 1);
                return;
              }
              for (size_t c = start; c < cands[gi]->size(); c++) {
                chosen.push_back((*cands[gi])[c]);
                choose(c, left - 1);
                chosen.pop_back();
              }
            };
            choose(0, want);
          };
          assemble(0);
        }
        return out;
      }
    }
    return out;
  }
};

}  // namespace

std::vector<std::pair<Judgment, DerivPtr>> enumerate_derivations(const Model& m, const TermPtr& t,
                                                                 unsigned bound,
                                                                 const JudgmentFilter& keep) {
  if (!is_beta_bot_normal(t))
    throw std::invalid_argument("enumeration needs a normal subject, got " + print_term(t));
  Enumerator en{m, bound, m.enumerate_elements(bound), keep};
  std::vector<std::pair<Judgment, DerivPtr>> out;
  for (auto& [key, d] : en.run(t))
    out.push_back({Judgment{key.first, t, key.second}, d});
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return cmp_judgment(a.first, b.first) < 0; });
  return out;
}

// ---------- substitution probe ----------

// rename a free variable throughout subjects and environments
static DerivPtr rename_free(const DerivPtr& d, const std::string& y, const std::string& y2) {
  if (d->rule == Rule::Lam && d->subject->name == y) return d;  // shadowed below
  Environment env = d->env;
  auto it = env.bind.find(y);
  if (it != env.bind.end()) {
    MultiSet ms = it->second;
    env.bind.erase(it);
    env.bind[y2] = std::move(ms);
  }
  std::vector<DerivPtr> kids;
  for (const auto& k : d->kids) kids.push_back(rename_free(k, y, y2));
  return std::make_shared<Derivation>(
      Derivation{d->rule, std::move(env), subst(d->subject, y, mk_var(y2)), d->type, std::move(kids)});
}

static DerivPtr wsub(const Model& m, const DerivPtr& d, const std::string& x,
                     std::vector<DerivPtr> parts, const TermPtr& n) {
  switch (d->rule) {
    case Rule::Var:
      if (d->subject->name == x) return parts.at(0);
      return d;
    case Rule::Lam: {
      std::string y = d->subject->name;
      if (y == x) return d;
      DerivPtr kid = d->kids[0];
      if (free_vars(n).count(y) && free_vars(d->subject->a).count(x)) {
        auto avoid = free_vars(n);
        auto bf = free_vars(d->subject->a);
        avoid.insert(bf.begin(), bf.end());
        avoid.insert(x);
        std::string y2 = y;
        do y2 += '\''; while (avoid.count(y2));
        kid = rename_free(kid, y, y2);
        y = y2;
      }
      return deriv_lam(m, y, wsub(m, kid, x, std::move(parts), n));
    }
    case Rule::App: {
      // distribute parts to kids by the types each kid consumed at x
      auto take = [&](const MultiSet& want) {
        std::vector<DerivPtr> got;
        for (const auto& ty : want) {
          for (size_t i = 0; i < parts.size(); i++)
            if (elem_eq(parts[i]->type, ty)) {
              got.push_back(parts[i]);
              parts.erase(parts.begin() + (long)i);
              break;
            }
        }
        return got;
      };
      DerivPtr fn = wsub(m, d->kids[0], x, take(d->kids[0]->env.get(x)), n);
      std::vector<DerivPtr> args;
      for (size_t i = 1; i < d->kids.size(); i++)
        args.push_back(wsub(m, d->kids[i], x, take(d->kids[i]->env.get(x)), n));
      return deriv_app(m, fn, args, subst(d->subject->b, x, n));
    }
  }
  return d;
}

DerivPtr weighted_substitution_probe(const Model& m, const DerivPtr& d, const std::string& x,
                                     const std::vector<DerivPtr>& parts, const TermPtr& n) {
  MultiSet got;
  for (const auto& p : parts) {
    if (!alpha_eq(p->subject, n))
      throw std::invalid_argument("substitution probe: part subject is not the payload");
    got.push_back(p->type);
  }
  if (!ms_eq(ms_sorted(std::move(got)), d->env.get(x)))
    throw std::invalid_argument("substitution probe: part types do not match the uses of " + x);
  return wsub(m, d, x, parts, n);
}

// ---------- subject reduction probe ----------

namespace {

struct StepOut {
  DerivPtr pi;       // types the reduced subject
  DerivPtr pi_bot;   // same shape, redex replaced by _|_ (untyped case)
  bool typed;
};

TermPtr contract(const TermPtr& r) {
  if (r->kind != TermKind::App || r->a->kind != TermKind::Lam)
    throw std::invalid_argument("path does not reach a redex");
  return subst(r->a->a, r->a->name, r->b);
}

StepOut sr_step(const Model& m, const DerivPtr& d, const std::vector<int>& path, size_t i) {
  if (i == path.size()) {
    if (d->rule != Rule::App || d->kids[0]->rule != Rule::Lam)
      throw std::invalid_argument("path does not reach a typed redex");
    const DerivPtr& fn = d->kids[0];
    std::vector<DerivPtr> parts(d->kids.begin() + 1, d->kids.end());
    DerivPtr body = fn->kids[0];
    return {wsub(m, body, fn->subject->name, parts, d->subject->b), nullptr, true};
  }
  int step = path[i];
  if (d->rule == Rule::Lam && step == 0) {
    StepOut s = sr_step(m, d->kids[0], path, i + 1);
    return {deriv_lam(m, d->subject->name, s.pi),
            s.pi_bot ? deriv_lam(m, d->subject->name, s.pi_bot) : nullptr, s.typed};
  }
  if (d->rule == Rule::App && step == 0) {
    StepOut s = sr_step(m, d->kids[0], path, i + 1);
    std::vector<DerivPtr> args(d->kids.begin() + 1, d->kids.end());
    return {deriv_app(m, s.pi, args, d->subject->b),
            s.pi_bot ? deriv_app(m, s.pi_bot, args, d->subject->b) : nullptr, s.typed};
  }
  if (d->rule == Rule::App && step == 1) {
    std::vector<int> rest(path.begin() + (long)i + 1, path.end());
    TermPtr arg = d->subject->b;
    TermPtr arg_red = replace_at(arg, rest, contract(subterm_at(arg, rest)));
    TermPtr arg_bot = replace_at(arg, rest, mk_bot());
    if (d->kids.size() == 1)  // untyped argument: rewrite subjects only
      return {deriv_app(m, d->kids[0], {}, arg_red), deriv_app(m, d->kids[0], {}, arg_bot), false};
    std::vector<DerivPtr> red, bot;
    bool typed = false, all_untyped = true;
    for (size_t k = 1; k < d->kids.size(); k++) {
      StepOut s = sr_step(m, d->kids[k], path, i + 1);
      red.push_back(s.pi);
      typed = typed || s.typed;
      if (s.pi_bot)
        bot.push_back(s.pi_bot);
      else
        all_untyped = false;
    }
    DerivPtr pi = deriv_app(m, d->kids[0], red, arg_red);
    DerivPtr pi_bot =
        (!typed && all_untyped) ? deriv_app(m, d->kids[0], bot, arg_bot) : nullptr;
    return {pi, pi_bot, typed};
  }
  throw std::invalid_argument("path leaves the derivation at step " + std::to_string(i));
}

}  // namespace

SRProbeReport weighted_subject_reduction_probe(const Model& m, const DerivPtr& d,
                                               const std::vector<int>& path) {
  contract(subterm_at(d->subject, path));  // validates the redex up front
  StepOut s = sr_step(m, d, path, 0);
  SRProbeReport rep;
  rep.disjunct = s.typed ? 1 : 2;
  rep.reduced = s.pi;
  rep.bot_variant = s.pi_bot;
  rep.app_before = app_count(d);
  rep.app_after = app_count(s.pi);
  return rep;
}

}  // namespace rgm
