#include "rgm/reduction.hpp"

#include <map>

namespace rgm {

std::optional<TermPtr> beta_step(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Bot:
      return std::nullopt;
    case TermKind::Lam:
      if (auto b = beta_step(t->a)) return mk_lam(t->name, *b);
      return std::nullopt;
    case TermKind::App:
      if (t->a->kind == TermKind::Lam) return subst(t->a->a, t->a->name, t->b);
      if (auto f = beta_step(t->a)) return mk_app(*f, t->b);
      if (auto a = beta_step(t->b)) return mk_app(t->a, *a);
      return std::nullopt;
  }
  return std::nullopt;
}

ReductionOutcome beta_normalize(const TermPtr& t, unsigned long fuel) {
  ReductionOutcome out{t, 0, false};
  while (true) {
    auto next = beta_step(out.result);
    if (!next) {
      out.completed = true;
      return out;
    }
    if (out.steps == fuel) return out;
    out.result = *next;
    out.steps++;
  }
}

// contract the redex at the head position, if any
static std::optional<TermPtr> head_step(const TermPtr& t) {
  Spine s = decompose(t);
  if (s.head->kind != TermKind::Lam || s.args.empty()) return std::nullopt;
  Spine r = s;
  r.head = subst(s.head->a, s.head->name, s.args[0]);
  r.args.erase(r.args.begin());
  return recompose(r);
}

ReductionOutcome head_reduce(const TermPtr& t, unsigned long fuel) {
  ReductionOutcome out{t, 0, false};
  while (true) {
    auto next = head_step(out.result);
    if (!next) {
      out.completed = true;
      return out;
    }
    if (out.steps == fuel) return out;
    out.result = *next;
    out.steps++;
  }
}

TermPtr eta_nf(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Bot:
      return t;
    case TermKind::App: {
      TermPtr f = eta_nf(t->a), a = eta_nf(t->b);
      if (f == t->a && a == t->b) return t;
      return mk_app(f, a);
    }
    case TermKind::Lam: {
      TermPtr b = eta_nf(t->a);
      if (b->kind == TermKind::App && b->b->kind == TermKind::Var && b->b->name == t->name &&
          !free_vars(b->a).count(t->name))
        return b->a;
      if (b == t->a) return t;
      return mk_lam(t->name, b);
    }
  }
  return t;
}

TermPtr bot_normalize(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Bot:
      return t;
    case TermKind::App: {
      TermPtr f = bot_normalize(t->a);
      if (f->kind == TermKind::Bot) return f;
      TermPtr a = bot_normalize(t->b);
      if (f == t->a && a == t->b) return t;
      return mk_app(f, a);
    }
    case TermKind::Lam: {
      TermPtr b = bot_normalize(t->a);
      if (b->kind == TermKind::Bot) return b;
      if (b == t->a) return t;
      return mk_lam(t->name, b);
    }
  }
  return t;
}

unsigned long count_beta_redexes(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Bot:
      return 0;
    case TermKind::Lam:
      return count_beta_redexes(t->a);
    case TermKind::App:
      return (t->a->kind == TermKind::Lam ? 1 : 0) + count_beta_redexes(t->a) +
             count_beta_redexes(t->b);
  }
  return 0;
}

static bool leb(const TermPtr& lo, const TermPtr& hi,
                std::map<std::string, int>& ml, std::map<std::string, int>& mh, int depth);

static bool leb(const TermPtr& lo, const TermPtr& hi,
                std::map<std::string, int>& ml, std::map<std::string, int>& mh, int depth) {
  if (lo->kind == TermKind::Bot) return true;
  if (lo->kind != hi->kind) return false;
  switch (lo->kind) {
    case TermKind::Var: {
      auto il = ml.find(lo->name), ih = mh.find(hi->name);
      if (il != ml.end() || ih != mh.end())
        return il != ml.end() && ih != mh.end() && il->second == ih->second;
      return lo->name == hi->name;
    }
    case TermKind::App:
      return leb(lo->a, hi->a, ml, mh, depth) && leb(lo->b, hi->b, ml, mh, depth);
    case TermKind::Lam: {
      auto ml2 = ml, mh2 = mh;
      ml2[lo->name] = depth;
      mh2[hi->name] = depth;
      return leb(lo->a, hi->a, ml2, mh2, depth + 1);
    }
    default:
      return false;
  }
}

bool le_bot(const TermPtr& lo, const TermPtr& hi) {
  if (!is_beta_bot_normal(lo)) throw std::invalid_argument("le_bot: left side not normal: " + print_term(lo));
  if (!is_beta_bot_normal(hi)) throw std::invalid_argument("le_bot: right side not normal: " + print_term(hi));
  std::map<std::string, int> ml, mh;
  return leb(lo, hi, ml, mh, 0);
}

}  // namespace rgm
