#include "rgm/term.hpp"

#include <algorithm>
#include <map>

namespace rgm {

TermPtr mk_var(std::string name) {
  return std::make_shared<Term>(Term{TermKind::Var, std::move(name), nullptr, nullptr});
}

TermPtr mk_lam(std::string binder, TermPtr body) {
  return std::make_shared<Term>(Term{TermKind::Lam, std::move(binder), std::move(body), nullptr});
}

TermPtr mk_app(TermPtr fn, TermPtr arg) {
  return std::make_shared<Term>(Term{TermKind::App, "", std::move(fn), std::move(arg)});
}

TermPtr mk_bot() {
  static const TermPtr bot = std::make_shared<Term>(Term{TermKind::Bot, "", nullptr, nullptr});
  return bot;
}

static bool aeq(const TermPtr& s, const TermPtr& t,
                std::map<std::string, int>& ms, std::map<std::string, int>& mt, int depth) {
  if (s->kind != t->kind) return false;
  switch (s->kind) {
    case TermKind::Bot:
      return true;
    case TermKind::Var: {
      auto is = ms.find(s->name), it = mt.find(t->name);
      if (is != ms.end() || it != mt.end())
        return is != ms.end() && it != mt.end() && is->second == it->second;
      return s->name == t->name;
    }
    case TermKind::App:
      return aeq(s->a, t->a, ms, mt, depth) && aeq(s->b, t->b, ms, mt, depth);
    case TermKind::Lam: {
      auto ms2 = ms, mt2 = mt;
      ms2[s->name] = depth;
      mt2[t->name] = depth;
      return aeq(s->a, t->a, ms2, mt2, depth + 1);
    }
  }
  return false;
}

bool alpha_eq(const TermPtr& s, const TermPtr& t) {
  std::map<std::string, int> ms, mt;
  return aeq(s, t, ms, mt, 0);
}

static void fv(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Bot:
      return;
    case TermKind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case TermKind::App:
      fv(t->a, bound, out);
      fv(t->b, bound, out);
      return;
    case TermKind::Lam: {
      bool fresh = bound.insert(t->name).second;
      fv(t->a, bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
  }
}

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  fv(t, bound, out);
  return out;
}

bool has_bottom(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Bot: return true;
    case TermKind::Var: return false;
    case TermKind::Lam: return has_bottom(t->a);
    case TermKind::App: return has_bottom(t->a) || has_bottom(t->b);
  }
  return false;
}

Spine decompose(const TermPtr& t) {
  Spine s;
  TermPtr cur = t;
  while (cur->kind == TermKind::Lam) {
    s.binders.push_back(cur->name);
    cur = cur->a;
  }
  while (cur->kind == TermKind::App) {
    s.args.push_back(cur->b);
    cur = cur->a;
  }
  std::reverse(s.args.begin(), s.args.end());
  s.head = cur;
  return s;
}

TermPtr recompose(const Spine& s) {
  TermPtr t = s.head;
  for (const auto& a : s.args) t = mk_app(t, a);
  for (auto it = s.binders.rbegin(); it != s.binders.rend(); ++it) t = mk_lam(*it, t);
  return t;
}

bool is_beta_normal(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Bot:
    case TermKind::Var:
      return true;
    case TermKind::Lam:
      return is_beta_normal(t->a);
    case TermKind::App:
      return t->a->kind != TermKind::Lam && is_beta_normal(t->a) && is_beta_normal(t->b);
  }
  return false;
}

bool is_beta_bot_normal(const TermPtr& t) {
  if (t->kind == TermKind::Bot) return true;
  Spine s = decompose(t);
  if (s.head->kind != TermKind::Var) return false;  // head redex or undefined in redex position
  for (const auto& a : s.args)
    if (!is_beta_bot_normal(a)) return false;
  return true;
}

unsigned long size_nf(const TermPtr& t) {
  if (!is_beta_bot_normal(t)) throw std::invalid_argument("size_nf: not a normal form: " + print_term(t));
  if (t->kind == TermKind::Bot) return 0;
  Spine s = decompose(t);
  unsigned long n = s.binders.size() + 1;
  for (const auto& a : s.args) n += size_nf(a);
  return n;
}

static std::string prime_fresh(const std::string& base, const std::set<std::string>& avoid) {
  std::string cand = base;
  do cand += '\''; while (avoid.count(cand));
  return cand;
}

TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& n) {
  switch (t->kind) {
    case TermKind::Bot:
      return t;
    case TermKind::Var:
      return t->name == x ? n : t;
    case TermKind::App: {
      TermPtr f = subst(t->a, x, n), a = subst(t->b, x, n);
      if (f == t->a && a == t->b) return t;
      return mk_app(f, a);
    }
    case TermKind::Lam: {
      if (t->name == x) return t;
      auto body_free = free_vars(t->a);
      if (!body_free.count(x)) return t;
      auto n_free = free_vars(n);
      if (n_free.count(t->name)) {
        std::set<std::string> avoid = n_free;
        avoid.insert(body_free.begin(), body_free.end());
        avoid.insert(x);
        std::string y = prime_fresh(t->name, avoid);
        TermPtr renamed = subst(t->a, t->name, mk_var(y));
        return mk_lam(y, subst(renamed, x, n));
      }
      return mk_lam(t->name, subst(t->a, x, n));
    }
  }
  return t;
}

// ---------- printing ----------

static void pp(const TermPtr& t, bool paren_lam, bool paren_app, std::string& out) {
  switch (t->kind) {
    case TermKind::Bot:
      out += "_|_";
      return;
    case TermKind::Var:
      out += t->name;
      return;
    case TermKind::Lam: {
      if (paren_lam) out += '(';
      out += '\\';
      TermPtr cur = t;
      bool first = true;
      while (cur->kind == TermKind::Lam) {
        if (!first) out += ' ';
        out += cur->name;
        first = false;
        cur = cur->a;
      }
      out += '.';
      pp(cur, false, false, out);
      if (paren_lam) out += ')';
      return;
    }
    case TermKind::App: {
      if (paren_app) out += '(';
      pp(t->a, true, false, out);
      out += ' ';
      pp(t->b, true, true, out);
      if (paren_app) out += ')';
      return;
    }
  }
}

std::string print_term(const TermPtr& t) {
  std::string out;
  pp(t, false, false, out);
  return out;
}

static TermPtr at_path(const TermPtr& t, const std::vector<int>& path, size_t i,
                       const TermPtr* repl) {
  if (i == path.size()) return repl ? *repl : t;
  int step = path[i];
  auto bad = [&] {
    throw std::invalid_argument("no subterm at path step " + std::to_string(i) + " in " +
                                print_term(t));
  };
  switch (t->kind) {
    case TermKind::Lam: {
      if (step != 0) bad();
      TermPtr sub = at_path(t->a, path, i + 1, repl);
      return repl ? mk_lam(t->name, sub) : sub;
    }
    case TermKind::App: {
      if (step != 0 && step != 1) bad();
      TermPtr sub = at_path(step == 0 ? t->a : t->b, path, i + 1, repl);
      if (!repl) return sub;
      return step == 0 ? mk_app(sub, t->b) : mk_app(t->a, sub);
    }
    default:
      bad();
  }
  return t;
}

TermPtr subterm_at(const TermPtr& t, const std::vector<int>& path) {
  return at_path(t, path, 0, nullptr);
}

TermPtr replace_at(const TermPtr& t, const std::vector<int>& path, const TermPtr& repl) {
  return at_path(t, path, 0, &repl);
}

// ---------- combinators ----------

static TermPtr church(unsigned long n) {
  TermPtr body = mk_var("z");
  for (unsigned long i = 0; i < n; i++) body = mk_app(mk_var("f"), body);
  return mk_lam("f", mk_lam("z", body));
}

// n-fold eta expansion of the identity, already in normal form
static TermPtr one_fam(unsigned long n) {
  if (n == 0) return mk_lam("x", mk_var("x"));
  auto z = [](unsigned long i) { return "z" + std::to_string(i); };
  TermPtr t = mk_var(z(n - 1));
  for (unsigned long k = n - 1; k >= 1; k--)
    t = mk_lam(z(k), mk_app(mk_var(z(k - 1)), t));
  return mk_lam("x", mk_lam(z(0), mk_app(mk_var("x"), t)));
}

static bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

TermPtr combinator(const std::string& name) {
  static const std::map<std::string, const char*> table = {
      {"I", "\\x.x"},
      {"K", "\\x y.x"},
      {"F", "\\x y.y"},
      {"Delta", "\\x.x x"},
      {"Omega", "(\\x.x x) (\\x.x x)"},
      {"Delta3", "\\x.x x x"},
      {"Omega3", "(\\x.x x x) (\\x.x x x)"},
      {"Y", "\\f.(\\x.f (x x)) (\\x.f (x x))"},
  };
  auto it = table.find(name);
  if (it != table.end()) return parse_term(it->second);
  if (name == "J") return mk_app(combinator("Y"), parse_term("\\j x y.x (j y)"));
  if (name == "1") return one_fam(1);
  auto family = [&](const std::string& prefix) -> long {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return -1;
    std::string idx = name.substr(prefix.size());
    if (!all_digits(idx) || idx.size() > 4) return -1;
    return std::stol(idx);
  };
  if (long n = family("one"); n >= 0) return one_fam((unsigned long)n);
  if (long n = family("c"); n >= 0) return church((unsigned long)n);
  throw std::invalid_argument("unknown combinator: " + name);
}

// ---------- parsing ----------

namespace {

struct Parser {
  const std::string& src;
  size_t pos = 0;
  bool escapes;

  explicit Parser(const std::string& s, bool esc) : src(s), escapes(esc) {}

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg + " at offset " + std::to_string(pos), pos); }

  void skip_ws() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\n' || src[pos] == '\r')) pos++;
  }

  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  static bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
  static bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '_' || c == '\'';
  }

  std::string ident() {
    skip_ws();
    if (pos >= src.size() || !ident_start(src[pos])) fail("expected identifier");
    size_t start = pos;
    while (pos < src.size() && ident_char(src[pos])) pos++;
    return src.substr(start, pos - start);
  }

  bool try_bot() {
    skip_ws();
    if (src.compare(pos, 3, "_|_") == 0) {
      pos += 3;
      return true;
    }
    return false;
  }

  TermPtr atom() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of input");
    char c = src[pos];
    if (c == '(') {
      pos++;
      TermPtr t = term();
      skip_ws();
      if (pos >= src.size() || src[pos] != ')') fail("expected ')'");
      pos++;
      return t;
    }
    if (c == '_') {
      if (try_bot()) return mk_bot();
      fail("expected term");
    }
    if (c == '@') {
      if (!escapes) fail("escapes not allowed here");
      pos++;
      size_t start = pos;
      while (pos < src.size() && (ident_char(src[pos]))) pos++;
      if (pos == start) fail("expected combinator name");
      std::string name = src.substr(start, pos - start);
      try {
        return combinator(name);
      } catch (const std::invalid_argument& e) {
        pos = start;
        fail(e.what());
      }
    }
    if (ident_start(c)) return mk_var(ident());
    fail("expected term");
  }

  bool atom_ahead() {
    skip_ws();
    if (pos >= src.size()) return false;
    char c = src[pos];
    return c == '(' || c == '@' || ident_start(c) || src.compare(pos, 3, "_|_") == 0;
  }

  TermPtr term() {
    skip_ws();
    if (pos < src.size() && src[pos] == '\\') {
      pos++;
      std::vector<std::string> binders;
      binders.push_back(ident());
      while (true) {
        skip_ws();
        if (pos < src.size() && src[pos] == '.') {
          pos++;
          break;
        }
        binders.push_back(ident());
      }
      TermPtr body = term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = mk_lam(*it, body);
      return body;
    }
    TermPtr t = atom();
    while (atom_ahead()) t = mk_app(t, atom());
    return t;
  }
};

}  // namespace

TermPtr parse_term(const std::string& text, bool allow_escapes) {
  Parser p(text, allow_escapes);
  TermPtr t = p.term();
  if (!p.at_end()) p.fail("trailing input");
  return t;
}

}  // namespace rgm
