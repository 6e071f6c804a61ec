#include "rgm/treespec.hpp"

#include <stdexcept>

namespace rgm {

namespace {

struct Tok {
  enum Kind { Num, Id, Sym, End } kind;
  unsigned long num = 0;
  std::string text;
  size_t pos = 0;
};

std::vector<Tok> lex(const std::string& src) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      i++;
      continue;
    }
    size_t start = i;
    if (c >= '0' && c <= '9') {
      unsigned long v = 0;
      while (i < src.size() && src[i] >= '0' && src[i] <= '9') {
        if (v > 100000000) throw std::invalid_argument("tree expr: number too large");
        v = v * 10 + (unsigned long)(src[i] - '0');
        i++;
      }
      out.push_back({Tok::Num, v, "", start});
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      std::string id;
      while (i < src.size() && ((src[i] >= 'a' && src[i] <= 'z') || (src[i] >= 'A' && src[i] <= 'Z'))) id += src[i++];
      out.push_back({Tok::Id, 0, id, start});
      continue;
    }
    if (c == '<' || c == '>' || c == '=' || c == '!') {
      std::string s(1, c);
      i++;
      if (i < src.size() && src[i] == '=') {
        s += '=';
        i++;
      }
      if (s == "=" || s == "!") throw std::invalid_argument("tree expr: bad operator at offset " + std::to_string(start));
      out.push_back({Tok::Sym, 0, s, start});
      continue;
    }
    if (c == '+' || c == '-' || c == '*' || c == '(' || c == ')' || c == ',') {
      out.push_back({Tok::Sym, 0, std::string(1, c), start});
      i++;
      continue;
    }
    throw std::invalid_argument("tree expr: unexpected character at offset " + std::to_string(i));
  }
  out.push_back({Tok::End, 0, "", src.size()});
  return out;
}

TreeExprPtr mk(TreeExpr::Op op, TreeExprPtr x = nullptr, TreeExprPtr y = nullptr,
               TreeExprPtr z = nullptr) {
  return std::make_shared<TreeExpr>(TreeExpr{op, 0, std::move(x), std::move(y), std::move(z)});
}

struct ExprParser {
  std::vector<Tok> ts;
  size_t i = 0;

  const Tok& cur() const { return ts[i]; }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("tree expr: " + msg + " at offset " + std::to_string(cur().pos));
  }

  bool eat_sym(const std::string& s) {
    if (cur().kind == Tok::Sym && cur().text == s) {
      i++;
      return true;
    }
    return false;
  }

  bool eat_id(const std::string& s) {
    if (cur().kind == Tok::Id && cur().text == s) {
      i++;
      return true;
    }
    return false;
  }

  TreeExprPtr expr() {
    if (eat_id("if")) {
      TreeExprPtr c = expr();
      if (!eat_id("then")) fail("expected 'then'");
      TreeExprPtr a = expr();
      if (!eat_id("else")) fail("expected 'else'");
      TreeExprPtr b = expr();
      return mk(TreeExpr::Op::If, c, a, b);
    }
    return cmp();
  }

  TreeExprPtr cmp() {
    TreeExprPtr l = add();
    static const std::pair<const char*, TreeExpr::Op> ops[] = {
        {"<=", TreeExpr::Op::Le}, {">=", TreeExpr::Op::Ge}, {"==", TreeExpr::Op::Eq},
        {"!=", TreeExpr::Op::Ne}, {"<", TreeExpr::Op::Lt},  {">", TreeExpr::Op::Gt},
    };
    for (auto& [sym, op] : ops)
      if (cur().kind == Tok::Sym && cur().text == sym) {
        i++;
        return mk(op, l, add());
      }
    return l;
  }

  TreeExprPtr add() {
    TreeExprPtr l = mul();
    while (true) {
      if (eat_sym("+"))
        l = mk(TreeExpr::Op::Add, l, mul());
      else if (eat_sym("-"))
        l = mk(TreeExpr::Op::Sub, l, mul());
      else
        return l;
    }
  }

  TreeExprPtr mul() {
    TreeExprPtr l = atom();
    while (eat_sym("*")) l = mk(TreeExpr::Op::Mul, l, atom());
    return l;
  }

  TreeExprPtr pair_fn(TreeExpr::Op op) {
    if (!eat_sym("(")) fail("expected '('");
    TreeExprPtr a = expr();
    if (!eat_sym(",")) fail("expected ','");
    TreeExprPtr b = expr();
    if (!eat_sym(")")) fail("expected ')'");
    return mk(op, a, b);
  }

  TreeExprPtr atom() {
    if (cur().kind == Tok::Num) {
      auto e = std::make_shared<TreeExpr>(TreeExpr{TreeExpr::Op::Num, cur().num, nullptr, nullptr, nullptr});
      i++;
      return e;
    }
    if (eat_id("len")) return mk(TreeExpr::Op::Len);
    if (eat_id("last")) return mk(TreeExpr::Op::Last);
    if (eat_id("n")) return mk(TreeExpr::Op::N);
    if (eat_id("min")) return pair_fn(TreeExpr::Op::Min);
    if (eat_id("max")) return pair_fn(TreeExpr::Op::Max);
    if (eat_sym("(")) {
      TreeExprPtr e = expr();
      if (!eat_sym(")")) fail("expected ')'");
      return e;
    }
    fail("expected expression");
  }
};

}  // namespace

TreeExprPtr parse_tree_expr(const std::string& text) {
  ExprParser p{lex(text)};
  TreeExprPtr e = p.expr();
  if (p.cur().kind != Tok::End) p.fail("trailing input");
  return e;
}

unsigned long eval_tree_expr(const TreeExprPtr& e, unsigned long len, unsigned long last,
                             unsigned long n) {
  auto ev = [&](const TreeExprPtr& x) { return eval_tree_expr(x, len, last, n); };
  switch (e->op) {
    case TreeExpr::Op::Num: return e->num;
    case TreeExpr::Op::Len: return len;
    case TreeExpr::Op::Last: return last;
    case TreeExpr::Op::N: return n;
    case TreeExpr::Op::Add: return ev(e->x) + ev(e->y);
    case TreeExpr::Op::Sub: {
      unsigned long a = ev(e->x), b = ev(e->y);
      return a > b ? a - b : 0;
    }
    case TreeExpr::Op::Mul: return ev(e->x) * ev(e->y);
    case TreeExpr::Op::Min: return std::min(ev(e->x), ev(e->y));
    case TreeExpr::Op::Max: return std::max(ev(e->x), ev(e->y));
    case TreeExpr::Op::Lt: return ev(e->x) < ev(e->y) ? 1 : 0;
    case TreeExpr::Op::Le: return ev(e->x) <= ev(e->y) ? 1 : 0;
    case TreeExpr::Op::Gt: return ev(e->x) > ev(e->y) ? 1 : 0;
    case TreeExpr::Op::Ge: return ev(e->x) >= ev(e->y) ? 1 : 0;
    case TreeExpr::Op::Eq: return ev(e->x) == ev(e->y) ? 1 : 0;
    case TreeExpr::Op::Ne: return ev(e->x) != ev(e->y) ? 1 : 0;
    case TreeExpr::Op::If: return eval_tree_expr(e->x, len, last, n) ? eval_tree_expr(e->y, len, last, n)
                                                                     : eval_tree_expr(e->z, len, last, n);
  }
  return 0;
}

unsigned long RecTree::branching(const std::vector<unsigned long>& sigma) const {
  return eval_tree_expr(spec, sigma.size(), sigma.empty() ? 0 : sigma.back(), 0);
}

unsigned long PathSpec::at(unsigned long n) const { return eval_tree_expr(spec, 0, 0, n); }

RecTree parse_rec_tree(const std::string& text) { return RecTree{parse_tree_expr(text), text}; }

PathSpec parse_path_spec(const std::string& text) { return PathSpec{parse_tree_expr(text), text}; }

}  // namespace rgm
