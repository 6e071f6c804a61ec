#pragma once
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgm {

enum class TermKind { Var, Lam, App, Bot };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable lambda term with an explicit undefined constant.  Named
// representation; every operation respects alpha-equivalence and
// substitution freshens captured binders by priming, so printing is
// deterministic.
struct Term {
  TermKind kind;
  std::string name;  // Var: the variable, Lam: the binder
  TermPtr a;         // Lam: body, App: function
  TermPtr b;         // App: argument
};

TermPtr mk_var(std::string name);
TermPtr mk_lam(std::string binder, TermPtr body);
TermPtr mk_app(TermPtr fn, TermPtr arg);
TermPtr mk_bot();

bool alpha_eq(const TermPtr& s, const TermPtr& t);
std::set<std::string> free_vars(const TermPtr& t);
bool has_bottom(const TermPtr& t);

// head spine: t = \binders. head arg1 ... argk with head not an App.
// head is a Var, Bot, or Lam (the last only when t has a head redex).
struct Spine {
  std::vector<std::string> binders;
  TermPtr head;
  std::vector<TermPtr> args;
};
Spine decompose(const TermPtr& t);
TermPtr recompose(const Spine& s);

bool is_beta_normal(const TermPtr& t);
bool is_beta_bot_normal(const TermPtr& t);

// node count of a normal form: undefined counts 0, an abstraction adds 1,
// a head variable with k arguments adds 1 plus the argument counts.
// Throws std::invalid_argument unless is_beta_bot_normal.
unsigned long size_nf(const TermPtr& t);

// capture-free t{n/x}
TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& n);

struct parse_error : std::invalid_argument {
  size_t pos;
  parse_error(const std::string& what, size_t p) : std::invalid_argument(what), pos(p) {}
};

// Concrete syntax: identifiers [a-zA-Z][a-zA-Z0-9_']*, "\x y. M" or
// "\x.\y.M" for abstraction, juxtaposition (left associative) for
// application, _|_ for the undefined constant, parentheses.
// With allow_escapes, @Name splices a table combinator.
TermPtr parse_term(const std::string& text, bool allow_escapes = false);
std::string print_term(const TermPtr& t);

// Table combinators: I K F Delta Omega Y J Delta3 Omega3, plus the
// indexed families c<n> (Church numerals) and one<n> (eta expansions of
// the identity; one1 is also spelled "1").
TermPtr combinator(const std::string& name);

// path steps: Lam 0 descends to the body, App 0 to the function and 1 to
// the argument; out-of-range paths throw std::invalid_argument
TermPtr subterm_at(const TermPtr& t, const std::vector<int>& path);
TermPtr replace_at(const TermPtr& t, const std::vector<int>& path, const TermPtr& repl);

}  // namespace rgm
