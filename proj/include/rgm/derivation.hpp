#pragma once
#include <functional>
#include <string>
#include <vector>

#include "rgm/model.hpp"
#include "rgm/term.hpp"

namespace rgm {

enum class Rule { Var, Lam, App };

// Typing derivation.  Kids: Lam has the body derivation; App has the
// function derivation followed by one derivation per argument premise
// (possibly none, in which case the argument term is untyped and only
// recorded in the subject).  Environments and types are canonical for
// the model that built the node.
struct Derivation;
using DerivPtr = std::shared_ptr<const Derivation>;

struct Derivation {
  Rule rule;
  Environment env;
  TermPtr subject;
  ElemPtr type;
  std::vector<DerivPtr> kids;
};

// smart constructors; they validate premises and throw std::invalid_argument
DerivPtr deriv_var(const std::string& x, const ElemPtr& a);
DerivPtr deriv_lam(const Model& m, const std::string& x, const DerivPtr& body);
DerivPtr deriv_app(const Model& m, const DerivPtr& fn, const std::vector<DerivPtr>& args,
                   const TermPtr& arg_term);

unsigned long app_count(const DerivPtr& d);

// equality of the underlying rule/environment/type trees, subjects ignored
bool deriv_shape_eq(const DerivPtr& a, const DerivPtr& b);

struct CheckResult {
  bool ok = true;
  std::string path;  // kid indices to the offending node
  std::string reason;
};
CheckResult check_derivation(const Model& m, const DerivPtr& d);

std::string deriv_sexpr(const Model& m, const DerivPtr& d);

struct Judgment {
  Environment env;
  TermPtr subject;
  ElemPtr type;
};
int cmp_judgment(const Judgment& a, const Judgment& b);  // on (type, env)
std::string print_judgment(const Model& m, const Judgment& j);

struct SearchBudget {
  unsigned long max_steps = 200000;
};

enum class DeriveStatus { Found, NotDerivable, BudgetExhausted, NonNormalSubject };

struct DeriveResult {
  DeriveStatus status;
  DerivPtr deriv;  // Found only
  unsigned long steps_used = 0;
};

// decide g |- t : a for beta-bot normal t.  Syntax directed: every type
// flows from the target and the head variables, so exhaustion refutes.
DeriveResult derive(const Model& m, const Environment& g, const TermPtr& t, const ElemPtr& a,
                    const SearchBudget& budget);

// all judgments of a beta-bot normal subject in which every multiset
// member (environment entries, arrow sources, premise types) has leaf
// size <= bound, paired with one witness derivation each; deterministic
// order by (type, env).  An optional keep predicate discards judgments as
// they are formed, together with everything that would be built on top of
// them; it must therefore be hereditary (any judgment built from a
// discarded one would be discarded as well), or the result is undefined.
using JudgmentFilter = std::function<bool(const Judgment&)>;
std::vector<std::pair<Judgment, DerivPtr>> enumerate_derivations(const Model& m, const TermPtr& t,
                                                                 unsigned bound,
                                                                 const JudgmentFilter& keep = {});

// substitution on derivations: d types M with x:[b1..bn]; parts type N
// with those exact types; result types M{N/x} over the summed
// environment, with the same applicative structure
DerivPtr weighted_substitution_probe(const Model& m, const DerivPtr& d, const std::string& x,
                                     const std::vector<DerivPtr>& parts, const TermPtr& n);

// one beta step at the given subject path (Lam kid 0 is the body, App
// kid 0/1 function/argument).  Either the redex was typed and the
// measure strictly drops, or it sat in untyped positions and the reduced
// derivation has the same shape; then a variant typing the subject with
// the redex replaced by _|_ is also produced.
struct SRProbeReport {
  int disjunct = 0;      // 1 typed, 2 untyped
  DerivPtr reduced;      // types the contracted subject
  DerivPtr bot_variant;  // disjunct 2 only
  unsigned long app_before = 0;
  unsigned long app_after = 0;
};
SRProbeReport weighted_subject_reduction_probe(const Model& m, const DerivPtr& d,
                                               const std::vector<int>& path);

}  // namespace rgm
