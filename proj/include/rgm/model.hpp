#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rgm {

// Element of a graph model: an atom or an arrow from a finite multiset of
// elements to an element.  Multisets are kept sorted; elements produced
// through Model::arrow / Model::canonicalize are canonical, meaning no
// subterm matches an equation key.
struct Element;
using ElemPtr = std::shared_ptr<const Element>;
using MultiSet = std::vector<ElemPtr>;

struct Element {
  bool atom;
  long id = 0;   // atom only
  MultiSet src;  // arrow only
  ElemPtr tgt;   // arrow only
};

ElemPtr mk_atom(long id);

// total order: atoms by id before arrows; arrows lexicographic on
// (source multiset, target)
int cmp_elem(const ElemPtr& a, const ElemPtr& b);
int cmp_ms(const MultiSet& a, const MultiSet& b);
bool elem_eq(const ElemPtr& a, const ElemPtr& b);
bool ms_eq(const MultiSet& a, const MultiSet& b);
MultiSet ms_sorted(MultiSet ms);
MultiSet ms_sum(const MultiSet& a, const MultiSet& b);

// leaf count: each atom occurrence and each empty source multiset counts
// one; arrows themselves are free
unsigned long elem_size(const ElemPtr& e);
long max_atom_id(const ElemPtr& e);

struct Equation {
  MultiSet src;
  ElemPtr tgt;
  long atom;
};

// A model is a set of atoms plus an injective, injectively-keyed partial
// map from arrow pairs to atoms.  Atoms are either a finite list (named
// or numbered) or countably many (numbered, no equations allowed).
class Model {
 public:
  std::string name;
  bool countable = false;
  long natoms = 0;                      // finite case
  std::vector<std::string> atom_names;  // finite named case, else empty
  std::vector<Equation> eqs;            // canonical keys

  ElemPtr atom(long id) const;  // range checked
  ElemPtr arrow(MultiSet src, ElemPtr tgt) const;
  ElemPtr canonicalize(const ElemPtr& e) const;
  std::optional<std::pair<MultiSet, ElemPtr>> unfold_atom(long id) const;
  // syntactic arrow, or the defining equation of an atom
  std::optional<std::pair<MultiSet, ElemPtr>> as_arrow(const ElemPtr& e) const;
  bool is_extensional() const;

  long atom_id(const std::string& display) const;  // -1 when unknown
  std::string atom_display(long id) const;
  ElemPtr parse_element(const std::string& text) const;
  std::string print_element(const ElemPtr& e) const;
  std::string print_ms(const MultiSet& ms) const;

  // all canonical elements of leaf size <= bound; countable models also
  // restrict atom ids to < bound
  std::vector<ElemPtr> enumerate_elements(unsigned bound) const;

  static Model builtin(const std::string& name);  // E, Domega, Dstar
  static Model from_text(const std::string& text, std::string name);
  static Model from_file(const std::string& path);
};

// the atom reached by following arrow targets
ElemPtr range_atom(const ElemPtr& e);

// finite-support variable typing; no empty multisets are stored
struct Environment {
  std::map<std::string, MultiSet> bind;

  const MultiSet& get(const std::string& x) const;
  void add(const std::string& x, const ElemPtr& e);
  Environment without(const std::string& x) const;
  bool empty() const { return bind.empty(); }
};

Environment env_sum(const Environment& a, const Environment& b);
int cmp_env(const Environment& a, const Environment& b);
bool env_eq(const Environment& a, const Environment& b);

// "{x:[a,b], y:[c]}", braces optional when parsing
Environment parse_environment(const Model& m, const std::string& text);
std::string print_environment(const Model& m, const Environment& g);

}  // namespace rgm
