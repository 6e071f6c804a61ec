#pragma once
#include "rgm/semantics.hpp"
#include "rgm/treespec.hpp"

namespace rgm {

// occurrences of the empty multiset, tracked by sign.  Defined only for
// models without equations, where elements are free syntax trees.
struct PolarityReport {
  bool positive = false;
  bool negative = false;
};

PolarityReport polarity(const Model& m, const ElemPtr& a);
// multisets and environments take the polarity of some member, unflipped
PolarityReport polarity_ms(const Model& m, const MultiSet& ms);
PolarityReport polarity_env(const Model& m, const Environment& g);

enum class HasNfStatus { Normalizable, NoEvidenceAtBound };

// search the bounded interpretation in the countable-atom model for a
// judgment whose type has no positive empty multiset and whose environment
// has no negative one.  A hit certifies a beta normal form; absence is
// evidence relative to the bounds only.  Ramps the element size upward so
// cheap witnesses are found before expensive enumerations run.
struct HasNfReport {
  HasNfStatus status;
  bool has_witness = false;
  Judgment witness;            // Normalizable only
  unsigned witness_bound = 0;  // element size at which the witness appeared
  unsigned size_bound;
  unsigned depth;
  unsigned long fuel;
};

HasNfReport has_nf_oracle(const TermPtr& t, unsigned size_bound, unsigned depth,
                          unsigned long fuel);

// Witness probes: can an element be unfolded as arrows along a path of a
// recursive tree, offering a nonempty source multiset at the path's branch
// index on every level, and a member of that multiset to continue with?
// Atoms unfold through their defining equation in extensional models only.
enum class WitnessStatus { WitnessToDepth, Refuted };

struct WitnessVerdict {
  WitnessStatus status;
  std::vector<unsigned long> path_prefix;  // branch indices consumed; on
                                           // refutation ends at the level that failed
  unsigned depth = 0;                      // path_prefix length
  std::vector<ElemPtr> elems;              // element chosen per level, on success
  unsigned probe_depth = 0;                // requested depth
};

// follow the fixed path f; throws when f steps outside the tree
WitnessVerdict witness_probe(const Model& m, const ElemPtr& a, const RecTree& t, const PathSpec& f,
                             unsigned depth);

// existential probe: search elements up to the size bound and all branch
// choices for a witness chain reaching the depth
struct KoenigReport {
  bool found = false;
  ElemPtr elem;
  std::vector<unsigned long> path;
  std::vector<ElemPtr> elems;
  unsigned element_bound;
  unsigned depth;
};

KoenigReport lambda_koenig_probe(const Model& m, const RecTree& t, unsigned element_bound,
                                 unsigned depth);

// the same search read the other way round: no witness up to the bound is
// bounded evidence that the tree has none in this model
struct HyperReport {
  bool no_witness_at_bound;
  ElemPtr counterexample;  // witness element when one turned up
  std::vector<unsigned long> path;
  unsigned element_bound;
  unsigned depth;
};

HyperReport hyperimmunity_probe(const Model& m, const RecTree& t, unsigned element_bound,
                                unsigned depth);

// cross-check (extensional models): a path-searched witness for the element
// should pair with the tree prefix NOT typing as that element under
// x : [element], and a refutation with it typing
struct ConsistencyReport {
  bool consistent;
  bool witnessed;
  MemberVerdict member_verdict;
  std::vector<unsigned long> path;  // witness path when witnessed
  unsigned depth;
  unsigned long fuel;
};

ConsistencyReport char_wt_crosscheck(const Model& m, const ElemPtr& a, const RecTree& t,
                                     unsigned depth, unsigned long fuel);

}  // namespace rgm
