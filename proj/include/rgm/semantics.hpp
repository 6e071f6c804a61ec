#pragma once
#include "rgm/boehm.hpp"
#include "rgm/derivation.hpp"

namespace rgm {

// Membership and comparison work on depth/fuel bounded tree prefixes.
// Positive answers are definitive (a prefix judgment belongs to the full
// interpretation); negative answers hold at the stated bound only.

enum class MemberVerdict {
  Member,                 // derived on the prefix
  NonMemberAtBound,       // the prefix is _|_: nothing is typable yet
  MemberNotFoundAtBound,  // search exhausted the prefix without a derivation
  SearchExhausted         // step budget ran out
};

struct MemberResult {
  MemberVerdict verdict;
  DerivPtr witness;  // Member only
  TermPtr prefix;
  unsigned depth;
  unsigned long fuel;
};

MemberResult member(const Model& m, const TermPtr& t, const Environment& g, const ElemPtr& a,
                    unsigned depth, unsigned long fuel, const SearchBudget& budget = {});

struct InterpResult {
  std::vector<std::pair<Judgment, DerivPtr>> judgments;  // sorted by (type, env)
  TermPtr prefix;
  unsigned size_bound;
  unsigned depth;
  unsigned long fuel;
};

InterpResult interp_bounded(const Model& m, const TermPtr& t, unsigned size_bound, unsigned depth,
                            unsigned long fuel);

enum class CompareVerdict {
  EqualAtBound,
  LeftSubRightAtBound,  // left's judgments contained in right's, strictly
  RightSubLeftAtBound,
  IncomparableAtBound
};

// Set comparison of bounded interpretations.  One-sided judgments are
// re-checked on the other term at doubled depth and fuel; only survivors
// count as separation witnesses.
struct CompareResult {
  CompareVerdict verdict;
  std::vector<Judgment> left_only, right_only;
  unsigned size_bound;
  unsigned depth;
  unsigned long fuel;
};

CompareResult compare(const Model& m, const TermPtr& left, const TermPtr& right,
                      unsigned size_bound, unsigned depth, unsigned long fuel);

// does the left tree match the right tree up to eta expansion of the
// right side and cutting of the left, on bounded prefixes
struct LerResult {
  bool holds_at_bound;
  TermPtr offending;  // left prefix that failed to match
  TermPtr left_prefix, right_prefix;
  unsigned depth;
  unsigned long fuel;
};

LerResult ler_probe(const TermPtr& left, const TermPtr& right, unsigned depth, unsigned long fuel);

}  // namespace rgm
