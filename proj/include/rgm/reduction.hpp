#pragma once
#include <optional>

#include "rgm/term.hpp"

namespace rgm {

struct ReductionOutcome {
  TermPtr result;
  unsigned long steps = 0;
  bool completed = false;
};

// one leftmost-outermost beta contraction; nullopt when beta-normal
std::optional<TermPtr> beta_step(const TermPtr& t);

// leftmost-outermost reduction to beta normal form, at most fuel steps
ReductionOutcome beta_normalize(const TermPtr& t, unsigned long fuel);

// contracts head redexes only; completed once the head is a variable or
// the undefined constant
ReductionOutcome head_reduce(const TermPtr& t, unsigned long fuel);

TermPtr eta_nf(const TermPtr& t);

// collapses \x._|_ and _|_ M to _|_, bottom up; leaves beta redexes alone
TermPtr bot_normalize(const TermPtr& t);

unsigned long count_beta_redexes(const TermPtr& t);

// structural prefix order on beta-bot normal forms: _|_ below everything,
// otherwise same shape up to alpha with arguments compared pointwise.
// Throws std::invalid_argument when either side is not normal.
bool le_bot(const TermPtr& lo, const TermPtr& hi);

}  // namespace rgm
