#pragma once
#include <vector>

#include "rgm/term.hpp"
#include "rgm/treespec.hpp"

namespace rgm {

// syntactic approximant: arguments of the head variable are kept, every
// redex or undefined head becomes _|_; no reduction performed
TermPtr direct_approximant(const TermPtr& t);

// tree prefix of the given term: depth counts head-spine levels (depth 0
// is _|_), each node gets node_fuel head reduction steps; a node whose
// head reduction runs out of fuel, or whose head is undefined, is _|_
TermPtr bt_approximant(const TermPtr& t, unsigned depth, unsigned long node_fuel);

// every cut of the depth-bounded prefix, deduplicated, ordered by
// normal-form size then print
std::vector<TermPtr> approximants(const TermPtr& t, unsigned depth, unsigned long node_fuel);

// does the normal form t match s after eta-expanding s and cutting with
// _|_; t and s must be beta-bot normal
bool matches_eta_bot(const TermPtr& t, const TermPtr& s);

// depth-bounded prefix of the tree-shaped term over branching function
// tree with the given head variable; binders are z0, z1, ... numbered in
// traversal order
TermPtr jt_approximant(const RecTree& tree, const std::string& headvar, unsigned depth);

}  // namespace rgm
