#include "rgm/analysis.hpp"

#include <stdexcept>

namespace rgm {

namespace {

PolarityReport pol(const ElemPtr& e) {
  PolarityReport r;
  if (e->atom) return r;
  if (e->src.empty()) r.negative = true;
  PolarityReport t = pol(e->tgt);
  r.positive |= t.positive;
  r.negative |= t.negative;
  for (const auto& s : e->src) {
    PolarityReport p = pol(s);
    r.positive |= p.negative;
    r.negative |= p.positive;
  }
  return r;
}

void require_free(const Model& m) {
  if (!m.eqs.empty())
    throw std::invalid_argument("polarity is defined for models without equations");
}

}  // namespace

PolarityReport polarity(const Model& m, const ElemPtr& a) {
  require_free(m);
  return pol(a);
}

PolarityReport polarity_ms(const Model& m, const MultiSet& ms) {
  require_free(m);
  PolarityReport r;
  for (const auto& e : ms) {
    PolarityReport p = pol(e);
    r.positive |= p.positive;
    r.negative |= p.negative;
  }
  return r;
}

PolarityReport polarity_env(const Model& m, const Environment& g) {
  PolarityReport r;
  for (const auto& [x, ms] : g.bind) {
    PolarityReport p = polarity_ms(m, ms);
    r.positive |= p.positive;
    r.negative |= p.negative;
  }
  return r;
}

HasNfReport has_nf_oracle(const TermPtr& t, unsigned size_bound, unsigned depth,
                          unsigned long fuel) {
  static const Model e = Model::builtin("E");
  HasNfReport r;
  r.size_bound = size_bound;
  r.depth = depth;
  r.fuel = fuel;
  r.status = HasNfStatus::NoEvidenceAtBound;
  TermPtr prefix = bt_approximant(t, depth, fuel);
  // a bottom anywhere in the prefix poisons every judgment: the bottomed
  // argument is only ever skipped through an empty source, and that empty
  // sits negatively in the head variable's environment entry
  if (has_bottom(prefix)) return r;
  // over normal subjects a negative empty in an environment entry is
  // hereditary: entries merge upward, mirror into the head entry when their
  // carrier becomes an argument, or flip into a positive source member on
  // discharge, so pruning them loses no clean root.  positive empties in
  // types are NOT hereditary (an application consumes the function's source
  // members), so that half is checked on the roots only
  JudgmentFilter entries_clean = [](const Judgment& j) {
    for (const auto& [x, ms] : j.env.bind)
      for (const auto& s : ms)
        if (pol(s).negative) return false;
    return true;
  };
  for (unsigned b = 1; b <= size_bound; b++) {
    auto js = enumerate_derivations(e, prefix, b, entries_clean);
    for (const auto& jd : js) {
      if (pol(jd.first.type).positive) continue;
      r.status = HasNfStatus::Normalizable;
      r.has_witness = true;
      r.witness = jd.first;
      r.witness_bound = b;
      return r;
    }
  }
  return r;
}

namespace {

unsigned long arity(const RecTree& t, const std::vector<unsigned long>& sigma) {
  unsigned long k = t.branching(sigma);
  if (k > 4096) throw std::invalid_argument("tree branching exceeds 4096");
  return k;
}

// read e as an arrow chain and collect up to k source multisets; stops
// early when e is an atom that the model cannot unfold extensionally
std::vector<MultiSet> peel_sources(const Model& m, ElemPtr cur, unsigned long k) {
  std::vector<MultiSet> out;
  while (out.size() < k) {
    if (!cur->atom) {
      out.push_back(cur->src);
      cur = cur->tgt;
      continue;
    }
    if (!m.is_extensional()) break;
    auto u = m.unfold_atom(cur->id);
    if (!u) break;
    out.push_back(u->first);
    cur = u->second;
  }
  return out;
}

// depth-first chase along the fixed path, backtracking over the members
// offered at each level
struct FixedProbe {
  const Model& m;
  const RecTree& t;
  const PathSpec& f;
  unsigned target;
  unsigned long maxdone = 0;  // levels whose requirement some attempt met
  std::vector<ElemPtr> chain;

  bool go(const ElemPtr& e, unsigned level, std::vector<unsigned long>& sigma) {
    if (level == target) return true;
    unsigned long width = arity(t, sigma);
    unsigned long b = f.at(level);
    if (b >= width)
      throw std::invalid_argument("path index " + std::to_string(b) + " outside arity " +
                                  std::to_string(width) + " at level " + std::to_string(level));
    auto srcs = peel_sources(m, e, b + 1);
    if (srcs.size() <= b || srcs[b].empty()) return false;
    if (level + 1 > maxdone) maxdone = level + 1;
    const MultiSet& ms = srcs[b];
    sigma.push_back(b);
    for (size_t i = 0; i < ms.size(); i++) {
      if (i && elem_eq(ms[i - 1], ms[i])) continue;
      chain.push_back(ms[i]);
      if (go(ms[i], level + 1, sigma)) return true;
      chain.pop_back();
    }
    sigma.pop_back();
    return false;
  }
};

// existential variant: branch indices are searched too
struct AnyProbe {
  const Model& m;
  const RecTree& t;
  unsigned target;
  std::vector<unsigned long> path;
  std::vector<ElemPtr> chain;

  bool go(const ElemPtr& e, unsigned level) {
    if (level == target) return true;
    unsigned long width = arity(t, path);
    auto srcs = peel_sources(m, e, width);
    for (unsigned long b = 0; b < srcs.size(); b++) {
      if (srcs[b].empty()) continue;
      path.push_back(b);
      const MultiSet& ms = srcs[b];
      for (size_t i = 0; i < ms.size(); i++) {
        if (i && elem_eq(ms[i - 1], ms[i])) continue;
        chain.push_back(ms[i]);
        if (go(ms[i], level + 1)) return true;
        chain.pop_back();
      }
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

WitnessVerdict witness_probe(const Model& m, const ElemPtr& a, const RecTree& t, const PathSpec& f,
                             unsigned depth) {
  WitnessVerdict v;
  v.probe_depth = depth;
  FixedProbe p{m, t, f, depth};
  std::vector<unsigned long> sigma;
  if (p.go(m.canonicalize(a), 0, sigma)) {
    v.status = WitnessStatus::WitnessToDepth;
    v.path_prefix = sigma;
    v.elems = p.chain;
  } else {
    v.status = WitnessStatus::Refuted;
    for (unsigned long l = 0; l <= p.maxdone; l++) v.path_prefix.push_back(f.at(l));
  }
  v.depth = (unsigned)v.path_prefix.size();
  return v;
}

KoenigReport lambda_koenig_probe(const Model& m, const RecTree& t, unsigned element_bound,
                                 unsigned depth) {
  KoenigReport r;
  r.element_bound = element_bound;
  r.depth = depth;
  for (const auto& e : m.enumerate_elements(element_bound)) {
    AnyProbe p{m, t, depth};
    if (p.go(e, 0)) {
      r.found = true;
      r.elem = e;
      r.path = p.path;
      r.elems = p.chain;
      return r;
    }
  }
  return r;
}

HyperReport hyperimmunity_probe(const Model& m, const RecTree& t, unsigned element_bound,
                                unsigned depth) {
  KoenigReport k = lambda_koenig_probe(m, t, element_bound, depth);
  HyperReport h;
  h.no_witness_at_bound = !k.found;
  h.counterexample = k.elem;
  h.path = k.path;
  h.element_bound = element_bound;
  h.depth = depth;
  return h;
}

ConsistencyReport char_wt_crosscheck(const Model& m, const ElemPtr& a, const RecTree& t,
                                     unsigned depth, unsigned long fuel) {
  if (!m.is_extensional())
    throw std::invalid_argument("cross-check is defined for extensional models");
  ConsistencyReport r;
  r.depth = depth;
  r.fuel = fuel;
  ElemPtr ca = m.canonicalize(a);
  AnyProbe p{m, t, depth};
  r.witnessed = p.go(ca, 0);
  if (r.witnessed) r.path = p.path;
  Environment g;
  g.add("x", ca);
  r.member_verdict = member(m, jt_approximant(t, "x", depth), g, ca, depth, fuel).verdict;
  r.consistent = (r.witnessed && r.member_verdict == MemberVerdict::MemberNotFoundAtBound) ||
                 (!r.witnessed && r.member_verdict == MemberVerdict::Member);
  return r;
}

}  // namespace rgm
