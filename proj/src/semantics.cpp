#include "rgm/semantics.hpp"

namespace rgm {

MemberResult member(const Model& m, const TermPtr& t, const Environment& g, const ElemPtr& a,
                    unsigned depth, unsigned long fuel, const SearchBudget& budget) {
  MemberResult r;
  r.depth = depth;
  r.fuel = fuel;
  r.prefix = bt_approximant(t, depth, fuel);
  if (r.prefix->kind == TermKind::Bot) {
    r.verdict = MemberVerdict::NonMemberAtBound;
    return r;
  }
  DeriveResult d = derive(m, g, r.prefix, m.canonicalize(a), budget);
  switch (d.status) {
    case DeriveStatus::Found:
      r.verdict = MemberVerdict::Member;
      r.witness = d.deriv;
      break;
    case DeriveStatus::NotDerivable:
      r.verdict = MemberVerdict::MemberNotFoundAtBound;
      break;
    default:
      r.verdict = MemberVerdict::SearchExhausted;
      break;
  }
  return r;
}

InterpResult interp_bounded(const Model& m, const TermPtr& t, unsigned size_bound, unsigned depth,
                            unsigned long fuel) {
  InterpResult r;
  r.size_bound = size_bound;
  r.depth = depth;
  r.fuel = fuel;
  r.prefix = bt_approximant(t, depth, fuel);
  if (r.prefix->kind == TermKind::Bot) return r;
  r.judgments = enumerate_derivations(m, r.prefix, size_bound);
  return r;
}

namespace {

// judgments of a missing from b, minus those the other term recovers when
// its prefix is recomputed at twice the depth and fuel
std::vector<Judgment> verified_diff(const Model& m, const InterpResult& a, const InterpResult& b,
                                    const TermPtr& other, unsigned depth, unsigned long fuel) {
  std::vector<Judgment> out;
  for (auto& [j, d] : a.judgments) {
    bool shared = false;
    for (auto& [k, e] : b.judgments) {
      if (cmp_judgment(j, k) == 0) {
        shared = true;
        break;
      }
    }
    if (shared) continue;
    if (member(m, other, j.env, j.type, 2 * depth, 2 * fuel).verdict != MemberVerdict::Member) {
      out.push_back(j);
    }
  }
  return out;
}

}  // namespace

CompareResult compare(const Model& m, const TermPtr& left, const TermPtr& right,
                      unsigned size_bound, unsigned depth, unsigned long fuel) {
  CompareResult r;
  r.size_bound = size_bound;
  r.depth = depth;
  r.fuel = fuel;
  InterpResult li = interp_bounded(m, left, size_bound, depth, fuel);
  InterpResult ri = interp_bounded(m, right, size_bound, depth, fuel);
  r.left_only = verified_diff(m, li, ri, right, depth, fuel);
  r.right_only = verified_diff(m, ri, li, left, depth, fuel);
  if (r.left_only.empty() && r.right_only.empty()) {
    r.verdict = CompareVerdict::EqualAtBound;
  } else if (r.left_only.empty()) {
    r.verdict = CompareVerdict::LeftSubRightAtBound;
  } else if (r.right_only.empty()) {
    r.verdict = CompareVerdict::RightSubLeftAtBound;
  } else {
    r.verdict = CompareVerdict::IncomparableAtBound;
  }
  return r;
}

LerResult ler_probe(const TermPtr& left, const TermPtr& right, unsigned depth,
                    unsigned long fuel) {
  LerResult r;
  r.depth = depth;
  r.fuel = fuel;
  r.left_prefix = bt_approximant(left, depth, fuel);
  r.right_prefix = bt_approximant(right, depth, fuel);
  // the matcher is monotone in its right argument along the prefix order, so
  // matching the maximal right prefix decides the whole family of its cuts
  r.holds_at_bound = matches_eta_bot(r.left_prefix, r.right_prefix);
  if (!r.holds_at_bound) r.offending = r.left_prefix;
  return r;
}

}  // namespace rgm
