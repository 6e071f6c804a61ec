#include "rgm/report.hpp"

#include <json.hpp>
#include <sstream>

namespace rgm::report {

using ojson = nlohmann::ordered_json;

namespace {

// builds the text and json renderings side by side so the field order
// cannot drift between formats
struct Doc {
  std::string txt;
  ojson jj = ojson::object();

  void kv(const char* k, const std::string& v) {
    txt += std::string(k) + ": " + v + "\n";
    jj[k] = v;
  }
  void kn(const char* k, unsigned long v) {
    txt += std::string(k) + ": " + std::to_string(v) + "\n";
    jj[k] = v;
  }
  void yn(const char* k, bool v) {
    txt += std::string(k) + ": " + (v ? "yes" : "no") + "\n";
    jj[k] = v;
  }
  // one labelled text line per item, a json array under jkey
  void lines(const char* jkey, const char* label, const std::vector<std::string>& items) {
    for (const auto& it : items) txt += std::string(label) + ": " + it + "\n";
    jj[jkey] = items;
  }
  // space joined in text (items never contain spaces)
  void flat(const char* k, const std::vector<std::string>& items) {
    txt += k;
    txt += ":";
    for (const auto& it : items) txt += " " + it;
    txt += "\n";
    jj[k] = items;
  }
  void nums(const char* k, const std::vector<unsigned long>& v) {
    txt += k;
    txt += ":";
    for (auto n : v) txt += " " + std::to_string(n);
    txt += "\n";
    jj[k] = v;
  }
  void bounds(std::initializer_list<std::pair<const char*, unsigned long>> bs) {
    txt += "bounds:";
    ojson b = ojson::object();
    for (const auto& [k, v] : bs) {
      txt += std::string(" ") + k + "=" + std::to_string(v);
      b[k] = v;
    }
    txt += "\n";
    jj["bounds"] = b;
  }
  std::string render(Fmt f) const { return f == Fmt::Text ? txt : jj.dump() + "\n"; }
};

std::vector<std::string> printed(const Model& m, const std::vector<ElemPtr>& es) {
  std::vector<std::string> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(m.print_element(e));
  return out;
}

std::vector<std::string> printed(const Model& m, const std::vector<Judgment>& js) {
  std::vector<std::string> out;
  out.reserve(js.size());
  for (const auto& j : js) out.push_back(print_judgment(m, j));
  return out;
}

const char* member_word(MemberVerdict v) {
  switch (v) {
    case MemberVerdict::Member: return "member";
    case MemberVerdict::NonMemberAtBound: return "non-member-at-bound";
    case MemberVerdict::MemberNotFoundAtBound: return "member-not-found-at-bound";
    default: return "search-exhausted";
  }
}

const char* compare_word(CompareVerdict v) {
  switch (v) {
    case CompareVerdict::EqualAtBound: return "equal-at-bound";
    case CompareVerdict::LeftSubRightAtBound: return "left-sub-right-at-bound";
    case CompareVerdict::RightSubLeftAtBound: return "right-sub-left-at-bound";
    default: return "incomparable-at-bound";
  }
}

const char* derive_word(DeriveStatus s) {
  switch (s) {
    case DeriveStatus::Found: return "derivable";
    case DeriveStatus::NotDerivable: return "not-derivable";
    case DeriveStatus::BudgetExhausted: return "budget-exhausted";
    default: return "non-normal-subject";
  }
}

}  // namespace

Fmt parse_fmt(const std::string& s) {
  if (s == "text") return Fmt::Text;
  if (s == "json") return Fmt::Json;
  throw std::invalid_argument("format must be text or json");
}

std::string parse_report(const TermPtr& t, Fmt f) {
  Doc d;
  d.kv("query", "parse");
  d.kv("term", print_term(t));
  auto fv = free_vars(t);
  if (fv.empty()) {
    d.txt += "free: (none)\n";
    d.jj["free"] = std::vector<std::string>{};
  } else {
    d.flat("free", std::vector<std::string>(fv.begin(), fv.end()));
  }
  d.yn("normal", is_beta_normal(t));
  d.yn("bot-normal", is_beta_bot_normal(t));
  return d.render(f);
}

std::string reduce_report(const std::string& mode, const TermPtr& t, const ReductionOutcome& out,
                          unsigned long fuel, Fmt f) {
  Doc d;
  d.kv("query", "reduce");
  d.kv("mode", mode);
  d.kv("term", print_term(t));
  d.kv("result", print_term(out.result));
  d.kn("steps", out.steps);
  d.yn("completed", out.completed);
  d.bounds({{"fuel", fuel}});
  return d.render(f);
}

std::string bt_report(const TermPtr& t, const TermPtr& prefix, unsigned depth, unsigned long fuel,
                      Fmt f) {
  Doc d;
  d.kv("query", "bt");
  d.kv("term", print_term(t));
  d.kv("prefix", print_term(prefix));
  d.yn("bottom", has_bottom(prefix));
  d.bounds({{"depth", depth}, {"fuel", fuel}});
  return d.render(f);
}

std::string type_report(const Model& m, const Environment& g, const TermPtr& t, const ElemPtr& a,
                        const DeriveResult& r, unsigned long max_steps, Fmt f) {
  Doc d;
  d.kv("query", "type");
  d.kv("model", m.name);
  d.kv("term", print_term(t));
  d.kv("elem", m.print_element(a));
  d.kv("env", print_environment(m, g));
  d.kv("verdict", derive_word(r.status));
  if (r.status == DeriveStatus::Found) d.kv("witness", deriv_sexpr(m, r.deriv));
  d.kn("steps", r.steps_used);
  d.bounds({{"max-steps", max_steps}});
  return d.render(f);
}

std::string interp_report(const Model& m, const TermPtr& t, const InterpResult& r, Fmt f) {
  Doc d;
  d.kv("query", "interp");
  d.kv("model", m.name);
  d.kv("term", print_term(t));
  d.kv("prefix", print_term(r.prefix));
  d.kn("count", r.judgments.size());
  std::vector<std::string> js;
  js.reserve(r.judgments.size());
  for (const auto& [j, w] : r.judgments) js.push_back(print_judgment(m, j));
  if (!js.empty()) d.lines("judgments", "judgment", js);
  d.bounds({{"size", r.size_bound}, {"depth", r.depth}, {"fuel", r.fuel}});
  return d.render(f);
}

std::string member_report(const Model& m, const TermPtr& t, const Environment& g, const ElemPtr& a,
                          const MemberResult& r, Fmt f) {
  Doc d;
  d.kv("query", "member");
  d.kv("model", m.name);
  d.kv("term", print_term(t));
  d.kv("elem", m.print_element(a));
  d.kv("env", print_environment(m, g));
  d.kv("verdict", member_word(r.verdict));
  if (r.verdict == MemberVerdict::Member) d.kv("witness", deriv_sexpr(m, r.witness));
  d.kv("prefix", print_term(r.prefix));
  d.bounds({{"depth", r.depth}, {"fuel", r.fuel}});
  return d.render(f);
}

std::string compare_report(const Model& m, const TermPtr& left, const TermPtr& right,
                           const CompareResult& r, Fmt f) {
  Doc d;
  d.kv("query", "compare");
  d.kv("model", m.name);
  d.kv("left", print_term(left));
  d.kv("right", print_term(right));
  d.kv("verdict", compare_word(r.verdict));
  d.kn("left-only", r.left_only.size());
  if (!r.left_only.empty())
    d.lines("left-only-judgments", "left-only judgment", printed(m, r.left_only));
  d.kn("right-only", r.right_only.size());
  if (!r.right_only.empty())
    d.lines("right-only-judgments", "right-only judgment", printed(m, r.right_only));
  d.bounds({{"size", r.size_bound}, {"depth", r.depth}, {"fuel", r.fuel}});
  return d.render(f);
}

std::string ler_report(const TermPtr& left, const TermPtr& right, const LerResult& r, Fmt f) {
  Doc d;
  d.kv("query", "ler");
  d.kv("left", print_term(left));
  d.kv("right", print_term(right));
  d.kv("verdict", r.holds_at_bound ? "holds-at-bound" : "fails-at-bound");
  if (!r.holds_at_bound) d.kv("offending", print_term(r.offending));
  d.kv("left-prefix", print_term(r.left_prefix));
  d.kv("right-prefix", print_term(r.right_prefix));
  d.bounds({{"depth", r.depth}, {"fuel", r.fuel}});
  return d.render(f);
}

std::string polarity_report(const Model& m, const ElemPtr& a, const PolarityReport& p, Fmt f) {
  Doc d;
  d.kv("query", "polarity");
  d.kv("model", m.name);
  d.kv("elem", m.print_element(a));
  d.yn("positive", p.positive);
  d.yn("negative", p.negative);
  d.yn("exact", true);  // no search bound qualifies this answer
  return d.render(f);
}

std::string hasnf_report(const TermPtr& t, const HasNfReport& r, Fmt f) {
  Doc d;
  d.kv("query", "has-nf");
  d.kv("term", print_term(t));
  d.kv("verdict",
       r.status == HasNfStatus::Normalizable ? "normalizable" : "no-evidence-at-bound");
  if (r.has_witness) {
    static const Model e = Model::builtin("E");
    d.kv("witness", print_judgment(e, r.witness));
    d.kn("witness-bound", r.witness_bound);
  }
  d.bounds({{"size", r.size_bound}, {"depth", r.depth}, {"fuel", r.fuel}});
  return d.render(f);
}

std::string witness_report(const Model& m, const ElemPtr& a, const RecTree& t, const PathSpec& path,
                           const WitnessVerdict& v, Fmt f) {
  Doc d;
  d.kv("query", "witness");
  d.kv("model", m.name);
  d.kv("elem", m.print_element(a));
  d.kv("tree", t.text);
  d.kv("path", path.text);
  d.kv("verdict", v.status == WitnessStatus::WitnessToDepth ? "witness-to-depth" : "refuted");
  d.nums("path-prefix", v.path_prefix);
  if (!v.elems.empty()) d.flat("elems", printed(m, v.elems));
  d.kn("levels", v.depth);
  d.bounds({{"depth", v.probe_depth}});
  return d.render(f);
}

std::string koenig_report(const Model& m, const RecTree& t, const KoenigReport& r, Fmt f) {
  Doc d;
  d.kv("query", "koenig");
  d.kv("model", m.name);
  d.kv("tree", t.text);
  d.kv("verdict", r.found ? "witness-found" : "no-witness-at-bound");
  if (r.found) {
    d.kv("elem", m.print_element(r.elem));
    d.nums("path", r.path);
    d.flat("elems", printed(m, r.elems));
  }
  d.bounds({{"size", r.element_bound}, {"depth", r.depth}});
  return d.render(f);
}

std::string hyper_report(const Model& m, const RecTree& t, const HyperReport& r, Fmt f) {
  Doc d;
  d.kv("query", "hyper");
  d.kv("model", m.name);
  d.kv("tree", t.text);
  d.kv("verdict", r.no_witness_at_bound ? "no-witness-at-bound" : "witness-exists");
  if (!r.no_witness_at_bound) {
    d.kv("counterexample", m.print_element(r.counterexample));
    d.nums("path", r.path);
  }
  d.bounds({{"size", r.element_bound}, {"depth", r.depth}});
  return d.render(f);
}

std::string charwt_report(const Model& m, const ElemPtr& a, const RecTree& t,
                          const ConsistencyReport& r, Fmt f) {
  Doc d;
  d.kv("query", "charwt");
  d.kv("model", m.name);
  d.kv("elem", m.print_element(a));
  d.kv("tree", t.text);
  d.yn("consistent", r.consistent);
  d.yn("witnessed", r.witnessed);
  d.kv("member", member_word(r.member_verdict));
  if (r.witnessed) d.nums("path", r.path);
  d.bounds({{"depth", r.depth}, {"fuel", r.fuel}});
  return d.render(f);
}

std::string jt_report(const RecTree& t, const std::string& headvar, unsigned depth,
                      const TermPtr& prefix, Fmt f) {
  Doc d;
  d.kv("query", "jt");
  d.kv("tree", t.text);
  d.kv("head", headvar);
  d.kv("prefix", print_term(prefix));
  d.bounds({{"depth", depth}});
  return d.render(f);
}

}  // namespace rgm::report
