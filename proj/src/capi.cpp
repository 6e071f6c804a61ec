#include "rgm_capi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "rgm/report.hpp"
#include "rgm/selftest.hpp"
#include "rgm/semantics.hpp"

using namespace rgm;

struct rgm_term {
  TermPtr v;
};
struct rgm_model {
  Model v;
};
struct rgm_elem {
  ElemPtr v;
};
struct rgm_env {
  Environment v;
};
struct rgm_tree {
  RecTree v;
};
struct rgm_path {
  PathSpec v;
};

namespace {

thread_local std::string g_err;

char* dup_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) {
    g_err = "out of memory";
    return nullptr;
  }
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// every entry point funnels through here so exceptions never cross the
// C boundary
template <class F>
auto guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::exception& ex) {
    g_err = ex.what();
  } catch (...) {
    g_err = "unknown error";
  }
  return nullptr;
}

const Model& deref(const rgm_model* m) { return m->v; }

report::Fmt fmt_of(const char* format) {
  return report::parse_fmt(format ? format : "text");
}

void need(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " handle is null");
}

}  // namespace

extern "C" {

const char* rgm_last_error(void) { return g_err.c_str(); }

void rgm_string_free(char* s) { std::free(s); }

rgm_term* rgm_term_parse(const char* text) {
  return guard([&]() -> rgm_term* {
    need(text, "text");
    return new rgm_term{parse_term(text, true)};
  });
}

void rgm_term_free(rgm_term* t) { delete t; }

rgm_model* rgm_model_open(const char* spec) {
  return guard([&]() -> rgm_model* {
    need(spec, "spec");
    std::string s = spec;
    if (s == "E" || s == "Domega" || s == "Dstar") return new rgm_model{Model::builtin(s)};
    return new rgm_model{Model::from_file(s)};
  });
}

void rgm_model_free(rgm_model* m) { delete m; }

rgm_elem* rgm_elem_parse(const rgm_model* m, const char* text) {
  return guard([&]() -> rgm_elem* {
    need(m, "model");
    need(text, "text");
    return new rgm_elem{deref(m).parse_element(text)};
  });
}

void rgm_elem_free(rgm_elem* e) { delete e; }

rgm_env* rgm_env_parse(const rgm_model* m, const char* text) {
  return guard([&]() -> rgm_env* {
    need(m, "model");
    need(text, "text");
    return new rgm_env{parse_environment(deref(m), text)};
  });
}

void rgm_env_free(rgm_env* g) { delete g; }

rgm_tree* rgm_tree_parse(const char* text) {
  return guard([&]() -> rgm_tree* {
    need(text, "text");
    return new rgm_tree{parse_rec_tree(text)};
  });
}

void rgm_tree_free(rgm_tree* t) { delete t; }

rgm_path* rgm_path_parse(const char* text) {
  return guard([&]() -> rgm_path* {
    need(text, "text");
    return new rgm_path{parse_path_spec(text)};
  });
}

void rgm_path_free(rgm_path* p) { delete p; }

char* rgm_parse_report(const rgm_term* t, const char* format) {
  return guard([&]() -> char* {
    need(t, "term");
    return dup_out(report::parse_report(t->v, fmt_of(format)));
  });
}

char* rgm_reduce_report(const rgm_term* t, const char* mode, unsigned long fuel,
                        const char* format) {
  return guard([&]() -> char* {
    need(t, "term");
    need(mode, "mode");
    std::string md = mode;
    ReductionOutcome out;
    if (md == "beta") {
      out = beta_normalize(t->v, fuel);
    } else if (md == "head") {
      out = head_reduce(t->v, fuel);
    } else if (md == "eta") {
      out = {eta_nf(t->v), 0, true};
    } else if (md == "bot") {
      out = {bot_normalize(t->v), 0, true};
    } else {
      throw std::invalid_argument("mode must be beta, head, eta or bot");
    }
    return dup_out(report::reduce_report(md, t->v, out, fuel, fmt_of(format)));
  });
}

char* rgm_bt_report(const rgm_term* t, unsigned depth, unsigned long fuel, const char* format) {
  return guard([&]() -> char* {
    need(t, "term");
    TermPtr prefix = bt_approximant(t->v, depth, fuel);
    return dup_out(report::bt_report(t->v, prefix, depth, fuel, fmt_of(format)));
  });
}

char* rgm_type_report(const rgm_model* m, const rgm_env* g, const rgm_term* t, const rgm_elem* a,
                      unsigned long max_steps, const char* format) {
  return guard([&]() -> char* {
    need(m, "model");
    need(g, "env");
    need(t, "term");
    need(a, "elem");
    SearchBudget budget;
    if (max_steps) budget.max_steps = max_steps;
    DeriveResult r = derive(deref(m), g->v, t->v, a->v, budget);
    return dup_out(
        report::type_report(deref(m), g->v, t->v, a->v, r, budget.max_steps, fmt_of(format)));
  });
}

char* rgm_interp_report(const rgm_model* m, const rgm_term* t, unsigned size_bound, unsigned depth,
                        unsigned long fuel, const char* format) {
  return guard([&]() -> char* {
    need(m, "model");
    need(t, "term");
    InterpResult r = interp_bounded(deref(m), t->v, size_bound, depth, fuel);
    return dup_out(report::interp_report(deref(m), t->v, r, fmt_of(format)));
  });
}

char* rgm_member_report(const rgm_model* m, const rgm_term* t, const rgm_env* g, const rgm_elem* a,
                        unsigned depth, unsigned long fuel, const char* format) {
  return guard([&]() -> char* {
    need(m, "model");
    need(t, "term");
    need(g, "env");
    need(a, "elem");
    MemberResult r = member(deref(m), t->v, g->v, a->v, depth, fuel);
    return dup_out(report::member_report(deref(m), t->v, g->v, a->v, r, fmt_of(format)));
  });
}

char* rgm_compare_report(const rgm_model* m, const rgm_term* left, const rgm_term* right,
                         unsigned size_bound, unsigned depth, unsigned long fuel,
                         const char* format) {
  return guard([&]() -> char* {
    need(m, "model");
    need(left, "left");
    need(right, "right");
    CompareResult r = compare(deref(m), left->v, right->v, size_bound, depth, fuel);
    return dup_out(report::compare_report(deref(m), left->v, right->v, r, fmt_of(format)));
  });
}

char* rgm_ler_report(const rgm_term* left, const rgm_term* right, unsigned depth,
                     unsigned long fuel, const char* format) {
  return guard([&]() -> char* {
    need(left, "left");
    need(right, "right");
    LerResult r = ler_probe(left->v, right->v, depth, fuel);
    return dup_out(report::ler_report(left->v, right->v, r, fmt_of(format)));
  });
}

char* rgm_polarity_report(const rgm_model* m, const rgm_elem* a, const char* format) {
  return guard([&]() -> char* {
    need(m, "model");
    need(a, "elem");
    PolarityReport p = polarity(deref(m), a->v);
    return dup_out(report::polarity_report(deref(m), a->v, p, fmt_of(format)));
  });
}

char* rgm_hasnf_report(const rgm_term* t, unsigned size_bound, unsigned depth, unsigned long fuel,
                       const char* format) {
  return guard([&]() -> char* {
    need(t, "term");
    HasNfReport r = has_nf_oracle(t->v, size_bound, depth, fuel);
    return dup_out(report::hasnf_report(t->v, r, fmt_of(format)));
  });
}

char* rgm_witness_report(const rgm_model* m, const rgm_elem* a, const rgm_tree* t,
                         const rgm_path* p, unsigned depth, const char* format) {
  return guard([&]() -> char* {
    need(m, "model");
    need(a, "elem");
    need(t, "tree");
    need(p, "path");
    WitnessVerdict v = witness_probe(deref(m), a->v, t->v, p->v, depth);
    return dup_out(report::witness_report(deref(m), a->v, t->v, p->v, v, fmt_of(format)));
  });
}

char* rgm_koenig_report(const rgm_model* m, const rgm_tree* t, unsigned element_bound,
                        unsigned depth, const char* format) {
  return guard([&]() -> char* {
    need(m, "model");
    need(t, "tree");
    KoenigReport r = lambda_koenig_probe(deref(m), t->v, element_bound, depth);
    return dup_out(report::koenig_report(deref(m), t->v, r, fmt_of(format)));
  });
}

char* rgm_hyper_report(const rgm_model* m, const rgm_tree* t, unsigned element_bound,
                       unsigned depth, const char* format) {
  return guard([&]() -> char* {
    need(m, "model");
    need(t, "tree");
    HyperReport r = hyperimmunity_probe(deref(m), t->v, element_bound, depth);
    return dup_out(report::hyper_report(deref(m), t->v, r, fmt_of(format)));
  });
}

char* rgm_charwt_report(const rgm_model* m, const rgm_elem* a, const rgm_tree* t, unsigned depth,
                        unsigned long fuel, const char* format) {
  return guard([&]() -> char* {
    need(m, "model");
    need(a, "elem");
    need(t, "tree");
    ConsistencyReport r = char_wt_crosscheck(deref(m), a->v, t->v, depth, fuel);
    return dup_out(report::charwt_report(deref(m), a->v, t->v, r, fmt_of(format)));
  });
}

char* rgm_jt_report(const rgm_tree* t, const char* head_var, unsigned depth, const char* format) {
  return guard([&]() -> char* {
    need(t, "tree");
    need(head_var, "head_var");
    TermPtr prefix = jt_approximant(t->v, head_var, depth);
    return dup_out(report::jt_report(t->v, head_var, depth, prefix, fmt_of(format)));
  });
}

char* rgm_selftest_report(int* all_passed) {
  return guard([&]() -> char* {
    auto rs = selftest::run_all();
    bool ok = true;
    for (const auto& r : rs) ok = ok && r.pass;
    if (all_passed) *all_passed = ok ? 1 : 0;
    return dup_out(selftest::machine_lines(rs));
  });
}

}  // extern "C"
