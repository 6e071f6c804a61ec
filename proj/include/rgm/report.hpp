#pragma once
#include "rgm/analysis.hpp"
#include "rgm/reduction.hpp"

// Renderers for query results.  Text is line oriented ("key: value", the
// bounds last); Json is a single compact object with the same keys in the
// same order.  Both are byte stable for equal inputs.
namespace rgm::report {

enum class Fmt { Text, Json };
Fmt parse_fmt(const std::string& s);

std::string parse_report(const TermPtr& t, Fmt f);
std::string reduce_report(const std::string& mode, const TermPtr& t, const ReductionOutcome& out,
                          unsigned long fuel, Fmt f);
std::string bt_report(const TermPtr& t, const TermPtr& prefix, unsigned depth, unsigned long fuel,
                      Fmt f);
std::string type_report(const Model& m, const Environment& g, const TermPtr& t, const ElemPtr& a,
                        const DeriveResult& r, unsigned long max_steps, Fmt f);
std::string interp_report(const Model& m, const TermPtr& t, const InterpResult& r, Fmt f);
std::string member_report(const Model& m, const TermPtr& t, const Environment& g, const ElemPtr& a,
                          const MemberResult& r, Fmt f);
std::string compare_report(const Model& m, const TermPtr& left, const TermPtr& right,
                           const CompareResult& r, Fmt f);
std::string ler_report(const TermPtr& left, const TermPtr& right, const LerResult& r, Fmt f);
std::string polarity_report(const Model& m, const ElemPtr& a, const PolarityReport& p, Fmt f);
std::string hasnf_report(const TermPtr& t, const HasNfReport& r, Fmt f);
std::string witness_report(const Model& m, const ElemPtr& a, const RecTree& t, const PathSpec& path,
                           const WitnessVerdict& v, Fmt f);
std::string koenig_report(const Model& m, const RecTree& t, const KoenigReport& r, Fmt f);
std::string hyper_report(const Model& m, const RecTree& t, const HyperReport& r, Fmt f);
std::string charwt_report(const Model& m, const ElemPtr& a, const RecTree& t,
                          const ConsistencyReport& r, Fmt f);
std::string jt_report(const RecTree& t, const std::string& headvar, unsigned depth,
                      const TermPtr& prefix, Fmt f);

}  // namespace rgm::report
