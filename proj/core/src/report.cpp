#include "mck/report.hpp"

#include <sstream>

namespace mck {

Json to_json(const CutCertificate& cut) { return Json{{"cut_edges", cut.cut_edges}, {"side", cut.side}}; }

Json to_json(const VerificationReport& report) {
  Json j{{"mode", to_string(report.mode)}, {"k", report.k}, {"pass", report.pass}};
  if (report.witness) {
    j["witness"] = Json{{"u", report.witness->u},
                        {"v", report.witness->v},
                        {"total", report.witness->counts.total},
                        {"per_color", report.witness->counts.per_color}};
  }
  if (!report.pairs.empty()) {
    Json pairs = Json::array();
    for (const auto& p : report.pairs)
      pairs.push_back(Json{{"u", p.u}, {"v", p.v}, {"total", p.total}, {"best_color", p.best_color},
                           {"best_count", p.best_count}});
    j["pairs"] = std::move(pairs);
  }
  return j;
}

Json to_json(const KecssResult& result) {
  return Json{{"k", result.k},
              {"size", result.size},
              {"exact", result.exactness == Exactness::exact},
              {"edges", result.edges},
              {"connectivity", result.connectivity},
              {"min_cut", to_json(result.min_cut)},
              {"nodes", result.nodes}};
}

Json to_json(const MaderReport& report) {
  Json j{{"k", report.k}, {"is_minimal", report.is_minimal}};
  if (report.deletable_edge) j["deletable_edge"] = *report.deletable_edge;
  if (report.is_minimal) {
    j["edge_bound_holds"] = report.edge_bound_holds;
    j["degree_k_vertex"] = report.degree_k_vertex ? Json(*report.degree_k_vertex) : Json(nullptr);
    Json cuts = Json::array();
    for (const auto& c : report.edge_cuts) cuts.push_back(to_json(c));
    j["edge_cuts"] = std::move(cuts);
    j["first_violation"] = report.first_violation ? Json(*report.first_violation) : Json(nullptr);
  }
  j["consistent"] = report.consistent();
  return j;
}

Json to_json(const TreePacking& packing) { return Json{{"k", packing.k()}, {"trees", packing.trees}}; }

Json to_json(const PsiResult& psi) {
  return Json{{"psi", psi.psi.str()}, {"Psi", psi.Psi}, {"witness", psi.witness}};
}

Json to_json(const SearchResult& result) {
  Json j{{"mode", to_string(result.mode)}, {"k", result.k},          {"value", result.value},
         {"exact", result.exact},          {"witness", result.witness.assignment()},
         {"explored", result.explored}};
  if (!result.budget_note.empty()) j["budget_note"] = result.budget_note;
  return j;
}

Json to_json(const Decomposition& d) {
  Json parts = Json::array();
  for (const auto& p : d.parts) parts.push_back(Json{{"label", to_string(p.kind)}, {"edges", p.edges}});
  return parts;
}

Json to_json(const ConjectureRecord& r) {
  return Json{{"graph6", r.graph6},
              {"n", r.n},
              {"m", r.m},
              {"k", r.k},
              {"eh", r.eh},
              {"eh_exact", r.eh_exact},
              {"mc", r.mc},
              {"mc_exact", r.mc_exact},
              {"umc", r.umc},
              {"umc_exact", r.umc_exact},
              {"formula_mc", r.formula_mc},
              {"formula_umc", r.formula_umc},
              {"mc_match", r.mc_match},
              {"umc_match", r.umc_match},
              {"verdict", to_string(r.verdict)},
              {"timings_ms", Json{{"kecss", r.kecss_ms}, {"mc", r.mc_ms}, {"umc", r.umc_ms}}},
              {"h_edges", r.h_edges},
              {"mc_witness", r.mc_witness},
              {"umc_witness", r.umc_witness}};
}

Json to_json(const ConjectureSweep& sweep) {
  Json records = Json::array();
  for (const auto& r : sweep.records) records.push_back(to_json(r));
  Json skipped = Json::array();
  for (const auto& s : sweep.skipped) skipped.push_back(Json{{"graph6", s.graph6}, {"reason", s.reason}});
  return Json{{"k", sweep.k},
              {"summary", Json{{"match", sweep.matches},
                               {"mismatch", sweep.mismatches},
                               {"inconclusive", sweep.inconclusive},
                               {"counterexample", sweep.counterexamples},
                               {"umc_mismatch", sweep.umc_mismatches},
                               {"skipped", sweep.skipped.size()}}},
              {"records", std::move(records)},
              {"skipped", std::move(skipped)}};
}

Json to_json(const TheoremReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"graph6", c.graph6}, {"theorem", c.theorem}, {"holds", c.holds}, {"detail", c.detail}});
  Json skipped = Json::array();
  for (const auto& s : report.skipped) skipped.push_back(Json{{"graph6", s.graph6}, {"reason", s.reason}});
  return Json{{"k", report.k},
              {"violations", report.violations()},
              {"partial", report.partial},
              {"checks", std::move(checks)},
              {"skipped", std::move(skipped)}};
}

Json to_json(const HamiltonicityResult& r) {
  return Json{{"hamiltonian", r.hamiltonian},
              {"umc2", r.umc2},
              {"target", r.target},
              {"min_2ecss", to_json(r.min_2ecss)},
              {"umc_witness", r.umc_witness},
              {"direct_hamiltonian", r.direct_hamiltonian},
              {"direct_cycle", r.direct_cycle},
              {"agrees", r.agrees}};
}

std::string conjecture_csv(const ConjectureSweep& sweep) {
  std::ostringstream out;
  out << "graph6,n,m,k,eh,eh_exact,mc,mc_exact,umc,umc_exact,formula_mc,formula_umc,mc_match,umc_match,verdict,"
         "kecss_ms,mc_ms,umc_ms\n";
  auto b = [](bool x) { return x ? "true" : "false"; };
  for (const auto& r : sweep.records) {
    // graph6 never contains commas or quotes, so no escaping is needed.
    out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.eh << ',' << b(r.eh_exact) << ','
        << r.mc << ',' << b(r.mc_exact) << ',' << r.umc << ',' << b(r.umc_exact) << ',' << r.formula_mc << ','
        << r.formula_umc << ',' << b(r.mc_match) << ',' << b(r.umc_match) << ',' << to_string(r.verdict) << ','
        << r.kecss_ms << ',' << r.mc_ms << ',' << r.umc_ms << '\n';
  }
  return out.str();
}

}  // namespace mck
