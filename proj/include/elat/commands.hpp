#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "elattice.hpp"
#include "elattice_io.hpp"
#include "errors.hpp"
#include "lattice_iso.hpp"
#include "morphisms.hpp"
#include "report.hpp"
#include "subgroups.hpp"
#include "theorem_suite.hpp"

namespace elat {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kCheckFailure = 1, kUsage = 2, kBound = 3 };

struct Outcome {
  Report report;
  int exit_code = kOk;
};

namespace detail {

inline Json cycles_of(const FiniteGroup& g, const std::vector<Elem>& elems) {
  Json out = Json::array();
  for (Elem e : elems) out.push_back(g.element(e).to_cycles());
  return out;
}

inline Json predicates_json(const GroupPredicates& p) {
  return {{"abelian", p.abelian},     {"dedekind", p.dedekind}, {"hamiltonian", p.hamiltonian},
          {"simple", p.simple},       {"primary", p.primary},   {"nilpotent", p.nilpotent},
          {"satisfies_star", p.satisfies_star}};
}

inline Json summary_json(const PermGroupSummary& s) { return {{"order", s.order.str()}, {"identified", s.identified}}; }

inline std::string yes(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// group

inline Outcome cmd_group(const std::string& spec, const Limits& limits, const std::string& export_path = {}) {
  auto g = share(parse_group(spec, limits));
  const auto s = make_subgroup_elattice(g, limits);
  const auto& lat = s.lattice;
  const auto pred = group_predicates(lat);
  const auto fd = frattini_derived(lat);
  const auto part = class_partition(s.elattice);

  Json subs = Json::array();
  for (SubId h = 0; h < lat.size(); ++h)
    subs.push_back({{"id", h},
                    {"order", lat[h].order()},
                    {"generators", detail::cycles_of(*g, lat[h].generators)},
                    {"normal", lat.is_normal(h)},
                    {"core", lat.core_id(h)}});
  Json classes = Json::array();
  std::vector<std::size_t> sizes;
  for (const auto& [fixed, members] : part.classes) {
    classes.push_back({{"normal", fixed}, {"size", members.size()}, {"members", members}});
    sizes.push_back(members.size());
  }
  std::vector<std::size_t> normal(lat.normal_ids().begin(), lat.normal_ids().end());

  Outcome o;
  o.report.command = "group";
  o.report.inputs = {{"spec", spec}};
  o.report.payload = {{"label", g->label()},
                      {"order", g->order()},
                      {"identified", identify(g, limits)},
                      {"generators", detail::cycles_of(*g, g->generators())},
                      {"subgroup_count", lat.size()},
                      {"normal_count", normal.size()},
                      {"normal_subgroups", normal},
                      {"class_sizes", sizes},
                      {"classes", classes},
                      {"subgroups", subs},
                      {"predicates", detail::predicates_json(pred)},
                      {"frattini", fd.frattini},
                      {"frattini_order", lat[fd.frattini].order()},
                      {"derived", fd.derived},
                      {"derived_order", lat[fd.derived].order()}};
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) throw ParseError("cannot write '" + export_path + "'", 0, export_path);
    out << write_elattice(s.elattice);
    o.report.payload["exported"] = export_path;
  }
  return o;
}

// ---------------------------------------------------------------------------
// aut

inline Outcome cmd_aut(const std::string& spec, const Limits& limits) {
  auto g = share(parse_group(spec, limits));
  const auto s = make_subgroup_elattice(g, limits);
  const auto t = aut_towers(s, limits);
  const auto& d = t.decomposition;

  Json exact{{"mode", "structural"}};
  bool exact_ok = d.total_order == d.kernel_order * d.im_psi_order && d.aut_fix_order % d.im_psi_order == 0;
  if (d.total_order <= limits.enum_threshold) {
    const auto autos = enumerate_aut_e(s.elattice, limits.enum_threshold, &d);
    const auto c = verify_exact_sequence(s.elattice, d, autos, limits.enum_threshold);
    exact = {{"mode", "enumerated"},
             {"enumerated", c.enumerated},
             {"ker_psi", c.kernel_psi},
             {"im_phi", c.image_phi},
             {"ker_psi_equals_im_phi", c.ker_equals_im},
             {"phi_injective", c.phi_injective},
             {"restrictions_in_im_psi", c.restrictions_in_im_psi},
             {"count_matches", c.count_matches}};
    exact_ok = exact_ok && c.ok();
  }
  exact["ok"] = exact_ok;
  Json towers{{"aut0", detail::summary_json(t.aut0)},
              {"aut1", detail::summary_json(t.aut1)},
              {"aut2", detail::summary_json(t.aut2)},
              {"aut2_oracle_order", t.aut2_oracle_order.str()},
              {"aut2_in_aut0", t.aut2_in_aut0},
              {"aut2_normal_in_aut1", t.aut2_normal_in_aut1},
              {"aut1_in_aut_e", t.aut1_in_aut_e}};
  if (t.aut0_normal_in_aut_e) towers["aut0_normal_in_aut_e"] = *t.aut0_normal_in_aut_e;
  const bool towers_ok = t.aut2_in_aut0 && t.aut2_normal_in_aut1 && t.aut1_in_aut_e &&
                         t.aut2.order == t.aut2_oracle_order && t.aut0_normal_in_aut_e.value_or(true);

  Outcome o;
  o.report.command = "aut";
  o.report.inputs = {{"spec", spec}, {"enum_threshold", limits.enum_threshold}};
  o.report.payload = {{"label", g->label()},
                      {"order", g->order()},
                      {"subgroup_count", s.lattice.size()},
                      {"decomposition",
                       {{"class_sizes", d.class_sizes},
                        {"kernel_order", d.kernel_order.str()},
                        {"aut_fix_order", d.aut_fix_order},
                        {"im_psi_order", d.im_psi_order},
                        {"total_order", d.total_order.str()},
                        {"factored", d.factored},
                        {"fix_is_chain", d.fix_is_chain},
                        {"psi_surjective", d.psi_surjective}}},
                      {"towers", towers},
                      {"exact_sequence", exact}};
  o.exit_code = exact_ok && towers_ok ? kOk : kCheckFailure;
  return o;
}

// ---------------------------------------------------------------------------
// compare

inline Outcome cmd_compare(const std::string& spec1, const std::string& spec2, const Limits& limits) {
  auto g1 = share(parse_group(spec1, limits));
  auto g2 = share(parse_group(spec2, limits));
  const auto s1 = make_subgroup_elattice(g1, limits);
  const auto s2 = make_subgroup_elattice(g2, limits);

  Json l{{"isomorphic", false}}, n{{"isomorphic", false}}, el{{"isomorphic", false}};
  const auto lp1 = subgroup_poset(s1.lattice), lp2 = subgroup_poset(s2.lattice);
  if (auto m = LatticeIsoSearch(lp1, lp2).first()) l = {{"isomorphic", true}, {"map", *m}};
  const auto np1 = normal_poset(s1.lattice), np2 = normal_poset(s2.lattice);
  if (auto m = LatticeIsoSearch(np1, np2).first()) {
    Json pairs = Json::array();
    for (std::size_t k = 0; k < m->size(); ++k)
      pairs.push_back({s1.lattice.normal_ids()[k], s2.lattice.normal_ids()[(*m)[k]]});
    n = {{"isomorphic", true}, {"map", pairs}};
  }
  if (auto f = el_isomorphism_search(s1.elattice, s2.elattice)) {
    Json fix = Json::array();
    for (std::size_t k = 0; k < f->fix_domain.size(); ++k) fix.push_back({f->fix_domain[k], f->fix_image[k]});
    el = {{"isomorphic", true}, {"fix_map", fix}, {"map", f->assemble(s1.elattice.size())}};
  }
  el["fix_isos"] = count_fix_isos(s1.elattice, s2.elattice);
  el["admissible_fix_isos"] = count_fix_isos(s1.elattice, s2.elattice, true);
  el["class_sizes"] = {ELView(s1.elattice).sizes, ELView(s2.elattice).sizes};

  Outcome o;
  o.report.command = "compare";
  o.report.inputs = {{"spec1", spec1}, {"spec2", spec2}};
  o.report.payload = {{"orders", {g1->order(), g2->order()}},
                      {"subgroup_counts", {s1.lattice.size(), s2.lattice.size()}},
                      {"isomorphic_groups", find_isomorphism(g1, g2, limits).has_value()},
                      {"l_iso", l},
                      {"n_iso", n},
                      {"el_iso", el}};
  return o;
}

// ---------------------------------------------------------------------------
// verify

inline Outcome cmd_verify(const std::vector<std::string>& ids, const std::vector<std::string>& scope_list,
                          const Limits& limits) {
  std::vector<std::string> run;
  for (const auto& id : ids) {
    if (id == "all") {
      run.insert(run.end(), check_ids().begin(), check_ids().end());
      continue;
    }
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
      throw ParseError("unknown check id '" + id + "'", 0, id);
    run.push_back(id);
  }
  if (run.empty()) throw ParseError("no check ids given", 0, "");
  const Scope scope = scope_list.empty() ? default_scope() : scope_from_list(scope_list, limits);
  TheoremSuite suite(limits);
  Json checks = Json::array(), divergences = Json::array();
  bool failed = false;
  for (const auto& id : run) {
    const auto r = suite.run_check(id, scope);
    if (r.overall == "fail") failed = true;
    if (r.overall == "divergence-from-paper") divergences.push_back(id);
    checks.push_back(to_json(r));
  }
  Outcome o;
  o.report.command = "verify";
  o.report.inputs = {{"checks", run}, {"scope", scope_list.empty() ? Json("default") : Json(scope_list)}};
  o.report.payload = {{"checks", checks}, {"divergences", divergences}, {"failed", failed}};
  o.exit_code = failed ? kCheckFailure : kOk;
  return o;
}

// ---------------------------------------------------------------------------
// axioms

inline Outcome cmd_axioms(const std::string& path) {
  const auto l = load_elattice(path);
  const auto a = verify_axioms(l);
  Outcome o;
  o.report.command = "axioms";
  o.report.inputs = {{"file", path}};
  o.report.payload = {{"size", l.size()},
                      {"ok", a.ok},
                      {"canonical", a.canonical},
                      {"eps_idempotent", a.eps_idempotent},
                      {"image_equals_fix", a.image_equals_fix}};
  if (!a.ok) o.report.payload["counterexample"] = {{"law", a.failure}, {"elements", a.witness}};
  o.exit_code = a.ok ? kOk : kCheckFailure;
  return o;
}

// ---------------------------------------------------------------------------
// Human-readable rendering of the machine form

inline std::string render_human(const Report& r) {
  const auto& p = r.payload;
  std::ostringstream os;
  auto str = [](const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); };
  if (r.command == "group") {
    os << "group " << str(p["label"]) << "  order " << p["order"] << "  identified as " << str(p["identified"])
       << "\n";
    os << "subgroups " << p["subgroup_count"] << ", normal " << p["normal_count"] << " "
       << p["normal_subgroups"].dump() << "\n";
    os << "class sizes " << p["class_sizes"].dump() << "\n";
    os << "Frattini H" << p["frattini"] << " |" << p["frattini_order"] << "|, derived H" << p["derived"] << " |"
       << p["derived_order"] << "|\n";
    os << "predicates:";
    for (const auto& [k, v] : p["predicates"].items()) os << " " << k << "=" << detail::yes(v.get<bool>());
    os << "\n\n  id  order  normal  core  generators\n";
    for (const auto& s : p["subgroups"]) {
      std::string gens;
      for (const auto& c : s["generators"]) gens += (gens.empty() ? "" : " ") + c.get<std::string>();
      char line[64];
      std::snprintf(line, sizeof line, "%4zu  %5zu  %-6s  %4zu  ", s["id"].get<std::size_t>(),
                    s["order"].get<std::size_t>(), s["normal"].get<bool>() ? "yes" : "no",
                    s["core"].get<std::size_t>());
      os << line << (gens.empty() ? "()" : gens) << "\n";
    }
    if (p.contains("exported")) os << "\ne-lattice written to " << str(p["exported"]) << "\n";
  } else if (r.command == "aut") {
    const auto& d = p["decomposition"];
    const auto& t = p["towers"];
    os << "group " << str(p["label"]) << "  order " << p["order"] << "  subgroups " << p["subgroup_count"] << "\n";
    os << "|Aut_E| = " << str(d["factored"]) << " = " << str(d["total_order"]) << "\n";
    os << "class sizes " << d["class_sizes"].dump() << ", |Aut(Fix)| = " << d["aut_fix_order"]
       << ", |Im psi| = " << d["im_psi_order"] << ", Fix is a chain: " << detail::yes(d["fix_is_chain"].get<bool>())
       << "\n";
    if (!d["psi_surjective"].get<bool>()) os << "note: psi is not onto Aut(Fix)\n";
    for (const char* k : {"aut0", "aut1", "aut2"})
      os << k << ": order " << str(t[k]["order"]) << ", identified as " << str(t[k]["identified"]) << "\n";
    os << "aut2 oracle order " << str(t["aut2_oracle_order"]) << "; aut2 in aut0: "
       << detail::yes(t["aut2_in_aut0"].get<bool>())
       << "; aut2 normal in aut1: " << detail::yes(t["aut2_normal_in_aut1"].get<bool>()) << "\n";
    const auto& e = p["exact_sequence"];
    os << "exact sequence (" << str(e["mode"]) << "): " << (e["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
  } else if (r.command == "compare") {
    os << str(r.inputs["spec1"]) << " vs " << str(r.inputs["spec2"]) << "\n";
    os << "  isomorphic groups: " << detail::yes(p["isomorphic_groups"].get<bool>()) << "\n";
    os << "  L-isomorphic:      " << detail::yes(p["l_iso"]["isomorphic"].get<bool>()) << "\n";
    os << "  N-isomorphic:      " << detail::yes(p["n_iso"]["isomorphic"].get<bool>()) << "\n";
    os << "  eL-isomorphic:     " << detail::yes(p["el_iso"]["isomorphic"].get<bool>()) << "  (admissible "
       << p["el_iso"]["admissible_fix_isos"] << " of " << p["el_iso"]["fix_isos"] << " fix-isomorphisms)\n";
    os << "  class sizes " << p["el_iso"]["class_sizes"].dump() << "\n";
  } else if (r.command == "verify") {
    for (const auto& c : p["checks"]) {
      const auto overall = c["overall"].get<std::string>();
      const std::string tag = overall == "pass" ? "PASS" : overall == "fail" ? "FAIL" : "DIVERGENCE";
      char line[96];
      std::snprintf(line, sizeof line, "%-11s %-24s ", tag.c_str(), c["check_id"].get<std::string>().c_str());
      os << line << str(c["summary"]) << "\n";
      for (const auto& i : c["instances"]) {
        const auto v = i["verdict"].get<std::string>();
        if (v == "pass") continue;
        os << "    " << (v == "fail" ? "fail" : "divergence") << ": " << str(i["input"]) << "  "
           << i["witness"].dump() << "\n";
      }
    }
    if (!p["divergences"].empty())
      os << "\n*** divergence from the stated results in: " << p["divergences"].dump() << " ***\n";
  } else if (r.command == "axioms") {
    os << "carrier " << p["size"] << ": " << (p["ok"].get<bool>() ? "axioms hold" : "axioms FAIL")
       << ", canonical: " << detail::yes(p["canonical"].get<bool>()) << "\n";
    if (p.contains("counterexample"))
      os << "  " << str(p["counterexample"]["law"]) << " fails at " << p["counterexample"]["elements"].dump()
         << "\n";
  }
  if (r.timing_ms) {
    char t[48];
    std::snprintf(t, sizeof t, "(%.1f ms)\n", *r.timing_ms);
    os << t;
  }
  return os.str();
}

}  // namespace elat
