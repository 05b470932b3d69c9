// Prints one line per acceptance criterion and exits nonzero if any fails.
// Usage: acceptance [path/to/elat]

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "corpus.hpp"
#include "elat/commands.hpp"
#include "oracles.hpp"

using namespace elat;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  if (!ok) ++failures;
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " " << what << std::endl;
}

template <typename F>
void criterion(int n, const std::string& what, F&& f) {
  try {
    std::string detail;
    const bool ok = f(detail);
    report(n, ok, what + (detail.empty() ? "" : " [" + detail + "]"));
  } catch (const std::exception& e) {
    report(n, false, what + " [exception: " + e.what() + "]");
  }
}

bool run_capture(const std::string& cmd, std::string& out) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return false;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  return pclose(p) != -1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string elat_binary = argc > 1 ? argv[1] : "";

  criterion(1, "axioms hold and are canonical for every catalog group of order <= 48", [](std::string& d) {
    const auto start = std::chrono::steady_clock::now();
    const auto names = catalog_up_to(48);
    bool ok = names.size() >= 25;
    for (const auto& n : names) {
      const auto r = verify_axioms(make_subgroup_elattice(catalog_group(n)).elattice);
      if (!r.ok || !r.canonical) {
        ok = false;
        d += n + " ";
      }
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    d += std::to_string(names.size()) + " groups in " + std::to_string(s) + " s";
    return ok && s < 60;
  });

  criterion(2, "S3 towers Aut0, Aut1, Aut2 are all S3 of order 6", [](std::string& d) {
    const auto t = aut_towers(make_subgroup_elattice(catalog_group("S3")));
    bool ok = true;
    for (const auto* x : {&t.aut0, &t.aut1, &t.aut2}) {
      d += x->identified + "/" + x->order.str() + " ";
      ok = ok && x->identified == "S3" && x->order == 6;
    }
    return ok;
  });

  criterion(3, "D4 towers: Aut0 = S4, Aut1 = D4, Aut2 matches the conjugation oracle", [](std::string& d) {
    const auto s = make_subgroup_elattice(catalog_group("D4"));
    const auto t = aut_towers(s);
    std::vector<oracle::Set> subs;
    for (const auto& h : s.lattice.subgroups()) subs.emplace_back(h.elements.begin(), h.elements.end());
    const auto oracle_order = oracle::conjugation_action_order(*s.group, subs);
    d = "Aut0 " + t.aut0.identified + ", Aut1 " + t.aut1.identified + ", Aut2 oracle " + t.aut2.identified +
        " (order " + t.aut2.order.str() + "), stated Z2";
    if (t.aut2.identified != "C2") d += ", DIVERGENCE from stated value";
    return t.aut0.identified == "S4" && t.aut0.order == 24 && t.aut1.identified == "D4" && t.aut1.order == 8 &&
           t.aut2.order == oracle_order;
  });

  criterion(4, "chain N(G): enumeration count equals the factorial product", [](std::string& d) {
    bool ok = true;
    std::size_t n = 0;
    bool seen_c4 = false, seen_c8 = false, seen_c9 = false;
    for (const auto& name : catalog_up_to(48)) {
      const auto s = make_subgroup_elattice(catalog_group(name));
      const auto dec = aut_e_decomposition(s.elattice);
      if (!dec.fix_is_chain || dec.total_order > 10000) continue;
      ++n;
      seen_c4 |= name == "C4";
      seen_c8 |= name == "C8";
      seen_c9 |= name == "C9";
      if (BigInt(enumerate_aut_e(s.elattice, 10000).size()) != dec.kernel_order) {
        ok = false;
        d += name + " ";
      }
    }
    const auto s3 = make_subgroup_elattice(catalog_group("S3")).elattice;
    const auto e = enumerate_aut_e(s3, 10000).size();
    const auto brute = brute_force_aut_e(s3).size();
    d += std::to_string(n) + " groups; S3 enumerated " + std::to_string(e) + ", 720-bijection oracle " +
         std::to_string(brute);
    return ok && seen_c4 && seen_c8 && seen_c9 && e == 6 && brute == 6;
  });

  criterion(5, "exact sequence holds on every enumerable instance with carrier <= 12", [](std::string& d) {
    std::size_t checked = 0;
    for (const auto& it : corpus::canonical_corpus(12, 12)) {
      const auto dec = aut_e_decomposition(it.l);
      if (dec.total_order != dec.kernel_order * dec.im_psi_order) {
        d = it.name;
        return false;
      }
      if (dec.total_order > 10000) continue;
      const auto autos = enumerate_aut_e(it.l, 10000, &dec);
      if (!verify_exact_sequence(it.l, dec, autos, 10000).ok()) {
        d = it.name;
        return false;
      }
      ++checked;
    }
    d = std::to_string(checked) + " instances";
    return checked > 0;
  });

  criterion(6, "brute-force isomorphisms equal assembled ones on every corpus pair with carrier <= 7",
            [](std::string& d) {
              const auto items = corpus::canonical_corpus(7, 7);
              std::map<std::size_t, std::vector<const corpus::Item*>> by_size;
              for (const auto& it : items) by_size[it.l.size()].push_back(&it);
              std::size_t pairs = 0, maps = 0;
              for (const auto& [n, group] : by_size)
                for (const auto* a : group)
                  for (const auto* b : group) {
                    const auto brute = brute_force_isomorphisms(a->l, b->l);
                    if (brute != assembled_isomorphisms(a->l, b->l)) {
                      d = a->name + " -> " + b->name;
                      return false;
                    }
                    ++pairs;
                    maps += brute.size();
                  }
              d = std::to_string(items.size()) + " lattices, " + std::to_string(pairs) + " pairs, " +
                  std::to_string(maps) + " isomorphisms";
              return true;
            });

  criterion(7, "compare(Q8, D4) is N-iso but not eL-iso; compare(Z3xZ3, S3) is L-iso but not eL-iso",
            [](std::string&) {
              const auto a = cmd_compare("Q8", "D4", {}).report.payload;
              const auto b = cmd_compare("Z3xZ3", "S3", {}).report.payload;
              return a["n_iso"]["isomorphic"] == true && a["el_iso"]["isomorphic"] == false &&
                     b["l_iso"]["isomorphic"] == true && b["el_iso"]["isomorphic"] == false;
            });

  criterion(8, "preservation, containment and quotient checks pass over the default scope", [](std::string& d) {
    TheoremSuite suite;
    const auto scope = default_scope();
    bool ok = true;
    for (const char* id : {"simple_preserved", "dedekind_preserved", "simple_iff_count", "dedekind_iff_liso",
                           "frattini_containment", "derived_containment", "quotient_lemma",
                           "heineken_consequence"}) {
      const auto r = suite.run_check(id, scope);
      const bool labeled = r.vacuous == r.instances.empty() &&
                           (!r.vacuous || r.summary.find("vacuous") != std::string::npos);
      ok = ok && r.count("fail") == 0 && r.overall != "fail" && labeled;
      d += std::string(id) + " " + std::to_string(r.instances.size()) + (r.vacuous ? " vacuous" : "") + "; ";
    }
    return ok;
  });

  criterion(9, "inflate(M2, 1 2 1 1): |Aut(Fix)| = 2, |Im psi| = 1, |Aut_E| = 1", [](std::string& d) {
    const auto l = inflate(Lattice::diamond(2), {1, 2, 1, 1});
    const auto dec = aut_e_decomposition(l);
    const auto brute = brute_force_aut_e(l).size();
    TheoremSuite suite;
    const auto r = suite.run_check("psi_surjectivity", Scope{});
    const bool flagged = !r.instances.empty() && r.instances[0].verdict == "divergence-from-paper";
    d = "brute force " + std::to_string(brute) + (flagged ? ", epimorphism wording flagged as divergence" : "");
    return dec.aut_fix_order == 2 && dec.im_psi_order == 1 && dec.total_order == 1 && brute == 1 && flagged;
  });

  criterion(10, "two consecutive verify all --json runs are byte-identical", [&](std::string& d) {
    if (!elat_binary.empty()) {
      std::string a, b;
      const std::string cmd = "'" + elat_binary + "' verify all --json";
      if (!run_capture(cmd, a) || !run_capture(cmd, b)) return false;
      d = std::to_string(a.size()) + " bytes via " + elat_binary;
      return !a.empty() && a == b;
    }
    const auto a = serialize(cmd_verify({"all"}, {}, {}).report);
    const auto b = serialize(cmd_verify({"all"}, {}, {}).report);
    d = std::to_string(a.size()) + " bytes in process";
    return a == b;
  });

  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << std::endl;
  return failures ? 1 : 0;
}
