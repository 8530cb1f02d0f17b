// Acceptance suite: runs each acceptance criterion end to end and prints one
// pass/fail line per criterion. Expects the path to the skl binary as its
// only argument (used by the determinism and round-trip criterion).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracle_pfn.hpp"
#include "skewlat/heyting.hpp"
#include "skewlat/io.hpp"
#include "skewlat/models.hpp"
#include "skewlat/properties.hpp"
#include "skewlat/verify.hpp"
#include "testutil.hpp"

using namespace skewlat;

namespace {

std::string g_skl;

std::string capture(const std::string& args) {
  const std::string cmd = g_skl + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run: " + cmd);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

bool require(bool cond, const std::string& what, std::string& note) {
  if (!cond && note.empty()) note = what;
  return cond;
}

int pfn_arity_of(const std::string& name) {
  if (name.rfind("pfn", 0) == 0 && name.size() == 4) return name[3] - '0';
  return 0;
}

// criterion 1 -------------------------------------------------------------

bool pfn_pipeline_matches_oracle(std::string& note) {
  bool ok = true;
  for (int m : {1, 2, 3}) {
    const FiniteAlgebra alg = build_pfn_algebra(m);
    for (int x = 0; x < alg.size && ok; ++x)
      for (int y = 0; y < alg.size && ok; ++y) {
        ok = require(alg.meet(x, y) == oracle::meet_idx(x, y, m), "meet table deviates", note);
        ok = ok && require(alg.join(x, y) == oracle::join_idx(x, y, m), "join table deviates",
                           note);
        ok = ok && require((*alg.imp)(x, y) == oracle::imp_idx(x, y, m),
                           "implication table deviates", note);
      }
    ok = ok && require(all_passed(validate_skew_lattice(alg)), "axioms fail", note);
    ok = ok && require(handedness(alg) == Handedness::left, "not left-handed", note);
    ok = ok && require(is_strongly_distributive(alg).passed, "not strongly distributive", note);
    ok = ok && require(all_passed(verify_nh(NcHeytingCandidate{alg})), "NH axioms fail", note);
    if (!ok) {
      note += " (m=" + std::to_string(m) + ")";
      break;
    }
  }
  return ok;
}

// criterion 2 -------------------------------------------------------------

bool implication_agreement(std::string& note) {
  const Corpus corpus = enumerate_instances({});
  int covered = 0;
  for (const Instance& inst : corpus.instances) {
    const FiniteAlgebra& alg = inst.alg;
    if (!all_passed(validate_skew_lattice(alg))) continue;
    if (!is_strongly_distributive(alg).passed) continue;
    const OrderRelations ord = compute_orders(alg);
    if (!least_element(alg, ord)) continue;
    try {
      make_heyting(d_partition(alg).quotient);
    } catch (const domain_error&) {
      continue;
    }
    ++covered;
    const int m = pfn_arity_of(inst.name);
    const std::vector<int> tops = *top_class(alg);
    for (int t : tops) {
      const OpTable by_class = implication_t(alg, t);
      const OpTable by_sup = implication_via_sup_table(alg, t);
      if (!(by_class == by_sup)) {
        note = "methods disagree on " + inst.name + " at t=" + std::to_string(t);
        return false;
      }
      if (m > 0) {
        const oracle::Pfn tf = oracle::from_index(t, m);
        for (int x = 0; x < alg.size; ++x)
          for (int y = 0; y < alg.size; ++y) {
            const int want = oracle::to_index(
                oracle::imp_t(oracle::from_index(x, m), oracle::from_index(y, m), tf, m), m);
            if (by_class(x, y) != want) {
              note = "set formula disagrees on " + inst.name;
              return false;
            }
          }
      }
      if (alg.imp && t == *alg.top && !(by_class == *alg.imp)) {
        note = "carried table disagrees on " + inst.name;
        return false;
      }
    }
  }
  note = std::to_string(covered) + " instances covered";
  return covered >= 10;
}

// criterion 3 -------------------------------------------------------------

bool quotients_are_boolean(std::string& note) {
  for (int m : {1, 2, 3}) {
    const DClassPartition part = d_partition(build_pfn_algebra(m));
    if ((1 << m) != part.quotient.size ||
        !testutil::find_lattice_iso(part.quotient, boolean_lattice(m))) {
      note = "no isomorphism for m=" + std::to_string(m);
      return false;
    }
  }
  return true;
}

// criterion 4 -------------------------------------------------------------

bool section_suite(std::string& note) {
  const Corpus corpus = enumerate_instances({});
  int covered = 0;
  for (const Instance& inst : corpus.instances) {
    const FiniteAlgebra& alg = inst.alg;
    if (!alg.imp || !alg.top) continue;
    if (!all_passed(validate_skew_lattice(alg))) continue;
    if (!all_passed(verify_nh(NcHeytingCandidate{alg}))) continue;
    ++covered;
    if (!all_passed(verify_section_heyting(alg, *alg.top))) {
      note = "Heyting axioms fail on the section of " + inst.name;
      return false;
    }
    const std::vector<int> tops = *top_class(alg);
    for (int t : tops)
      for (int tp : tops) {
        const SectionIsomorphism iso = phi_iso(alg, t, tp);
        if (!iso.ok()) {
          note = "phi not an isomorphism on " + inst.name + " (" + std::to_string(t) + "->" +
                 std::to_string(tp) + ")";
          return false;
        }
      }
    try {
      quotient_heyting(alg);  // D-compatibility and the quotient-section isomorphism
    } catch (const std::exception& e) {
      note = std::string(e.what()) + " on " + inst.name;
      return false;
    }
  }
  note = std::to_string(covered) + " candidates covered";
  return covered >= 4;
}

// criterion 5 -------------------------------------------------------------

bool frame_suite(std::string& note) {
  const Corpus corpus = enumerate_instances({});
  int covered = 0;
  double pfn3_secs = 0;
  for (const Instance& inst : corpus.instances) {
    const FiniteAlgebra& alg = inst.alg;
    if (!all_passed(validate_skew_lattice(alg))) continue;
    if (!is_strongly_distributive(alg).passed) continue;
    const OrderRelations ord = compute_orders(alg);
    if (!least_element(alg, ord)) continue;
    ++covered;
    const int cap = alg.size <= 27 ? 0 : 3;
    if (!is_nc_frame(alg, cap).passed) {
      note = "frame laws fail on " + inst.name;
      return false;
    }
    if (alg.size == 27) {
      const auto t0 = std::chrono::steady_clock::now();
      if (!is_nc_frame(alg, 12).passed) {
        note = "frame laws fail on " + inst.name + " at cap 12";
        return false;
      }
      pfn3_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (pfn3_secs >= 60.0) {
        note = "27-element instance took " + std::to_string(pfn3_secs) + "s";
        return false;
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d instances covered, 27-element run %.2fs", covered,
                pfn3_secs);
  note = buf;
  return covered >= 10;
}

// criterion 6 -------------------------------------------------------------

bool lemma_suite(std::string& note) {
  const Corpus corpus = enumerate_instances({});
  const auto results = run_all(corpus, {});
  const std::set<std::string> lemmas = {"Lemma 2.1", "Lemma 2.2", "Lemma 3.3",
                                        "Lemma 3.4", "Lemma 3.5", "Lemma 3.7",
                                        "Lemma 4.2", "Lemma 4.3", "Proposition 4.1"};
  std::map<std::string, int> passes;
  for (const TheoremResult& r : results) {
    if (!lemmas.count(r.theorem)) continue;
    if (r.outcome == Outcome::fail) {
      note = r.theorem + " fails on " + r.instance;
      return false;
    }
    if (r.outcome == Outcome::pass) passes[r.theorem]++;
  }
  for (const std::string& id : lemmas)
    if (passes[id] == 0) {
      note = id + " never ran";
      return false;
    }
  if (search_lemma_3_1(corpus).outcome != Outcome::pass) {
    note = "the top-element search found a refutation";
    return false;
  }
  return true;
}

// criterion 7 -------------------------------------------------------------

bool mutation_sensitivity(std::string& note) {
  const Instance base{"pfn1", "pfn m=1", build_pfn_algebra(1)};
  Corpus corpus;
  corpus.instances = single_cell_mutants(base);
  if (corpus.instances.size() != 54) {
    note = "expected 54 mutants";
    return false;
  }
  const auto results = run_all(corpus, {});
  std::set<std::string> detected;
  for (const TheoremResult& r : results)
    if (r.outcome == Outcome::fail) detected.insert(r.instance);
  for (const Instance& m : corpus.instances)
    if (!detected.count(m.name)) {
      note = "undetected mutant " + m.name;
      return false;
    }
  note = "54/54 mutants detected";
  return true;
}

// criterion 8 -------------------------------------------------------------

bool determinism_and_roundtrip(std::string& note) {
  const std::string run1 = capture("verify --machine");
  const std::string run2 = capture("verify --machine");
  if (run1.empty() || run1 != run2) {
    note = "verify output is not byte-identical";
    return false;
  }
  const std::vector<std::string> kinds = {"model pfn -m 1",          "model pfn -m 2",
                                          "model rect -n 2 --hand left",
                                          "model rect -n 3 --hand right",
                                          "model chain -n 5",        "model bool -k 2"};
  for (const std::string& kind : kinds) {
    const std::string text = capture(kind);
    if (text.empty() || text != capture(kind)) {
      note = "model emission is not deterministic: " + kind;
      return false;
    }
    const AlgebraFile parsed = parse_algebra_file(text);
    if (emit_algebra_file(parsed) != text) {
      note = "round-trip not bit-exact: " + kind;
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-skl>\n";
    return 2;
  }
  g_skl = argv[1];

  struct Criterion {
    int number;
    std::string label;
    std::function<bool(std::string&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "partial-function tables match the set-formula oracle (m=1,2,3)",
       pfn_pipeline_matches_oracle},
      {2, "class-wise and sup-formula implications agree for every top element",
       implication_agreement},
      {3, "quotients of the m<=3 models are the Boolean lattices 2^m", quotients_are_boolean},
      {4, "sections are Heyting algebras and phi/psi are inverse isomorphisms", section_suite},
      {5, "strongly distributive instances with bottom satisfy the frame laws", frame_suite},
      {6, "lemma suite holds on every hypothesis-satisfying instance", lemma_suite},
      {7, "every single-cell mutation of the m=1 candidate is detected", mutation_sensitivity},
      {8, "verify runs are byte-identical and model files round-trip bit-exactly",
       determinism_and_roundtrip},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  criterion %d: %s", ok ? "PASS" : "FAIL", c.number, c.label.c_str());
    if (!note.empty()) std::printf("  (%s)", note.c_str());
    std::printf("  [%.2fs]\n", secs);
    failures += !ok;
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else std::printf("all %zu criteria satisfied\n", criteria.size());
  return failures ? 1 : 0;
}
