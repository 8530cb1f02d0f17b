#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "skewlat/heyting.hpp"
#include "skewlat/io.hpp"
#include "skewlat/models.hpp"
#include "skewlat/properties.hpp"
#include "skewlat/verify.hpp"

namespace {

using namespace skewlat;

// exit codes: 0 pass, 1 check failure, 2 parse error, 3 I/O error, 4 budget
int run_mapped(const std::function<int()>& body) {
  try {
    return body();
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const structural_error& e) {
    std::cerr << "malformed algebra: " << e.what() << '\n';
    return 2;
  } catch (const io_error& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 3;
  } catch (const resource_error& e) {
    std::cerr << "resource budget exceeded: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

void print_report(const CheckReport& r) {
  std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
  if (r.witness) {
    std::cout << "  witness (";
    for (size_t i = 0; i < r.witness->size(); ++i)
      std::cout << (i ? "," : "") << (*r.witness)[i];
    std::cout << ")";
  }
  std::cout << '\n';
}

void print_table(const OpTable& t) {
  for (int x = 0; x < t.size(); ++x) {
    for (int y = 0; y < t.size(); ++y) {
      if (y) std::cout << ' ';
      std::cout << t(x, y);
    }
    std::cout << '\n';
  }
}

void print_set(const std::vector<int>& v) {
  std::cout << '{';
  for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i];
  std::cout << '}';
}

int cmd_validate(const std::string& path) {
  const AlgebraFile file = load_algebra_file(path);
  const auto reports = validate_skew_lattice(file.alg);
  for (const CheckReport& r : reports) print_report(r);
  return all_passed(reports) ? 0 : 1;
}

int cmd_classify(const std::string& path, int cap) {
  const AlgebraFile file = load_algebra_file(path);
  const FiniteAlgebra& alg = file.alg;
  const auto reports = validate_skew_lattice(alg);
  if (!all_passed(reports)) {
    for (const CheckReport& r : reports)
      if (!r.passed) print_report(r);
    return 1;
  }

  std::cout << "name: " << file.name.value_or("(unnamed)") << '\n';
  std::cout << "size: " << alg.size << '\n';
  std::cout << "handedness: " << to_string(handedness(alg)) << '\n';

  const PropertyProfile p = classify(alg, cap);
  std::cout << "flags:";
  auto flag = [](bool v, const char* name) { return v ? std::string(" ") + name : ""; };
  std::cout << flag(p.symmetric, "symmetric") << flag(p.normal, "normal")
            << flag(p.regular, "regular") << flag(p.left_handed, "left-handed")
            << flag(p.right_handed, "right-handed")
            << flag(p.strongly_distributive, "strongly-distributive")
            << flag(p.distributive_eq12, "distributive")
            << flag(p.rectangular, "rectangular") << flag(p.has_zero, "has-zero")
            << flag(p.has_top_class, "has-top-class")
            << flag(p.join_complete, "join-complete") << '\n';

  const DClassPartition part = d_partition(alg);
  std::cout << "D-classes (" << part.classes.size() << "):\n";
  for (size_t c = 0; c < part.classes.size(); ++c) {
    std::cout << "  " << c << ": ";
    print_set(part.classes[c]);
    std::cout << '\n';
  }
  std::cout << "quotient meet:\n";
  print_table(part.quotient.meet);
  std::cout << "quotient join:\n";
  print_table(part.quotient.join);

  if (const auto top = top_class(part)) {
    std::cout << "top class: ";
    print_set(*top);
    std::cout << '\n';
    if (p.normal)
      for (int t : *top) {
        std::cout << "lattice section at t=" << t << ": ";
        print_set(lattice_section_at(alg, t));
        std::cout << '\n';
      }
  }
  return 0;
}

int cmd_imp(const std::string& path, int t, const std::string& method) {
  const AlgebraFile file = load_algebra_file(path);
  const FiniteAlgebra& alg = file.alg;
  if (method == "nh") {
    print_table(implication_t(alg, t));
    return 0;
  }
  if (method == "sup") {
    print_table(implication_via_sup_table(alg, t));
    return 0;
  }
  const OpTable nh = implication_t(alg, t);
  const OpTable sup = implication_via_sup_table(alg, t);
  print_table(nh);
  bool diff = false;
  for (int a = 0; a < alg.size; ++a)
    for (int b = 0; b < alg.size; ++b)
      if (nh(a, b) != sup(a, b)) {
        if (!diff) std::cout << "diff:\n";
        diff = true;
        std::cout << "(" << a << "," << b << "): nh=" << nh(a, b) << " sup=" << sup(a, b)
                  << '\n';
      }
  return diff ? 1 : 0;
}

int cmd_verify(const std::vector<std::string>& paths, int cap, bool machine, bool p4,
               std::optional<unsigned> seed, const std::string& mutate) {
  VerifyConfig cfg;
  cfg.subset_cap = cap;

  if (!mutate.empty()) {
    if (mutate != "pfn1") throw domain_error("--mutate supports only 'pfn1'");
    const Instance base{"pfn1", "pfn m=1", build_pfn_algebra(1)};
    Corpus corpus;
    corpus.instances = single_cell_mutants(base);
    const auto results = run_all(corpus, cfg);
    int detected = 0, missed = 0;
    for (const Instance& m : corpus.instances) {
      std::string by;
      for (const TheoremResult& r : results)
        if (r.instance == m.name && r.outcome == Outcome::fail) {
          by = r.theorem;
          break;
        }
      if (by.empty()) {
        ++missed;
        std::cout << "MISSED    " << m.name << '\n';
      } else {
        ++detected;
        std::cout << "DETECTED  " << m.name << "  by " << by << '\n';
      }
    }
    std::cout << detected << " detected, " << missed << " missed of "
              << corpus.instances.size() << " mutants\n";
    return detected > 0 ? 1 : 0;  // mutants are expected to fail checks
  }

  Corpus corpus;
  if (paths.empty()) {
    GeneratorSpec gen;
    if (p4) gen.pfn_arities = {1, 2, 3, 4};
    gen.seed = seed;
    corpus = enumerate_instances(gen);
  } else {
    for (const std::string& path : paths) {
      const AlgebraFile file = load_algebra_file(path);
      std::string name = file.name.value_or(path);
      corpus.instances.push_back({std::move(name), "file " + path, file.alg});
    }
  }
  for (const std::string& note : corpus.notes) std::cerr << "note: " << note << '\n';
  auto results = run_all(corpus, cfg);
  results.push_back(search_lemma_3_1(corpus));
  std::cout << format_results(results, machine);
  int fails = 0, passes = 0, skips = 0;
  for (const TheoremResult& r : results) {
    fails += r.outcome == Outcome::fail;
    passes += r.outcome == Outcome::pass;
    skips += r.outcome == Outcome::skip;
  }
  if (!machine)
    std::cout << passes << " pass, " << fails << " fail, " << skips << " skip\n";
  return fails == 0 ? 0 : 1;
}

int cmd_model(const std::string& kind, int m, int n, int k, const std::string& hand,
              const std::vector<std::string>& factors) {
  AlgebraFile out;
  if (kind == "pfn") {
    out.alg = build_pfn_algebra(m);
    out.name = "pfn" + std::to_string(m);
  } else if (kind == "rect") {
    if (hand != "left" && hand != "right") throw domain_error("--hand must be left or right");
    out.alg = rectangular_band(n, hand == "left" ? Hand::left : Hand::right);
    out.name = "rect" + std::to_string(n) + (hand == "left" ? "L" : "R");
  } else if (kind == "chain") {
    out.alg = chain_lattice(n);
    out.name = "chain" + std::to_string(n);
  } else if (kind == "bool") {
    out.alg = boolean_lattice(k);
    out.name = "bool" + std::to_string(1 << k);
  } else if (kind == "product") {
    if (factors.size() != 2) throw domain_error("product needs two algebra files");
    const AlgebraFile a = load_algebra_file(factors[0]);
    const AlgebraFile b = load_algebra_file(factors[1]);
    if (a.alg.size * b.alg.size > 4096)
      throw resource_error("product would exceed 4096 elements");
    out.alg = direct_product(a.alg, b.alg);
    if (a.name && b.name) out.name = "prod(" + *a.name + "," + *b.name + ")";
  } else {
    throw domain_error("unknown model kind: " + kind);
  }
  std::cout << emit_algebra_file(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skl - finite skew lattice toolkit"};
  app.require_subcommand(1);

  std::string path, method = "nh", hand = "left", mutate;
  std::vector<std::string> paths, factors;
  int t = 0, m = 1, n = 2, k = 1, cap = 12;
  bool machine = false, p4 = false;
  std::optional<unsigned> seed;

  auto* validate = app.add_subcommand("validate", "check the skew lattice axioms of a file");
  validate->add_option("path", path, "algebra file")->required();

  auto* classify = app.add_subcommand("classify", "print the property profile of a file");
  classify->add_option("path", path, "algebra file")->required();
  classify->add_option("--cap", cap, "commuting-subset size cap (0 = none)");

  auto* imp = app.add_subcommand("imp", "compute an implication table");
  imp->add_option("path", path, "algebra file")->required();
  imp->add_option("--t", t, "distinguished top-class element")->required();
  imp->add_option("--method", method, "nh, sup or both")
      ->check(CLI::IsMember({"nh", "sup", "both"}));

  auto* model = app.add_subcommand("model", "emit a generated algebra file");
  std::string kind;
  model->add_option("kind", kind, "pfn, rect, chain, bool or product")->required();
  model->add_option("-m", m, "pfn arity");
  model->add_option("-n", n, "carrier size for rect/chain");
  model->add_option("-k", k, "atom count for bool");
  model->add_option("--hand", hand, "left or right");
  model->add_option("factors", factors, "two algebra files for product");

  auto* verify = app.add_subcommand("verify", "run the theorem checks over a corpus");
  verify->add_option("paths", paths, "algebra files (default: generated corpus)");
  verify->add_option("--cap", cap, "commuting-subset size cap (0 = none)");
  verify->add_flag("--machine", machine, "tab-separated machine-readable output");
  verify->add_flag("--p4", p4, "include the 81-element partial-function algebra");
  verify->add_option("--seed", seed, "add seeded random subalgebras to the corpus");
  verify->add_option("--mutate", mutate, "run the single-cell mutation suite (pfn1)");

  CLI11_PARSE(app, argc, argv);

  return run_mapped([&]() -> int {
    if (*validate) return cmd_validate(path);
    if (*classify) return cmd_classify(path, cap);
    if (*imp) return cmd_imp(path, t, method);
    if (*model) return cmd_model(kind, m, n, k, hand, factors);
    return cmd_verify(paths, cap, machine, p4, seed, mutate);
  });
}
