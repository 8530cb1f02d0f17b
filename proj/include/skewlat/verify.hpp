#ifndef SKEWLAT_VERIFY_HPP_
#define SKEWLAT_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewlat/core.hpp"

namespace skewlat {

struct Instance {
  std::string name;
  std::string provenance;
  FiniteAlgebra alg;
};

struct Corpus {
  std::vector<Instance> instances;
  std::vector<std::string> notes;  // generator truncations and similar events
};

enum class Outcome { pass, fail, skip };

std::string to_string(Outcome o);

/// One check outcome. On a skip, `reason` holds the tag of the first failed
/// hypothesis (re-testable through hypothesis_holds); on a failure it holds
/// a short note and `witness` the offending elements when available.
struct TheoremResult {
  std::string theorem;
  std::string instance;
  Outcome outcome = Outcome::pass;
  std::string reason;
  std::optional<std::vector<int>> witness;
};

/// subset_cap bounds the size of enumerated commuting subsets in the
/// law-quantified checks (0 = no cap). Carriers larger than full_enum_limit
/// always fall back to large_carrier_cap, since the enumeration cost there
/// is exponential.
struct VerifyConfig {
  int subset_cap = 0;
  int full_enum_limit = 27;
  int large_carrier_cap = 3;
};

int effective_subset_cap(const VerifyConfig& cfg, int carrier);

/// Runs, per instance, every check whose hypotheses the instance satisfies:
/// the skew lattice axioms, Lemmas 2.1, 2.2, 3.1, 3.3, 3.4, 3.5, 3.7, 4.2,
/// 4.3, Theorems 3.6, 3.8, 4.4, 4.5, Proposition 4.1 and the NH axiom
/// block. Checks whose hypotheses fail are reported as skips naming the
/// failed hypothesis. Results are sorted by (theorem, instance).
std::vector<TheoremResult> run_all(const Corpus& corpus, const VerifyConfig& cfg = {});

/// Scans the corpus for strongly distributive instances possessing a
/// two-sided top element and asserts each is commutative; any
/// noncommutative hit is reported as a refutation.
TheoremResult search_lemma_3_1(const Corpus& corpus);

/// Re-evaluates a hypothesis tag used in skip reasons: one of
/// "skew-lattice", "strongly-distributive", "symmetric", "normal",
/// "has-zero", "has-imp", "has-top", "nh-axioms", "two-sided-top",
/// "quotient-distributive", "join-complete".
bool hypothesis_holds(const std::string& tag, const FiniteAlgebra& alg,
                      const VerifyConfig& cfg = {});

struct GeneratorSpec {
  std::vector<int> pfn_arities = {1, 2, 3};  // partial-function models to build
  bool chains = true;                        // chains up to 8 elements
  bool bools = true;                         // Boolean lattices up to 8 elements
  bool bands = true;                         // rectangular bands up to 3, both hands
  bool products = true;                      // pairwise products over a fixed base list
  int closure_generators = 3;                // closures of <= this many generators
  std::optional<unsigned> seed;              // adds seeded random closures of pfn3
};

/// Deterministic corpus driven by the generator fields. Closures are taken
/// over the largest included partial-function model of at most 9 elements.
/// An all-disabled generator yields an empty corpus. Deduplicated by
/// canonical table key, first occurrence wins.
Corpus enumerate_instances(const GeneratorSpec& spec = {});

/// Canonical serialization of size, meet, join and imp tables (absent imp
/// becomes a sentinel); equal keys mean identical tables.
std::string canonical_table_key(const FiniteAlgebra& alg);
uint64_t canonical_table_hash(const FiniteAlgebra& alg);

/// Every algebra obtained from the instance by changing a single cell of
/// the meet, join or imp table to a different value.
std::vector<Instance> single_cell_mutants(const Instance& inst);

std::string format_results(const std::vector<TheoremResult>& results, bool machine);

}  // namespace skewlat

#endif  // SKEWLAT_VERIFY_HPP_
