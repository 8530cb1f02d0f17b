#ifndef SKEWLAT_MODELS_HPP_
#define SKEWLAT_MODELS_HPP_

#include "skewlat/core.hpp"

namespace skewlat {

// Partial functions from an m-element set to {0,1} are coded base 3:
// position i of the digit vector is element i of the domain set, digit
// values are 0 = undefined, 1 = maps to 0, 2 = maps to 1, and the index is
// sum(digit_i * 3^i). Index 0 is the empty function, index 3^m - 1 the
// all-ones total function.
int pfn_index(std::span<const int> digits);
std::vector<int> pfn_digits(int index, int arity);

/// The algebra of all partial functions from an m-element set to {0,1}:
/// meet restricts the left argument to the common domain, join overrides
/// with the left argument off the right one's domain, and the implication
/// extends the right argument by all-ones off both domains. Bottom is the
/// empty function and the distinguished top the all-ones function.
/// Throws resource_error if arity is outside 1..6.
FiniteAlgebra build_pfn_algebra(int arity);

/// Smallest subset containing the generators and closed under meet and join
/// (and the implication when include_imp is set), re-indexed ascending as a
/// standalone algebra. embedding[i] is the parent index of element i; the
/// parent's zero and top are propagated when the closure contains them.
struct Subalgebra {
  FiniteAlgebra alg;
  std::vector<int> embedding;
};

Subalgebra subalgebra_closure(const FiniteAlgebra& alg, std::span<const int> generators,
                              bool include_imp);

/// Componentwise tables on index pairs (i,j) -> i*b.size + j. The
/// implication, zero and top are propagated when both factors carry them.
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

enum class Hand { left, right };

/// Flat n-element band: left means x^y = x and xvy = y, right the mirror.
FiniteAlgebra rectangular_band(int n, Hand hand);

/// Total order 0 < 1 < ... < n-1 with min/max tables.
FiniteAlgebra chain_lattice(int n);

/// Subsets of a num_atoms-element set as bitmask indices, ordered by
/// inclusion; meet/join are bitwise and/or.
FiniteAlgebra boolean_lattice(int num_atoms);

}  // namespace skewlat

#endif  // SKEWLAT_MODELS_HPP_
