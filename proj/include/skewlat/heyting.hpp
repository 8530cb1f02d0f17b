#ifndef SKEWLAT_HEYTING_HPP_
#define SKEWLAT_HEYTING_HPP_

#include "skewlat/core.hpp"
#include "skewlat/properties.hpp"

namespace skewlat {

/// A bounded distributive lattice together with its implication table,
/// satisfying x^y <= z iff x <= imp(y,z).
struct HeytingLattice {
  FiniteAlgebra base;  // commutative, bounded, distributive
  OpTable imp;
  int one = 0;
  int zero = 0;
};

/// An algebra claiming to satisfy the NH axioms: tables plus an implication
/// table, a bottom and a distinguished element of the top D-class.
struct NcHeytingCandidate {
  FiniteAlgebra alg;
};

/// The greatest z with z^x <= y in a commutative lattice. Throws
/// domain_error when no greatest such z exists (non-distributive input).
int heyting_implication(const FiniteAlgebra& lat, int x, int y);

/// Builds the full implication table of a bounded distributive commutative
/// lattice and verifies (H1)-(H4) and (HA) on it.
HeytingLattice make_heyting(const FiniteAlgebra& lat);

/// Copy of `lat` carrying its Heyting implication table, bottom and top.
FiniteAlgebra attach_heyting_implication(const FiniteAlgebra& lat);

/// (H1)-(H4), (HA) and the bound laws for an implication table over a
/// commutative lattice with the given top and bottom.
std::vector<CheckReport> verify_heyting_axioms(const FiniteAlgebra& lat, const OpTable& imp,
                                               int one, int zero);

/// The unique b in the given D-class with b <= a, computed as a^x^a for any
/// class member x and cross-checked by scanning the whole class. Requires a
/// normal algebra whose class of a lies above the given class; throws
/// domain_error when the classes are not comparable that way.
int unique_below(const FiniteAlgebra& alg, std::span<const int> class_members, int a);

/// The implication table x -> y = y v u v y, where u is the unique element
/// below t in the D-class obtained by applying the quotient Heyting
/// implication to the classes of x and y. Requires a strongly distributive
/// algebra with a bottom whose quotient is distributive, and t in the top
/// D-class; throws domain_error otherwise.
OpTable implication_t(const FiniteAlgebra& alg, int t);

/// The implication computed as the join, inside the lattice (b v t v b)-down,
/// of all x there with x ^ (b v (t^a^t) v b) <= b. Intended for algebras
/// passing is_nc_frame; agrees with implication_t entrywise on them.
int implication_via_sup(const FiniteAlgebra& alg, const OrderRelations& ord, int t, int a,
                        int b);
OpTable implication_via_sup_table(const FiniteAlgebra& alg, int t);

/// One exhaustive report per axiom NH1-NH5, plus the top-class membership
/// law x^t^x = x and the NH4 consequence y <= x->y (checked through the
/// join characterization of leq). Throws structural_error when the
/// implication table or the distinguished top is missing.
std::vector<CheckReport> verify_nh(const NcHeytingCandidate& cand);

/// Passes iff the algebra is strongly distributive, every enumerated
/// commuting subset (sizes up to subset_cap, 0 = all) has a supremum, and
/// both infinite distributive laws hold against every element. On a law
/// failure the witness lists the subset members followed by the outer
/// element.
CheckReport is_nc_frame(const FiniteAlgebra& alg, int subset_cap = 0);

/// The section at a top-class element t, re-indexed as a standalone bounded
/// distributive lattice carrying its own Heyting implication. members[i] is
/// the carrier index of local element i. Throws domain_error when t is not
/// in the top class or the section is not a distributive lattice.
struct SectionHeyting {
  std::vector<int> members;  // ascending
  HeytingLattice heyting;
};

SectionHeyting section_heyting(const FiniteAlgebra& alg, int t);

/// phi(x) = t' ^ x ^ t' from the section at t to the section at t', with the
/// verification reports for bijectivity, preservation of meet, join and the
/// sections' own Heyting implications, preservation of the bounds, the
/// inverse psi(y) = t ^ y ^ t, and x D phi(x).
struct SectionIsomorphism {
  int t = 0;
  int t_prime = 0;
  std::vector<int> domain;  // down-set of t, ascending
  std::vector<int> image;   // image[i] = phi(domain[i])
  std::vector<CheckReport> checks;
  bool ok() const { return all_passed(checks); }
};

SectionIsomorphism phi_iso(const FiniteAlgebra& alg, int t, int t_prime);

/// The maximal lattice image equipped with the implication induced by the
/// algebra's table. Verifies exhaustively that D is compatible with the
/// implication, that the induced table satisfies the Heyting axioms, and
/// that class projection is a Heyting isomorphism from the section at the
/// distinguished top. Throws inconsistency_error on any violation.
HeytingLattice quotient_heyting(const FiniteAlgebra& alg);

/// Heyting axioms for the section at t (elements <= t with the restricted
/// operations, top t and the algebra's bottom), preceded by a closure
/// report for the implication on the section.
std::vector<CheckReport> verify_section_heyting(const FiniteAlgebra& alg, int t);

}  // namespace skewlat

#endif  // SKEWLAT_HEYTING_HPP_
