#ifndef SKEWLAT_PROPERTIES_HPP_
#define SKEWLAT_PROPERTIES_HPP_

#include <functional>
#include <optional>
#include <string>

#include "skewlat/core.hpp"

namespace skewlat {

/// A pairwise meet-commuting subset of the carrier, with its least upper
/// bound under leq when one exists.
struct CommutingSubset {
  std::vector<int> members;  // ascending
  std::optional<int> supremum;
};

enum class Handedness { left, right, both, neither };

std::string to_string(Handedness h);

/// Classification flags for a validated skew lattice. Each flag is
/// reproducible by re-running the predicate of the same name.
struct PropertyProfile {
  bool symmetric = false;
  bool normal = false;
  bool regular = false;
  bool left_handed = false;
  bool right_handed = false;
  bool strongly_distributive = false;
  bool distributive_eq12 = false;
  bool rectangular = false;
  bool has_zero = false;
  bool has_top_class = false;
  bool join_complete = false;
};

/// x^y = y^x iff xvy = yvx, for every pair.
CheckReport is_symmetric(const FiniteAlgebra& alg);

/// x^y^z^x = x^z^y^x, exhaustively.
CheckReport is_normal(const FiniteAlgebra& alg);

/// (xvy)^z = (x^z)v(y^z) and x^(yvz) = (x^y)v(x^z), exhaustively.
CheckReport is_strongly_distributive(const FiniteAlgebra& alg);

/// The two double-sided distributive identities
/// x^(yvz)^x = (x^y^x)v(x^z^x) and xv(y^z)vx = (xvyvx)^(xvzvx).
CheckReport is_distributive_eq12(const FiniteAlgebra& alg);

/// x^y^x^z^x = x^y^z^x and its join dual; holds in every skew lattice.
CheckReport is_regular(const FiniteAlgebra& alg);

/// x^y = yvx for every pair (a single flat D-class).
CheckReport is_rectangular(const FiniteAlgebra& alg);

/// left:  x^y^x = x^y everywhere; right: x^y^x = y^x everywhere;
/// both means the algebra is commutative.
Handedness handedness(const FiniteAlgebra& alg);

/// Members of the D-class projecting to the quotient's top element.
/// Always present for a finite validated algebra.
std::optional<std::vector<int>> top_class(const DClassPartition& part);
std::optional<std::vector<int>> top_class(const FiniteAlgebra& alg);

/// down_set(t) for t in the top D-class of a normal algebra; verified to
/// meet every D-class exactly once and to be commutative. Throws
/// domain_error if t is not in the top class, inconsistency_error if the
/// section checks fail.
std::vector<int> lattice_section_at(const FiniteAlgebra& alg, int t);

/// Enumerates every pairwise meet-commuting subset with at most max_size
/// members (max_size 0 means no cap), including the empty set, in
/// lexicographic member order. Each subset is emitted with its supremum.
/// Worst case is exponential in the carrier size; cap accordingly.
void for_each_commuting_subset(const FiniteAlgebra& alg, const OrderRelations& ord,
                               int max_size,
                               const std::function<void(const CommutingSubset&)>& fn);

std::vector<CommutingSubset> commuting_subsets(const FiniteAlgebra& alg, int max_size = 0);

/// Passes iff every commuting subset (sizes up to max_size, 0 = all) has a
/// supremum; the witness of a failure is a supremum-less subset. Requires a
/// symmetric algebra (throws domain_error otherwise).
CheckReport is_join_complete(const FiniteAlgebra& alg, int max_size = 0);

/// Runs all classifiers. subset_cap bounds the join-completeness scan.
PropertyProfile classify(const FiniteAlgebra& alg, int subset_cap = 0);

}  // namespace skewlat

#endif  // SKEWLAT_PROPERTIES_HPP_
