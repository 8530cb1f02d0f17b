#ifndef SKEWLAT_CORE_HPP_
#define SKEWLAT_CORE_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewlat {

// Thrown when an operation table is malformed (entries out of range,
// missing required tables).
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a precondition of an operation is violated by the input
// (e.g. t not in the top D-class, non-distributive lattice).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a derived structure violates a law that the preconditions
// guarantee; indicates the input was not what it claimed to be.
struct inconsistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a requested construction exceeds the configured budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// n x n table of element indices, row-major: (x, y) holds op(x, y).
class OpTable {
 public:
  OpTable() = default;
  explicit OpTable(int n, int fill = 0) : n_(n), cells_(static_cast<size_t>(n) * n, fill) {}

  int operator()(int x, int y) const { return cells_[static_cast<size_t>(x) * n_ + y]; }
  int& at(int x, int y) { return cells_[static_cast<size_t>(x) * n_ + y]; }
  int size() const { return n_; }
  std::span<const int> cells() const { return cells_; }

  bool operator==(const OpTable&) const = default;

 private:
  int n_ = 0;
  std::vector<int> cells_;
};

/// A finite double band given by its operation tables. Elements are the
/// dense indices 0..size-1; all semantics live in the tables.
struct FiniteAlgebra {
  int size = 0;
  OpTable meet;
  OpTable join;
  std::optional<OpTable> imp;  // implication table, when the algebra carries one
  std::optional<int> zero;     // bottom element index
  std::optional<int> top;      // distinguished element of the top D-class

  bool operator==(const FiniteAlgebra&) const = default;
};

/// Left fold of the meet table over a sequence, e.g. meet_all(a, {x,y,z,x})
/// computes x ^ y ^ z ^ x.
int meet_all(const FiniteAlgebra& a, std::initializer_list<int> xs);
int join_all(const FiniteAlgebra& a, std::initializer_list<int> xs);

/// Pass/fail result for one checked law. On failure `witness` holds the
/// element tuple exhibiting the violation, in the order the law quantifies
/// its variables; re-evaluating the law on the witness reproduces it.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::optional<std::vector<int>> witness;

  static CheckReport pass(std::string n) { return {std::move(n), true, std::nullopt}; }
  static CheckReport fail(std::string n, std::vector<int> w) {
    return {std::move(n), false, std::move(w)};
  }
};

bool all_passed(const std::vector<CheckReport>& reports);

/// n x n boolean relation with bitset rows; row(x) is the set {y | x R y}.
class RelMatrix {
 public:
  RelMatrix() = default;
  explicit RelMatrix(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * ((n + 63) / 64), 0) {}

  bool operator()(int x, int y) const {
    return (bits_[static_cast<size_t>(x) * words_ + (y >> 6)] >> (y & 63)) & 1u;
  }
  void set(int x, int y) { bits_[static_cast<size_t>(x) * words_ + (y >> 6)] |= uint64_t{1} << (y & 63); }
  std::span<const uint64_t> row(int x) const {
    return {bits_.data() + static_cast<size_t>(x) * words_, static_cast<size_t>(words_)};
  }
  int size() const { return n_; }
  int words() const { return words_; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

/// Natural partial order (leq) and natural preorder (preceq):
///   leq(x,y)    iff  x^y = x = y^x   (equivalently xvy = y = yvx)
///   preceq(x,y) iff  x^y^x = x       (equivalently yvxvy = y)
struct OrderRelations {
  RelMatrix leq;
  RelMatrix preceq;
};

/// Partition into Green's D-classes (x D y iff x preceq y and y preceq x)
/// together with the quotient tables, which form a lattice. Class ids are
/// assigned in order of each class's smallest element index. The quotient
/// carries its bottom and top elements (a finite lattice always has both).
struct DClassPartition {
  std::vector<int> class_of;             // element index -> class id
  std::vector<std::vector<int>> classes; // class id -> ascending member list
  FiniteAlgebra quotient;
};

struct DownSet {
  std::vector<int> members;  // ascending
  CheckReport lattice_check; // closed under ^, v and commutative on members
};

/// Checks the double-band axioms: idempotency and associativity of both
/// operations and the four absorption laws, plus the declared bottom/top
/// laws when those fields are set. Returns one report per law; all passing
/// means the tables present a skew lattice. Throws structural_error if a
/// table entry is out of range.
std::vector<CheckReport> validate_skew_lattice(const FiniteAlgebra& alg);

/// Builds leq and preceq and asserts their defining equivalences
/// (x^y = x iff xvy = y, agreement of the meet and join characterizations,
/// antisymmetry of leq, transitivity of preceq, leq contained in preceq).
/// Throws inconsistency_error if any fails, i.e. the input was not a
/// validated skew lattice.
OrderRelations compute_orders(const FiniteAlgebra& alg);

/// Computes the D-class partition and quotient tables, verifying that the
/// quotient is well defined and commutative, that each class is rectangular
/// (x^y = yvx inside a class) and that the projection is a homomorphism.
DClassPartition d_partition(const FiniteAlgebra& alg);

/// {x | x leq u}, with a sub-report on whether the restriction of the two
/// operations to the set is a (closed, commutative) lattice.
DownSet down_set(const FiniteAlgebra& alg, const OrderRelations& ord, int u);
DownSet down_set(const FiniteAlgebra& alg, int u);

/// Least element under leq, if one exists (the semantic bottom).
std::optional<int> least_element(const FiniteAlgebra& alg, const OrderRelations& ord);

/// Least upper bound of the given elements under leq, if one exists.
std::optional<int> supremum_of(const OrderRelations& ord, std::span<const int> members);

}  // namespace skewlat

#endif  // SKEWLAT_CORE_HPP_
