#include "skewlat/core.hpp"

#include <algorithm>

namespace skewlat {

namespace {

void check_table(const OpTable& t, int n, const char* what) {
  if (t.size() != n) throw structural_error(std::string(what) + " table has wrong size");
  for (int v : t.cells())
    if (v < 0 || v >= n) throw structural_error(std::string(what) + " table entry out of range");
}

// ub &= row, returns true if ub still has a set bit
bool and_rows(std::vector<uint64_t>& ub, std::span<const uint64_t> row) {
  bool any = false;
  for (size_t w = 0; w < ub.size(); ++w) {
    ub[w] &= row[w];
    any |= ub[w] != 0;
  }
  return any;
}

bool subset_of(std::span<const uint64_t> a, std::span<const uint64_t> b) {
  for (size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

}  // namespace

int meet_all(const FiniteAlgebra& a, std::initializer_list<int> xs) {
  auto it = xs.begin();
  int acc = *it++;
  for (; it != xs.end(); ++it) acc = a.meet(acc, *it);
  return acc;
}

int join_all(const FiniteAlgebra& a, std::initializer_list<int> xs) {
  auto it = xs.begin();
  int acc = *it++;
  for (; it != xs.end(); ++it) acc = a.join(acc, *it);
  return acc;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.passed; });
}

std::vector<CheckReport> validate_skew_lattice(const FiniteAlgebra& alg) {
  const int n = alg.size;
  if (n <= 0) throw structural_error("algebra must have at least one element");
  check_table(alg.meet, n, "meet");
  check_table(alg.join, n, "join");
  if (alg.imp) check_table(*alg.imp, n, "imp");
  if (alg.zero && (*alg.zero < 0 || *alg.zero >= n))
    throw structural_error("zero index out of range");
  if (alg.top && (*alg.top < 0 || *alg.top >= n))
    throw structural_error("top index out of range");

  std::vector<CheckReport> out;

  auto idempotent = [&](const OpTable& op, const char* name) {
    for (int x = 0; x < n; ++x)
      if (op(x, x) != x) return CheckReport::fail(name, {x});
    return CheckReport::pass(name);
  };
  out.push_back(idempotent(alg.meet, "idempotency of meet"));
  out.push_back(idempotent(alg.join, "idempotency of join"));

  auto associative = [&](const OpTable& op, const char* name) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (op(op(x, y), z) != op(x, op(y, z))) return CheckReport::fail(name, {x, y, z});
    return CheckReport::pass(name);
  };
  out.push_back(associative(alg.meet, "associativity of meet"));
  out.push_back(associative(alg.join, "associativity of join"));

  auto absorption = [&](const char* name, auto law) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!law(x, y)) return CheckReport::fail(name, {x, y});
    return CheckReport::pass(name);
  };
  out.push_back(absorption("absorption x^(xvy)=x", [&](int x, int y) {
    return alg.meet(x, alg.join(x, y)) == x;
  }));
  out.push_back(absorption("absorption xv(x^y)=x", [&](int x, int y) {
    return alg.join(x, alg.meet(x, y)) == x;
  }));
  out.push_back(absorption("absorption (x^y)vy=y", [&](int x, int y) {
    return alg.join(alg.meet(x, y), y) == y;
  }));
  out.push_back(absorption("absorption (xvy)^y=y", [&](int x, int y) {
    return alg.meet(alg.join(x, y), y) == y;
  }));

  if (alg.zero) {
    const int z = *alg.zero;
    CheckReport r = CheckReport::pass("bottom element laws");
    for (int x = 0; x < n; ++x)
      if (alg.meet(x, z) != z || alg.meet(z, x) != z || alg.join(x, z) != x ||
          alg.join(z, x) != x) {
        r = CheckReport::fail("bottom element laws", {x});
        break;
      }
    out.push_back(std::move(r));
  }
  if (alg.top) {
    const int t = *alg.top;
    CheckReport r = CheckReport::pass("distinguished top law x^t^x=x");
    for (int x = 0; x < n; ++x)
      if (meet_all(alg, {x, t, x}) != x) {
        r = CheckReport::fail("distinguished top law x^t^x=x", {x});
        break;
      }
    out.push_back(std::move(r));
  }
  return out;
}

OrderRelations compute_orders(const FiniteAlgebra& alg) {
  const int n = alg.size;
  OrderRelations ord{RelMatrix(n), RelMatrix(n)};

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const bool leq_meet = alg.meet(x, y) == x && alg.meet(y, x) == x;
      const bool leq_join = alg.join(x, y) == y && alg.join(y, x) == y;
      if (leq_meet != leq_join)
        throw inconsistency_error("meet and join characterizations of leq disagree");
      // pairwise equivalences: x^y=x iff xvy=y, and x^y=y iff xvy=x
      if ((alg.meet(x, y) == x) != (alg.join(x, y) == y) ||
          (alg.meet(x, y) == y) != (alg.join(x, y) == x))
        throw inconsistency_error("the meet/join order equivalences fail");
      if (leq_meet) ord.leq.set(x, y);

      const bool pre_meet = meet_all(alg, {x, y, x}) == x;
      const bool pre_join = join_all(alg, {y, x, y}) == y;
      if (pre_meet != pre_join)
        throw inconsistency_error("meet and join characterizations of preceq disagree");
      if (pre_meet) ord.preceq.set(x, y);
    }

  for (int x = 0; x < n; ++x) {
    if (!ord.leq(x, x) || !ord.preceq(x, x))
      throw inconsistency_error("natural orders are not reflexive");
    for (int y = 0; y < n; ++y) {
      if (x != y && ord.leq(x, y) && ord.leq(y, x))
        throw inconsistency_error("leq is not antisymmetric");
      if (ord.leq(x, y) && !ord.preceq(x, y))
        throw inconsistency_error("leq is not contained in preceq");
      // transitivity: x preceq y implies row(y) subset of row(x)
      if (ord.preceq(x, y) && !subset_of(ord.preceq.row(y), ord.preceq.row(x)))
        throw inconsistency_error("preceq is not transitive");
    }
  }
  return ord;
}

DClassPartition d_partition(const FiniteAlgebra& alg) {
  const int n = alg.size;
  const OrderRelations ord = compute_orders(alg);

  DClassPartition part;
  part.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (part.class_of[x] != -1) continue;
    const int id = static_cast<int>(part.classes.size());
    std::vector<int> members;
    for (int y = x; y < n; ++y)
      if (ord.preceq(x, y) && ord.preceq(y, x)) {
        part.class_of[y] = id;
        members.push_back(y);
      }
    part.classes.push_back(std::move(members));
  }

  // each class is a rectangular subalgebra: x^y = yvx for class members
  for (const auto& cls : part.classes)
    for (int x : cls)
      for (int y : cls)
        if (alg.meet(x, y) != alg.join(y, x))
          throw inconsistency_error("a D-class is not rectangular");

  const int k = static_cast<int>(part.classes.size());
  FiniteAlgebra q;
  q.size = k;
  q.meet = OpTable(k, -1);
  q.join = OpTable(k, -1);
  // well-definedness: every representative pair must land in the same class
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int cx = part.class_of[x], cy = part.class_of[y];
      const int cm = part.class_of[alg.meet(x, y)];
      const int cj = part.class_of[alg.join(x, y)];
      if (q.meet(cx, cy) == -1) q.meet.at(cx, cy) = cm;
      else if (q.meet(cx, cy) != cm)
        throw inconsistency_error("quotient meet is not well defined");
      if (q.join(cx, cy) == -1) q.join.at(cx, cy) = cj;
      else if (q.join(cx, cy) != cj)
        throw inconsistency_error("quotient join is not well defined");
    }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (q.meet(a, b) != q.meet(b, a) || q.join(a, b) != q.join(b, a))
        throw inconsistency_error("quotient is not commutative");
  if (!all_passed(validate_skew_lattice(q)))
    throw inconsistency_error("quotient is not a lattice");

  // a finite lattice has a least and a greatest element
  int bot = 0, top = 0;
  for (int a = 1; a < k; ++a) {
    bot = q.meet(bot, a);
    top = q.join(top, a);
  }
  q.zero = bot;
  q.top = top;
  if (alg.zero && part.class_of[*alg.zero] != bot)
    throw inconsistency_error("declared zero does not project to the quotient bottom");
  part.quotient = std::move(q);
  return part;
}

DownSet down_set(const FiniteAlgebra& alg, const OrderRelations& ord, int u) {
  DownSet ds;
  for (int x = 0; x < alg.size; ++x)
    if (ord.leq(x, u)) ds.members.push_back(x);

  ds.lattice_check = CheckReport::pass("down-set is a lattice");
  for (int x : ds.members) {
    for (int y : ds.members) {
      const int m = alg.meet(x, y), j = alg.join(x, y);
      const bool closed = ord.leq(m, u) && ord.leq(j, u);
      const bool comm = m == alg.meet(y, x) && j == alg.join(y, x);
      if (!closed || !comm) {
        ds.lattice_check = CheckReport::fail("down-set is a lattice", {x, y});
        return ds;
      }
    }
  }
  return ds;
}

DownSet down_set(const FiniteAlgebra& alg, int u) {
  return down_set(alg, compute_orders(alg), u);
}

std::optional<int> least_element(const FiniteAlgebra& alg, const OrderRelations& ord) {
  for (int z = 0; z < alg.size; ++z) {
    bool least = true;
    for (int x = 0; x < alg.size && least; ++x) least = ord.leq(z, x);
    if (least) return z;
  }
  return std::nullopt;
}

std::optional<int> supremum_of(const OrderRelations& ord, std::span<const int> members) {
  const int n = ord.leq.size();
  const int words = ord.leq.words();
  // upper bounds = intersection of the leq up-sets of the members
  std::vector<uint64_t> ub(words, ~uint64_t{0});
  if (n % 64) ub[words - 1] = (uint64_t{1} << (n % 64)) - 1;
  for (int x : members)
    if (!and_rows(ub, ord.leq.row(x))) return std::nullopt;
  // least upper bound: u with ub contained in the up-set of u
  for (int w = 0; w < words; ++w) {
    uint64_t bits = ub[w];
    while (bits) {
      const int u = w * 64 + __builtin_ctzll(bits);
      bits &= bits - 1;
      if (subset_of(std::span<const uint64_t>(ub), ord.leq.row(u))) return u;
    }
  }
  return std::nullopt;
}

}  // namespace skewlat
