#include "skewlat/properties.hpp"

#include <algorithm>

namespace skewlat {

std::string to_string(Handedness h) {
  switch (h) {
    case Handedness::left: return "left";
    case Handedness::right: return "right";
    case Handedness::both: return "both";
    case Handedness::neither: return "neither";
  }
  return "?";
}

CheckReport is_symmetric(const FiniteAlgebra& alg) {
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y)
      if ((alg.meet(x, y) == alg.meet(y, x)) != (alg.join(x, y) == alg.join(y, x)))
        return CheckReport::fail("symmetric", {x, y});
  return CheckReport::pass("symmetric");
}

CheckReport is_normal(const FiniteAlgebra& alg) {
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y)
      for (int z = 0; z < alg.size; ++z)
        if (meet_all(alg, {x, y, z, x}) != meet_all(alg, {x, z, y, x}))
          return CheckReport::fail("normal", {x, y, z});
  return CheckReport::pass("normal");
}

CheckReport is_strongly_distributive(const FiniteAlgebra& alg) {
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y)
      for (int z = 0; z < alg.size; ++z) {
        if (alg.meet(alg.join(x, y), z) != alg.join(alg.meet(x, z), alg.meet(y, z)))
          return CheckReport::fail("strongly distributive", {x, y, z});
        if (alg.meet(x, alg.join(y, z)) != alg.join(alg.meet(x, y), alg.meet(x, z)))
          return CheckReport::fail("strongly distributive", {x, y, z});
      }
  return CheckReport::pass("strongly distributive");
}

CheckReport is_distributive_eq12(const FiniteAlgebra& alg) {
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y)
      for (int z = 0; z < alg.size; ++z) {
        const int lhs1 = meet_all(alg, {x, alg.join(y, z), x});
        const int rhs1 = alg.join(meet_all(alg, {x, y, x}), meet_all(alg, {x, z, x}));
        if (lhs1 != rhs1) return CheckReport::fail("distributive (eq 1-2)", {x, y, z});
        const int lhs2 = join_all(alg, {x, alg.meet(y, z), x});
        const int rhs2 = alg.meet(join_all(alg, {x, y, x}), join_all(alg, {x, z, x}));
        if (lhs2 != rhs2) return CheckReport::fail("distributive (eq 1-2)", {x, y, z});
      }
  return CheckReport::pass("distributive (eq 1-2)");
}

CheckReport is_regular(const FiniteAlgebra& alg) {
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y)
      for (int z = 0; z < alg.size; ++z) {
        if (meet_all(alg, {x, y, x, z, x}) != meet_all(alg, {x, y, z, x}))
          return CheckReport::fail("regular", {x, y, z});
        if (join_all(alg, {x, y, x, z, x}) != join_all(alg, {x, y, z, x}))
          return CheckReport::fail("regular", {x, y, z});
      }
  return CheckReport::pass("regular");
}

CheckReport is_rectangular(const FiniteAlgebra& alg) {
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y)
      if (alg.meet(x, y) != alg.join(y, x)) return CheckReport::fail("rectangular", {x, y});
  return CheckReport::pass("rectangular");
}

Handedness handedness(const FiniteAlgebra& alg) {
  bool left = true, right = true;
  for (int x = 0; x < alg.size && (left || right); ++x)
    for (int y = 0; y < alg.size; ++y) {
      const int mid = meet_all(alg, {x, y, x});
      left = left && mid == alg.meet(x, y);
      right = right && mid == alg.meet(y, x);
    }
  if (left && right) return Handedness::both;
  if (left) return Handedness::left;
  if (right) return Handedness::right;
  return Handedness::neither;
}

std::optional<std::vector<int>> top_class(const DClassPartition& part) {
  if (!part.quotient.top) return std::nullopt;
  return part.classes[*part.quotient.top];
}

std::optional<std::vector<int>> top_class(const FiniteAlgebra& alg) {
  return top_class(d_partition(alg));
}

std::vector<int> lattice_section_at(const FiniteAlgebra& alg, int t) {
  const DClassPartition part = d_partition(alg);
  const auto top = top_class(part);
  if (!top || !std::binary_search(top->begin(), top->end(), t))
    throw domain_error("t is not in the top D-class");

  const OrderRelations ord = compute_orders(alg);
  DownSet ds = down_set(alg, ord, t);
  if (!ds.lattice_check.passed)
    throw inconsistency_error("down-set of a top element is not a lattice");
  // a lattice section meets every D-class exactly once
  std::vector<int> hits(part.classes.size(), 0);
  for (int x : ds.members) hits[part.class_of[x]]++;
  for (int c : hits)
    if (c != 1) throw inconsistency_error("section does not meet every D-class exactly once");
  return ds.members;
}

void for_each_commuting_subset(const FiniteAlgebra& alg, const OrderRelations& ord,
                               int max_size,
                               const std::function<void(const CommutingSubset&)>& fn) {
  const int n = alg.size;
  const int cap = max_size <= 0 ? n : std::min(max_size, n);

  RelMatrix comm(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (alg.meet(x, y) == alg.meet(y, x)) comm.set(x, y);

  std::vector<int> members;
  CommutingSubset subset;

  auto emit = [&] {
    subset.members = members;
    subset.supremum = supremum_of(ord, members);
    fn(subset);
  };

  // backtracking over ascending indices; candidates commute with all members
  auto rec = [&](auto&& self, int start) -> void {
    emit();
    if (static_cast<int>(members.size()) == cap) return;
    for (int j = start; j < n; ++j) {
      bool ok = true;
      for (int m : members)
        if (!comm(m, j)) { ok = false; break; }
      if (!ok) continue;
      members.push_back(j);
      self(self, j + 1);
      members.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<CommutingSubset> commuting_subsets(const FiniteAlgebra& alg, int max_size) {
  const OrderRelations ord = compute_orders(alg);
  std::vector<CommutingSubset> out;
  for_each_commuting_subset(alg, ord, max_size,
                            [&](const CommutingSubset& s) { out.push_back(s); });
  return out;
}

CheckReport is_join_complete(const FiniteAlgebra& alg, int max_size) {
  if (!is_symmetric(alg).passed)
    throw domain_error("join completeness requires a symmetric algebra");
  const OrderRelations ord = compute_orders(alg);
  CheckReport report = CheckReport::pass("join complete");
  for_each_commuting_subset(alg, ord, max_size, [&](const CommutingSubset& s) {
    if (report.passed && !s.supremum)
      report = CheckReport::fail("join complete", s.members);
  });
  return report;
}

PropertyProfile classify(const FiniteAlgebra& alg, int subset_cap) {
  PropertyProfile p;
  p.symmetric = is_symmetric(alg).passed;
  p.normal = is_normal(alg).passed;
  p.regular = is_regular(alg).passed;
  const Handedness h = handedness(alg);
  p.left_handed = h == Handedness::left || h == Handedness::both;
  p.right_handed = h == Handedness::right || h == Handedness::both;
  p.strongly_distributive = is_strongly_distributive(alg).passed;
  p.distributive_eq12 = is_distributive_eq12(alg).passed;
  p.rectangular = is_rectangular(alg).passed;
  const OrderRelations ord = compute_orders(alg);
  p.has_zero = least_element(alg, ord).has_value();
  p.has_top_class = top_class(alg).has_value();
  p.join_complete = p.symmetric && is_join_complete(alg, subset_cap).passed;
  return p;
}

}  // namespace skewlat
