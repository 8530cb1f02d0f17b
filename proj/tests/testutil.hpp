#ifndef SKEWLAT_TESTS_TESTUTIL_HPP_
#define SKEWLAT_TESTS_TESTUTIL_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "skewlat/core.hpp"

namespace testutil {

using skewlat::FiniteAlgebra;
using skewlat::OpTable;

// Lattice isomorphism search by join-irreducible matching: every element of
// a finite lattice is the join of the join-irreducibles below it, and any
// isomorphism restricts to a bijection of the join-irreducibles, so trying
// all such bijections and extending by joins is complete.
inline std::optional<std::vector<int>> find_lattice_iso(const FiniteAlgebra& a,
                                                        const FiniteAlgebra& b) {
  if (a.size != b.size) return std::nullopt;
  const int n = a.size;

  auto bottom = [](const FiniteAlgebra& l) {
    int bot = 0;
    for (int x = 1; x < l.size; ++x) bot = l.meet(bot, x);
    return bot;
  };
  auto join_irreducibles = [&](const FiniteAlgebra& l) {
    std::vector<int> ji;
    const int bot = bottom(l);
    for (int x = 0; x < l.size; ++x) {
      if (x == bot) continue;
      int below = bot;  // join of everything strictly under x
      for (int y = 0; y < l.size; ++y)
        if (y != x && l.meet(y, x) == y) below = l.join(below, y);
      if (below != x) ji.push_back(x);
    }
    return ji;
  };

  const std::vector<int> ja = join_irreducibles(a);
  std::vector<int> jb = join_irreducibles(b);
  if (ja.size() != jb.size()) return std::nullopt;
  std::sort(jb.begin(), jb.end());

  do {
    std::vector<int> map(n, -1);
    const int bb = bottom(b);
    for (int x = 0; x < n; ++x) {
      int image = bb;
      for (size_t i = 0; i < ja.size(); ++i)
        if (a.meet(ja[i], x) == ja[i]) image = b.join(image, jb[i]);
      map[x] = image;
    }
    std::vector<char> hit(n, 0);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (hit[map[x]]) ok = false;
      hit[map[x]] = 1;
    }
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = map[a.meet(x, y)] == b.meet(map[x], map[y]) &&
             map[a.join(x, y)] == b.join(map[x], map[y]);
    if (ok) return map;
  } while (std::next_permutation(jb.begin(), jb.end()));
  return std::nullopt;
}

// Adjoins a new bottom (index n) and a new two-sided top (index n+1).
inline FiniteAlgebra with_bounds(const FiniteAlgebra& alg) {
  const int n = alg.size;
  FiniteAlgebra out;
  out.size = n + 2;
  out.meet = OpTable(n + 2);
  out.join = OpTable(n + 2);
  const int bot = n, top = n + 1;
  for (int x = 0; x < out.size; ++x)
    for (int y = 0; y < out.size; ++y) {
      if (x == bot || y == bot) {
        out.meet.at(x, y) = bot;
        out.join.at(x, y) = x == bot ? y : x;
      } else if (x == top || y == top) {
        out.meet.at(x, y) = x == top ? y : x;
        out.join.at(x, y) = top;
      } else {
        out.meet.at(x, y) = alg.meet(x, y);
        out.join.at(x, y) = alg.join(x, y);
      }
    }
  out.zero = bot;
  out.top = top;
  return out;
}

// Swaps the argument roles of both operations (the order dual's tables).
inline FiniteAlgebra transpose(const FiniteAlgebra& alg) {
  FiniteAlgebra out;
  out.size = alg.size;
  out.meet = OpTable(alg.size);
  out.join = OpTable(alg.size);
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y) {
      out.meet.at(x, y) = alg.meet(y, x);
      out.join.at(x, y) = alg.join(y, x);
    }
  return out;
}

// The five-element diamond: bottom 0, atoms 1,2,3, top 4. Not distributive.
inline FiniteAlgebra m3_diamond() {
  FiniteAlgebra alg;
  alg.size = 5;
  alg.meet = OpTable(5);
  alg.join = OpTable(5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      if (x == y) {
        alg.meet.at(x, y) = x;
        alg.join.at(x, y) = x;
      } else if (x == 0 || y == 0) {
        alg.meet.at(x, y) = 0;
        alg.join.at(x, y) = x == 0 ? y : x;
      } else if (x == 4 || y == 4) {
        alg.meet.at(x, y) = x == 4 ? y : x;
        alg.join.at(x, y) = 4;
      } else {  // distinct atoms
        alg.meet.at(x, y) = 0;
        alg.join.at(x, y) = 4;
      }
    }
  alg.zero = 0;
  alg.top = 4;
  return alg;
}

// Two-element tables that are idempotent but break absorption at (0,1).
inline FiniteAlgebra broken_two() {
  FiniteAlgebra alg;
  alg.size = 2;
  alg.meet = OpTable(2);
  alg.join = OpTable(2);
  alg.meet.at(0, 0) = 0;
  alg.meet.at(0, 1) = 0;
  alg.meet.at(1, 0) = 0;
  alg.meet.at(1, 1) = 1;
  alg.join.at(0, 0) = 0;
  alg.join.at(0, 1) = 0;
  alg.join.at(1, 0) = 1;
  alg.join.at(1, 1) = 1;
  return alg;
}

}  // namespace testutil

#endif  // SKEWLAT_TESTS_TESTUTIL_HPP_
