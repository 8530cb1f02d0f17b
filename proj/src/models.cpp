#include "skewlat/models.hpp"

#include <algorithm>

namespace skewlat {

namespace {

int pow3(int m) {
  int r = 1;
  while (m-- > 0) r *= 3;
  return r;
}

}  // namespace

int pfn_index(std::span<const int> digits) {
  int idx = 0, weight = 1;
  for (int d : digits) {
    idx += d * weight;
    weight *= 3;
  }
  return idx;
}

std::vector<int> pfn_digits(int index, int arity) {
  std::vector<int> out(arity);
  for (int i = 0; i < arity; ++i) {
    out[i] = index % 3;
    index /= 3;
  }
  return out;
}

FiniteAlgebra build_pfn_algebra(int arity) {
  if (arity < 1 || arity > 6)
    throw resource_error("partial-function algebra arity must be in 1..6");
  const int n = pow3(arity);

  FiniteAlgebra alg;
  alg.size = n;
  alg.meet = OpTable(n);
  alg.join = OpTable(n);
  alg.imp = OpTable(n);
  alg.zero = 0;
  alg.top = n - 1;

  std::vector<int> f(arity), g(arity), m(arity), j(arity), im(arity);
  for (int x = 0; x < n; ++x) {
    f = pfn_digits(x, arity);
    for (int y = 0; y < n; ++y) {
      g = pfn_digits(y, arity);
      for (int i = 0; i < arity; ++i) {
        m[i] = (f[i] != 0 && g[i] != 0) ? f[i] : 0;      // restriction keeps f
        j[i] = g[i] != 0 ? g[i] : f[i];                  // override: g wins
        im[i] = g[i] != 0 ? g[i] : (f[i] == 0 ? 2 : 0);  // all-ones off both domains
      }
      alg.meet.at(x, y) = pfn_index(m);
      alg.join.at(x, y) = pfn_index(j);
      alg.imp->at(x, y) = pfn_index(im);
    }
  }
  return alg;
}

Subalgebra subalgebra_closure(const FiniteAlgebra& alg, std::span<const int> generators,
                              bool include_imp) {
  if (generators.empty()) throw domain_error("closure needs at least one generator");
  if (include_imp && !alg.imp)
    throw structural_error("closure under implication needs an implication table");

  std::vector<char> in(alg.size, 0);
  std::vector<int> work(generators.begin(), generators.end());
  for (int g : work) {
    if (g < 0 || g >= alg.size) throw domain_error("generator index out of range");
    in[g] = 1;
  }
  std::vector<int> elems;
  while (!work.empty()) {
    const int x = work.back();
    work.pop_back();
    elems.push_back(x);
    auto add = [&](int v) {
      if (!in[v]) {
        in[v] = 1;
        work.push_back(v);
      }
    };
    for (int y : elems) {
      add(alg.meet(x, y));
      add(alg.meet(y, x));
      add(alg.join(x, y));
      add(alg.join(y, x));
      if (include_imp) {
        add((*alg.imp)(x, y));
        add((*alg.imp)(y, x));
      }
    }
  }
  std::sort(elems.begin(), elems.end());

  Subalgebra sub;
  sub.embedding = elems;
  const int k = static_cast<int>(elems.size());
  std::vector<int> pos(alg.size, -1);
  for (int i = 0; i < k; ++i) pos[elems[i]] = i;

  sub.alg.size = k;
  sub.alg.meet = OpTable(k);
  sub.alg.join = OpTable(k);
  if (include_imp) sub.alg.imp = OpTable(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      sub.alg.meet.at(i, j) = pos[alg.meet(elems[i], elems[j])];
      sub.alg.join.at(i, j) = pos[alg.join(elems[i], elems[j])];
      if (include_imp) sub.alg.imp->at(i, j) = pos[(*alg.imp)(elems[i], elems[j])];
    }
  if (alg.zero && pos[*alg.zero] >= 0) sub.alg.zero = pos[*alg.zero];
  if (alg.top && pos[*alg.top] >= 0) sub.alg.top = pos[*alg.top];
  return sub;
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  FiniteAlgebra p;
  p.size = a.size * b.size;
  p.meet = OpTable(p.size);
  p.join = OpTable(p.size);
  const bool with_imp = a.imp && b.imp;
  if (with_imp) p.imp = OpTable(p.size);

  auto pair = [&](int i, int j) { return i * b.size + j; };
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < b.size; ++j)
      for (int k = 0; k < a.size; ++k)
        for (int l = 0; l < b.size; ++l) {
          const int x = pair(i, j), y = pair(k, l);
          p.meet.at(x, y) = pair(a.meet(i, k), b.meet(j, l));
          p.join.at(x, y) = pair(a.join(i, k), b.join(j, l));
          if (with_imp) p.imp->at(x, y) = pair((*a.imp)(i, k), (*b.imp)(j, l));
        }
  if (a.zero && b.zero) p.zero = pair(*a.zero, *b.zero);
  if (a.top && b.top) p.top = pair(*a.top, *b.top);
  return p;
}

FiniteAlgebra rectangular_band(int n, Hand hand) {
  if (n < 1) throw domain_error("band needs at least one element");
  FiniteAlgebra alg;
  alg.size = n;
  alg.meet = OpTable(n);
  alg.join = OpTable(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      alg.meet.at(x, y) = hand == Hand::left ? x : y;
      alg.join.at(x, y) = hand == Hand::left ? y : x;
    }
  return alg;
}

FiniteAlgebra chain_lattice(int n) {
  if (n < 1) throw domain_error("chain needs at least one element");
  FiniteAlgebra alg;
  alg.size = n;
  alg.meet = OpTable(n);
  alg.join = OpTable(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      alg.meet.at(x, y) = std::min(x, y);
      alg.join.at(x, y) = std::max(x, y);
    }
  alg.zero = 0;
  alg.top = n - 1;
  return alg;
}

FiniteAlgebra boolean_lattice(int num_atoms) {
  if (num_atoms < 0 || num_atoms > 6) throw resource_error("boolean lattice atoms must be in 0..6");
  const int n = 1 << num_atoms;
  FiniteAlgebra alg;
  alg.size = n;
  alg.meet = OpTable(n);
  alg.join = OpTable(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      alg.meet.at(x, y) = x & y;
      alg.join.at(x, y) = x | y;
    }
  alg.zero = 0;
  alg.top = n - 1;
  return alg;
}

}  // namespace skewlat
