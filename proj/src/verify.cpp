#include "skewlat/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "skewlat/heyting.hpp"
#include "skewlat/models.hpp"
#include "skewlat/properties.hpp"

namespace skewlat {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skip: return "skip";
  }
  return "?";
}

int effective_subset_cap(const VerifyConfig& cfg, int carrier) {
  if (carrier <= cfg.full_enum_limit) return cfg.subset_cap;
  if (cfg.subset_cap <= 0) return cfg.large_carrier_cap;
  return std::min(cfg.subset_cap, cfg.large_carrier_cap);
}

namespace {

bool has_two_sided_top(const FiniteAlgebra& alg, int* out = nullptr) {
  for (int one = 0; one < alg.size; ++one) {
    bool ok = true;
    for (int x = 0; x < alg.size && ok; ++x)
      ok = alg.meet(one, x) == x && alg.meet(x, one) == x && alg.join(one, x) == one &&
           alg.join(x, one) == one;
    if (ok) {
      if (out) *out = one;
      return true;
    }
  }
  return false;
}

// Per-instance context with memoized hypothesis evaluation.
struct Ctx {
  const FiniteAlgebra& alg;
  const VerifyConfig& cfg;
  int cap;

  bool valid = false;
  std::vector<CheckReport> validation;

  std::optional<OrderRelations> ord_;
  std::optional<DClassPartition> part_;
  std::optional<bool> sd_, symmetric_, normal_, zero_, two_sided_top_, qdist_, jc_, nh_;
  std::optional<std::vector<CheckReport>> nh_reports_;

  Ctx(const FiniteAlgebra& a, const VerifyConfig& c) : alg(a), cfg(c) {
    cap = effective_subset_cap(cfg, alg.size);
    try {
      validation = validate_skew_lattice(alg);
      valid = all_passed(validation);
    } catch (const structural_error&) {
      valid = false;
    }
  }

  const OrderRelations& ord() {
    if (!ord_) ord_ = compute_orders(alg);
    return *ord_;
  }
  const DClassPartition& part() {
    if (!part_) part_ = d_partition(alg);
    return *part_;
  }
  bool sd() {
    if (!sd_) sd_ = is_strongly_distributive(alg).passed;
    return *sd_;
  }
  bool symmetric() {
    if (!symmetric_) symmetric_ = is_symmetric(alg).passed;
    return *symmetric_;
  }
  bool normal() {
    if (!normal_) normal_ = is_normal(alg).passed;
    return *normal_;
  }
  bool has_zero() {
    if (!zero_) zero_ = least_element(alg, ord()).has_value();
    return *zero_;
  }
  bool two_sided_top() {
    if (!two_sided_top_) two_sided_top_ = has_two_sided_top(alg);
    return *two_sided_top_;
  }
  bool quotient_distributive() {
    if (!qdist_) {
      try {
        make_heyting(part().quotient);
        qdist_ = true;
      } catch (const domain_error&) {
        qdist_ = false;
      }
    }
    return *qdist_;
  }
  bool join_complete() {
    if (!jc_) jc_ = symmetric() && is_join_complete(alg, cap).passed;
    return *jc_;
  }
  const std::vector<CheckReport>& nh_reports() {
    if (!nh_reports_) nh_reports_ = verify_nh(NcHeytingCandidate{alg});
    return *nh_reports_;
  }
  bool nh_ok() {
    if (!nh_) nh_ = alg.imp && alg.top && all_passed(nh_reports());
    return *nh_;
  }
};

using Gate = std::pair<const char*, bool (*)(Ctx&)>;

const Gate kGateSkew{"skew-lattice", [](Ctx& c) { return c.valid; }};
const Gate kGateSd{"strongly-distributive", [](Ctx& c) { return c.sd(); }};
const Gate kGateZero{"has-zero", [](Ctx& c) { return c.has_zero(); }};
const Gate kGateImp{"has-imp", [](Ctx& c) { return c.alg.imp.has_value(); }};
const Gate kGateTop{"has-top", [](Ctx& c) { return c.alg.top.has_value(); }};
const Gate kGateNh{"nh-axioms", [](Ctx& c) { return c.nh_ok(); }};
const Gate kGateTwoSidedTop{"two-sided-top", [](Ctx& c) { return c.two_sided_top(); }};
const Gate kGateQDist{"quotient-distributive",
                      [](Ctx& c) { return c.quotient_distributive(); }};
const Gate kGateNormal{"normal", [](Ctx& c) { return c.normal(); }};
const Gate kGateJc{"join-complete", [](Ctx& c) { return c.join_complete(); }};

const std::vector<Gate> kNhCandidateGates{kGateSkew, kGateImp, kGateTop, kGateSd,
                                          kGateZero, kGateNh};

TheoremResult run_check(const std::string& theorem, const std::string& instance, Ctx& ctx,
                        const std::vector<Gate>& gates,
                        const std::function<void(Ctx&, TheoremResult&)>& body) {
  TheoremResult r;
  r.theorem = theorem;
  r.instance = instance;
  try {
    for (const auto& [tag, pred] : gates)
      if (!pred(ctx)) {
        r.outcome = Outcome::skip;
        r.reason = tag;
        return r;
      }
    r.outcome = Outcome::pass;
    body(ctx, r);
  } catch (const std::exception& e) {
    r.outcome = Outcome::fail;
    r.reason = e.what();
    r.witness.reset();
  }
  return r;
}

void fail_with(TheoremResult& r, std::string reason, std::vector<int> witness = {}) {
  r.outcome = Outcome::fail;
  r.reason = std::move(reason);
  if (!witness.empty()) r.witness = std::move(witness);
}

std::string join_names(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

// ---- individual checks -------------------------------------------------

void check_axioms(Ctx& ctx, TheoremResult& r) {
  for (const CheckReport& rep : ctx.validation)
    if (!rep.passed) {
      fail_with(r, rep.name, rep.witness.value_or(std::vector<int>{}));
      return;
    }
}

void check_lemma_2_1(Ctx& ctx, TheoremResult& r) {
  const bool rhs = ctx.symmetric() && ctx.normal() && ctx.quotient_distributive();
  if (ctx.sd() != rhs)
    fail_with(r, ctx.sd() ? "strongly distributive but not symmetric+normal+distributive quotient"
                          : "symmetric+normal+distributive quotient but not strongly distributive");
}

void check_lemma_2_2(Ctx& ctx, TheoremResult& r) {
  bool all_lattices = true;
  std::vector<int> w;
  for (int u = 0; u < ctx.alg.size && all_lattices; ++u) {
    const DownSet ds = down_set(ctx.alg, ctx.ord(), u);
    if (!ds.lattice_check.passed) {
      all_lattices = false;
      w = {u};
    }
  }
  if (ctx.normal() != all_lattices)
    fail_with(r,
              ctx.normal() ? "normal but some down-set is not a lattice"
                           : "all down-sets are lattices but the algebra is not normal",
              w);
}

void check_lemma_3_1(Ctx& ctx, TheoremResult& r) {
  for (int x = 0; x < ctx.alg.size; ++x)
    for (int y = 0; y < ctx.alg.size; ++y)
      if (ctx.alg.meet(x, y) != ctx.alg.meet(y, x)) {
        fail_with(r, "strongly distributive with a two-sided top but noncommutative", {x, y});
        return;
      }
}

void check_lemma_3_3(Ctx& ctx, TheoremResult& r) {
  const int n = ctx.alg.size;
  const RelMatrix& pre = ctx.ord().preceq;
  RelMatrix below(n);  // below.row(x) = {u | u preceq x}
  for (int u = 0; u < n; ++u)
    for (int x = 0; x < n; ++x)
      if (pre(u, x)) below.set(x, u);

  const int words = pre.words();
  std::vector<uint64_t> lower(words), upper(words);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int w = 0; w < words; ++w) {
        lower[w] = below.row(x)[w] & below.row(y)[w];
        upper[w] = pre.row(x)[w] & pre.row(y)[w];
      }
      int first_u = -1, first_v = -1;
      for (int w = 0; w < words && first_u < 0; ++w)
        if (lower[w]) first_u = w * 64 + __builtin_ctzll(lower[w]);
      for (int w = 0; w < words && first_v < 0; ++w)
        if (upper[w]) first_v = w * 64 + __builtin_ctzll(upper[w]);
      if (first_u < 0 || first_v < 0) continue;  // hypothesis empty for this pair

      for (int w = 0; w < words; ++w) {
        uint64_t bits = upper[w];
        while (bits) {
          const int v = w * 64 + __builtin_ctzll(bits);
          bits &= bits - 1;
          if (meet_all(ctx.alg, {x, v, y}) != ctx.alg.meet(x, y)) {
            fail_with(r, "x^v^y != x^y", {first_u, x, y, v});
            return;
          }
        }
      }
      for (int w = 0; w < words; ++w) {
        uint64_t bits = lower[w];
        while (bits) {
          const int u = w * 64 + __builtin_ctzll(bits);
          bits &= bits - 1;
          if (join_all(ctx.alg, {x, u, y}) != ctx.alg.join(x, y)) {
            fail_with(r, "xvuvy != xvy", {u, x, y, first_v});
            return;
          }
        }
      }
    }
}

void check_lemma_3_4(Ctx& ctx, TheoremResult& r) {
  const FiniteAlgebra& alg = ctx.alg;
  const OpTable& I = *alg.imp;
  const int t = *alg.top;
  for (int x = 0; x < alg.size; ++x)
    if (I(x, t) != t) {
      fail_with(r, "x->t != t", {x});
      return;
    }
  const std::vector<int> sec = down_set(alg, ctx.ord(), t).members;
  for (int y : sec)
    for (int z : sec)
      if (!ctx.ord().leq(I(y, z), t)) {
        fail_with(r, "section not closed under ->", {y, z});
        return;
      }
}

void check_lemma_3_5(Ctx& ctx, TheoremResult& r) {
  const FiniteAlgebra& alg = ctx.alg;
  const OpTable& I = *alg.imp;
  const int t = *alg.top;
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y) {
      const int tp = join_all(alg, {y, t, y});
      const int mid = join_all(alg, {y, meet_all(alg, {t, x, t}), y});
      if (!ctx.ord().leq(y, tp) || !ctx.ord().leq(mid, tp) || !ctx.ord().leq(I(x, y), tp)) {
        fail_with(r, "y, yv(t^x^t)vy, x->y not all in (yvtvy)-down-set", {x, y});
        return;
      }
    }
}

void check_theorem_3_6(Ctx& ctx, TheoremResult& r) {
  const FiniteAlgebra& alg = ctx.alg;
  const auto top = top_class(ctx.part());
  // the carried implication restricts to a Heyting structure on the section
  // at the distinguished top
  for (const CheckReport& rep : verify_section_heyting(alg, *alg.top))
    if (!rep.passed) {
      fail_with(r, "section at the distinguished top: " + rep.name,
                rep.witness.value_or(std::vector<int>{}));
      return;
    }
  // every other section is a Heyting algebra in its own right
  for (int t : *top) {
    try {
      section_heyting(alg, t);
    } catch (const std::exception& e) {
      fail_with(r, "section at t=" + std::to_string(t) + ": " + e.what(), {t});
      return;
    }
  }
  for (int t : *top)
    for (int tp : *top) {
      const SectionIsomorphism iso = phi_iso(alg, t, tp);
      for (const CheckReport& rep : iso.checks)
        if (!rep.passed) {
          fail_with(r,
                    "phi " + std::to_string(t) + "->" + std::to_string(tp) + ": " + rep.name,
                    rep.witness.value_or(std::vector<int>{}));
          return;
        }
    }
  quotient_heyting(alg);  // throws inconsistency_error on any violation
}

void check_lemma_3_7(Ctx& ctx, TheoremResult& r) {
  const FiniteAlgebra& alg = ctx.alg;
  const DClassPartition& part = ctx.part();
  const int k = static_cast<int>(part.classes.size());
  for (int ca = 0; ca < k; ++ca)
    for (int cb = 0; cb < k; ++cb) {
      if (ca == cb || part.quotient.meet(cb, ca) != cb) continue;  // need B < A
      for (int a : part.classes[ca]) {
        int count = 0;
        for (int b : part.classes[cb])
          if (alg.meet(b, a) == b && alg.meet(a, b) == b) ++count;
        const int built = meet_all(alg, {a, part.classes[cb].front(), a});
        const bool in_class = part.class_of[built] == cb;
        if (count != 1 || !in_class) {
          fail_with(r, "no unique element of the lower class below a",
                    {a, part.classes[cb].front()});
          return;
        }
      }
    }
}

void check_theorem_3_8(Ctx& ctx, TheoremResult& r) {
  const FiniteAlgebra& alg = ctx.alg;
  const auto top = top_class(ctx.part());
  const auto least = least_element(alg, ctx.ord());
  for (int t : *top) {
    FiniteAlgebra cand = alg;
    cand.imp = implication_t(alg, t);
    cand.top = t;
    cand.zero = least;
    const auto reports = verify_nh(NcHeytingCandidate{cand});
    for (const CheckReport& rep : reports)
      if (!rep.passed) {
        fail_with(r, "->_t for t=" + std::to_string(t) + " violates " + rep.name,
                  rep.witness.value_or(std::vector<int>{}));
        return;
      }
  }
  // uniqueness: a carried implication must equal ->_t
  if (alg.imp && alg.top) {
    const OpTable table = implication_t(alg, *alg.top);
    for (int x = 0; x < alg.size; ++x)
      for (int y = 0; y < alg.size; ++y)
        if ((*alg.imp)(x, y) != table(x, y)) {
          fail_with(r, "carried implication differs from ->_t", {x, y});
          return;
        }
  }
}

void check_nh_axioms(Ctx& ctx, TheoremResult& r) {
  for (const CheckReport& rep : ctx.nh_reports())
    if (!rep.passed) {
      fail_with(r, rep.name, rep.witness.value_or(std::vector<int>{}));
      return;
    }
}

void check_prop_4_1(Ctx& ctx, TheoremResult& r) {
  const FiniteAlgebra& alg = ctx.alg;
  if (!least_element(alg, ctx.ord())) {
    fail_with(r, "join complete but no bottom element");
    return;
  }
  for (int u = 0; u < alg.size; ++u) {
    const DownSet ds = down_set(alg, ctx.ord(), u);
    if (!ds.lattice_check.passed) {
      fail_with(r, "down-set is not a lattice", {u});
      return;
    }
  }
  const auto top = top_class(ctx.part());
  for (int t : *top) {
    try {
      lattice_section_at(alg, t);
    } catch (const std::exception&) {
      fail_with(r, "down-set of a top element is not a lattice section", {t});
      return;
    }
  }
}

void check_lemma_4_2(Ctx& ctx, TheoremResult& r) {
  const FiniteAlgebra& alg = ctx.alg;
  std::vector<int> image;
  for_each_commuting_subset(alg, ctx.ord(), ctx.cap, [&](const CommutingSubset& s) {
    if (r.outcome == Outcome::fail) return;
    for (int y = 0; y < alg.size; ++y) {
      for (int side = 0; side < 2; ++side) {
        image.clear();
        for (int x : s.members)
          image.push_back(side == 0 ? alg.meet(y, x) : alg.meet(x, y));
        for (size_t i = 0; i < image.size(); ++i)
          for (size_t j = i + 1; j < image.size(); ++j)
            if (alg.meet(image[i], image[j]) != alg.meet(image[j], image[i])) {
              std::vector<int> w = s.members;
              w.push_back(y);
              fail_with(r,
                        side == 0 ? "{y^x_i} is not a commuting subset"
                                  : "{x_i^y} is not a commuting subset",
                        std::move(w));
              return;
            }
      }
    }
  });
}

void check_lemma_4_3(Ctx& ctx, TheoremResult& r) {
  const FiniteAlgebra& alg = ctx.alg;
  const auto top = top_class(ctx.part());
  std::vector<int> image;
  for_each_commuting_subset(alg, ctx.ord(), ctx.cap, [&](const CommutingSubset& s) {
    if (r.outcome == Outcome::fail) return;
    if (!s.supremum) {
      fail_with(r, "commuting subset without supremum", s.members);
      return;
    }
    const int x = *s.supremum;
    for (int t : *top) {
      bool bounded = true;
      for (int m : s.members)
        if (!ctx.ord().leq(m, t)) { bounded = false; break; }
      if (!bounded) continue;
      for (int y = 0; y < alg.size; ++y) {
        const int tau = join_all(alg, {y, x, t, y, x});
        image.clear();
        for (int m : s.members) image.push_back(alg.meet(m, tau));
        const auto sup2 = supremum_of(ctx.ord(), image);
        if (!sup2 || alg.meet(*sup2, y) != alg.meet(x, y)) {
          std::vector<int> w = s.members;
          w.push_back(t);
          w.push_back(y);
          fail_with(r, "(V(x_i^tau))^y != (Vx_i)^y", std::move(w));
          return;
        }
      }
    }
  });
}

void check_theorem_4_4(Ctx& ctx, TheoremResult& r) {
  const CheckReport rep = is_nc_frame(ctx.alg, ctx.cap);
  if (!rep.passed) fail_with(r, rep.name, rep.witness.value_or(std::vector<int>{}));
}

void check_theorem_4_5(Ctx& ctx, TheoremResult& r) {
  const FiniteAlgebra& alg = ctx.alg;
  const auto top = top_class(ctx.part());
  for (int t : *top) {
    const OpTable by_class = implication_t(alg, t);
    OpTable by_sup(alg.size);
    for (int a = 0; a < alg.size; ++a)
      for (int b = 0; b < alg.size; ++b)
        by_sup.at(a, b) = implication_via_sup(alg, ctx.ord(), t, a, b);
    for (int a = 0; a < alg.size; ++a)
      for (int b = 0; b < alg.size; ++b)
        if (by_class(a, b) != by_sup(a, b)) {
          fail_with(r, "sup formula disagrees with ->_t at t=" + std::to_string(t), {a, b});
          return;
        }
  }
  if (alg.imp && alg.top) {
    for (int a = 0; a < alg.size; ++a)
      for (int b = 0; b < alg.size; ++b)
        if ((*alg.imp)(a, b) != implication_via_sup(alg, ctx.ord(), *alg.top, a, b)) {
          fail_with(r, "carried implication differs from the sup formula", {a, b});
          return;
        }
  }
}

}  // namespace

std::vector<TheoremResult> run_all(const Corpus& corpus, const VerifyConfig& cfg) {
  std::vector<TheoremResult> out;
  for (const Instance& inst : corpus.instances) {
    Ctx ctx(inst.alg, cfg);
    auto add = [&](const std::string& theorem, const std::vector<Gate>& gates, auto body) {
      out.push_back(run_check(theorem, inst.name, ctx, gates, body));
    };

    add("Skew lattice axioms", {}, check_axioms);
    add("Lemma 2.1", {kGateSkew}, check_lemma_2_1);
    add("Lemma 2.2", {kGateSkew}, check_lemma_2_2);
    add("Lemma 3.1", {kGateSkew, kGateSd, kGateTwoSidedTop}, check_lemma_3_1);
    add("Lemma 3.3", {kGateSkew}, check_lemma_3_3);
    add("Lemma 3.4", kNhCandidateGates, check_lemma_3_4);
    add("Lemma 3.5", kNhCandidateGates, check_lemma_3_5);
    add("Theorem 3.6", kNhCandidateGates, check_theorem_3_6);
    add("Lemma 3.7", {kGateSkew, kGateNormal}, check_lemma_3_7);
    add("Theorem 3.8", {kGateSkew, kGateSd, kGateZero, kGateQDist}, check_theorem_3_8);
    add("NH axioms", {kGateSkew, kGateImp, kGateTop, kGateSd, kGateZero}, check_nh_axioms);
    add("Proposition 4.1", {kGateSkew, kGateSd, kGateJc}, check_prop_4_1);
    add("Lemma 4.2", {kGateSkew, kGateSd}, check_lemma_4_2);
    add("Lemma 4.3", {kGateSkew, kGateSd, kGateJc}, check_lemma_4_3);
    add("Theorem 4.4", {kGateSkew, kGateSd, kGateZero}, check_theorem_4_4);
    add("Theorem 4.5", {kGateSkew, kGateSd, kGateZero, kGateQDist}, check_theorem_4_5);
  }
  std::stable_sort(out.begin(), out.end(), [](const TheoremResult& a, const TheoremResult& b) {
    if (a.theorem != b.theorem) return a.theorem < b.theorem;
    return a.instance < b.instance;
  });
  return out;
}

TheoremResult search_lemma_3_1(const Corpus& corpus) {
  TheoremResult r;
  r.theorem = "Lemma 3.1 (search)";
  r.instance = "(corpus)";
  r.outcome = Outcome::pass;
  for (const Instance& inst : corpus.instances) {
    try {
      if (!all_passed(validate_skew_lattice(inst.alg))) continue;
    } catch (const structural_error&) {
      continue;
    }
    if (!is_strongly_distributive(inst.alg).passed) continue;
    if (!has_two_sided_top(inst.alg)) continue;
    for (int x = 0; x < inst.alg.size; ++x)
      for (int y = 0; y < inst.alg.size; ++y)
        if (inst.alg.meet(x, y) != inst.alg.meet(y, x)) {
          r.outcome = Outcome::fail;
          r.reason = "noncommutative strongly distributive instance with a top: " + inst.name;
          r.witness = {x, y};
          return r;
        }
  }
  return r;
}

bool hypothesis_holds(const std::string& tag, const FiniteAlgebra& alg,
                      const VerifyConfig& cfg) {
  Ctx ctx(alg, cfg);
  try {
    if (tag == "skew-lattice") return ctx.valid;
    if (!ctx.valid) return false;
    if (tag == "strongly-distributive") return ctx.sd();
    if (tag == "symmetric") return ctx.symmetric();
    if (tag == "normal") return ctx.normal();
    if (tag == "has-zero") return ctx.has_zero();
    if (tag == "has-imp") return alg.imp.has_value();
    if (tag == "has-top") return alg.top.has_value();
    if (tag == "nh-axioms") return ctx.nh_ok();
    if (tag == "two-sided-top") return ctx.two_sided_top();
    if (tag == "quotient-distributive") return ctx.quotient_distributive();
    if (tag == "join-complete") return ctx.join_complete();
  } catch (const std::exception&) {
    return false;
  }
  throw domain_error("unknown hypothesis tag: " + tag);
}

std::string canonical_table_key(const FiniteAlgebra& alg) {
  std::string key = "n" + std::to_string(alg.size) + ";m";
  auto append = [&key](const OpTable& t) {
    for (int v : t.cells()) {
      key += std::to_string(v);
      key += ',';
    }
  };
  append(alg.meet);
  key += ";j";
  append(alg.join);
  key += ";i";
  if (alg.imp) append(*alg.imp);
  else key += '-';
  return key;
}

uint64_t canonical_table_hash(const FiniteAlgebra& alg) {
  const std::string key = canonical_table_key(alg);
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Corpus enumerate_instances(const GeneratorSpec& spec) {
  Corpus corpus;
  std::set<std::string> seen;
  auto add = [&](std::string name, std::string prov, FiniteAlgebra alg) -> bool {
    if (!seen.insert(canonical_table_key(alg)).second) return false;
    corpus.instances.push_back({std::move(name), std::move(prov), std::move(alg)});
    return true;
  };

  for (int m : spec.pfn_arities) {
    try {
      add("pfn" + std::to_string(m), "pfn m=" + std::to_string(m), build_pfn_algebra(m));
    } catch (const resource_error& e) {
      corpus.notes.push_back("truncated: pfn m=" + std::to_string(m) + " (" + e.what() + ")");
    }
  }
  if (spec.chains)
    for (int n = 1; n <= 8; ++n)
      add("chain" + std::to_string(n), "chain n=" + std::to_string(n), chain_lattice(n));
  if (spec.bools)
    for (int k = 0; k <= 3; ++k)
      add("bool" + std::to_string(1 << k), "boolean lattice k=" + std::to_string(k),
          boolean_lattice(k));
  if (spec.bands)
    for (int n = 1; n <= 3; ++n)
      for (Hand h : {Hand::left, Hand::right})
        add("rect" + std::to_string(n) + (h == Hand::left ? "L" : "R"),
            std::string("rectangular band n=") + std::to_string(n) +
                (h == Hand::left ? " left" : " right"),
            rectangular_band(n, h));

  if (spec.products) {
    const std::vector<std::string> product_bases = {"pfn1",   "pfn2",   "rect2L", "rect2R",
                                                    "chain2", "chain3", "chain4", "bool4"};
    std::vector<const Instance*> bases;
    for (const std::string& name : product_bases)
      for (const Instance& inst : corpus.instances)
        if (inst.name == name) bases.push_back(&inst);
    std::vector<Instance> products;
    for (size_t i = 0; i < bases.size(); ++i)
      for (size_t j = i; j < bases.size(); ++j) {
        if (bases[i]->alg.size * bases[j]->alg.size > 81) continue;
        products.push_back({"prod(" + bases[i]->name + "," + bases[j]->name + ")",
                            "direct product " + bases[i]->name + " x " + bases[j]->name,
                            direct_product(bases[i]->alg, bases[j]->alg)});
      }
    for (Instance& p : products)
      add(std::move(p.name), std::move(p.provenance), std::move(p.alg));
  }

  // closures of the largest included partial-function model that still has a
  // small carrier
  int closure_m = 0;
  for (int m : spec.pfn_arities)
    if (m <= 2) closure_m = std::max(closure_m, m);
  if (spec.closure_generators > 0 && closure_m > 0) {
    const FiniteAlgebra base = build_pfn_algebra(closure_m);
    const std::string base_name = "pfn" + std::to_string(closure_m);
    std::vector<std::vector<int>> gen_sets;
    const int n = base.size;
    for (int a = 0; a < n; ++a) gen_sets.push_back({a});
    if (spec.closure_generators >= 2)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) gen_sets.push_back({a, b});
    if (spec.closure_generators >= 3)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c) gen_sets.push_back({a, b, c});
    for (const auto& g : gen_sets) {
      Subalgebra sub = subalgebra_closure(base, g, false);
      add("sub(" + base_name + ";" + join_names(g) + ")",
          "closure of " + base_name + " under meet,join, generators {" + join_names(g) + "}",
          std::move(sub.alg));
    }
  }

  if (spec.seed) {
    std::mt19937 rng(*spec.seed);
    const FiniteAlgebra p3 = build_pfn_algebra(3);
    std::uniform_int_distribution<int> pick(0, p3.size - 1);
    for (int i = 0; i < 5; ++i) {
      std::set<int> g;
      const int want = 2 + i % 2;
      while (static_cast<int>(g.size()) < want) g.insert(pick(rng));
      std::vector<int> gv(g.begin(), g.end());
      Subalgebra sub = subalgebra_closure(p3, gv, false);
      add("rnd" + std::to_string(i) + "(pfn3;" + join_names(gv) + ")",
          "seeded closure of pfn3, seed=" + std::to_string(*spec.seed) + ", generators {" +
              join_names(gv) + "}",
          std::move(sub.alg));
    }
  }
  return corpus;
}

std::vector<Instance> single_cell_mutants(const Instance& inst) {
  std::vector<Instance> out;
  const FiniteAlgebra& alg = inst.alg;
  struct Entry {
    const char* label;
    const OpTable* table;
  };
  std::vector<Entry> tables = {{"meet", &alg.meet}, {"join", &alg.join}};
  if (alg.imp) tables.push_back({"imp", &*alg.imp});
  for (const Entry& e : tables)
    for (int x = 0; x < alg.size; ++x)
      for (int y = 0; y < alg.size; ++y)
        for (int v = 0; v < alg.size; ++v) {
          if (v == (*e.table)(x, y)) continue;
          Instance m = inst;
          OpTable* target = e.table == &alg.meet  ? &m.alg.meet
                            : e.table == &alg.join ? &m.alg.join
                                                    : &*m.alg.imp;
          target->at(x, y) = v;
          m.name = inst.name + "!" + e.label + "[" + std::to_string(x) + "," +
                   std::to_string(y) + "]=" + std::to_string(v);
          m.provenance = "single-cell mutant of " + inst.name;
          out.push_back(std::move(m));
        }
  return out;
}

std::string format_results(const std::vector<TheoremResult>& results, bool machine) {
  std::ostringstream os;
  if (machine) {
    for (const TheoremResult& r : results) {
      os << r.theorem << '\t' << r.instance << '\t' << to_string(r.outcome) << '\t';
      if (r.outcome == Outcome::skip) os << r.reason;
      else if (r.witness) os << '(' << join_names(*r.witness) << ')';
      else if (!r.reason.empty()) os << r.reason;
      else os << '-';
      os << '\n';
    }
    return os.str();
  }
  for (const TheoremResult& r : results) {
    const char* tag = r.outcome == Outcome::pass ? "PASS"
                      : r.outcome == Outcome::fail ? "FAIL"
                                                   : "SKIP";
    os << tag << "  " << r.theorem;
    for (size_t i = r.theorem.size(); i < 20; ++i) os << ' ';
    os << ' ' << r.instance;
    if (r.outcome == Outcome::skip) os << "  [hypothesis: " << r.reason << "]";
    else if (r.outcome == Outcome::fail) {
      os << "  [" << r.reason;
      if (r.witness) os << " at (" << join_names(*r.witness) << ")";
      os << "]";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace skewlat
