#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "quiver/canonical.hpp"

namespace quiv {

enum class EdStatus { Exact, ExactConditionalOnConjecture, BoundsOnly };

inline const char *ed_status_name(EdStatus s) {
  switch (s) {
  case EdStatus::Exact: return "Exact";
  case EdStatus::ExactConditionalOnConjecture: return "ExactConditionalOnConjecture";
  case EdStatus::BoundsOnly: return "BoundsOnly";
  }
  return "?";
}

struct EdReport {
  std::string quantity = "ged"; // "ged" or "ed"
  i64 lower = 0;
  i64 upper = 0;
  EdStatus status = EdStatus::Exact;
  i64 base = 0;       // 1 - <v,v> for the routed vector v
  i64 gcd = 1;        // gcd of the routed vector
  i64 tower_sum = 0;
  i64 tower_max = 0;
  Vec routed;         // vector the formula was evaluated on (may be empty)
  std::string note;
};

inline i64 prime_tower_sum(i64 d) {
  i64 s = 0;
  for (auto [p, e] : factorize(d))
    s = add(s, ipow(p, e) - 1);
  return s;
}

inline i64 prime_tower_max(i64 d) {
  i64 m = 0;
  for (auto [p, e] : factorize(d))
    m = std::max(m, ipow(p, e) - 1);
  return m;
}

// Values of d for which the gcd correction term is known to be attained.
inline bool tower_exact(i64 d) { return d == 1 || d == 6 || is_prime_power(d); }

// Bounds base + [max tower, sum tower]; collapsed to the sum when exact.
inline EdReport tower_report(i64 base, i64 d, std::string note) {
  EdReport r;
  r.base = base;
  r.gcd = d;
  r.tower_sum = prime_tower_sum(d);
  r.tower_max = prime_tower_max(d);
  r.upper = add(base, r.tower_sum);
  r.lower = add(base, r.tower_max);
  if (tower_exact(d)) {
    r.status = EdStatus::Exact;
    r.lower = r.upper;
  } else {
    r.status = EdStatus::ExactConditionalOnConjecture;
  }
  r.note = std::move(note);
  return r;
}

inline EdReport ged_schur_root(GenericCalculus &g, const Vec &a) {
  if (!is_schur_root(g, a))
    throw Error(Errc::NotSchurRoot, to_string(a) + " is not a Schur root");
  auto r = tower_report(sub(1, euler_form(g.quiver(), a, a)), vec_gcd(a),
                        "Schur root: 1 - <a,a> plus gcd correction");
  r.routed = a;
  return r;
}

inline EdReport ged_schur_root(const Quiver &q, const Vec &a) {
  GenericCalculus g(q);
  return ged_schur_root(g, a);
}

inline EdReport ged_root(GenericCalculus &g, const Vec &a) {
  const Quiver &q = g.quiver();
  require_nonzero_nonnegative(q, a);
  if (classify_root(q, a).verdict == RootVerdict::NotRoot)
    throw Error(Errc::NotARoot, to_string(a) + " is not a root");
  auto d = canonical_decomposition(g, a);
  std::optional<Summand> imag;
  RootVerdict imag_kind = RootVerdict::NotRoot;
  for (const auto &s : d.summands) {
    auto v = classify_root(q, s.root).verdict;
    if (!is_imaginary(v))
      continue;
    if (imag)
      throw Error(Errc::HypothesisViolated,
                  "decomposition of " + to_string(a) + " has two imaginary summands");
    imag = s;
    imag_kind = v;
  }
  if (!imag) {
    EdReport r;
    r.note = "all summands of the canonical decomposition are real";
    return r;
  }
  if (imag_kind == RootVerdict::ImaginaryIsotropic) {
    EdReport r;
    r.lower = r.upper = imag->multiplicity;
    r.base = 1;
    r.gcd = vec_gcd(imag->root);
    r.routed = imag->root;
    r.note = "isotropic summand " + to_string(imag->root) + " with multiplicity " +
             std::to_string(imag->multiplicity);
    return r;
  }
  const Vec &b = imag->root;
  auto r = tower_report(sub(1, euler_form(q, b, b)), vec_gcd(b),
                        "anisotropic summand " + to_string(b) + ": 1 - <b,b> plus gcd correction");
  r.routed = b;
  return r;
}

inline EdReport ged_root(const Quiver &q, const Vec &a) {
  GenericCalculus g(q);
  return ged_root(g, a);
}

inline bool genericity_all_alpha(const Quiver &q) {
  for (auto &comp : components(q))
    if (component_is_generic_failure_candidate(q, comp))
      return false;
  return true;
}

// Points in general position in P^n modulo PGL_{n+1}: generic count.
inline i64 star_ged(i64 m, i64 n) {
  if (m <= n + 2)
    return 0;
  return mul(n, m - n - 2);
}

// max over 1 <= r <= min(n, m-1) of r(m-r-2), never below zero.
inline i64 star_ed(i64 m, i64 n) {
  i64 best = 0;
  for (i64 r = 1; r <= std::min(n, m - 1); ++r)
    best = std::max(best, mul(r, m - r - 2));
  return best;
}

// Closed-form cases of star_ed.
inline i64 star_ed_closed(i64 m, i64 n) {
  i64 v;
  if (m > 2 * n)
    v = mul(n, m - n - 2);
  else if (m % 2 == 0)
    v = mul(m - 2, m - 2) / 4;
  else
    v = mul(m - 1, m - 3) / 4;
  return std::max<i64>(v, 0);
}

inline i64 kronecker_ed(int r, i64 a, i64 b) {
  if (a < 0 || b < 0)
    throw Error(Errc::NegativeEntry, "dimensions must be non-negative");
  if (r == 1)
    return 0;
  if (r == 2)
    return (a + b) / 2;
  throw Error(Errc::UnsupportedR, "only r = 1 and r = 2 have a closed form; r = " +
                                      std::to_string(r));
}

// n-dimensional representations of the r-loop quiver.
inline EdReport loop_ed_bounds(int r, i64 n) {
  if (r < 1 || n < 1)
    throw Error(Errc::HypothesisViolated, "loop count and dimension must be positive");
  if (r == 1) {
    EdReport rep;
    rep.quantity = "ed";
    rep.lower = rep.upper = n;
    rep.base = 1;
    rep.gcd = n;
    rep.routed = {n};
    rep.note = "one loop: isotropic root (1) with multiplicity " + std::to_string(n);
    return rep;
  }
  auto rep = tower_report(add(1, mul(r - 1, mul(n, n))), n,
                          "r-loop quiver: 1 + (r-1)n^2 plus gcd correction");
  rep.quantity = "ed";
  rep.routed = {n};
  return rep;
}

inline i64 indecomposable_residual_bound(const Quiver &q, const Vec &a) {
  require_nonzero_nonnegative(q, a);
  i64 m = INT64_MAX;
  for (int i : support(a))
    m = std::min(m, a[i]);
  return m - 1;
}

// Two vertices, no loops, r >= 1 arrows all pointing the same way.
// `flipped` is set when the arrows point from the second vertex to the first.
inline bool kronecker_shape(const Quiver &q, int &r, bool &flipped) {
  if (q.vertex_count() != 2 || q.arrows().empty())
    return false;
  int forward = q.arrows_from_to(0, 1), backward = q.arrows_from_to(1, 0);
  if (q.loop_count(0) || q.loop_count(1) || (forward && backward))
    return false;
  r = forward + backward;
  flipped = backward > 0;
  return true;
}

// Vertex 0 is the centre; vertices 1..m each send one arrow to it.
inline bool star_shape(const Quiver &q, int &m) {
  int n = q.vertex_count();
  if (n < 2 || static_cast<int>(q.arrows().size()) != n - 1)
    return false;
  for (int i = 1; i < n; ++i)
    if (q.arrows_from_to(i, 0) != 1)
      return false;
  m = n - 1;
  return true;
}

enum class Genericity { Holds, Fails, Unknown };

inline const char *genericity_name(Genericity g) {
  switch (g) {
  case Genericity::Holds: return "Holds";
  case Genericity::Fails: return "Fails";
  case Genericity::Unknown: return "Unknown";
  }
  return "?";
}

struct Counterexample {
  Vec alpha;
  Vec beta;
  EdReport alpha_report; // generic essential dimension of alpha (upper bound used)
  EdReport beta_report;  // lower bound for the essential dimension of beta
  SubquiverWitness witness;
  std::string note;
};

struct GenericityVerdict {
  Genericity verdict = Genericity::Unknown;
  std::string reason;
  std::optional<Counterexample> pair;
};

namespace detail {

inline Counterexample looped_pair_construction(GenericCalculus &g, int i, int j, int s, int r) {
  const Quiver &q = g.quiver();
  int n = q.vertex_count();
  Counterexample ce;
  ce.alpha.assign(n, 0);
  ce.beta.assign(n, 0);
  if (r >= 2) {
    ce.alpha[i] = 2;
    ce.alpha[j] = 2 * r - 1;
    ce.beta[i] = 2;
    ce.beta[j] = 2;
  } else {
    ce.alpha[i] = 4;
    ce.alpha[j] = 3;
    ce.beta[i] = 4;
    ce.beta[j] = 2;
  }
  ce.alpha_report = ged_root(g, ce.alpha);
  ce.beta_report = ged_root(g, ce.beta);
  if (r >= 2) {
    i64 plain = 4 * static_cast<i64>(r) + 4 * static_cast<i64>(s) - 7;
    ce.beta_report.note += "; without the gcd-2 correction the value would be 4r+4s-7 = " +
                           std::to_string(plain) + ", the correction adds " +
                           std::to_string(ce.beta_report.tower_sum);
  } else {
    i64 plain = 16 * static_cast<i64>(s) - 11;
    ce.beta_report.note += "; without the gcd-2 correction the value would be 16s-11 = " +
                           std::to_string(plain) + ", the correction adds " +
                           std::to_string(ce.beta_report.tower_sum);
  }
  ce.note = "looped pair (s=" + std::to_string(s) + ", r=" + std::to_string(r) +
            "): ged(alpha) < ged(beta) <= ed(beta) <= ed(alpha)";
  return ce;
}

} // namespace detail

// The gap shown by a counterexample: beta <= alpha and the generic essential
// dimension of alpha is below a lower bound for the essential dimension of beta.
inline bool counterexample_valid(const Quiver &q, const Counterexample &ce) {
  return dominates(ce.alpha, ce.beta) && !is_zero(ce.beta) &&
         classify_root(q, ce.alpha).verdict != RootVerdict::NotRoot &&
         ce.alpha_report.lower <= ce.alpha_report.upper &&
         ce.beta_report.lower <= ce.beta_report.upper &&
         ce.alpha_report.upper < ce.beta_report.lower;
}

inline constexpr i64 kGapSearchHeight = 12;

namespace detail {

// First pair of roots beta <= alpha with ged(alpha) < ged(beta), alpha taken
// in height-lexicographic order, then beta.
inline std::optional<Counterexample> search_gap(GenericCalculus &g, i64 max_height) {
  const Quiver &q = g.quiver();
  std::vector<std::pair<Vec, EdReport>> roots;
  Vec v(q.vertex_count(), 0);
  auto rec = [&](auto &self, std::size_t pos, i64 left) -> void {
    if (pos == v.size()) {
      if (!is_zero(v) && classify_root(q, v).verdict != RootVerdict::NotRoot)
        roots.push_back({v, ged_root(g, v)});
      return;
    }
    for (i64 x = 0; x <= left; ++x) {
      v[pos] = x;
      self(self, pos + 1, left - x);
    }
    v[pos] = 0;
  };
  rec(rec, 0, max_height);
  std::sort(roots.begin(), roots.end(),
            [](const auto &x, const auto &y) { return height_lex_less(x.first, y.first); });
  for (const auto &[a, ra] : roots)
    for (const auto &[b, rb] : roots) {
      if (height(b) > height(a))
        break;
      if (b != a && dominates(a, b) && ra.upper < rb.lower) {
        Counterexample ce;
        ce.alpha = a;
        ce.beta = b;
        ce.alpha_report = ra;
        ce.beta_report = rb;
        return ce;
      }
    }
  return std::nullopt;
}

} // namespace detail

inline Counterexample genericity_counterexample(GenericCalculus &g, i64 orbit_cap = kOrbitCap) {
  const Quiver &q = g.quiver();
  SubquiverWitness w = find_witness_subquiver(q);
  int n = q.vertex_count();
  Counterexample ce;
  switch (w.kind) {
  case WitnessKind::LoopedPair:
    ce = detail::looped_pair_construction(g, w.vertices[0], w.vertices[1], w.s, w.r);
    break;
  case WitnessKind::MultiArrowPair: {
    Vec beta_pair{w.r - 1, w.r - 1};
    Quiver pair = induced_subquiver(q, w.vertices);
    Vec alpha_pair = find_real_root_dominating(pair, beta_pair, orbit_cap);
    ce.alpha = zero_extend(alpha_pair, w.vertices, n);
    ce.beta = zero_extend(beta_pair, w.vertices, n);
    ce.alpha_report = ged_root(g, ce.alpha);
    ce.beta_report = ged_root(g, ce.beta);
    ce.note = "multi-arrow pair (r=" + std::to_string(w.r) +
              "): real root alpha dominating beta, ged(alpha) < ged(beta) <= ed(alpha)";
    break;
  }
  case WitnessKind::TameSub: {
    if (w.vertices.size() == 1 && q.loop_count(w.vertices[0]) == 1) {
      // The one-loop quiver has no real roots; use a one-loop vertex next to a
      // loop-free vertex and the looped-pair construction with s = 1.
      bool built = false;
      for (int i = 0; i < n && !built; ++i)
        for (int j = 0; j < n && !built; ++j)
          if (q.loop_count(i) == 1 && q.loop_count(j) == 0 && q.edges_between(i, j) > 0) {
            ce = detail::looped_pair_construction(g, i, j, 1, q.edges_between(i, j));
            built = true;
          }
      if (!built)
        throw Error(Errc::HypothesisViolated, "no one-loop vertex next to a loop-free vertex");
      break;
    }
    Quiver sub = induced_subquiver(q, w.vertices);
    Vec delta = null_root(sub);
    Vec alpha_sub = find_real_root_dominating(sub, delta, orbit_cap);
    ce.alpha = zero_extend(alpha_sub, w.vertices, n);
    ce.beta = zero_extend(delta, w.vertices, n);
    ce.alpha_report = ged_root(g, ce.alpha);
    ce.beta_report = ged_root(g, ce.beta);
    ce.note = "tame subquiver: real root alpha dominating the null root beta";
    break;
  }
  }
  ce.witness = w;
  if (!counterexample_valid(q, ce)) {
    // Real roots need not be Schur once the quiver has oriented cycles, so the
    // construction can leave ged(alpha) positive. Look for a gap among small roots.
    if (auto found = detail::search_gap(g, kGapSearchHeight)) {
      found->witness = w;
      found->note = "gap found by search over roots of height <= " +
                    std::to_string(kGapSearchHeight) + " (" + ce.note + " gave no gap)";
      return *found;
    }
    ce.note += "; no gap: ged(alpha) " + std::to_string(ce.alpha_report.upper) +
               " is not below ged(beta) " + std::to_string(ce.beta_report.lower) +
               ", and no pair of roots of height <= " + std::to_string(kGapSearchHeight) +
               " shows one";
  }
  return ce;
}

inline Counterexample genericity_counterexample(const Quiver &q, i64 orbit_cap = kOrbitCap) {
  GenericCalculus g(q);
  return genericity_counterexample(g, orbit_cap);
}

inline GenericityVerdict genericity_for(GenericCalculus &g, const Vec &a, i64 orbit_cap = kOrbitCap) {
  const Quiver &q = g.quiver();
  require_nonzero_nonnegative(q, a);
  GenericityVerdict out;
  if (genericity_all_alpha(q)) {
    out.verdict = Genericity::Holds;
    out.reason = "every component is of finite type or has a loop at every vertex";
    return out;
  }
  int m = 0;
  if (star_shape(q, m) && a[0] >= 1 &&
      std::all_of(a.begin() + 1, a.end(), [](i64 x) { return x == 1; })) {
    i64 nn = a[0] - 1;
    i64 ed = star_ed(m, nn), ged = star_ged(m, nn);
    if (ed > ged) {
      Counterexample ce;
      ce.alpha = ce.beta = a;
      ce.alpha_report.lower = ce.alpha_report.upper = ged;
      ce.alpha_report.note = "star quiver: generic configurations of points";
      ce.beta_report.quantity = "ed";
      ce.beta_report.lower = ce.beta_report.upper = ed;
      ce.beta_report.note = "star quiver: points spanning a smaller subspace";
      ce.note = "star quiver with m=" + std::to_string(m) + ", n=" + std::to_string(nn);
      out.verdict = Genericity::Fails;
      out.reason = "star quiver: ed " + std::to_string(ed) + " exceeds ged " + std::to_string(ged);
      out.pair = ce;
    } else {
      out.verdict = Genericity::Holds;
      out.reason = "star quiver: ed equals ged (" + std::to_string(ged) + ")";
    }
    return out;
  }
  int r = 0;
  bool flipped = false;
  if (kronecker_shape(q, r, flipped) && r >= 3 && in_fundamental_region(q, a).in_region) {
    out.verdict = Genericity::Holds;
    out.reason = "generalized Kronecker quiver with r >= 3, vector in the fundamental region";
    return out;
  }
  SubquiverWitness w = find_witness_subquiver(q);
  if (rep_type(q).verdict == RepKind::Wild) {
    int n = q.vertex_count();
    bool member = false;
    std::string why;
    if (w.kind == WitnessKind::LoopedPair) {
      auto s = support(a);
      member = s.size() == 1 && s[0] == w.vertices[0];
      why = "multiple of the looped vertex of a looped pair";
    } else if (w.kind == WitnessKind::MultiArrowPair) {
      i64 x = a[w.vertices[0]];
      member = support(a).size() == 2 && x == a[w.vertices[1]] && (x == 1 || is_prime_power(x));
      why = "(n,n) on a multi-arrow pair with n a prime power";
    } else {
      auto [i0, i1] = tame_attachment(q, w);
      if (i0 >= 0) {
        Vec delta = zero_extend(null_root(induced_subquiver(q, w.vertices)), w.vertices, n);
        i64 mm = a[w.vertices[0]] / delta[w.vertices[0]];
        Vec cand = scale(mm, delta);
        cand[i0] = add(cand[i0], 1);
        member = mm >= 2 && cand == a;
        why = "m*delta + e_i0 with m >= 2 on a tame subquiver with one attached vertex";
      }
    }
    if (member) {
      out.verdict = Genericity::Holds;
      out.reason = why;
      return out;
    }
  }
  Counterexample ce = genericity_counterexample(g, orbit_cap);
  if (ce.alpha == a && counterexample_valid(q, ce)) {
    out.verdict = Genericity::Fails;
    out.reason = ce.note;
    out.pair = ce;
    return out;
  }
  if (w.kind == WitnessKind::TameSub && !(w.vertices.size() == 1)) {
    Vec delta = zero_extend(null_root(induced_subquiver(q, w.vertices)), w.vertices,
                            q.vertex_count());
    if (dominates(a, delta) && classify_root(q, a).verdict == RootVerdict::Real) {
      auto rep = ged_root(g, a);
      if (rep.upper == 0) {
        Counterexample c2;
        c2.alpha = a;
        c2.beta = delta;
        c2.alpha_report = rep;
        c2.beta_report = ged_root(g, delta);
        c2.witness = w;
        c2.note = "real root dominating the null root of a tame subquiver";
        out.verdict = Genericity::Fails;
        out.reason = c2.note;
        out.pair = c2;
        return out;
      }
    }
  }
  out.reason = "no decision rule applies";
  return out;
}

inline GenericityVerdict genericity_for(const Quiver &q, const Vec &a) {
  GenericCalculus g(q);
  return genericity_for(g, a);
}

// Lower bound for the essential dimension implied by a verdict: for Holds the
// generic value, otherwise nothing is claimed.
inline std::optional<EdReport> implied_ed(GenericCalculus &g, const Vec &a,
                                          const GenericityVerdict &v) {
  if (v.verdict != Genericity::Holds)
    return std::nullopt;
  if (classify_root(g.quiver(), a).verdict == RootVerdict::NotRoot)
    return std::nullopt;
  auto r = ged_root(g, a);
  r.quantity = "ed";
  return r;
}

} // namespace quiv
