#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quiver/roots.hpp"

namespace quiv {

struct GenericHomExt {
  i64 hom = 0;
  i64 ext = 0;
};

struct Summand {
  Vec root;
  i64 multiplicity = 1;
  bool operator==(const Summand &) const = default;
};

struct CanonicalDecomposition {
  std::vector<Summand> summands;
  std::string provenance = "symbolic";
};

// Multiset of summands expanded and sorted by (height, entries).
inline std::vector<Vec> expand(const CanonicalDecomposition &d) {
  std::vector<Vec> out;
  for (const auto &s : d.summands)
    for (i64 k = 0; k < s.multiplicity; ++k)
      out.push_back(s.root);
  std::sort(out.begin(), out.end(), height_lex_less);
  return out;
}

inline CanonicalDecomposition collect(std::vector<Vec> parts) {
  std::sort(parts.begin(), parts.end(), height_lex_less);
  CanonicalDecomposition d;
  for (auto &p : parts) {
    if (!d.summands.empty() && d.summands.back().root == p)
      d.summands.back().multiplicity++;
    else
      d.summands.push_back({p, 1});
  }
  return d;
}

// Calls f on every vector b with 0 <= b <= a, lexicographic order.
template <class F> void for_each_below(const Vec &a, F &&f) {
  Vec v(a.size(), 0);
  auto rec = [&](auto &self, std::size_t pos) -> void {
    if (pos == a.size()) {
      f(v);
      return;
    }
    for (i64 x = 0; x <= a[pos]; ++x) {
      v[pos] = x;
      self(self, pos + 1);
    }
    v[pos] = 0;
  };
  rec(rec, 0);
}

// Generic hom/ext between dimension vectors on one quiver, memoized per instance.
//   ext(a, b) = max over generic subdimension vectors a' of a of -<a', b>
//   a' is a generic subdimension vector of a  iff  ext(a', a - a') = 0
// Instances are not shared between threads.
class GenericCalculus {
public:
  explicit GenericCalculus(Quiver q) : q_(std::move(q)) {}

  const Quiver &quiver() const { return q_; }

  const std::vector<Vec> &generic_subvectors(const Vec &a) {
    auto it = subs_.find(a);
    if (it != subs_.end())
      return it->second;
    std::vector<Vec> out;
    for_each_below(a, [&](const Vec &b) {
      if (is_zero(b) || b == a || ext(b, a - b) == 0)
        out.push_back(b);
    });
    return subs_.emplace(a, std::move(out)).first->second;
  }

  i64 ext(const Vec &a, const Vec &b) {
    if (is_zero(a) || is_zero(b))
      return 0;
    auto key = std::make_pair(a, b);
    auto it = ext_.find(key);
    if (it != ext_.end())
      return it->second;
    i64 best = 0;
    for (const auto &s : generic_subvectors(a))
      best = std::max(best, -euler_form(q_, s, b));
    ext_.emplace(std::move(key), best);
    return best;
  }

  GenericHomExt hom_ext(const Vec &a, const Vec &b) {
    check(a);
    check(b);
    i64 e = ext(a, b);
    return {add(e, euler_form(q_, a, b)), e};
  }

  // Schur test on generic subdimension vectors: <b,a> - <a,b> > 0 for every
  // proper nonzero generic subdimension vector b.
  bool schur(const Vec &a) {
    auto it = schur_.find(a);
    if (it != schur_.end())
      return it->second;
    bool ok = !is_zero(a);
    if (ok)
      for (const auto &b : generic_subvectors(a)) {
        if (is_zero(b) || b == a)
          continue;
        if (euler_form(q_, b, a) - euler_form(q_, a, b) <= 0) {
          ok = false;
          break;
        }
      }
    schur_.emplace(a, ok);
    return ok;
  }

  // Pairwise generic ext vanishing, both directions; repeated entries need
  // ext(x, x) = 0.
  bool orthogonal(const std::vector<Summand> &parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].multiplicity > 1 && ext(parts[i].root, parts[i].root) != 0)
        return false;
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        if (ext(parts[i].root, parts[j].root) != 0 || ext(parts[j].root, parts[i].root) != 0)
          return false;
    }
    return true;
  }

  // Recursive splitting: a Schur vector is its own decomposition; otherwise the
  // first split a = b + c whose two decompositions together stay pairwise
  // ext-orthogonal gives the decomposition (it is unique, so the order of the
  // scan only affects speed).
  const CanonicalDecomposition &decompose(const Vec &a) {
    auto it = decomp_.find(a);
    if (it != decomp_.end())
      return it->second;
    CanonicalDecomposition d;
    if (schur(a)) {
      d.summands.push_back({a, 1});
    } else {
      bool found = false;
      // Splits off small pieces first; those tend to succeed sooner.
      std::vector<Vec> pieces;
      for_each_below(a, [&](const Vec &b) {
        if (!is_zero(b) && b != a)
          pieces.push_back(b);
      });
      std::sort(pieces.begin(), pieces.end(), height_lex_less);
      for (const auto &b : pieces) {
        Vec c = a - b;
        if (height_lex_less(c, b))
          continue;
        auto parts = expand(decompose(b));
        auto more = expand(decompose(c));
        parts.insert(parts.end(), more.begin(), more.end());
        auto merged = collect(parts);
        if (orthogonal(merged.summands)) {
          d = std::move(merged);
          found = true;
          break;
        }
      }
      if (!found)
        throw Error(Errc::HypothesisViolated,
                    "no ext-orthogonal split found for " + to_string(a));
    }
    return decomp_.emplace(a, std::move(d)).first->second;
  }

  // Exhaustive search over multiset partitions of a into Schur vectors with
  // pairwise generic ext vanishing. Returns every partition found.
  std::vector<CanonicalDecomposition> decompose_exhaustive(const Vec &a) {
    std::vector<Vec> candidates;
    for_each_below(a, [&](const Vec &b) {
      if (!is_zero(b) && schur(b))
        candidates.push_back(b);
    });
    std::sort(candidates.begin(), candidates.end());
    std::vector<CanonicalDecomposition> found;
    std::vector<Summand> chosen;
    auto rec = [&](auto &self, const Vec &left, std::size_t start) -> void {
      if (is_zero(left)) {
        auto parts = chosen;
        std::vector<Vec> flat;
        for (auto &s : parts)
          for (i64 k = 0; k < s.multiplicity; ++k)
            flat.push_back(s.root);
        auto d = collect(flat);
        d.provenance = "exhaustive";
        found.push_back(std::move(d));
        return;
      }
      for (std::size_t k = start; k < candidates.size(); ++k) {
        const Vec &c = candidates[k];
        if (!dominates(left, c))
          continue;
        bool ok = true;
        for (const auto &s : chosen)
          if (ext(s.root, c) != 0 || ext(c, s.root) != 0) {
            ok = false;
            break;
          }
        if (!ok)
          continue;
        // take c with every feasible multiplicity
        Vec rest = left;
        i64 m = 0;
        while (dominates(rest, c)) {
          rest = rest - c;
          ++m;
          if (m > 1 && ext(c, c) != 0)
            break;
          chosen.push_back({c, m});
          self(self, rest, k + 1);
          chosen.pop_back();
        }
      }
    };
    rec(rec, a, 0);
    return found;
  }

private:
  void check(const Vec &a) {
    check_size(q_, a);
    if (!non_negative(a))
      throw Error(Errc::NegativeEntry, "vector " + to_string(a) + " has a negative entry");
  }

  Quiver q_;
  std::map<Vec, std::vector<Vec>> subs_;
  std::map<std::pair<Vec, Vec>, i64> ext_;
  std::map<Vec, bool> schur_;
  std::map<Vec, CanonicalDecomposition> decomp_;
};

inline GenericHomExt generic_hom_ext(const Quiver &q, const Vec &a, const Vec &b) {
  GenericCalculus g(q);
  return g.hom_ext(a, b);
}

inline void require_nonzero_nonnegative(const Quiver &q, const Vec &a) {
  check_size(q, a);
  if (!non_negative(a))
    throw Error(Errc::NegativeEntry, "vector " + to_string(a) + " has a negative entry");
  if (is_zero(a))
    throw Error(Errc::ZeroVector, "vector must be nonzero");
}

inline CanonicalDecomposition canonical_decomposition(GenericCalculus &g, const Vec &a) {
  require_nonzero_nonnegative(g.quiver(), a);
  return g.decompose(a);
}

inline CanonicalDecomposition canonical_decomposition(const Quiver &q, const Vec &a) {
  GenericCalculus g(q);
  return canonical_decomposition(g, a);
}

// Single-answer wrapper around the exhaustive search; more or fewer than one
// admissible partition is reported as an error.
inline CanonicalDecomposition canonical_decomposition_exhaustive(GenericCalculus &g, const Vec &a) {
  require_nonzero_nonnegative(g.quiver(), a);
  auto all = g.decompose_exhaustive(a);
  if (all.size() != 1)
    throw Error(Errc::HypothesisViolated, std::to_string(all.size()) +
                                              " admissible partitions found for " + to_string(a));
  return all.front();
}

inline bool is_schur_root(GenericCalculus &g, const Vec &a) {
  const auto &d = canonical_decomposition(g, a);
  return d.summands.size() == 1 && d.summands[0].multiplicity == 1;
}

inline bool is_schur_root(const Quiver &q, const Vec &a) {
  GenericCalculus g(q);
  return is_schur_root(g, a);
}

struct FamilyMember {
  Vec alpha;
  std::string note;
};

// For a TameSub witness: a loop-free vertex outside the witness joined to
// exactly one witness vertex. Returns {i0, i1}, or {-1, -1}.
inline std::pair<int, int> tame_attachment(const Quiver &q, const SubquiverWitness &w) {
  std::vector<char> in(q.vertex_count(), 0);
  for (int v : w.vertices)
    in[v] = 1;
  for (int i0 = 0; i0 < q.vertex_count(); ++i0) {
    if (in[i0] || q.loop_count(i0) != 0)
      continue;
    int hit = -1, count = 0;
    for (int v : w.vertices)
      if (q.edges_between(i0, v) > 0) {
        hit = v;
        ++count;
      }
    if (count == 1)
      return {i0, hit};
  }
  return {-1, -1};
}

inline std::vector<FamilyMember> schur_family(const Quiver &q, const SubquiverWitness &w, int count) {
  if (rep_type(q).verdict != RepKind::Wild)
    throw Error(Errc::HypothesisViolated, "Schur families are attached to wild quivers");
  int n = q.vertex_count();
  std::vector<FamilyMember> out;
  switch (w.kind) {
  case WitnessKind::TameSub: {
    auto [i0, i1] = tame_attachment(q, w);
    if (i0 < 0)
      throw Error(Errc::HypothesisViolated,
                  "no loop-free vertex is attached to exactly one witness vertex");
    Vec delta = zero_extend(null_root(induced_subquiver(q, w.vertices)), w.vertices, n);
    for (int m = 2; static_cast<int>(out.size()) < count; ++m) {
      Vec a = scale(m, delta);
      a[i0] = add(a[i0], 1);
      out.push_back({a, std::to_string(m) + "*delta + e_" + std::to_string(i0 + 1)});
    }
    break;
  }
  case WitnessKind::MultiArrowPair: {
    if (count > 0) {
      Vec a(n, 0);
      a[w.vertices[0]] = a[w.vertices[1]] = 1;
      out.push_back({a, "n=1 (trivially Schur, not a prime power)"});
    }
    for (i64 m = 2; static_cast<int>(out.size()) < count; ++m) {
      if (!is_prime_power(m))
        continue;
      Vec a(n, 0);
      a[w.vertices[0]] = a[w.vertices[1]] = m;
      out.push_back({a, "n=" + std::to_string(m) + " (prime power)"});
    }
    break;
  }
  case WitnessKind::LoopedPair: {
    for (int m = 1; static_cast<int>(out.size()) < count; ++m) {
      Vec a(n, 0);
      a[w.vertices[0]] = m;
      out.push_back({a, std::to_string(m) + "*e_" + std::to_string(w.vertices[0] + 1)});
    }
    break;
  }
  }
  return out;
}

} // namespace quiv
