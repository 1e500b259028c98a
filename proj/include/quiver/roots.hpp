#pragma once

#include <queue>
#include <set>
#include <string>
#include <vector>

#include "quiver/classification.hpp"

namespace quiv {

enum class RootVerdict { Real, ImaginaryIsotropic, ImaginaryAnisotropic, NotRoot };

inline const char *root_verdict_name(RootVerdict v) {
  switch (v) {
  case RootVerdict::Real: return "Real";
  case RootVerdict::ImaginaryIsotropic: return "ImaginaryIsotropic";
  case RootVerdict::ImaginaryAnisotropic: return "ImaginaryAnisotropic";
  case RootVerdict::NotRoot: return "NotRoot";
  }
  return "?";
}

inline bool is_imaginary(RootVerdict v) {
  return v == RootVerdict::ImaginaryIsotropic || v == RootVerdict::ImaginaryAnisotropic;
}

struct RootClassification {
  RootVerdict verdict = RootVerdict::NotRoot;
  int sign = 1;            // -1 when the input was a negative vector
  std::vector<int> trace;  // reflection vertices, in the order applied to |a|
  Vec terminal;            // an e_i or a fundamental-region vector (empty for NotRoot)
};

struct FundamentalRegionReport {
  bool in_region = false;
  std::vector<int> failing; // vertices with (a, e_i) > 0
  bool connected = false;
};

inline Vec simple_reflection(const Quiver &q, int i, const Vec &a) {
  check_size(q, a);
  if (q.loop_count(i) != 0)
    throw Error(Errc::LoopedVertex, "vertex " + std::to_string(i + 1) + " carries a loop");
  Vec r = a;
  r[i] = sub(r[i], pair_with_unit(q, a, i));
  return r;
}

inline FundamentalRegionReport in_fundamental_region(const Quiver &q, const Vec &a) {
  check_size(q, a);
  if (!non_negative(a))
    throw Error(Errc::NegativeEntry, "vector " + to_string(a) + " has a negative entry");
  FundamentalRegionReport rep;
  rep.connected = is_connected_support(q, a);
  for (int i = 0; i < q.vertex_count(); ++i)
    if (pair_with_unit(q, a, i) > 0)
      rep.failing.push_back(i);
  rep.in_region = !is_zero(a) && rep.connected && rep.failing.empty();
  return rep;
}

inline RootClassification classify_root(const Quiver &q, const Vec &a) {
  check_size(q, a);
  if (is_zero(a))
    throw Error(Errc::ZeroVector, "cannot classify the zero vector");
  bool pos = false, neg = false;
  for (i64 x : a) {
    pos |= x > 0;
    neg |= x < 0;
  }
  RootClassification out;
  if (pos && neg)
    return out;
  if (neg) {
    out = classify_root(q, scale(-1, a));
    out.sign = -1;
    return out;
  }
  if (!is_connected_support(q, a))
    return out;
  Vec v = a;
  while (true) {
    auto s = support(v);
    if (s.size() == 1 && v[s[0]] == 1 && q.loop_count(s[0]) == 0) {
      out.verdict = RootVerdict::Real;
      out.terminal = v;
      return out;
    }
    auto fr = in_fundamental_region(q, v);
    if (fr.in_region) {
      out.verdict = euler_form(q, v, v) == 0 ? RootVerdict::ImaginaryIsotropic
                                             : RootVerdict::ImaginaryAnisotropic;
      out.terminal = v;
      return out;
    }
    int pivot = -1;
    for (int i : fr.failing)
      if (q.loop_count(i) == 0) {
        pivot = i;
        break;
      }
    if (pivot < 0 || !fr.connected) {
      out.trace.clear();
      return out;
    }
    v = simple_reflection(q, pivot, v);
    out.trace.push_back(pivot);
    if (!non_negative(v)) {
      out.trace.clear();
      return out;
    }
  }
}

// Re-applies the trace backwards from the terminal vector.
inline Vec replay_trace(const Quiver &q, const RootClassification &c) {
  Vec v = c.terminal;
  for (auto it = c.trace.rbegin(); it != c.trace.rend(); ++it)
    v = simple_reflection(q, *it, v);
  return c.sign < 0 ? scale(-1, v) : v;
}

inline constexpr i64 kEnumerateCap = 10'000'000;
inline constexpr i64 kOrbitCap = 1'000'000;

// Number of non-negative vectors of length n with entry sum <= h, saturating.
inline i64 orthant_count(int n, i64 h) {
  __int128 c = 1;
  for (int k = 1; k <= n; ++k) {
    c = c * (h + k) / k;
    if (c > (__int128)INT64_MAX / 4)
      return INT64_MAX;
  }
  return static_cast<i64>(c);
}

// Calls f on every non-negative vector of height 1..h in lexicographic order.
template <class F> void for_each_in_orthant(int n, i64 h, F &&f) {
  Vec v(n, 0);
  auto rec = [&](auto &self, int pos, i64 left) -> void {
    if (pos == n) {
      if (left != h)
        f(v);
      return;
    }
    for (i64 x = 0; x <= left; ++x) {
      v[pos] = x;
      self(self, pos + 1, left - x);
    }
    v[pos] = 0;
  };
  rec(rec, 0, h);
}

inline std::vector<std::pair<Vec, RootClassification>>
enumerate_roots(const Quiver &q, i64 height_bound, i64 cap = kEnumerateCap) {
  if (orthant_count(q.vertex_count(), height_bound) > cap)
    throw Error(Errc::BoundTooLarge, "height bound " + std::to_string(height_bound) +
                                         " exceeds the scan cap of " + std::to_string(cap));
  std::vector<std::pair<Vec, RootClassification>> out;
  for_each_in_orthant(q.vertex_count(), height_bound, [&](const Vec &v) {
    auto c = classify_root(q, v);
    if (c.verdict != RootVerdict::NotRoot)
      out.emplace_back(v, c);
  });
  return out;
}

// Primitive positive generator of the radical of the symmetrized form.
inline Vec null_root(const Quiver &q) {
  if (components(q).size() != 1 || form_kind(q) != RepKind::Tame)
    throw Error(Errc::NotTame, "null root needs a connected tame quiver");
  auto g = symmetric_gram(q);
  int n = q.vertex_count();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[i][j] = Rational(g[i][j]);
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (!a[i][col].is_zero()) {
        p = i;
        break;
      }
    if (p < 0)
      continue;
    std::swap(a[p], a[row]);
    Rational inv = Rational(1) / a[row][col];
    for (int j = 0; j < n; ++j)
      a[row][j] = a[row][j] * inv;
    for (int i = 0; i < n; ++i)
      if (i != row && !a[i][col].is_zero()) {
        Rational f = a[i][col];
        for (int j = 0; j < n; ++j)
          a[i][j] = a[i][j] - f * a[row][j];
      }
    pivot_col.push_back(col);
    ++row;
  }
  if (n - static_cast<int>(pivot_col.size()) != 1)
    throw Error(Errc::RadicalRankUnexpected,
                "radical has rank " + std::to_string(n - pivot_col.size()));
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col)
    is_pivot[c] = 1;
  int free_col = 0;
  while (is_pivot[free_col])
    ++free_col;
  std::vector<Rational> x(n, Rational(0));
  x[free_col] = Rational(1);
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    x[pivot_col[r]] = Rational(0) - a[r][free_col];
  i64 l = 1;
  for (auto &v : x)
    l = mul(l / gcd(l, v.den), v.den);
  Vec out(n);
  for (int i = 0; i < n; ++i)
    out[i] = mul(x[i].num, l / x[i].den);
  i64 gg = vec_gcd(out);
  for (auto &v : out)
    v /= gg;
  if (out[free_col] < 0 || !non_negative(out))
    for (auto &v : out)
      v = -v;
  if (!non_negative(out) || support(out).size() != static_cast<std::size_t>(n))
    throw Error(Errc::RadicalRankUnexpected, "radical generator is not sincere and positive");
  return out;
}

// Positive real roots explored in order of height from the loop-free simples;
// returns the first one dominating d. Equal heights are taken in descending
// lexicographic order, so e_i for the smallest loop-free i comes first.
inline Vec find_real_root_dominating(const Quiver &q, const Vec &d, i64 cap = kOrbitCap) {
  check_size(q, d);
  if (!non_negative(d))
    throw Error(Errc::NegativeEntry, "target " + to_string(d) + " has a negative entry");
  using Item = std::pair<i64, Vec>;
  auto later = [](const Item &x, const Item &y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> frontier(later);
  std::set<Vec> seen;
  for (int i = 0; i < q.vertex_count(); ++i)
    if (q.loop_count(i) == 0) {
      Vec e = unit(q.vertex_count(), i);
      frontier.emplace(1, e);
      seen.insert(e);
    }
  while (!frontier.empty()) {
    Vec v = frontier.top().second;
    frontier.pop();
    if (dominates(v, d))
      return v;
    for (int i = 0; i < q.vertex_count(); ++i) {
      if (q.loop_count(i) != 0)
        continue;
      Vec w = simple_reflection(q, i, v);
      if (!non_negative(w) || seen.count(w))
        continue;
      if (static_cast<i64>(seen.size()) >= cap)
        throw Error(Errc::SearchExhausted, "real-root orbit search passed " +
                                               std::to_string(cap) + " vectors");
      seen.insert(w);
      frontier.emplace(height(w), w);
    }
  }
  throw Error(Errc::SearchExhausted, "no real root dominates " + to_string(d));
}

} // namespace quiv
