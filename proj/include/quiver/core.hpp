#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quiver/arith.hpp"

namespace quiv {

// Dimension vector; entries may be negative for intermediate Weyl states.
using Vec = std::vector<i64>;

struct Arrow {
  int source;
  int target;
  bool operator==(const Arrow &) const = default;
};

// Quiver with 0-based vertices. Parallel arrows and loops are kept as given.
class Quiver {
public:
  Quiver() = default;

  int vertex_count() const { return n_; }
  const std::vector<Arrow> &arrows() const { return arrows_; }
  int loop_count(int i) const { return loops_[i]; }
  const std::vector<int> &loop_counts() const { return loops_; }

  // Number of non-loop arrows joining i and j in either direction.
  int edges_between(int i, int j) const { return i == j ? 0 : edges_[i * n_ + j]; }
  // Number of arrows i -> j (loops included when i == j).
  int arrows_from_to(int i, int j) const { return directed_[i * n_ + j]; }

  bool operator==(const Quiver &o) const { return n_ == o.n_ && arrows_ == o.arrows_; }

  static Quiver from_zero_based(int n, std::vector<Arrow> arrows) {
    if (n < 1)
      throw Error(Errc::EmptyQuiver, "vertex count must be at least 1");
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      const auto &a = arrows[k];
      if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
        throw Error(Errc::InvalidArrow, "arrow " + std::to_string(k + 1) +
                                            " has an endpoint outside [1, " +
                                            std::to_string(n) + "]");
    }
    Quiver q;
    q.n_ = n;
    q.arrows_ = std::move(arrows);
    q.loops_.assign(n, 0);
    q.edges_.assign(static_cast<std::size_t>(n) * n, 0);
    q.directed_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const auto &a : q.arrows_) {
      q.directed_[a.source * n + a.target]++;
      if (a.source == a.target) {
        q.loops_[a.source]++;
      } else {
        q.edges_[a.source * n + a.target]++;
        q.edges_[a.target * n + a.source]++;
      }
    }
    return q;
  }

private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<int> loops_;
  std::vector<int> edges_;
  std::vector<int> directed_;
};

// Arrows use the external 1-based vertex numbering.
inline Quiver build_quiver(int vertex_count, const std::vector<std::pair<int, int>> &arrows) {
  if (vertex_count < 1)
    throw Error(Errc::EmptyQuiver, "vertex count must be at least 1");
  std::vector<Arrow> zero;
  zero.reserve(arrows.size());
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    auto [s, t] = arrows[k];
    if (s < 1 || s > vertex_count || t < 1 || t > vertex_count)
      throw Error(Errc::InvalidArrow, "arrow " + std::to_string(k + 1) + " (" +
                                          std::to_string(s) + "," + std::to_string(t) +
                                          ") has an endpoint outside [1, " +
                                          std::to_string(vertex_count) + "]");
    zero.push_back({s - 1, t - 1});
  }
  return Quiver::from_zero_based(vertex_count, std::move(zero));
}

inline std::vector<int> loop_counts(const Quiver &q) { return q.loop_counts(); }

inline void check_size(const Quiver &q, const Vec &a) {
  if (static_cast<int>(a.size()) != q.vertex_count())
    throw Error(Errc::SizeMismatch, "vector has " + std::to_string(a.size()) +
                                        " entries, quiver has " +
                                        std::to_string(q.vertex_count()) + " vertices");
}

// <a,b> = sum_i a_i b_i - sum_{arrows i->j} a_i b_j
inline i64 euler_form(const Quiver &q, const Vec &a, const Vec &b) {
  check_size(q, a);
  check_size(q, b);
  i64 s = 0;
  for (int i = 0; i < q.vertex_count(); ++i)
    s = add(s, mul(a[i], b[i]));
  for (const auto &ar : q.arrows())
    s = sub(s, mul(a[ar.source], b[ar.target]));
  return s;
}

inline i64 symmetrized_form(const Quiver &q, const Vec &a, const Vec &b) {
  return add(euler_form(q, a, b), euler_form(q, b, a));
}

// (a, e_i) without building e_i.
inline i64 pair_with_unit(const Quiver &q, const Vec &a, int i) {
  check_size(q, a);
  i64 s = mul(2, a[i]);
  s = sub(s, mul(2 * q.loop_count(i), a[i]));
  for (int j = 0; j < q.vertex_count(); ++j)
    if (j != i)
      s = sub(s, mul(q.edges_between(i, j), a[j]));
  return s;
}

inline Vec unit(int n, int i) {
  Vec e(n, 0);
  e[i] = 1;
  return e;
}

inline Vec zeros(int n) { return Vec(n, 0); }

inline std::vector<int> support(const Vec &a) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    if (a[i] != 0)
      s.push_back(i);
  return s;
}

inline bool is_zero(const Vec &a) {
  return std::all_of(a.begin(), a.end(), [](i64 x) { return x == 0; });
}

inline bool non_negative(const Vec &a) {
  return std::all_of(a.begin(), a.end(), [](i64 x) { return x >= 0; });
}

inline bool dominates(const Vec &a, const Vec &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i])
      return false;
  return true;
}

inline i64 height(const Vec &a) {
  i64 h = 0;
  for (i64 x : a)
    h = add(h, x);
  return h;
}

inline i64 vec_gcd(const Vec &a) {
  i64 g = 0;
  for (i64 x : a)
    g = gcd(g, x);
  return g;
}

inline Vec operator+(const Vec &a, const Vec &b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = add(a[i], b[i]);
  return r;
}

inline Vec operator-(const Vec &a, const Vec &b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = sub(a[i], b[i]);
  return r;
}

inline Vec scale(i64 m, const Vec &a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = mul(m, a[i]);
  return r;
}

// Order used for reporting summands: height first, then entries.
inline bool height_lex_less(const Vec &a, const Vec &b) {
  i64 ha = height(a), hb = height(b);
  if (ha != hb)
    return ha < hb;
  return a < b;
}

inline std::string to_string(const Vec &a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

// Induced subquiver on the given vertices (kept in the given order).
inline Quiver induced_subquiver(const Quiver &q, const std::vector<int> &verts) {
  std::vector<int> pos(q.vertex_count(), -1);
  for (std::size_t k = 0; k < verts.size(); ++k)
    pos[verts[k]] = static_cast<int>(k);
  std::vector<Arrow> arrows;
  for (const auto &a : q.arrows())
    if (pos[a.source] >= 0 && pos[a.target] >= 0)
      arrows.push_back({pos[a.source], pos[a.target]});
  return Quiver::from_zero_based(static_cast<int>(verts.size()), std::move(arrows));
}

inline Vec restrict_to(const Vec &a, const std::vector<int> &verts) {
  Vec r;
  r.reserve(verts.size());
  for (int v : verts)
    r.push_back(a[v]);
  return r;
}

inline Vec zero_extend(const Vec &a, const std::vector<int> &verts, int n) {
  Vec r(n, 0);
  for (std::size_t k = 0; k < verts.size(); ++k)
    r[verts[k]] = a[k];
  return r;
}

// Vertices of the underlying graph grouped into connected components.
inline std::vector<std::vector<int>> components(const Quiver &q,
                                                const std::vector<int> &verts) {
  std::vector<char> in(q.vertex_count(), 0), seen(q.vertex_count(), 0);
  for (int v : verts)
    in[v] = 1;
  std::vector<std::vector<int>> out;
  for (int v : verts) {
    if (seen[v])
      continue;
    std::vector<int> comp, stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w = 0; w < q.vertex_count(); ++w)
        if (in[w] && !seen[w] && q.edges_between(u, w) > 0) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<std::vector<int>> components(const Quiver &q) {
  std::vector<int> all(q.vertex_count());
  for (int i = 0; i < q.vertex_count(); ++i)
    all[i] = i;
  return components(q, all);
}

} // namespace quiv
