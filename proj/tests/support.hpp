#pragma once

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quiver/quiver.hpp"

namespace testq {

using namespace quiv;

inline Quiver kronecker(int r) {
  return build_quiver(2, std::vector<std::pair<int, int>>(r, {1, 2}));
}

inline Quiver loops(int r) { return build_quiver(1, std::vector<std::pair<int, int>>(r, {1, 1})); }

// One loop at each of two vertices joined by a single arrow.
inline Quiver loop_pair() { return build_quiver(2, {{1, 1}, {2, 2}, {1, 2}}); }

// Centre is vertex 1 (index 0); arms 2..m+1 each point into it.
inline Quiver star(int m) {
  std::vector<std::pair<int, int>> arrows;
  for (int k = 2; k <= m + 1; ++k)
    arrows.emplace_back(k, 1);
  return build_quiver(m + 1, arrows);
}

// s loops at vertex 1, r arrows 1 -> 2.
inline Quiver looped_pair(int s, int r) {
  std::vector<std::pair<int, int>> arrows(s, {1, 1});
  for (int k = 0; k < r; ++k)
    arrows.emplace_back(1, 2);
  return build_quiver(2, arrows);
}

inline std::string data_file(const std::string &name) {
  return std::string(QUIVER_DATA_DIR) + "/" + name + ".quiver";
}

// Positive real roots of height <= h, built upward from the simple roots by
// reflections; independent of the descent used by classify_root.
inline std::set<Vec> real_roots_by_orbit(const Quiver &q, i64 h) {
  int n = q.vertex_count();
  std::set<Vec> seen;
  std::deque<Vec> todo;
  for (int i = 0; i < n; ++i)
    if (q.loop_count(i) == 0) {
      seen.insert(unit(n, i));
      todo.push_back(unit(n, i));
    }
  while (!todo.empty()) {
    Vec a = todo.front();
    todo.pop_front();
    for (int i = 0; i < n; ++i) {
      if (q.loop_count(i) != 0)
        continue;
      Vec b = simple_reflection(q, i, a);
      if (!non_negative(b) || is_zero(b) || height(b) > h)
        continue;
      if (seen.insert(b).second)
        todo.push_back(b);
    }
  }
  return seen;
}

// Positive imaginary roots of height <= h: the fundamental region and its
// images under reflections, again built upward.
inline std::set<Vec> imaginary_roots_by_orbit(const Quiver &q, i64 h) {
  int n = q.vertex_count();
  std::set<Vec> seen;
  std::deque<Vec> todo;
  Vec v(n, 0);
  auto rec = [&](auto &self, int pos, i64 left) -> void {
    if (pos == n) {
      if (!is_zero(v) && in_fundamental_region(q, v).in_region && seen.insert(v).second)
        todo.push_back(v);
      return;
    }
    for (i64 x = 0; x <= left; ++x) {
      v[pos] = x;
      self(self, pos + 1, left - x);
    }
    v[pos] = 0;
  };
  rec(rec, 0, h);
  while (!todo.empty()) {
    Vec a = todo.front();
    todo.pop_front();
    for (int i = 0; i < n; ++i) {
      if (q.loop_count(i) != 0)
        continue;
      Vec b = simple_reflection(q, i, a);
      if (!non_negative(b) || height(b) > h)
        continue;
      if (seen.insert(b).second)
        todo.push_back(b);
    }
  }
  return seen;
}

inline Vec random_vec(std::mt19937_64 &rng, int n, i64 lo, i64 hi) {
  std::uniform_int_distribution<i64> d(lo, hi);
  Vec v(n);
  for (auto &x : v)
    x = d(rng);
  return v;
}

// Random quiver with n vertices and up to max_arrows arrows (loops allowed).
inline Quiver random_quiver(std::mt19937_64 &rng, int n, int max_arrows) {
  std::uniform_int_distribution<int> v(1, n), k(0, max_arrows);
  std::vector<std::pair<int, int>> arrows;
  int count = k(rng);
  for (int t = 0; t < count; ++t)
    arrows.emplace_back(v(rng), v(rng));
  return build_quiver(n, arrows);
}

// Every connected quiver with `n` vertices and exactly `m` arrows, up to the
// order of the arrow list (multisets of ordered pairs).
inline std::vector<Quiver> connected_quivers(int n, int m) {
  std::vector<std::pair<int, int>> slots;
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t)
      slots.emplace_back(s, t);
  std::vector<Quiver> out;
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto &self, std::size_t from, int left) -> void {
    if (left == 0) {
      Quiver q = build_quiver(n, cur);
      if (components(q).size() == 1)
        out.push_back(q);
      return;
    }
    for (std::size_t k = from; k < slots.size(); ++k) {
      cur.push_back(slots[k]);
      self(self, k, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, m);
  return out;
}

inline std::vector<Quiver> small_connected_quivers(int max_vertices, int max_arrows) {
  std::vector<Quiver> out;
  for (int n = 1; n <= max_vertices; ++n)
    for (int m = 0; m <= max_arrows; ++m)
      for (auto &q : connected_quivers(n, m))
        out.push_back(q);
  return out;
}

// All vectors a >= 0 with 1 <= height(a) <= h.
inline std::vector<Vec> vectors_up_to(int n, i64 h) {
  std::vector<Vec> out;
  Vec v(n, 0);
  auto rec = [&](auto &self, int pos, i64 left) -> void {
    if (pos == n) {
      if (!is_zero(v))
        out.push_back(v);
      return;
    }
    for (i64 x = 0; x <= left; ++x) {
      v[pos] = x;
      self(self, pos + 1, left - x);
    }
    v[pos] = 0;
  };
  rec(rec, 0, h);
  return out;
}

} // namespace testq
