#pragma once

#include <string>
#include <vector>

#include "quiver/core.hpp"
#include "quiver/rational.hpp"

namespace quiv {

enum class RepKind { Finite = 0, Tame = 1, Wild = 2 };

inline const char *rep_kind_name(RepKind k) {
  switch (k) {
  case RepKind::Finite: return "Finite";
  case RepKind::Tame: return "Tame";
  case RepKind::Wild: return "Wild";
  }
  return "?";
}

struct ComponentType {
  std::vector<int> vertices;
  RepKind verdict;
};

struct RepType {
  RepKind verdict;
  std::vector<ComponentType> components;
};

// Matrix of the symmetrized form on basis vectors, C_ij = (e_i, e_j).
inline std::vector<std::vector<i64>> symmetric_gram(const Quiver &q) {
  int n = q.vertex_count();
  std::vector<std::vector<i64>> c(n, std::vector<i64>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c[i][j] = i == j ? 2 - 2 * static_cast<i64>(q.loop_count(i))
                       : -static_cast<i64>(q.edges_between(i, j));
  return c;
}

// Leading principal minors by fraction-free (Bareiss) elimination. Stops early
// and returns the minors found so far if a zero pivot appears.
inline std::vector<i64> leading_minors(std::vector<std::vector<i64>> m) {
  int n = static_cast<int>(m.size());
  std::vector<i64> minors;
  i64 prev = 1;
  for (int k = 0; k < n; ++k) {
    minors.push_back(m[k][k]);
    if (m[k][k] == 0)
      break;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = narrow(((__int128)m[i][j] * m[k][k] - (__int128)m[i][k] * m[k][j]) / prev);
    prev = m[k][k];
  }
  return minors;
}

inline bool positive_definite(const std::vector<std::vector<i64>> &m) {
  auto minors = leading_minors(m);
  if (minors.size() != m.size())
    return false;
  for (i64 d : minors)
    if (d <= 0)
      return false;
  return true;
}

// Exact symmetric elimination: a zero pivot must have a zero row, a negative
// pivot rules out semidefiniteness.
inline bool positive_semidefinite(const std::vector<std::vector<i64>> &m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[i][j] = Rational(m[i][j]);
  for (int k = 0; k < n; ++k) {
    int s = a[k][k].sign();
    if (s < 0)
      return false;
    if (s == 0) {
      for (int j = k + 1; j < n; ++j)
        if (!a[k][j].is_zero())
          return false;
      continue;
    }
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero())
        continue;
      Rational f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j)
        a[i][j] = a[i][j] - f * a[k][j];
    }
  }
  return true;
}

inline RepKind form_kind(const Quiver &q) {
  auto c = symmetric_gram(q);
  if (positive_definite(c))
    return RepKind::Finite;
  if (positive_semidefinite(c))
    return RepKind::Tame;
  return RepKind::Wild;
}

inline RepType rep_type(const Quiver &q) {
  RepType out{RepKind::Finite, {}};
  for (auto &comp : components(q)) {
    RepKind k = form_kind(induced_subquiver(q, comp));
    if (static_cast<int>(k) > static_cast<int>(out.verdict))
      out.verdict = k;
    out.components.push_back({comp, k});
  }
  return out;
}

inline bool has_loop_everywhere(const Quiver &q) {
  for (int i = 0; i < q.vertex_count(); ++i)
    if (q.loop_count(i) == 0)
      return false;
  return true;
}

inline bool is_connected_support(const Quiver &q, const Vec &a) {
  check_size(q, a);
  if (!non_negative(a))
    throw Error(Errc::NegativeEntry, "vector " + to_string(a) + " has a negative entry");
  auto s = support(a);
  if (s.empty())
    return false;
  return components(q, s).size() == 1;
}

enum class WitnessKind { TameSub, MultiArrowPair, LoopedPair };

inline const char *witness_kind_name(WitnessKind k) {
  switch (k) {
  case WitnessKind::TameSub: return "TameSub";
  case WitnessKind::MultiArrowPair: return "MultiArrowPair";
  case WitnessKind::LoopedPair: return "LoopedPair";
  }
  return "?";
}

struct SubquiverWitness {
  WitnessKind kind;
  std::vector<int> vertices; // for LoopedPair: {looped vertex, loop-free vertex}
  std::vector<int> arrows;   // indices into Quiver::arrows()
  int r = 0;                 // arrows joining the pair
  int s = 0;                 // loops at the looped vertex
};

// True when a connected component is neither finite type nor looped at every vertex.
inline bool component_is_generic_failure_candidate(const Quiver &q, const std::vector<int> &comp) {
  Quiver sub = induced_subquiver(q, comp);
  return form_kind(sub) != RepKind::Finite && !has_loop_everywhere(sub);
}

inline std::vector<int> induced_arrow_indices(const Quiver &q, const std::vector<int> &verts) {
  std::vector<char> in(q.vertex_count(), 0);
  for (int v : verts)
    in[v] = 1;
  std::vector<int> idx;
  for (int k = 0; k < static_cast<int>(q.arrows().size()); ++k)
    if (in[q.arrows()[k].source] && in[q.arrows()[k].target])
      idx.push_back(k);
  return idx;
}

inline SubquiverWitness find_witness_subquiver(const Quiver &q) {
  std::vector<char> bad(q.vertex_count(), 0);
  bool any = false;
  for (auto &comp : components(q))
    if (component_is_generic_failure_candidate(q, comp)) {
      any = true;
      for (int v : comp)
        bad[v] = 1;
    }
  if (!any)
    throw Error(Errc::HypothesisViolated,
                "every component is of finite type or carries a loop at every vertex");
  int n = q.vertex_count();

  for (int i = 0; i < n; ++i) {
    if (!bad[i] || q.loop_count(i) < 2)
      continue;
    for (int j = 0; j < n; ++j)
      if (j != i && q.loop_count(j) == 0 && q.edges_between(i, j) > 0)
        return {WitnessKind::LoopedPair, {i, j}, induced_arrow_indices(q, {i, j}),
                q.edges_between(i, j), q.loop_count(i)};
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (bad[i] && q.loop_count(i) == 0 && q.loop_count(j) == 0 && q.edges_between(i, j) >= 3)
        return {WitnessKind::MultiArrowPair, {i, j}, induced_arrow_indices(q, {i, j}),
                q.edges_between(i, j), 0};

  std::vector<int> pool;
  for (int i = 0; i < n; ++i)
    if (bad[i])
      pool.push_back(i);
  int m = static_cast<int>(pool.size());
  for (int size = 1; size <= m; ++size) {
    std::vector<int> pick(size);
    for (int k = 0; k < size; ++k)
      pick[k] = k;
    while (true) {
      std::vector<int> verts(size);
      for (int k = 0; k < size; ++k)
        verts[k] = pool[pick[k]];
      Quiver sub = induced_subquiver(q, verts);
      if (components(sub).size() == 1 && form_kind(sub) == RepKind::Tame)
        return {WitnessKind::TameSub, verts, induced_arrow_indices(q, verts), 0, 0};
      int k = size - 1;
      while (k >= 0 && pick[k] == m - size + k)
        --k;
      if (k < 0)
        break;
      ++pick[k];
      for (int t = k + 1; t < size; ++t)
        pick[t] = pick[t - 1] + 1;
    }
  }
  throw Error(Errc::HypothesisViolated, "no witness subquiver found");
}

} // namespace quiv
