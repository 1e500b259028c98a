#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "quiver/canonical.hpp"

namespace quiv::ff {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct Mat {
  int rows = 0, cols = 0;
  std::vector<u32> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  u32 &at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  u32 at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  bool operator==(const Mat &) const = default;
};

inline Mat identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

inline Mat matmul(const Mat &x, const Mat &y, u32 p) {
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      u64 v = x.at(i, k);
      if (!v)
        continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = static_cast<u32>((z.at(i, j) + v * y.at(k, j)) % p);
    }
  return z;
}

inline u32 inv_mod(u32 a, u32 p) {
  u64 r = 1, b = a % p;
  for (u32 e = p - 2; e; e >>= 1) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
  }
  return static_cast<u32>(r);
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(Mat &m, u32 p) {
  std::vector<int> piv;
  int row = 0;
  for (int c = 0; c < m.cols && row < m.rows; ++c) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, c)) {
        sel = r;
        break;
      }
    if (sel < 0)
      continue;
    for (int j = 0; j < m.cols; ++j)
      std::swap(m.at(sel, j), m.at(row, j));
    u64 inv = inv_mod(m.at(row, c), p);
    for (int j = 0; j < m.cols; ++j)
      m.at(row, j) = static_cast<u32>(m.at(row, j) * inv % p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || !m.at(r, c))
        continue;
      u64 f = m.at(r, c);
      for (int j = 0; j < m.cols; ++j)
        m.at(r, j) = static_cast<u32>((m.at(r, j) + (p - f) * m.at(row, j)) % p);
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

inline int rank(Mat m, u32 p) { return static_cast<int>(rref(m, p).size()); }

// Columns of the result span the null space of m.
inline Mat nullspace(Mat m, u32 p) {
  auto piv = rref(m, p);
  std::vector<char> is_piv(m.cols, 0);
  for (int c : piv)
    is_piv[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_piv[c])
      free_cols.push_back(c);
  Mat basis(m.cols, static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis.at(f, static_cast<int>(k)) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
      basis.at(piv[r], static_cast<int>(k)) = (p - m.at(static_cast<int>(r), f)) % p;
  }
  return basis;
}

// Columns spanning the column space of m (a subset of the columns of m).
inline Mat colspace(const Mat &m, u32 p) {
  Mat t = m;
  auto piv = rref(t, p);
  Mat out(m.rows, static_cast<int>(piv.size()));
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (int r = 0; r < m.rows; ++r)
      out.at(r, static_cast<int>(k)) = m.at(r, piv[k]);
  return out;
}

// Solves u * x = rhs for x, u of full column rank and rhs in its column space.
inline Mat solve_left(const Mat &u, const Mat &rhs, u32 p) {
  Mat aug(u.rows, u.cols + rhs.cols);
  for (int r = 0; r < u.rows; ++r) {
    for (int c = 0; c < u.cols; ++c)
      aug.at(r, c) = u.at(r, c);
    for (int c = 0; c < rhs.cols; ++c)
      aug.at(r, u.cols + c) = rhs.at(r, c);
  }
  rref(aug, p);
  Mat x(u.cols, rhs.cols);
  for (int r = 0; r < u.cols; ++r)
    for (int c = 0; c < rhs.cols; ++c)
      x.at(r, c) = aug.at(r, u.cols + c);
  return x;
}

// One matrix per arrow; the arrow i -> j carries a dim_j x dim_i matrix.
struct FiniteFieldRep {
  u32 p = 2;
  Quiver q;
  Vec dim;
  std::vector<Mat> maps;
};

inline void require_prime(i64 p) {
  if (!is_prime(p) || p > 65521)
    throw Error(Errc::FieldNotPrime, std::to_string(p) + " is not a supported prime");
}

inline void validate(const FiniteFieldRep &m) {
  require_prime(m.p);
  check_size(m.q, m.dim);
  if (m.maps.size() != m.q.arrows().size())
    throw Error(Errc::ShapeMismatch, "one matrix per arrow is required");
  for (std::size_t k = 0; k < m.maps.size(); ++k) {
    const auto &ar = m.q.arrows()[k];
    const auto &x = m.maps[k];
    if (x.rows != m.dim[ar.target] || x.cols != m.dim[ar.source])
      throw Error(Errc::ShapeMismatch, "matrix " + std::to_string(k + 1) + " has the wrong shape");
    for (u32 v : x.a)
      if (v >= m.p)
        throw Error(Errc::ShapeMismatch, "matrix entry not reduced mod p");
  }
}

inline i64 space_exponent(const Quiver &q, const Vec &a) {
  i64 e = 0;
  for (const auto &ar : q.arrows())
    e = add(e, mul(a[ar.source], a[ar.target]));
  return e;
}

// A tuple (f_i) of square blocks; also used for homomorphisms between reps.
using Morphism = std::vector<Mat>;

// Basis of Hom(M, N): all (f_i : M_i -> N_i) with N_a f_i = f_j M_a.
inline std::vector<Morphism> hom_basis(const FiniteFieldRep &m, const FiniteFieldRep &n) {
  u32 p = m.p;
  int verts = m.q.vertex_count();
  std::vector<int> offset(verts + 1, 0);
  for (int i = 0; i < verts; ++i)
    offset[i + 1] = offset[i] + static_cast<int>(n.dim[i] * m.dim[i]);
  int unknowns = offset[verts];
  int eqs = 0;
  for (const auto &ar : m.q.arrows())
    eqs += static_cast<int>(n.dim[ar.target] * m.dim[ar.source]);
  Mat sys(eqs, unknowns);
  int row = 0;
  for (std::size_t k = 0; k < m.q.arrows().size(); ++k) {
    int i = m.q.arrows()[k].source, j = m.q.arrows()[k].target;
    const Mat &A = m.maps[k];
    const Mat &B = n.maps[k];
    int ni = static_cast<int>(n.dim[i]), mi = static_cast<int>(m.dim[i]);
    int nj = static_cast<int>(n.dim[j]), mj = static_cast<int>(m.dim[j]);
    for (int r = 0; r < nj; ++r)
      for (int c = 0; c < mi; ++c, ++row) {
        // (B f_i)[r][c] = sum_t B[r][t] f_i[t][c]
        for (int t = 0; t < ni; ++t)
          sys.at(row, offset[i] + t * mi + c) =
              static_cast<u32>((sys.at(row, offset[i] + t * mi + c) + B.at(r, t)) % p);
        // -(f_j A)[r][c] = -sum_t f_j[r][t] A[t][c]
        for (int t = 0; t < mj; ++t)
          sys.at(row, offset[j] + r * mj + t) =
              static_cast<u32>((sys.at(row, offset[j] + r * mj + t) + p - A.at(t, c)) % p);
      }
  }
  Mat ns = nullspace(sys, p);
  std::vector<Morphism> out;
  for (int k = 0; k < ns.cols; ++k) {
    Morphism f(verts);
    for (int i = 0; i < verts; ++i) {
      int ni = static_cast<int>(n.dim[i]), mi = static_cast<int>(m.dim[i]);
      f[i] = Mat(ni, mi);
      for (int r = 0; r < ni; ++r)
        for (int c = 0; c < mi; ++c)
          f[i].at(r, c) = ns.at(offset[i] + r * mi + c, k);
    }
    out.push_back(std::move(f));
  }
  return out;
}

struct EndStats {
  int end_dim = 0;
  bool is_brick = false;
  bool exhaustive = false;
};

inline EndStats end_dimension(const FiniteFieldRep &m) {
  validate(m);
  EndStats s;
  s.end_dim = static_cast<int>(hom_basis(m, m).size());
  s.is_brick = s.end_dim == 1;
  return s;
}

inline Morphism combine(const std::vector<Morphism> &basis, const std::vector<u32> &c, u32 p) {
  Morphism out = basis[0];
  for (auto &blk : out)
    std::fill(blk.a.begin(), blk.a.end(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!c[k])
      continue;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t e = 0; e < out[i].a.size(); ++e)
        out[i].a[e] = static_cast<u32>((out[i].a[e] + u64(c[k]) * basis[k][i].a[e]) % p);
  }
  return out;
}

inline Morphism compose(const Morphism &x, const Morphism &y, u32 p) {
  Morphism z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    z[i] = matmul(x[i], y[i], p);
  return z;
}

inline bool all_zero(const Morphism &x) {
  for (const auto &b : x)
    for (u32 v : b.a)
      if (v)
        return false;
  return true;
}

inline bool invertible(const Morphism &x, u32 p) {
  for (const auto &b : x)
    if (b.rows != b.cols || rank(b, p) != b.rows)
      return false;
  return true;
}

inline Morphism power(Morphism x, i64 e, u32 p) {
  Morphism r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    r[i] = identity(x[i].rows);
  while (e) {
    if (e & 1)
      r = compose(r, x, p);
    x = compose(x, x, p);
    e >>= 1;
  }
  return r;
}

// Sub-representation spanned per vertex by the columns of u[i].
inline FiniteFieldRep restrict_rep(const FiniteFieldRep &m, const std::vector<Mat> &u) {
  FiniteFieldRep s;
  s.p = m.p;
  s.q = m.q;
  s.dim.resize(m.dim.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    s.dim[i] = u[i].cols;
  for (std::size_t k = 0; k < m.q.arrows().size(); ++k) {
    int i = m.q.arrows()[k].source, j = m.q.arrows()[k].target;
    Mat img = matmul(m.maps[k], u[i], m.p);
    s.maps.push_back(solve_left(u[j], img, m.p));
  }
  return s;
}

inline std::vector<Mat> kernels(const Morphism &z, u32 p) {
  std::vector<Mat> out;
  for (const auto &b : z)
    out.push_back(nullspace(b, p));
  return out;
}

inline std::vector<Mat> images(const Morphism &z, u32 p) {
  std::vector<Mat> out;
  for (const auto &b : z)
    out.push_back(colspace(b, p));
  return out;
}

inline constexpr u64 kEnumerationCap = u64(1) << 20;

inline u64 checked_pow(u64 p, i64 e, u64 cap) {
  u64 r = 1;
  for (i64 k = 0; k < e; ++k) {
    if (r > cap / p)
      return cap + 1;
    r *= p;
  }
  return r;
}

// Geometric Krull-Schmidt partition of a representation over F_p.
// A Fitting split x^N is tried on random endomorphisms first; a summand with no
// split is enumerated: no nontrivial idempotent means a local endomorphism ring,
// whose residue field F_{p^k} is read off from the number of nilpotents. Such a
// summand becomes k conjugate summands over the algebraic closure.
class Splitter {
public:
  Splitter(std::mt19937_64 &rng, u64 cap = kEnumerationCap) : rng_(rng), cap_(cap) {}

  std::vector<Vec> split(const FiniteFieldRep &m) {
    std::vector<Vec> out;
    run(m, out);
    std::sort(out.begin(), out.end(), height_lex_less);
    return out;
  }

private:
  void run(const FiniteFieldRep &m, std::vector<Vec> &out) {
    if (is_zero(m.dim))
      return;
    u32 p = m.p;
    auto basis = hom_basis(m, m);
    int d = static_cast<int>(basis.size());
    i64 n = 0;
    for (i64 x : m.dim)
      n = std::max(n, x);
    if (d == 1) {
      out.push_back(m.dim);
      return;
    }
    std::uniform_int_distribution<u32> coin(0, p - 1);
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<u32> c(d);
      for (auto &v : c)
        v = coin(rng_);
      Morphism x = combine(basis, c, p);
      for (u32 lam = 0; lam < p; ++lam) {
        Morphism y = x;
        for (auto &b : y)
          for (int i = 0; i < b.rows; ++i)
            b.at(i, i) = (b.at(i, i) + p - lam) % p;
        Morphism z = power(y, n, p);
        if (all_zero(z) || invertible(z, p))
          continue;
        run(restrict_rep(m, kernels(z, p)), out);
        run(restrict_rep(m, images(z, p)), out);
        return;
      }
    }
    u64 total = checked_pow(p, d, cap_);
    if (total > cap_)
      throw Error(Errc::EndAlgebraTooLarge,
                  "endomorphism algebra of dimension " + std::to_string(d) + " over F_" +
                      std::to_string(p) + " exceeds the enumeration cap");
    std::vector<u32> c(d, 0);
    u64 nilpotent = 0;
    for (u64 idx = 0; idx < total; ++idx) {
      u64 t = idx;
      for (int k = 0; k < d; ++k) {
        c[k] = static_cast<u32>(t % p);
        t /= p;
      }
      Morphism x = combine(basis, c, p);
      Morphism x2 = compose(x, x, p);
      if (x2 == x && !all_zero(x) && !invertible(x, p)) {
        run(restrict_rep(m, images(x, p)), out);
        run(restrict_rep(m, kernels(x, p)), out);
        return;
      }
      if (all_zero(power(x, n, p)))
        ++nilpotent;
    }
    int rad = 0;
    for (u64 v = nilpotent; v > 1; v /= p)
      ++rad;
    int k = d - rad;
    for (i64 x : m.dim)
      if (x % k)
        throw Error(Errc::HypothesisViolated, "residue degree does not divide the dimension");
    Vec piece = m.dim;
    for (auto &x : piece)
      x /= k;
    for (int t = 0; t < k; ++t)
      out.push_back(piece);
  }

  std::mt19937_64 &rng_;
  u64 cap_;
};

inline FiniteFieldRep random_rep(const Quiver &q, const Vec &a, u32 p, std::mt19937_64 &rng) {
  std::uniform_int_distribution<u32> coin(0, p - 1);
  FiniteFieldRep m;
  m.p = p;
  m.q = q;
  m.dim = a;
  for (const auto &ar : q.arrows()) {
    Mat x(static_cast<int>(a[ar.target]), static_cast<int>(a[ar.source]));
    for (auto &v : x.a)
      v = coin(rng);
    m.maps.push_back(std::move(x));
  }
  return m;
}

// Representation number idx in the lexicographic enumeration of all reps.
inline FiniteFieldRep rep_from_index(const Quiver &q, const Vec &a, u32 p, u64 idx) {
  FiniteFieldRep m;
  m.p = p;
  m.q = q;
  m.dim = a;
  for (const auto &ar : q.arrows()) {
    Mat x(static_cast<int>(a[ar.target]), static_cast<int>(a[ar.source]));
    for (auto &v : x.a) {
      v = static_cast<u32>(idx % p);
      idx /= p;
    }
    m.maps.push_back(std::move(x));
  }
  return m;
}

struct BrickSearch {
  bool found = false;
  bool definitive = false; // exhaustive scan completed (meaningful when !found)
  bool exhaustive = false;
  u64 examined = 0;
  std::optional<FiniteFieldRep> witness;
  std::string note;
};

// Random sampling first (bricks are generic when they exist), then an
// exhaustive scan when the representation space is below the cap.
inline BrickSearch brick_witness(const Quiver &q, const Vec &a, i64 p, i64 budget,
                                 u64 seed = 0, u64 exhaustive_cap = kEnumerationCap) {
  require_prime(p);
  require_nonzero_nonnegative(q, a);
  BrickSearch out;
  std::mt19937_64 rng(seed);
  for (i64 t = 0; t < budget; ++t) {
    auto m = random_rep(q, a, static_cast<u32>(p), rng);
    ++out.examined;
    if (end_dimension(m).is_brick) {
      out.found = true;
      out.witness = std::move(m);
      out.note = "brick found by sampling";
      return out;
    }
  }
  u64 total = checked_pow(static_cast<u64>(p), space_exponent(q, a), exhaustive_cap);
  if (total > exhaustive_cap) {
    out.note = "sampling budget exhausted; space too large for an exhaustive scan";
    return out;
  }
  out.exhaustive = true;
  for (u64 idx = 0; idx < total; ++idx) {
    auto m = rep_from_index(q, a, static_cast<u32>(p), idx);
    ++out.examined;
    if (end_dimension(m).is_brick) {
      out.found = true;
      out.witness = std::move(m);
      out.note = "brick found by exhaustive scan";
      return out;
    }
  }
  out.definitive = true;
  out.note = "exhaustive scan found no brick over this field";
  return out;
}

using Partition = std::vector<Vec>;

struct SampledDecomposition {
  std::map<Partition, i64> frequency;
  i64 skipped = 0;
  i64 trials = 0;
  u64 seed = 0;
  Partition modal;
  i64 modal_count = 0;
};

inline SampledDecomposition sampled_generic_decomposition(const Quiver &q, const Vec &a, i64 p,
                                                          i64 trials, u64 seed = 0,
                                                          u64 cap = kEnumerationCap) {
  require_prime(p);
  require_nonzero_nonnegative(q, a);
  SampledDecomposition out;
  out.trials = trials;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  Splitter splitter(rng, cap);
  for (i64 t = 0; t < trials; ++t) {
    auto m = random_rep(q, a, static_cast<u32>(p), rng);
    try {
      out.frequency[splitter.split(m)]++;
    } catch (const Error &e) {
      if (e.code() != Errc::EndAlgebraTooLarge)
        throw;
      ++out.skipped;
    }
  }
  for (const auto &[part, cnt] : out.frequency)
    if (cnt > out.modal_count) {
      out.modal = part;
      out.modal_count = cnt;
    }
  return out;
}

inline bool isomorphic(const FiniteFieldRep &m, const FiniteFieldRep &n, u64 cap) {
  if (m.dim != n.dim)
    return false;
  auto basis = hom_basis(m, n);
  if (basis.empty())
    return is_zero(m.dim);
  u64 total = checked_pow(m.p, static_cast<i64>(basis.size()), cap);
  if (total > cap)
    throw Error(Errc::SpaceTooLarge, "intertwiner space too large to scan");
  std::vector<u32> c(basis.size());
  for (u64 idx = 1; idx < total; ++idx) {
    u64 t = idx;
    for (auto &v : c) {
      v = static_cast<u32>(t % m.p);
      t /= m.p;
    }
    if (invertible(combine(basis, c, m.p), m.p))
      return true;
  }
  return false;
}

inline constexpr u64 kIsoSpaceCap = u64(1) << 22;

inline i64 count_iso_classes(const Quiver &q, const Vec &a, i64 p) {
  require_prime(p);
  check_size(q, a);
  if (!non_negative(a))
    throw Error(Errc::NegativeEntry, "vector " + to_string(a) + " has a negative entry");
  u64 total = checked_pow(static_cast<u64>(p), space_exponent(q, a), kIsoSpaceCap);
  if (total > kIsoSpaceCap)
    throw Error(Errc::SpaceTooLarge, "representation space exceeds 2^22 points");
  // Bucketed by invariants (endomorphism dimension, ranks of the arrow maps);
  // membership in a class is always confirmed by an invertible intertwiner.
  std::map<std::vector<int>, std::vector<FiniteFieldRep>> classes;
  i64 count = 0;
  for (u64 idx = 0; idx < total; ++idx) {
    auto m = rep_from_index(q, a, static_cast<u32>(p), idx);
    std::vector<int> key{end_dimension(m).end_dim};
    for (const auto &x : m.maps)
      key.push_back(rank(x, static_cast<u32>(p)));
    auto &bucket = classes[key];
    bool seen = false;
    for (const auto &rep : bucket)
      if (isomorphic(rep, m, kEnumerationCap)) {
        seen = true;
        break;
      }
    if (!seen) {
      bucket.push_back(std::move(m));
      ++count;
    }
  }
  return count;
}

} // namespace quiv::ff
