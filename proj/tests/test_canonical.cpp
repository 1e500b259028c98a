#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace quiv;
using namespace testq;

namespace {

std::vector<Vec> parts(const CanonicalDecomposition &d) { return expand(d); }

// Minimum hom dimension between independently sampled representations over
// F_p; generic hom is the minimum over a dense open set.
i64 sampled_generic_hom(const Quiver &q, const Vec &a, const Vec &b, quiv::ff::u32 p, int trials,
                        std::mt19937_64 &rng) {
  i64 best = INT64_MAX;
  for (int t = 0; t < trials; ++t) {
    auto m = ff::random_rep(q, a, p, rng);
    auto n = ff::random_rep(q, b, p, rng);
    best = std::min<i64>(best, static_cast<i64>(ff::hom_basis(m, n).size()));
  }
  return best;
}

std::vector<Quiver> test_quivers() {
  return {kronecker(2), kronecker(3), loops(1), loops(2), loop_pair(), star(4)};
}

} // namespace

TEST_CASE("generic hom and ext examples") {
  auto k2 = generic_hom_ext(kronecker(2), {1, 1}, {1, 1});
  CHECK(k2.hom == 0);
  CHECK(k2.ext == 0);
  auto z = generic_hom_ext(kronecker(3), {2, 1}, {0, 0});
  CHECK(z.hom == 0);
  CHECK(z.ext == 0);
  auto l1 = generic_hom_ext(loops(1), {1}, {1});
  CHECK(l1.hom == 0);
  CHECK(l1.ext == 0);
  CHECK_THROWS_AS(generic_hom_ext(kronecker(2), {1, -1}, {1, 1}), Error);

  // Oracle confirmation of the first and third values.
  std::mt19937_64 rng(1);
  CHECK(sampled_generic_hom(kronecker(2), {1, 1}, {1, 1}, 5, 30, rng) == 0);
  CHECK(sampled_generic_hom(loops(1), {1}, {1}, 5, 30, rng) == 0);
}

TEST_CASE("generic hom matches the finite-field minimum on small pairs") {
  std::mt19937_64 rng(7);
  for (const auto &q : {kronecker(2), kronecker(3), loops(1), loops(2), loop_pair()}) {
    GenericCalculus g(q);
    for (const auto &a : vectors_up_to(q.vertex_count(), 3))
      for (const auto &b : vectors_up_to(q.vertex_count(), 3)) {
        INFO(serialize_quiver(q) << to_string(a) << " " << to_string(b));
        auto he = g.hom_ext(a, b);
        CHECK(he.hom - he.ext == euler_form(q, a, b));
        CHECK(he.hom >= 0);
        CHECK(he.ext >= 0);
        CHECK(sampled_generic_hom(q, a, b, 11, 25, rng) == he.hom);
      }
  }
}

TEST_CASE("canonical decomposition examples") {
  for (i64 n = 1; n <= 4; ++n)
    CHECK(parts(canonical_decomposition(loops(1), {n})) == std::vector<Vec>(n, Vec{1}));
  auto k3 = canonical_decomposition(kronecker(3), {2, 2});
  REQUIRE(k3.summands.size() == 1);
  CHECK(k3.summands[0] == Summand{{2, 2}, 1});
  auto k2 = canonical_decomposition(kronecker(2), {2, 2});
  REQUIRE(k2.summands.size() == 1);
  CHECK(k2.summands[0] == Summand{{1, 1}, 2});
  CHECK(parts(canonical_decomposition(kronecker(2), {1, 3})) == std::vector<Vec>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(canonical_decomposition(kronecker(2), {0, 0}), Error);
  CHECK_THROWS_AS(canonical_decomposition(kronecker(2), {-1, 2}), Error);
}

TEST_CASE("loop-quiver decompositions agree with sampled matrices") {
  // A generic n x n matrix over F_p splits into n one-dimensional pieces
  // over the algebraic closure; the oracle reports the geometric split.
  for (i64 n = 1; n <= 4; ++n) {
    auto s = ff::sampled_generic_decomposition(loops(1), {n}, 7, 60, 0);
    CHECK(s.modal == std::vector<Vec>(n, Vec{1}));
  }
}

TEST_CASE("Schur roots") {
  for (int r = 3; r <= 5; ++r)
    for (i64 n = 1; n <= 3; ++n)
      CHECK(is_schur_root(kronecker(r), {n, n}));
  CHECK_FALSE(is_schur_root(kronecker(2), {2, 2}));
  for (const auto &q : test_quivers())
    for (int i = 0; i < q.vertex_count(); ++i)
      CHECK(is_schur_root(q, unit(q.vertex_count(), i)));
}

TEST_CASE("decomposition invariants on the test quivers") {
  for (const auto &q : test_quivers()) {
    GenericCalculus g(q);
    i64 h = q.vertex_count() > 2 ? 5 : 6;
    for (const auto &a : vectors_up_to(q.vertex_count(), h)) {
      INFO(serialize_quiver(q) << to_string(a));
      const auto &d = g.decompose(a);
      Vec sum = zeros(q.vertex_count());
      for (const auto &s : d.summands) {
        sum = sum + scale(s.multiplicity, s.root);
        CHECK(g.schur(s.root));
        auto again = g.decompose(s.root);
        REQUIRE(again.summands.size() == 1);
        CHECK(again.summands[0] == Summand{s.root, 1});
      }
      CHECK(sum == a);
      CHECK(g.orthogonal(d.summands));
      for (std::size_t k = 1; k < d.summands.size(); ++k)
        CHECK(height_lex_less(d.summands[k - 1].root, d.summands[k].root));

      auto c = classify_root(q, a);
      if (c.verdict != RootVerdict::NotRoot) {
        int imaginary = 0;
        for (const auto &s : d.summands)
          if (is_imaginary(classify_root(q, s.root).verdict))
            ++imaginary;
        CHECK(imaginary <= 1);
      }
      if (in_fundamental_region(q, a).in_region && euler_form(q, a, a) < 0)
        CHECK(g.schur(a));
    }
  }
}

TEST_CASE("recursive split agrees with exhaustive partitions") {
  for (const auto &q : test_quivers()) {
    GenericCalculus g(q);
    for (const auto &a : vectors_up_to(q.vertex_count(), q.vertex_count() > 2 ? 5 : 6)) {
      INFO(serialize_quiver(q) << to_string(a));
      auto all = g.decompose_exhaustive(a);
      REQUIRE(all.size() == 1);
      CHECK(all[0].summands == g.decompose(a).summands);
    }
  }
}

TEST_CASE("Schur families") {
  // Extended D4 star with an extra vertex joined to the centre: star with 5 arms.
  Quiver q = star(5);
  auto w = find_witness_subquiver(q);
  REQUIRE(w.kind == WitnessKind::TameSub);
  auto fam = schur_family(q, w, 2);
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].alpha == Vec{4, 2, 2, 2, 2, 1});
  CHECK(fam[1].alpha == Vec{6, 3, 3, 3, 3, 1});
  for (const auto &m : fam)
    CHECK(in_fundamental_region(q, m.alpha).in_region);
  CHECK(is_schur_root(q, fam[0].alpha));

  Quiver tail = load_quiver(data_file("d4_plus_tail"));
  auto tail_fam = schur_family(tail, find_witness_subquiver(tail), 3);
  CHECK(tail_fam[0].alpha == Vec{4, 2, 2, 2, 2, 1});
  for (const auto &m : tail_fam)
    CHECK(in_fundamental_region(tail, m.alpha).in_region);
  CHECK(is_schur_root(tail, tail_fam[0].alpha));

  auto k3 = schur_family(kronecker(3), find_witness_subquiver(kronecker(3)), 5);
  REQUIRE(k3.size() == 5);
  CHECK(k3[0].alpha == Vec{1, 1});
  CHECK(k3[0].note.find("not a prime power") != std::string::npos);
  CHECK(k3[1].alpha == Vec{2, 2});
  CHECK(k3[2].alpha == Vec{3, 3});
  CHECK(k3[3].alpha == Vec{4, 4});
  CHECK(k3[4].alpha == Vec{5, 5});

  Quiver lp = looped_pair(2, 1);
  auto lf = schur_family(lp, find_witness_subquiver(lp), 2);
  CHECK(lf[0].alpha == Vec{1, 0});
  CHECK(lf[1].alpha == Vec{2, 0});
  // The bare 2-loop quiver: the same family on its single vertex.
  SubquiverWitness bare{WitnessKind::LoopedPair, {0}, {0, 1}, 0, 2};
  auto l2 = schur_family(loops(2), bare, 2);
  CHECK(l2[0].alpha == Vec{1});
  CHECK(l2[1].alpha == Vec{2});

  CHECK_THROWS_AS(schur_family(kronecker(2), find_witness_subquiver(kronecker(2)), 1), Error);
}
