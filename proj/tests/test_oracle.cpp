#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace quiv;
using namespace testq;
using ff::FiniteFieldRep;
using ff::Mat;
using ff::u32;

namespace {

Mat mat(int rows, int cols, std::vector<u32> entries) {
  Mat m(rows, cols);
  m.a = std::move(entries);
  return m;
}

FiniteFieldRep rep(const Quiver &q, Vec dim, u32 p, std::vector<Mat> maps) {
  FiniteFieldRep m;
  m.p = p;
  m.q = q;
  m.dim = std::move(dim);
  m.maps = std::move(maps);
  return m;
}

FiniteFieldRep direct_sum(const FiniteFieldRep &x, const FiniteFieldRep &y) {
  FiniteFieldRep s;
  s.p = x.p;
  s.q = x.q;
  s.dim = x.dim + y.dim;
  for (std::size_t k = 0; k < x.maps.size(); ++k) {
    const Mat &a = x.maps[k], &b = y.maps[k];
    Mat m(a.rows + b.rows, a.cols + b.cols);
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < a.cols; ++c)
        m.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows; ++r)
      for (int c = 0; c < b.cols; ++c)
        m.at(a.rows + r, a.cols + c) = b.at(r, c);
    s.maps.push_back(std::move(m));
  }
  return s;
}

} // namespace

TEST_CASE("endomorphism dimensions") {
  Quiver k2 = kronecker(2);
  auto one = rep(k2, {1, 1}, 2, {mat(1, 1, {1}), mat(1, 1, {1})});
  CHECK(ff::end_dimension(one).end_dim == 1);
  CHECK(ff::end_dimension(one).is_brick);
  auto id = rep(loops(1), {2}, 3, {mat(2, 2, {1, 0, 0, 1})});
  CHECK(ff::end_dimension(id).end_dim == 4);
  auto zero = rep(k2, {1, 1}, 2, {mat(1, 1, {0}), mat(1, 1, {0})});
  CHECK(ff::end_dimension(zero).end_dim == 2);
  auto bad = rep(k2, {1, 1}, 2, {mat(2, 1, {0, 0}), mat(1, 1, {0})});
  CHECK_THROWS_AS(ff::end_dimension(bad), Error);
  auto unreduced = rep(k2, {1, 1}, 2, {mat(1, 1, {3}), mat(1, 1, {0})});
  CHECK_THROWS_AS(ff::end_dimension(unreduced), Error);
}

TEST_CASE("direct sums have at least the summed endomorphisms") {
  std::mt19937_64 rng(23);
  for (const auto &q : {kronecker(2), kronecker(3), loops(1), loop_pair(), star(4)}) {
    for (int trial = 0; trial < 20; ++trial) {
      Vec a = random_vec(rng, q.vertex_count(), 0, 2), b = random_vec(rng, q.vertex_count(), 0, 2);
      auto x = ff::random_rep(q, a, 5, rng), y = ff::random_rep(q, b, 5, rng);
      auto s = direct_sum(x, y);
      CHECK(ff::end_dimension(s).end_dim >=
            (is_zero(a) ? 0 : ff::end_dimension(x).end_dim) +
                (is_zero(b) ? 0 : ff::end_dimension(y).end_dim));
    }
  }
}

TEST_CASE("bricks do not split") {
  std::mt19937_64 rng(29);
  ff::Splitter split(rng);
  for (const auto &q : {kronecker(3), loops(2), loop_pair(), star(4)}) {
    for (int trial = 0; trial < 30; ++trial) {
      Vec a = random_vec(rng, q.vertex_count(), 0, 2);
      if (is_zero(a))
        continue;
      auto m = ff::random_rep(q, a, 7, rng);
      if (ff::end_dimension(m).is_brick)
        CHECK(split.split(m) == std::vector<Vec>{a});
    }
  }
}

TEST_CASE("splitting recovers the pieces of a constructed sum") {
  std::mt19937_64 rng(31);
  ff::Splitter split(rng);
  Quiver k3 = kronecker(3);
  auto x = rep(k3, {1, 1}, 7, {mat(1, 1, {1}), mat(1, 1, {2}), mat(1, 1, {3})});
  auto y = rep(k3, {1, 0}, 7, {mat(0, 1, {}), mat(0, 1, {}), mat(0, 1, {})});
  CHECK(split.split(direct_sum(x, y)) == std::vector<Vec>{{1, 0}, {1, 1}});
  // Two copies of the same brick: the endomorphism ring is a full matrix ring.
  CHECK(split.split(direct_sum(x, x)) == std::vector<Vec>{{1, 1}, {1, 1}});
}

TEST_CASE("brick witnesses") {
  for (i64 p : {2, 3, 5}) {
    auto b = ff::brick_witness(loops(1), {2}, p, 20);
    CHECK_FALSE(b.found);
    CHECK(b.definitive);
  }
  auto k3 = ff::brick_witness(kronecker(3), {1, 1}, 2, 0);
  CHECK(k3.found);
  REQUIRE(k3.witness);
  CHECK(ff::end_dimension(*k3.witness).is_brick);
  for (i64 p : {2, 3, 5}) {
    auto b = ff::brick_witness(kronecker(2), {2, 2}, p, 50);
    CHECK_FALSE(b.found);
    CHECK(b.definitive);
  }
  CHECK_THROWS_AS(ff::brick_witness(kronecker(2), {1, 1}, 4, 10), Error);
  // Too large for the exhaustive scan with a zero sampling budget.
  auto big = ff::brick_witness(kronecker(2), {4, 4}, 7, 0);
  CHECK_FALSE(big.found);
  CHECK_FALSE(big.definitive);
}

TEST_CASE("sampled generic decompositions") {
  auto l = ff::sampled_generic_decomposition(loops(1), {2}, 7, 100, 0);
  CHECK(l.modal == std::vector<Vec>{{1}, {1}});
  CHECK(l.seed == 0);
  auto k2 = ff::sampled_generic_decomposition(kronecker(2), {2, 2}, 7, 100, 0);
  CHECK(k2.modal == std::vector<Vec>{{1, 1}, {1, 1}});
  auto k3 = ff::sampled_generic_decomposition(kronecker(3), {1, 1}, 7, 100, 0);
  CHECK(k3.modal == std::vector<Vec>{{1, 1}});
  // Same seed, same table.
  auto again = ff::sampled_generic_decomposition(kronecker(2), {2, 2}, 7, 100, 0);
  CHECK(again.frequency == k2.frequency);
  CHECK_THROWS_AS(ff::sampled_generic_decomposition(kronecker(2), {1, 1}, 9, 10, 0), Error);
}

TEST_CASE("isomorphism class counts") {
  CHECK(ff::count_iso_classes(kronecker(1), {1, 1}, 2) == 2);
  CHECK(ff::count_iso_classes(loops(1), {1}, 3) == 3);
  CHECK(ff::count_iso_classes(kronecker(2), {1, 1}, 2) == 4);
  // Closed counts: a linear map is classified by its rank; pairs of scalars by
  // a point of the projective line or zero; 2x2 matrices by their q^2 + q
  // conjugacy classes.
  for (i64 p : {2, 3, 5})
    CHECK(ff::count_iso_classes(kronecker(2), {1, 1}, p) == p + 2);
  for (i64 a = 0; a <= 2; ++a)
    for (i64 b = 0; b <= 2; ++b)
      CHECK(ff::count_iso_classes(kronecker(1), {a, b}, 3) == std::min(a, b) + 1);
  for (i64 p : {2, 3})
    CHECK(ff::count_iso_classes(loops(1), {2}, p) == p * p + p);
  CHECK_THROWS_AS(ff::count_iso_classes(kronecker(3), {3, 3}, 7), Error);
}
