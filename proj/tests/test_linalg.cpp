#include <catch_amalgamated.hpp>

#include "seaweed/linalg.hpp"
#include "seaweed/rng.hpp"

using namespace seaweed;

namespace {
QMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  QMatrix M(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M[i][j] = Rat(rng.uniform(-4, 4));
  return M;
}
} // namespace

TEST_CASE("rref basics") {
  QMatrix M(2, 3);
  M[0] = {Rat(1), Rat(2), Rat(3)};
  M[1] = {Rat(2), Rat(4), Rat(6)};
  CHECK(rref(M) == 1);
  CHECK(M[0][0] == 1);

  QMatrix I(3, 3);
  for (int i = 0; i < 3; ++i) I[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  CHECK(rank_of(I) == 3);
}

TEST_CASE("kernel vectors annihilate and complement the rank") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = 1 + rng.next() % 6, c = 1 + rng.next() % 8;
    QMatrix M = random_matrix(rng, r, c);
    QMatrix copy = M;
    QMatrix K = kernel_basis(copy);
    CHECK(K.rows + rank_of(M) == c);
    for (std::size_t v = 0; v < K.rows; ++v)
      for (std::size_t i = 0; i < r; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < c; ++j) s += M[i][j] * K[v][j];
        REQUIRE(s == 0);
      }
  }
}

TEST_CASE("solve returns a particular solution or rejects") {
  QMatrix M(2, 2);
  M[0] = {Rat(1), Rat(1)};
  M[1] = {Rat(1), Rat(-1)};
  auto x = solve(M, {Rat(3), Rat(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);

  QMatrix S(2, 1);
  S[0] = {Rat(1)};
  S[1] = {Rat(1)};
  CHECK_FALSE(solve(S, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("row space insert and membership") {
  RowSpace S(3);
  CHECK(S.insert({Rat(1), Rat(1), Rat(0)}));
  CHECK(S.insert({Rat(0), Rat(1), Rat(1)}));
  CHECK_FALSE(S.insert({Rat(1), Rat(2), Rat(1)}));
  CHECK(S.dim() == 2);
  CHECK(S.contains({Rat(2), Rat(3), Rat(1)}));
  CHECK_FALSE(S.contains({Rat(1), Rat(0), Rat(0)}));
}

TEST_CASE("intersection dims agree between Zassenhaus and the rank formula") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 4 + rng.next() % 4;
    RowSpace U(n), W(n);
    for (int k = 0; k < 3; ++k) {
      QVec u(n), w(n);
      for (std::size_t j = 0; j < n; ++j) {
        u[j] = Rat(rng.uniform(-3, 3));
        w[j] = Rat(rng.uniform(-3, 3));
      }
      U.insert(std::move(u));
      W.insert(std::move(w));
    }
    RowSpace both = intersect(U, W);
    CHECK(both.dim() == intersection_dim(U, W));
    for (const auto& v : both.basis()) {
      CHECK(U.contains(v));
      CHECK(W.contains(v));
    }
  }
}
