#include <random>

#include "doctest.h"
#include "qdv/gf/linalg.hpp"

using namespace qdv::gf;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, unsigned p, std::size_t r, std::size_t c, unsigned sparsity = 0) {
  FpMatrix m(p, r, c);
  std::uniform_int_distribution<unsigned> d(0, p - 1), s(0, sparsity);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (s(rng) == 0) m(i, j) = static_cast<Residue>(d(rng));
  return m;
}

// Degree of the minimal polynomial as the first k with a^k in span{I, ..., a^(k-1)},
// computed on flattened powers.
std::size_t power_span_degree(const FpMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<FpVector> flat;
  FpMatrix pw = FpMatrix::identity(a.p(), n);
  for (std::size_t k = 0; k <= n; ++k) {
    flat.push_back(pw.data());
    if (rank(FpMatrix::from_rows(a.p(), flat, n * n)) < flat.size()) return k;
    pw = pw * a;
  }
  return n + 1;
}

}  // namespace

TEST_CASE("rref examples") {
  auto id = FpMatrix::identity(5, 3);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.rank == 3);

  FpMatrix z(7, 2, 4);
  auto rz = rref(z);
  CHECK(rz.rank == 0);
  CHECK(rz.reduced.is_zero());

  auto ones = FpMatrix::from_rows(2, {{1, 1}, {1, 1}});
  auto ro = rref(ones);
  CHECK(ro.reduced == FpMatrix::from_rows(2, {{1, 1}, {0, 0}}));
  CHECK(ro.rank == 1);
  CHECK(ro.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("solve examples") {
  auto id = FpMatrix::identity(3, 3);
  FpVector b{2, 0, 1};
  CHECK(solve(id, b) == b);

  FpMatrix zero(3, 1, 1);
  CHECK_FALSE(solve(zero, FpVector{1}).has_value());

  auto a = FpMatrix::from_rows(3, {{1, 1}, {0, 1}});
  auto x = solve(a, FpVector{2, 1});
  REQUIRE(x.has_value());
  CHECK(*x == FpVector{1, 1});
  CHECK(a * *x == FpVector{2, 1});

  CHECK_THROWS_AS(solve(a, FpVector{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(FpMatrix::identity(5, 4)).dim() == 0);
  CHECK(nullspace(FpMatrix(3, 4, 4)).dim() == 4);
  auto ns = nullspace(FpMatrix::from_rows(2, {{1, 1}}));
  REQUIRE(ns.dim() == 1);
  CHECK(ns.basis_vector(0) == FpVector{1, 1});
}

TEST_CASE("min_poly examples") {
  CHECK(min_poly(FpMatrix(3, 3, 3)) == FpPoly::monomial(3, 1));
  CHECK(min_poly(FpMatrix::identity(5, 4)) == FpPoly(5, {-1, 1}));
  auto j = FpMatrix::from_rows(2, {{0, 1}, {0, 0}});
  CHECK(min_poly(j) == FpPoly::monomial(2, 2));
  CHECK_THROWS_AS(min_poly(FpMatrix(2, 2, 3)), DimensionMismatch);
}

TEST_CASE("nilpotent and invertible predicates") {
  auto id = FpMatrix::identity(3, 3);
  CHECK_FALSE(is_nilpotent(id));
  CHECK(is_invertible(id));
  FpMatrix z(3, 2, 2);
  CHECK(is_nilpotent(z));
  CHECK_FALSE(is_invertible(z));
  auto e = FpMatrix::from_rows(3, {{1, 0}, {0, 0}});
  CHECK_FALSE(is_nilpotent(e));
  CHECK_FALSE(is_invertible(e));
  CHECK_THROWS_AS(is_invertible(FpMatrix(3, 1, 2)), DimensionMismatch);
}

TEST_CASE("random properties over GF(2) and GF(3)") {
  std::mt19937_64 rng(20261016);
  for (unsigned p : {2u, 3u}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 9);
      const std::size_t r = dim(rng), c = dim(rng);
      FpMatrix a = random_matrix(rng, p, r, c, trial % 3);
      auto rr = rref(a);
      CHECK(rref(rr.reduced).reduced == rr.reduced);
      CHECK(FpSubspace::span(a) == FpSubspace::span(rr.reduced));
      auto ns = nullspace(a);
      CHECK(rr.rank + ns.dim() == c);
      for (std::size_t i = 0; i < ns.dim(); ++i) {
        auto v = a * ns.basis_vector(i);
        CHECK(std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; }));
      }

      FpVector b(r);
      std::uniform_int_distribution<unsigned> d(0, p - 1);
      for (auto& x : b) x = static_cast<Residue>(d(rng));
      auto x = solve(a, b);
      if (x) {
        CHECK(a * *x == b);
      } else {
        FpMatrix aug(p, r, c + 1);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < c; ++j) aug(i, j) = a(i, j);
          aug(i, c) = b[i];
        }
        CHECK(rank(aug) > rank(a));
      }
    }
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 7);
      const std::size_t n = dim(rng);
      FpMatrix a = random_matrix(rng, p, n, n, trial % 4);
      FpPoly q = min_poly(a);
      CHECK(q.is_monic());
      CHECK(q.degree() <= static_cast<int>(n));
      CHECK(q.evaluate(a).is_zero());
      CHECK(static_cast<std::size_t>(q.degree()) == power_span_degree(a));
      CHECK(is_invertible(a) == (rank(a) == n));
      CHECK(is_nilpotent(a) == a.power(n).is_zero());
    }
  }
}

TEST_CASE("packed GF(2) elimination agrees with generic arithmetic") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    FpMatrix a = random_matrix(rng, 2, 70, 130);
    FpMatrix b = random_matrix(rng, 2, 130, 65);
    // Multiply through GF(3)-free integer arithmetic reduced mod 2.
    FpMatrix expect(2, 70, 65);
    for (std::size_t i = 0; i < 70; ++i)
      for (std::size_t j = 0; j < 65; ++j) {
        unsigned s = 0;
        for (std::size_t k = 0; k < 130; ++k) s += a(i, k) * b(k, j);
        expect(i, j) = static_cast<Residue>(s % 2);
      }
    CHECK(a * b == expect);
    auto r = rref(a);
    CHECK(r.rank == FpSubspace::span(a).dim());
    for (std::size_t i = 0; i < r.rank; ++i) {
      CHECK(r.reduced(i, r.pivots[i]) == 1);
      for (std::size_t k = 0; k < 70; ++k)
        if (k != i) CHECK(r.reduced(k, r.pivots[i]) == 0);
    }
  }
}

TEST_CASE("subspace intersection and sums") {
  auto u = FpSubspace::span(FpMatrix::from_rows(3, {{1, 0, 0}, {0, 1, 0}}));
  auto w = FpSubspace::span(FpMatrix::from_rows(3, {{0, 1, 0}, {0, 0, 1}}));
  auto i = u.intersect(w);
  REQUIRE(i.dim() == 1);
  CHECK(i.contains(FpVector{0, 1, 0}));
  CHECK((u + w).dim() == 3);
  CHECK(u.coordinates(FpVector{2, 1, 0}) == FpVector{2, 1});
}

TEST_CASE("polynomial arithmetic") {
  FpPoly a(3, {1, 0, 1});  // x^2 + 1, irreducible mod 3
  CHECK(is_irreducible(a));
  FpPoly b(5, {1, 0, 1});  // x^2 + 1 = (x-2)(x-3) mod 5
  CHECK_FALSE(is_irreducible(b));
  CHECK(is_irreducible(FpPoly(2, {1, 1, 1})));
  CHECK_FALSE(is_irreducible(FpPoly(2, {1, 0, 1})));
  auto eg = extended_gcd(FpPoly(5, {-2, 1}), FpPoly(5, {-3, 1}));
  CHECK(eg.g == FpPoly::constant(5, 1));
  CHECK(eg.s * FpPoly(5, {-2, 1}) + eg.t * FpPoly(5, {-3, 1}) == eg.g);
}

TEST_CASE("fitting decomposition of a split endomorphism") {
  auto a = FpMatrix::from_rows(3, {{1, 0, 0}, {0, 0, 1}, {0, 0, 0}});
  auto fd = fitting_decomposition(a);
  CHECK(fd.image.dim() == 1);
  CHECK(fd.kernel.dim() == 2);
  CHECK(fd.projection_to_image * fd.projection_to_image == fd.projection_to_image);
  CHECK(fd.projection_to_image * a == a * fd.projection_to_image);
}

TEST_CASE("scalar type") {
  FpScalar a(4, 5), b(3, 5);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 2);
  CHECK((a * a.inverse()).value() == 1);
  CHECK_THROWS(FpScalar(1, 4));
  CHECK_THROWS(a + FpScalar(1, 3));
}
