#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <cellalg/matrix.hpp>
#include <cellalg/prime_field.hpp>
#include <cellalg/rational.hpp>
#include <cellalg/subspace.hpp>

using namespace cellalg;

namespace {

template <class K>
Matrix<K> make(const std::vector<std::vector<long>>& rows, const K& zero) {
  Matrix<K> m(rows.size(), rows.empty() ? 0 : rows[0].size(), zero);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(i, j) = zero.from_int(rows[i][j]);
  return m;
}

template <class K>
Matrix<K> random_matrix(std::size_t r, std::size_t c, const K& zero,
                        std::mt19937_64& rng) {
  Matrix<K> m(r, c, zero);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = zero.from_int(static_cast<long>(rng() % 11) - 5);
  return m;
}

}  // namespace

TEST_CASE("rref on the stated examples") {
  const Rational q;
  SECTION("identity is its own rref") {
    const auto id = Matrix<Rational>::identity(3, q);
    const auto rr = rref(id);
    CHECK(rr.m == id);
    CHECK(rr.rank == 3);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});
  }
  SECTION("proportional rows collapse") {
    const auto rr = rref(make<Rational>({{1, 2}, {2, 4}}, q));
    CHECK(rr.rank == 1);
    CHECK(rr.m == make<Rational>({{1, 2}, {0, 0}}, q));
  }
  SECTION("2x2 elimination over GF(3)") {
    const Fp z = Fp::zero_of(3);
    const auto rr = rref(make<Fp>({{1, 1}, {1, 2}}, z));
    CHECK(rr.rank == 2);
    CHECK(rr.m == Matrix<Fp>::identity(2, z));
  }
}

TEST_CASE("kernel on the stated examples") {
  const Rational q;
  CHECK(kernel(Matrix<Rational>::identity(3, q)).dim() == 0);
  CHECK(kernel(Matrix<Rational>(2, 2, q)).dim() == 2);

  const auto m = make<Rational>({{1, 2}, {2, 4}}, q);
  const auto ker = kernel(m);
  REQUIRE(ker.dim() == 1);
  // echelonized spanning vector of span{(-2, 1)}
  CHECK(ker.rows() == make<Rational>({{1, 0}}, q).is_zero() ==
        false);  // shape sanity
  CHECK(ker.basis_vector(0)[0] == Rational(1));
  CHECK(ker.basis_vector(0)[1] == Rational(-1, 2));
  Vec<Rational> v = {Rational(-2), Rational(1)};
  CHECK(ker.contains(v));
  // substitute back: m x = 0
  CHECK(is_zero_vec(m * ker.basis_vector(0)));
}

TEST_CASE("solve on the stated examples") {
  const Rational q;
  SECTION("identity returns b") {
    Vec<Rational> b = {Rational(3), Rational(-7)};
    const auto x = solve(Matrix<Rational>::identity(2, q), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
  }
  SECTION("inconsistent system") {
    Vec<Rational> b = {Rational(0), Rational(1)};
    CHECK_FALSE(solve(make<Rational>({{1, 1}, {1, 1}}, q), b).has_value());
  }
  SECTION("diagonal system") {
    const auto m = make<Rational>({{2, 0}, {0, 3}}, q);
    Vec<Rational> b = {Rational(1), Rational(1)};
    const auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(1, 2));
    CHECK((*x)[1] == Rational(1, 3));
    CHECK(m * *x == b);  // multiply back
  }
}

TEST_CASE("invert on the stated examples") {
  const Rational q;
  const auto id = Matrix<Rational>::identity(2, q);
  CHECK(invert(id) == id);
  const auto swap = make<Rational>({{0, 1}, {1, 0}}, q);
  CHECK(invert(swap) == swap);
  CHECK_THROWS_AS(invert(make<Rational>({{1, 2}, {2, 4}}, q)), SingularMatrix);
  CHECK_THROWS_AS(invert(Matrix<Rational>(2, 3, q)), DimensionMismatch);
}

TEST_CASE("subspace operations on the stated examples") {
  const Rational q;
  const auto a = SubspaceBasis<Rational>::from_spanning(
      make<Rational>({{1, 1}, {1, -1}}, q));
  const auto e1 = SubspaceBasis<Rational>::from_spanning(
      make<Rational>({{1, 0}}, q));
  const auto e2 = SubspaceBasis<Rational>::from_spanning(
      make<Rational>({{0, 1}}, q));

  SECTION("a subspace against itself") {
    CHECK(a == a);
    CHECK(a.sum(a) == a);
    CHECK(a.intersect(a) == a);
    CHECK(a.contains(a));
  }
  SECTION("complementary lines") {
    CHECK(e1.sum(e2) == SubspaceBasis<Rational>::full(2, q));
    CHECK(e1.intersect(e2).dim() == 0);
    CHECK_FALSE(e1.contains(e2));
  }
  SECTION("containment by rank") {
    CHECK(a.contains(e1));
    CHECK(a.contains(e2));
  }
  SECTION("ambient mismatch") {
    const auto b3 = SubspaceBasis<Rational>::zero(3, q);
    CHECK_THROWS_AS(a.sum(b3), DimensionMismatch);
  }
}

TEST_CASE("determinant") {
  const Rational q;
  CHECK(determinant(Matrix<Rational>::identity(4, q)).is_one());
  CHECK(determinant(make<Rational>({{1, 2}, {2, 4}}, q)).is_zero());
  CHECK(determinant(make<Rational>({{2, 1}, {1, 2}}, q)) == Rational(3));
  const Fp z = Fp::zero_of(7);
  CHECK(determinant(make<Fp>({{2, 1}, {1, 2}}, z)) == z.from_int(3));
}

TEMPLATE_TEST_CASE("exact linear algebra properties", "", Rational, Fp) {
  auto zero_of_type = [] {
    if constexpr (std::is_same_v<TestType, Rational>)
      return Rational();
    else
      return Fp::zero_of(5);
  };
  const TestType z = zero_of_type();
  std::mt19937_64 rng(12345);

  SECTION("rref is idempotent") {
    for (int it = 0; it < 25; ++it) {
      const auto m = random_matrix(1 + rng() % 6, 1 + rng() % 6, z, rng);
      const auto r1 = rref(m);
      CHECK(rref(r1.m).m == r1.m);
    }
  }
  SECTION("rank-nullity") {
    for (int it = 0; it < 25; ++it) {
      const auto m = random_matrix(1 + rng() % 6, 1 + rng() % 6, z, rng);
      CHECK(rank(m) + kernel(m).dim() == m.cols());
    }
  }
  SECTION("involutive inversion") {
    for (int it = 0; it < 25; ++it) {
      const auto m = random_matrix(4, 4, z, rng);
      if (rank(m) < 4) continue;
      CHECK(invert(invert(m)) == m);
      CHECK((m * invert(m)).is_identity());
    }
  }
  SECTION("dimension formula for sum and intersection") {
    for (int it = 0; it < 25; ++it) {
      const auto a = SubspaceBasis<TestType>::from_spanning(
          random_matrix(1 + rng() % 4, 5, z, rng));
      const auto b = SubspaceBasis<TestType>::from_spanning(
          random_matrix(1 + rng() % 4, 5, z, rng));
      CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
      CHECK(a.sum(b).contains(a));
      CHECK(a.contains(a.intersect(b)));
    }
  }
  SECTION("rref independent of row order") {
    for (int it = 0; it < 25; ++it) {
      const std::size_t r = 2 + rng() % 5;
      const auto m = random_matrix(r, 1 + rng() % 6, z, rng);
      auto p = m;
      for (std::size_t i = r; i > 1; --i) p.swap_rows(i - 1, rng() % i);
      CHECK(rref(m).m == rref(p).m);
    }
  }
  SECTION("determinant is multiplicative") {
    for (int it = 0; it < 25; ++it) {
      const auto a = random_matrix(3, 3, z, rng);
      const auto b = random_matrix(3, 3, z, rng);
      CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
  }
}
