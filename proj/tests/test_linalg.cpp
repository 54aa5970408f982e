#include <doctest.h>

#include "support.hpp"

using namespace qci;
using namespace qci::testing;

namespace {

Matrix rows(const FieldDescriptor& f, const std::vector<std::vector<long long>>& entries) {
  std::vector<Vector> out;
  for (const auto& r : entries) {
    Vector row;
    for (long long x : r) row.push_back(num(f, x));
    out.push_back(row);
  }
  return Matrix::from_rows(out);
}

Matrix random_matrix(const FieldDescriptor& f, std::size_t r, std::size_t c, std::mt19937& rng,
                     int sparsity) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<int> coin(0, sparsity);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (coin(rng) == 0) m(i, j) = random_scalar(f, rng);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(Q(), 3)) == 3);
  CHECK(rank(Matrix(Q(), 2, 4)) == 0);
  CHECK(rank(rows(Q(), {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(Matrix::identity(Q(), 4)).empty());
  CHECK(nullspace(Matrix(Q(), 1, 3)).size() == 3);

  const auto basis = nullspace(rows(F(5), {{1, 1}}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == Vector{num(F(5), 4), num(F(5), 1)});
  // Oracle: every solution of x + y = 0 over F_5 is a multiple of the basis vector.
  int solutions = 0;
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      if ((x + y) % 5 != 0) continue;
      ++solutions;
      bool multiple = false;
      for (int c = 0; c < 5; ++c) multiple |= (4 * c % 5 == x && c == y);
      CHECK(multiple);
    }
  }
  CHECK(solutions == 5);
}

TEST_CASE("solve and invert examples") {
  CHECK(*invert(Matrix::identity(Q(), 3)) == Matrix::identity(Q(), 3));
  const Matrix swap = rows(Q(), {{0, 1}, {1, 0}});
  CHECK(*invert(swap) == swap);
  CHECK(*solve(rows(F(5), {{2}}), {num(F(5), 1)}) == Vector{num(F(5), 3)});
  CHECK_FALSE(invert(rows(Q(), {{1, 2}, {2, 4}})).has_value());
  CHECK_FALSE(solve(rows(Q(), {{1, 1}, {1, 1}}), {num(Q(), 1), num(Q(), 2)}).has_value());
  try {
    solve(rows(Q(), {{1, 1}}), {num(Q(), 1), num(Q(), 2)});
    FAIL("dimension mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::dimension_mismatch);
  }
  CHECK_THROWS_AS(invert(rows(Q(), {{1, 2, 3}})), Error);
  CHECK_THROWS_AS(Matrix::from_rows({}), Error);
  CHECK_THROWS_AS(Matrix::from_rows({{num(Q(), 1)}, {num(Q(), 1), num(Q(), 2)}}), Error);
}

TEST_CASE("rank-nullity and kernel membership on random matrices") {
  std::mt19937 rng(99);
  for (const FieldDescriptor& f : {Q(), QI(), F(2), F(5)}) {
    for (int k = 0; k < 60; ++k) {
      std::uniform_int_distribution<std::size_t> size(1, 7);
      const Matrix m = random_matrix(f, size(rng), size(rng), rng, k % 3);
      const auto kernel = nullspace(m);
      REQUIRE(rank(m) + kernel.size() == m.cols());
      for (const Vector& v : kernel) REQUIRE(is_zero_vector(m * v));
    }
  }
}

TEST_CASE("inverse times matrix is identity") {
  std::mt19937 rng(5);
  for (const FieldDescriptor& f : {Q(), QI(), F(7)}) {
    int inverted = 0;
    for (int k = 0; k < 80; ++k) {
      const Matrix m = random_matrix(f, 4, 4, rng, 1);
      const auto mi = invert(m);
      REQUIRE(mi.has_value() == (rank(m) == 4));
      if (mi) {
        ++inverted;
        REQUIRE((*mi * m).is_identity());
        REQUIRE((m * *mi).is_identity());
      }
    }
    CHECK(inverted > 0);
  }
}

TEST_CASE("solve returns an actual solution") {
  std::mt19937 rng(17);
  for (int k = 0; k < 100; ++k) {
    const Matrix m = random_matrix(F(11), 4, 5, rng, 1);
    Vector x;
    for (int j = 0; j < 5; ++j) x.push_back(random_scalar(F(11), rng));
    const Vector b = m * x;
    const auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    REQUIRE(m * *sol == b);
  }
}

TEST_CASE("matrix power matches repeated products") {
  std::mt19937 rng(3);
  const Matrix m = random_matrix(Q(), 3, 3, rng, 1);
  Matrix repeated = Matrix::identity(Q(), 3);
  for (int k = 0; k < 5; ++k) repeated = repeated * m;
  CHECK(matrix_power(m, 5) == repeated);
  CHECK(matrix_power(m, 0).is_identity());
}

TEST_CASE("same_span") {
  const Vector e1{num(Q(), 1), num(Q(), 0)};
  const Vector e2{num(Q(), 0), num(Q(), 1)};
  const Vector s{num(Q(), 1), num(Q(), 1)};
  CHECK(same_span(Q(), 2, {e1, e2}, {s, e1}));
  CHECK_FALSE(same_span(Q(), 2, {e1}, {s}));
  CHECK(same_span(Q(), 2, {}, {}));
}
