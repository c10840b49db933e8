#include <doctest.h>

#include <random>

#include "bwcoh/linalg.hpp"
#include "bwcoh/scalar.hpp"

using namespace bwcoh;

TEST_CASE("field descriptors") {
  CHECK(Field::parse("q").is_rational());
  CHECK(Field::parse("rationals").is_rational());
  CHECK(Field::parse("p:101").prime() == 101);
  CHECK(Field::parse("prime 7").prime() == 7);
  CHECK(Field::parse("p:101").describe() == "p:101");
  CHECK_THROWS_AS(Field::parse("p:100"), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("reals"), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime_field(1), std::invalid_argument);
}

TEST_CASE("scalar arithmetic") {
  const Field q = Field::rationals();
  CHECK(q.parse_scalar("2/4") == q.parse_scalar("1/2"));
  CHECK((q.parse_scalar("1/2") + q.parse_scalar("1/3")).str() == "5/6");
  CHECK(q.parse_scalar("-3/6").str() == "-1/2");
  CHECK_THROWS_AS(q.parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(q.parse_scalar("x"), std::invalid_argument);

  const Field f = Field::prime_field(101);
  CHECK(f.from_int(-1).str() == "100");
  CHECK((f.from_int(7) * f.from_int(7).inverse()).is_one());
  CHECK(f.parse_scalar("1/2") * f.from_int(2) == f.one());
  CHECK_THROWS_AS(f.zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(f.one() + q.one(), std::domain_error);
  CHECK_THROWS_AS(f.one() * Field::prime_field(7).one(), std::domain_error);
  CHECK_FALSE(f.one() == q.one());
}

TEST_CASE("column_echelon examples") {
  const Field q = Field::rationals();
  auto zero = column_echelon(DenseMatrix(q, 3, 2));
  CHECK(zero.rank == 0);
  CHECK(zero.pivot_rows.empty());

  auto id = column_echelon(DenseMatrix::identity(q, 3));
  CHECK(id.rank == 3);
  CHECK(id.pivot_rows == std::vector<std::size_t>{0, 1, 2});

  auto dep = column_echelon(DenseMatrix::from_rows(q, {{1, 2}, {1, 2}}));
  CHECK(dep.rank == 1);
  CHECK(dep.pivot_rows == std::vector<std::size_t>{0});
}

TEST_CASE("quotient_basis examples") {
  const Field q = Field::rationals();
  auto full = quotient_basis(3, DenseMatrix::identity(q, 3));
  CHECK(full.dim == 0);
  CHECK(full.representative_rows.empty());

  auto one = quotient_basis(3, DenseMatrix::from_rows(q, {{1}, {0}, {0}}));
  CHECK(one.dim == 2);
  CHECK(one.representative_rows == std::vector<std::size_t>{1, 2});

  auto none = quotient_basis(2, DenseMatrix(q, 2, 0));
  CHECK(none.dim == 2);
  CHECK(none.representative_rows == std::vector<std::size_t>{0, 1});

  CHECK_THROWS_AS(quotient_basis(4, DenseMatrix::identity(q, 3)), std::invalid_argument);
}

namespace {

DenseMatrix random_matrix(std::mt19937_64& rng, const Field& field) {
  const std::size_t rows = rng() % 13;
  const std::size_t cols = rng() % 13;
  // Low-rank products make dependent columns common.
  const std::size_t inner = rng() % 13;
  DenseMatrix a(field, rows, inner);
  DenseMatrix b(field, inner, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) a(i, k) = field.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
  for (std::size_t k = 0; k < inner; ++k)
    for (std::size_t j = 0; j < cols; ++j) b(k, j) = field.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
  return a * b;
}

}  // namespace

TEST_CASE("echelon properties on random matrices") {
  std::mt19937_64 rng(42);
  for (const Field field : {Field::rationals(), Field::prime_field(101)}) {
    for (int trial = 0; trial < 150; ++trial) {
      const DenseMatrix m = random_matrix(rng, field);
      const auto e = column_echelon(m);
      CAPTURE(trial);
      CHECK(e.rank == rank(m.transpose()));
      CHECK(same_column_span(m, e.echelon));
      CHECK(e.pivot_rows.size() == e.rank);
      for (std::size_t j = 0; j < e.rank; ++j) {
        if (j > 0) CHECK(e.pivot_rows[j] > e.pivot_rows[j - 1]);
        for (std::size_t c = 0; c < m.cols(); ++c)
          CHECK(e.echelon(e.pivot_rows[j], c) == (c == j ? field.one() : field.zero()));
      }
      for (std::size_t c = e.rank; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) CHECK(e.echelon(r, c).is_zero());

      // Pivot coordinates plus representatives span the ambient space.
      const auto qb = quotient_basis(m.rows(), m);
      DenseMatrix completed = m;
      for (auto row : qb.representative_rows) {
        std::vector<Scalar> unit(m.rows(), field.zero());
        unit[row] = field.one();
        completed.append_column(unit);
      }
      CHECK(rank(completed) == m.rows());
    }
  }
}

TEST_CASE("matrix arithmetic") {
  const Field q = Field::rationals();
  auto a = DenseMatrix::from_rows(q, {{1, 2}, {3, 4}});
  auto b = DenseMatrix::from_rows(q, {{0, 1}, {1, 0}});
  CHECK(a * b == DenseMatrix::from_rows(q, {{2, 1}, {4, 3}}));
  CHECK(a - a == DenseMatrix(q, 2, 2));
  CHECK(hconcat(a, b).cols() == 4);
  CHECK_THROWS_AS(a * DenseMatrix(q, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(DenseMatrix::from_rows(q, {{1, 2}, {3}}), std::invalid_argument);
}
