#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/matrix.hpp"

using namespace artin;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

ExactMatrix make(int rows, int cols, const FieldDescriptor& f, std::vector<long> entries) {
  ExactMatrix m(rows, cols, f);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Scalar::of_integer(entries[r * cols + c], f);
  return m;
}

ExactMatrix random_integer_matrix(int rows, int cols, const FieldDescriptor& f,
                                  std::mt19937_64& eng, long lo, long hi) {
  ExactMatrix m(rows, cols, f);
  std::uniform_int_distribution<long> dist(lo, hi);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Scalar::of_integer(dist(eng), f);
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q stays canonical") {
  const Scalar a = Scalar::of_rational(2, 4);
  CHECK(a.raw().get_num() == 1);
  CHECK(a.raw().get_den() == 2);
  const Scalar b = Scalar::of_rational(-1, 3);
  CHECK((a + b).raw() == mpq_class(1, 6));
  CHECK((a * b).raw() == mpq_class(-1, 6));
  CHECK((a / b).raw() == mpq_class(-3, 2));
  CHECK((-b).raw() == mpq_class(1, 3));
  CHECK(Scalar::of_integer(0, Q).is_zero());
}

TEST_CASE("scalar arithmetic over GF(p)") {
  const FieldDescriptor f7 = FieldDescriptor::prime_field(7);
  const Scalar five = Scalar::of_integer(5, f7);
  const Scalar three = Scalar::of_integer(3, f7);
  CHECK((five + three) == Scalar::of_integer(1, f7));
  CHECK((five * three) == Scalar::of_integer(1, f7));
  CHECK(five.inverse() == three);
  CHECK(Scalar::of_integer(-1, f7) == Scalar::of_integer(6, f7));
  CHECK_THROWS_AS(FieldDescriptor::prime_field(6), InputError);
  CHECK_THROWS_AS(Scalar::of_integer(1, f7) + Scalar::of_integer(1, Q), MathError);
  // rational zero is accepted everywhere
  CHECK((Scalar() + five) == five);
}

TEST_CASE("binomial coefficients per field") {
  CHECK(binomial_scalar(4, 2, Q) == Scalar::of_integer(6, Q));
  const FieldDescriptor f2 = FieldDescriptor::prime_field(2);
  CHECK(binomial_scalar(2, 1, f2).is_zero());
  const FieldDescriptor f3 = FieldDescriptor::prime_field(3);
  CHECK(binomial_scalar(3, 1, f3).is_zero());
  CHECK(binomial_scalar(4, 2, f3).is_zero());  // 6 mod 3
  CHECK(binomial_scalar(4, 1, f3) == Scalar::of_integer(1, f3));
}

TEST_CASE("row_reduce identity and zero") {
  const ExactMatrix id = ExactMatrix::identity(2, Q);
  const RowEchelon r = row_reduce(id);
  CHECK(r.rank == 2);
  CHECK(r.pivot_columns == std::vector<int>{0, 1});
  const ExactMatrix z(3, 4, Q);
  const RowEchelon rz = row_reduce(z);
  CHECK(rz.rank == 0);
  CHECK(rz.pivot_columns.empty());
}

TEST_CASE("row_reduce rank-1 example") {
  const ExactMatrix m = make(2, 2, Q, {1, 2, 2, 4});
  const RowEchelon r = row_reduce(m);
  CHECK(r.rank == 1);
  CHECK(r.echelon == make(2, 2, Q, {1, 2, 0, 0}));
}

TEST_CASE("empty matrices are fine") {
  const ExactMatrix e(0, 0, Q);
  CHECK(row_reduce(e).rank == 0);
  CHECK(kernel_basis(ExactMatrix(0, 3, Q)).rows() == 3);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(ExactMatrix::identity(3, Q)).rows() == 0);
  const ExactMatrix z(2, 3, Q);
  const ExactMatrix k = kernel_basis(z);
  CHECK(k == ExactMatrix::identity(3, Q));

  const FieldDescriptor f2 = FieldDescriptor::prime_field(2);
  const ExactMatrix m = make(1, 2, f2, {1, 1});
  const ExactMatrix kk = kernel_basis(m);
  REQUIRE(kk.rows() == 1);
  CHECK(kk.at(0, 0) == Scalar::of_integer(1, f2));
  CHECK(kk.at(0, 1) == Scalar::of_integer(1, f2));
  // exhaustive oracle over GF(2)^2
  int solutions = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      std::vector<Scalar> v{Scalar::of_integer(x, f2), Scalar::of_integer(y, f2)};
      const auto img = m.apply(v);
      if (img[0].is_zero()) ++solutions;
    }
  CHECK(solutions == 2);  // dim-1 kernel
}

TEST_CASE("solve canonical examples") {
  const ExactMatrix id = ExactMatrix::identity(3, Q);
  std::vector<Scalar> b{Scalar::of_integer(4, Q), Scalar::of_integer(-1, Q),
                        Scalar::of_integer(7, Q)};
  CHECK(solve(id, b) == b);

  const ExactMatrix m = make(2, 2, Q, {1, 2, 2, 4});
  std::vector<Scalar> bad{Scalar::of_integer(1, Q), Scalar::of_integer(3, Q)};
  CHECK(!solve(m, bad).has_value());
  std::vector<Scalar> good{Scalar::of_integer(1, Q), Scalar::of_integer(2, Q)};
  const auto x = solve(m, good);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar::of_integer(1, Q));
  CHECK((*x)[1].is_zero());
}

TEST_CASE("row_reduce is idempotent and rank+kernel=cols on random matrices") {
  std::mt19937_64 eng(12);
  for (int trial = 0; trial < 8; ++trial) {
    const ExactMatrix m = random_integer_matrix(5, 7, Q, eng, -6, 6);
    const RowEchelon r = row_reduce(m);
    const RowEchelon r2 = row_reduce(r.echelon);
    CHECK(r2.echelon == r.echelon);
    CHECK(r2.rank == r.rank);
    const ExactMatrix k = kernel_basis(m);
    CHECK(r.rank + k.rows() == m.cols());
    for (int row = 0; row < k.rows(); ++row) {
      const auto img = m.apply(k.row(row));
      for (const auto& s : img) CHECK(s.is_zero());
    }
  }
}

TEST_CASE("solve returns a solution whenever one exists") {
  std::mt19937_64 eng(99);
  for (int trial = 0; trial < 8; ++trial) {
    const ExactMatrix m = random_integer_matrix(6, 4, Q, eng, -5, 5);
    std::vector<Scalar> x;
    std::uniform_int_distribution<long> dist(-4, 4);
    for (int c = 0; c < 4; ++c) x.push_back(Scalar::of_integer(dist(eng), Q));
    const auto b = m.apply(x);
    const auto y = solve(m, b);
    REQUIRE(y.has_value());
    CHECK(m.apply(*y) == b);
  }
}

TEST_CASE("rank over Q matches rank over a large prime field") {
  // arbitrary precision cross-check: pivots of a random 20x20 integer
  // matrix never overflow, and ranks agree with GF(q) for q = 2^31 - 1
  std::mt19937_64 eng(2024);
  const FieldDescriptor fq = FieldDescriptor::prime_field(2147483647L);
  ExactMatrix mq(20, 20, Q), mp(20, 20, fq);
  std::uniform_int_distribution<long> dist(-10, 10);
  for (int r = 0; r < 20; ++r)
    for (int c = 0; c < 20; ++c) {
      const long v = dist(eng);
      mq.at(r, c) = Scalar::of_integer(v, Q);
      mp.at(r, c) = Scalar::of_integer(v, fq);
    }
  CHECK(rank_of(mq) == rank_of(mp));
}

TEST_CASE("inverse and RowSpace") {
  const ExactMatrix m = make(2, 2, Q, {2, 1, 1, 1});
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m.multiply(*inv) == ExactMatrix::identity(2, Q));
  CHECK(!inverse(make(2, 2, Q, {1, 2, 2, 4})).has_value());

  RowSpace space(3, Q);
  CHECK(space.insert({Scalar::of_integer(1, Q), Scalar::of_integer(2, Q),
                      Scalar::of_integer(0, Q)}));
  CHECK(space.insert({Scalar::of_integer(0, Q), Scalar::of_integer(1, Q),
                      Scalar::of_integer(1, Q)}));
  CHECK(!space.insert({Scalar::of_integer(1, Q), Scalar::of_integer(3, Q),
                       Scalar::of_integer(1, Q)}));
  CHECK(space.dim() == 2);
  CHECK(space.contains(std::vector<Scalar>{Scalar::of_integer(2, Q), Scalar::of_integer(5, Q),
                                           Scalar::of_integer(1, Q)}));
}
