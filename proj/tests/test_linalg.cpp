#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncalc/linalg.hpp"
#include "ncalc/util.hpp"

using namespace ncalc;

namespace {

const Field Q = Field::rationals();

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& f, SplitMix64& rng) {
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar(rng.small_coeff(), f);
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
  const Scalar a = Scalar::parse("2/4", Q);
  CHECK(a.str() == "1/2");
  CHECK((a + a).is_one());
  CHECK((a - a).is_zero());
  CHECK((a * Scalar(4, Q)).str() == "2");
  CHECK((Scalar(1, Q) / Scalar(3, Q)).str() == "1/3");
  CHECK_THROWS_AS(Scalar::parse("1.5", Q), input_error);
  CHECK_THROWS_AS(Scalar::parse("1/0", Q), input_error);
  CHECK_THROWS_AS(Scalar(1, Q) / Scalar(0, Q), math_error);

  const Field F7 = Field::prime(7);
  const Scalar b = Scalar::parse("1/2", F7);  // 2^{-1} = 4 mod 7
  CHECK(b.str() == "4");
  CHECK((b * Scalar(2, F7)).is_one());
  CHECK((Scalar(3, F7) + Scalar(5, F7)).str() == "1");
  CHECK(Scalar(-1, F7).str() == "6");
  CHECK_THROWS_AS(Field::prime(6), input_error);
  CHECK_THROWS_AS(Scalar::parse("1/7", F7), math_error);
}

TEST_CASE("rref: identity, zero, and a dependent-row example") {
  auto [r1, p1] = rref(Matrix::identity(2, Q));
  CHECK(r1 == Matrix::identity(2, Q));
  CHECK(p1 == std::vector<std::size_t>{0, 1});

  auto [r2, p2] = rref(Matrix(3, 3, Q));
  CHECK(r2.rows() == 0);
  CHECK(p2.empty());

  // [[2,4],[1,2]] -> [[1,2]]
  auto [r3, p3] = rref(Matrix::from_ints({{2, 4}, {1, 2}}, Q));
  CHECK(r3 == Matrix::from_ints({{1, 2}}, Q));
  CHECK(p3 == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent and canonical under row operations") {
  SplitMix64 rng(2024);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t rows = 1 + rng.next() % 5, cols = 1 + rng.next() % 5;
    const Matrix m = random_matrix(rows, cols, Q, rng);
    auto [r, p] = rref(m);
    auto [rr, pp] = rref(r);
    CHECK(r == rr);
    CHECK(p == pp);
    // an invertible row mix preserves the row span, hence the rref
    Matrix mix = random_matrix(rows, rows, Q, rng);
    for (std::size_t i = 0; i < rows; ++i) mix.at(i, i) += Scalar(7, Q);
    if (rref(mix).second.size() == rows) {
      auto [r2, p2] = rref(mix * m);
      CHECK(r == r2);
    }
  }
}

TEST_CASE("kernel: identity, zero map, and rank-nullity") {
  CHECK(kernel(LinearMap::identity(4, Q)).dim() == 0);
  CHECK(kernel(LinearMap::zero(2, 3, Q)) == Subspace::full(3, Q));

  SplitMix64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t rows = 1 + rng.next() % 5, cols = 1 + rng.next() % 5;
    const LinearMap f(random_matrix(rows, cols, Q, rng));
    const Subspace k = kernel(f);
    CHECK(k.dim() + image(f).dim() == cols);  // rank-nullity
    for (std::size_t b = 0; b < k.dim(); ++b) CHECK(is_zero(f(k.basis_vector(b))));
  }
}

TEST_CASE("kernel over a prime field") {
  const Field F5 = Field::prime(5);
  // x + 2y = 0 over F_5: kernel = span{(3, 1)} = rref [(1, 2)] ... x = -2y = 3y
  const LinearMap f(Matrix::from_ints({{1, 2}}, F5));
  const Subspace k = kernel(f);
  REQUIRE(k.dim() == 1);
  CHECK(is_zero(f(k.basis_vector(0))));
}

TEST_CASE("solve_affine: identity, unsolvable, and underdetermined") {
  const Vec b2{Scalar(3, Q), Scalar(-1, Q)};
  auto s1 = solve_affine(LinearMap::identity(2, Q), b2);
  REQUIRE(s1);
  CHECK(s1->particular == b2);
  CHECK(s1->homogeneous.dim() == 0);

  CHECK_FALSE(solve_affine(LinearMap::zero(2, 2, Q), b2));

  // [[1,1]] v = [2]: particular [2,0], kernel span{[1,-1]}
  auto s3 = solve_affine(LinearMap(Matrix::from_ints({{1, 1}}, Q)), Vec{Scalar(2, Q)});
  REQUIRE(s3);
  CHECK(s3->particular == Vec{Scalar(2, Q), Scalar(0, Q)});
  CHECK(s3->homogeneous.dim() == 1);
  CHECK(s3->homogeneous.contains(Vec{Scalar(1, Q), Scalar(-1, Q)}));

  CHECK_THROWS_AS(solve_affine(LinearMap::identity(2, Q), Vec{Scalar(1, Q)}), math_error);

  SplitMix64 rng(99);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t rows = 1 + rng.next() % 4, cols = 1 + rng.next() % 4;
    const LinearMap f(random_matrix(rows, cols, Q, rng));
    const Vec x = random_matrix(cols, 1, Q, rng).col(0);
    auto sol = solve_affine(f, f(x));  // constructed to be solvable
    REQUIRE(sol);
    CHECK(f(sol->particular) == f(x));
  }
}

TEST_CASE("quotient: trivial, full, and the span{[1,1]} example") {
  const QuotientSpace q0 = quotient(2, Subspace::zero(2, Q));
  CHECK(q0.dim == 2);
  CHECK(q0.projection.matrix().is_identity());

  CHECK(quotient(2, Subspace::full(2, Q)).dim == 0);

  const Subspace n = Subspace::span({Vec{Scalar(1, Q), Scalar(1, Q)}}, 2, Q);
  const QuotientSpace q = quotient(2, n);
  CHECK(q.dim == 1);
  CHECK(kernel(q.projection) == n);
  CHECK((q.projection * q.section).matrix().is_identity());
}

TEST_CASE("quotient identities on random subspaces") {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t dim = 2 + rng.next() % 5;
    const std::size_t k = rng.next() % (dim + 1);
    const Subspace n = Subspace::span(random_matrix(k, dim, Q, rng));
    const QuotientSpace q = quotient(dim, n);
    CHECK(q.dim == dim - n.dim());
    CHECK((q.projection * q.section).matrix().is_identity());
    CHECK(kernel(q.projection) == n);
    // section . projection - id maps into n
    const Matrix defect =
        (q.section * q.projection).matrix() - Matrix::identity(dim, Q);
    for (std::size_t c = 0; c < dim; ++c) CHECK(n.contains(defect.col(c)));
  }
}

TEST_CASE("subspace sum, intersection, membership") {
  SplitMix64 rng(42);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t dim = 2 + rng.next() % 5;
    const Subspace a = Subspace::span(random_matrix(1 + rng.next() % 3, dim, Q, rng));
    const Subspace b = Subspace::span(random_matrix(1 + rng.next() % 3, dim, Q, rng));
    const Subspace s = sum(a, b);
    const Subspace i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());  // modular law for dimensions
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    for (std::size_t v = 0; v < a.dim(); ++v) CHECK(a.contains(a.basis_vector(v)));
    if (a.dim() > 0) {
      const Vec c = a.coords(a.basis_vector(0));
      CHECK(a.from_coords(c) == a.basis_vector(0));
    }
  }
}

TEST_CASE("induced map on quotients") {
  // f = [[0,1],[0,0]] on Q^2 preserves n = span{e1(ambient index 0)}... map e2 -> e1
  const LinearMap f(Matrix::from_ints({{0, 1}, {0, 0}}, Q));
  const Subspace n = Subspace::span({Vec{Scalar(1, Q), Scalar(0, Q)}}, 2, Q);
  const QuotientSpace q = quotient(2, n);
  const LinearMap g = induced_on_quotients(f, q, q);
  CHECK(g.matrix() == Matrix(1, 1, Q));  // f drops everything into n

  const Subspace bad = Subspace::span({Vec{Scalar(0, Q), Scalar(1, Q)}}, 2, Q);
  CHECK_THROWS_AS(induced_on_quotients(f, quotient(2, bad), quotient(2, bad)), math_error);
}
