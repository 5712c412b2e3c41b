#include "hopfcore/errors.hpp"
#include "hopfcore/linalg.hpp"
#include "hopfcore/random.hpp"
#include "hopfcore/rational.hpp"
#include "hopfcore/report.hpp"

#include <doctest.h>

using namespace hopfcore;

namespace {

QMatrix rows(std::initializer_list<std::initializer_list<int>> r) {
  std::vector<Vector> v;
  std::size_t cols = 0;
  for (auto row : r) {
    Vector x;
    for (int e : row)
      x.emplace_back(e);
    cols = x.size();
    v.push_back(std::move(x));
  }
  return QMatrix::from_rows(v, cols);
}

Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs)
    v.emplace_back(x);
  return v;
}

QMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.below(3) == 0)
        m(i, j) = rng.small_rational();
  return m;
}

} // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("+2/3") == Rational(2, 3));
  CHECK(to_string(Rational(6, 3)) == "2");
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
  CHECK_THROWS_AS(parse_rational("x"), FormatError);
  CHECK_THROWS_AS(parse_rational(""), FormatError);
  CHECK(factorial(5) == 120);
  CHECK(factorial(0) == 1);
}

TEST_CASE("rref examples") {
  CHECK(rref(QMatrix::identity(2)) == QMatrix::identity(2));
  CHECK(rref(rows({{1, 2}, {2, 4}})) == rows({{1, 2}, {0, 0}}));
  CHECK(rank(rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rref(rows({{0, 1}, {1, 0}})) == QMatrix::identity(2));
}

TEST_CASE("kernel examples") {
  CHECK(kernel(QMatrix::identity(2)).dim() == 0);
  const Subspace k = kernel(rows({{1, 1}}));
  CHECK(k.dim() == 1);
  CHECK(k.contains(vec({1, -1})));
  CHECK(kernel(QMatrix(2, 3)) == Subspace::full(3));
}

TEST_CASE("inverse") {
  const QMatrix m = rows({{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == QMatrix::identity(2));
  CHECK_FALSE(inverse(rows({{1, 2}, {2, 4}})));
}

TEST_CASE("complement examples") {
  std::vector<Vector> e1{vec({1, 0})};
  const Subspace inner = Subspace::span(e1, 2);
  const Subspace w = complement(inner, Subspace::full(2));
  CHECK(w.dim() == 1);
  CHECK(w.contains(vec({0, 1})));
  CHECK(complement(inner, inner).dim() == 0);

  std::vector<Vector> diag{vec({1, 1})};
  CHECK_THROWS_AS(complement(Subspace(2), Subspace::span(diag, 2), vec({1, 1})),
                  ConstraintUnsatisfiable);
  CHECK_THROWS_AS(complement(Subspace::full(2), inner), InnerNotContained);

  // Constrained case: the greedy pick (1,0,0) violates f and is moved by the
  // anchor 1 = (0,0,1).
  std::vector<Vector> one{vec({0, 0, 1})};
  const Subspace c0 = Subspace::span(one, 3);
  const Vector f = vec({1, 1, 1});
  const Subspace c = complement(c0, Subspace::full(3), f, vec({0, 0, 1}));
  CHECK(c.dim() == 2);
  for (const auto& v : c.basis_vectors())
    CHECK(sgn(dot(f, v)) == 0);
  CHECK((c + c0) == Subspace::full(3));
}

TEST_CASE("rank-nullity, rref idempotence, complement laws on random matrices") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
    const QMatrix m = random_matrix(rng, r, c);
    CHECK(rank(m) + kernel(m).dim() == c);
    const QMatrix once = rref(m);
    CHECK(rref(once) == once);

    const Subspace outer = kernel(random_matrix(rng, 1 + rng.below(3), c));
    std::vector<Vector> in;
    for (const auto& v : outer.basis_vectors())
      if (rng.coin())
        in.push_back(v);
    const Subspace inner = Subspace::span(in, c);
    const Subspace w = complement(inner, outer);
    CHECK(inner.dim() + w.dim() == outer.dim());
    CHECK(inner.intersect(w).dim() == 0);
    CHECK((inner + w) == outer);
  }
}

TEST_CASE("subspace coordinates and intersection") {
  std::vector<Vector> a{vec({1, 0, 0}), vec({0, 1, 0})};
  std::vector<Vector> b{vec({0, 1, 0}), vec({0, 0, 1})};
  const Subspace A = Subspace::span(a, 3), B = Subspace::span(b, 3);
  const Subspace I = A.intersect(B);
  CHECK(I.dim() == 1);
  CHECK(I.contains(vec({0, 5, 0})));
  auto co = A.coordinates(vec({2, 3, 0}));
  REQUIRE(co);
  CHECK(*co == vec({2, 3}));
  CHECK_FALSE(A.coordinates(vec({0, 0, 1})));
}

TEST_CASE("report text and counts") {
  Report r;
  r.pass("tech1", "x");
  r.fail("tech1", "y", "witness");
  r.add("tech2", "z", Status::inconclusive, "beyond D");
  CHECK(r.count(Status::fail) == 1);
  CHECK(r.count(Status::pass, "tech1") == 1);
  CHECK_FALSE(r.passed());
  CHECK(r.text() == "PASS tech1 x\nFAIL tech1 y: witness\nINCONCLUSIVE tech2 z: beyond D\n");
}

TEST_CASE("rng is reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i)
    CHECK(a.small_rational() == b.small_rational());
}
