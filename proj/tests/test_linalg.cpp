#include <doctest.h>

#include <random>

#include "preproj/field.hpp"
#include "preproj/linalg.hpp"
#include "support.hpp"

using namespace preproj;
using testing_support::mat;

namespace {

// Determinant by cofactor expansion along the first row.
template <class S>
S det(const Field<S>& f, const Matrix<S>& a) {
  const Index n = a.rows();
  if (n == 0) return f.one();
  if (n == 1) return a(0, 0);
  S total = f.zero();
  for (Index j = 0; j < n; ++j) {
    Matrix<S> minor = zeros(f, n - 1, n - 1);
    for (Index r = 1; r < n; ++r)
      for (Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    const S term = a(0, j) * det(f, minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

// Largest k with a nonzero k x k minor.
template <class S>
Index minor_rank(const Field<S>& f, const Matrix<S>& a) {
  const Index m = a.rows(), n = a.cols();
  Index best = 0;
  for (std::uint32_t rows = 1; rows < (1u << m); ++rows) {
    for (std::uint32_t cols = 1; cols < (1u << n); ++cols) {
      const int k = __builtin_popcount(rows);
      if (k != __builtin_popcount(cols) || k <= best) continue;
      Matrix<S> sub = zeros(f, k, k);
      Index r = 0;
      for (Index i = 0; i < m; ++i) {
        if (!((rows >> i) & 1)) continue;
        Index c = 0;
        for (Index j = 0; j < n; ++j)
          if ((cols >> j) & 1) sub(r, c++) = a(i, j);
        ++r;
      }
      if (!is_zero(det(f, sub))) best = k;
    }
  }
  return best;
}

template <class S>
Matrix<S> random_matrix(const Field<S>& f, Index r, Index c, std::mt19937_64& rng) {
  Matrix<S> m = zeros(f, r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = f.random(rng);
  return m;
}

}  // namespace

TEST_CASE("field arithmetic is exact") {
  const Field<Rational> q;
  CHECK(q.parse("3/7") + q.parse("4/7") == q.one());
  CHECK(q.format(q.parse("6/14")) == "3/7");
  CHECK_THROWS_AS(q.parse("1/0"), ParseError);
  CHECK(q.parse("-4/-2") == Rational(2));
  const Field<Gf> f5(FieldSpec::prime(5));
  CHECK(f5.from_int(3) * f5.from_int(2) == f5.one());
  CHECK(f5.from_int(-1) == f5.from_int(4));
  CHECK(f5.format(f5.from_int(7)) == "2");
  CHECK_THROWS_AS(FieldSpec::finite(6), Error);
  CHECK(FieldSpec::parse("GF(4)").order() == 4);
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
}

TEST_CASE("finite fields satisfy the field axioms exhaustively") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    const Field<Gf> f(FieldSpec::finite(q));
    CAPTURE(q);
    std::vector<Gf> xs;
    for (std::uint32_t i = 0; i < q; ++i) xs.push_back(f.element(i));
    int units = 0;
    for (const auto& a : xs) {
      if (!is_zero(a)) {
        CHECK(a * (f.one() / a) == f.one());
        ++units;
      }
      CHECK(a + (-a) == f.zero());
      for (const auto& b : xs) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : xs) {
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
    CHECK(units == static_cast<int>(q - 1));
    // Characteristic: p * 1 = 0.
    Gf s = f.zero();
    for (std::uint32_t k = 0; k < f.spec().p; ++k) s += f.one();
    CHECK(s == f.zero());
  }
}

TEST_CASE("mixing fields raises FieldMismatch") {
  const Field<Gf> f2(FieldSpec::prime(2)), f3(FieldSpec::prime(3));
  CHECK_THROWS_AS(f2.one() + f3.one(), FieldMismatch);
}

TEST_CASE("zero matrix over F3") {
  const Field<Gf> f(FieldSpec::prime(3));
  const auto a = zeros(f, 2, 2);
  CHECK(rank(f, a) == 0);
  CHECK(same_matrix(kernel(f, a), identity(f, 2)));
}

TEST_CASE("rank one matrix over Q") {
  const Field<Rational> q;
  const auto a = mat(q, {{1, 1}, {0, 0}});
  CHECK(rank(q, a) == 1);
  const auto k = kernel(q, a);
  REQUIRE(k.cols() == 1);
  CHECK(rank(q, (Matrix<Rational>(2, 2) << k, mat(q, {{1}, {-1}})).finished()) == 1);
  const auto p = cokernel_projection(q, a);
  CHECK(p.rows() == 1);
  CHECK(is_zero_matrix(mul(q, p, a)));
}

TEST_CASE("rank agrees with the minor oracle on random 4x5 matrices over F5") {
  const Field<Gf> f(FieldSpec::prime(5));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto a = random_matrix(f, 4, 5, rng);
    if (t % 5 == 0) a.row(3) = a.row(0) + a.row(1);  // force some rank drops
    CHECK(rank(f, a) == minor_rank(f, a));
  }
}

TEST_CASE("solve returns the canonical particular solution") {
  const Field<Gf> f2(FieldSpec::prime(2));
  const auto x = solve(f2, mat(f2, {{1, 1}}), Vector<Gf>(mat(f2, {{1}})));
  REQUIRE(x);
  // The two solutions are (1,0) and (0,1); free variables are set to zero.
  CHECK((*x)(0) == f2.one());
  CHECK((*x)(1) == f2.zero());
  const Field<Rational> q;
  CHECK_FALSE(solve(q, mat(q, {{0}}), Vector<Rational>(mat(q, {{1}}))));
  const Vector<Rational> b = mat(q, {{3}, {-2}, {5}});
  const auto y = solve(q, identity(q, 3), b);
  REQUIRE(y);
  CHECK(same_matrix(Matrix<Rational>(*y), Matrix<Rational>(b)));
  CHECK_THROWS_AS(solve(q, identity(q, 2), b), ShapeError);
}

TEST_CASE_TEMPLATE("kernel, cokernel and transpose invariants", S, Rational, Gf) {
  const Field<S> f = [] {
    if constexpr (std::is_same_v<S, Gf>) return Field<Gf>(FieldSpec::prime(3));
    else return Field<Rational>();
  }();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(0, 5);
  for (int t = 0; t < 100; ++t) {
    const Index r = dim(rng), c = dim(rng);
    auto a = random_matrix(f, r, c, rng);
    if (r > 1 && t % 3 == 0) a.row(r - 1) = a.row(0);
    const auto k = kernel(f, a);
    const auto p = cokernel_projection(f, a);
    CHECK(rank(f, a) + k.cols() == c);
    CHECK(is_zero_matrix(mul(f, a, k)));
    CHECK(is_zero_matrix(mul(f, p, a)));
    CHECK(p.rows() == r - rank(f, a));
    CHECK(rank(f, a) == rank(f, Matrix<S>(a.transpose())));
    CHECK(same_matrix(kernel(f, a), k));
    CHECK(same_matrix(image(f, a), image(f, a)));
    CHECK(image(f, a).cols() == rank(f, a));
  }
}

TEST_CASE("intersections and containment of spans") {
  const Field<Rational> q;
  const auto u = mat(q, {{1, 0}, {0, 1}, {0, 0}});
  const auto v = mat(q, {{1, 0}, {0, 0}, {0, 1}});
  const auto w = intersect_spans(q, u, v);
  CHECK(w.cols() == 1);
  CHECK(contained_in(q, w, u));
  CHECK(contained_in(q, w, v));
  CHECK_FALSE(contained_in(q, v, u));
}
