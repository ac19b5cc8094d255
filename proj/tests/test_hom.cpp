#include <doctest.h>

#include <random>

#include "preproj/hom.hpp"
#include "preproj/kleinian.hpp"
#include "support.hpp"

using namespace preproj;
using namespace testing_support;

namespace {

const Field<Gf> F3{FieldSpec::prime(3)};

// (x, y) from the base edges: 2 sum x_i y_i - sum over edges (x_s y_t + x_t y_s).
int form_from_edges(const Quiver& q, const DimVec& x, const DimVec& y) {
  int s = 2 * x.dot(y);
  for (const auto& a : q.arrows()) s -= x(a.src) * y(a.dst) + x(a.dst) * y(a.src);
  return s;
}

template <class S>
ArrowCochain<S> coboundary(const Representation<S>& m, const Representation<S>& n, const HomElement<S>& f) {
  ArrowCochain<S> phi;
  for (int a = 0; a < m.dq().arrow_count(); ++a) {
    const auto& arrow = m.dq().arrow(a);
    phi.push_back(mul(m.field(), n.mat(a), f[static_cast<std::size_t>(arrow.src)]) -
                  mul(m.field(), f[static_cast<std::size_t>(arrow.dst)], m.mat(a)));
  }
  return phi;
}

}  // namespace

TEST_CASE("hom spaces between simples") {
  const auto q = a2().quiver;
  for (int i = 0; i < 3; ++i) {
    const auto s = Representation<Gf>::simple(q, F3, i);
    CHECK(hom_dim(s, s) == 1);
    CHECK(ext1_space(s, s).dim() == 0);
  }
  CHECK(hom_dim(Representation<Gf>::simple(q, F3, 0), Representation<Gf>::simple(q, F3, 1)) == 0);
  const auto s1 = Representation<Gf>::simple(q, F3, 1), s2 = Representation<Gf>::simple(q, F3, 2);
  const int expected = hom_dim(s1, s2) + hom_dim(s2, s1) - form_from_edges(q->base(), s1.dims(), s2.dims());
  CHECK(expected == 1);
  CHECK(ext1_space(s1, s2).dim() == expected);
  const auto d4q = d4().quiver;
  for (int i = 0; i < 5; ++i) {
    const auto s = Representation<Gf>::simple(d4q, F3, i);
    CHECK(ext1_space(s, s).dim() == 0);
  }
}

TEST_CASE("points of the first line carry S_1 as a submodule and extend it once") {
  const auto s1 = Representation<Gf>::simple(a2().quiver, F3, 1);
  for (long a = 0; a < 3; ++a) {
    for (long b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      const auto m = e1_member(F3, a, b);
      CHECK(hom_dim(s1, m) == 1);
      const auto e = ext1_space(m, s1);
      CHECK(e.dim() == 1);
      const auto lp = extension_from_cocycle(m, s1, e.cocycle_basis[0]);
      CHECK(lp.dims() == dv({1, 2, 1}));
      CHECK(check_relations(lp).empty());
      CHECK_FALSE(extension_splits(m, s1, lp));
      CHECK(top(lp) == dv({1, 0, 0}));
    }
  }
}

TEST_CASE("zero and coboundary cocycles give split extensions") {
  std::mt19937_64 rng(5);
  const auto m = e1_member(F3, 1, 2);
  const auto n = e2_member(F3, 2, 1);
  ArrowCochain<Gf> zero;
  for (const auto& a : m.dq().arrows()) zero.push_back(zeros(F3, n.dim(a.dst), m.dim(a.src)));
  const auto e0 = extension_from_cocycle(m, n, zero);
  CHECK(is_isomorphic(e0, direct_sum(n, m)));
  CHECK(extension_splits(m, n, e0));
  HomElement<Gf> f;
  for (int v = 0; v < 3; ++v) f.push_back(mat(F3, {{static_cast<long>(rng() % 3)}}));
  const auto phi = coboundary(m, n, f);
  CHECK(is_cocycle(m, n, phi));
  CHECK(extension_splits(m, n, extension_from_cocycle(m, n, phi)));
}

TEST_CASE("non-cocycles are rejected") {
  const auto m = e1_member(F3, 1, 0);
  const auto n = e1_member(F3, 0, 1);
  ArrowCochain<Gf> phi;
  for (const auto& a : m.dq().arrows()) phi.push_back(mat(F3, {{1}}));
  if (!is_cocycle(m, n, phi)) CHECK_THROWS_AS(extension_from_cocycle(m, n, phi), CocycleError);
  CHECK(is_zero_matrix(mul(F3, delta2(m, n), delta1(m, n))));
}

TEST_CASE("torsion classes of a vertex") {
  const auto q = a2().quiver;
  const auto s1 = Representation<Gf>::simple(q, F3, 1);
  const auto t = torsion_membership(s1, 1);
  CHECK(t.f);
  CHECK(t.x);
  CHECK_FALSE(t.t);
  CHECK_FALSE(t.y);
  const auto u = torsion_membership(Representation<Gf>::simple(q, F3, 2), 1);
  CHECK(u.t);
  CHECK(u.y);
  CHECK_FALSE(u.f);
  CHECK_FALSE(u.x);
  for (const auto& m : enumerate_thin_modules(q, F3, dv({1, 1, 1}))) {
    if (!is_zero_generated(m) || !is_nilpotent(m)) continue;
    for (int i = 1; i <= 2; ++i) CHECK(torsion_membership(m, i).t);
  }
}

TEST_CASE("indecomposability") {
  const auto q = a2().quiver;
  const auto s1 = Representation<Gf>::simple(q, F3, 1), s2 = Representation<Gf>::simple(q, F3, 2);
  CHECK(is_indecomposable(s1) == Tri::Yes);
  CHECK(is_indecomposable(direct_sum(s1, s2)) == Tri::No);
  CHECK(is_indecomposable(e1_member(F3, 1, 1)) == Tri::Yes);
}

TEST_CASE("the form identity on thin nilpotent modules over F2") {
  const Field<Gf> f2(FieldSpec::prime(2));
  const auto q = a2().quiver;
  std::vector<Representation<Gf>> sample;
  for (int mask = 1; mask < 8; ++mask) {
    const DimVec d = dv({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1});
    for (const auto& m : enumerate_thin_modules(q, f2, d))
      if (is_nilpotent(m)) sample.push_back(m);
  }
  REQUIRE(sample.size() > 20);
  for (const auto& m : sample) {
    for (const auto& n : sample) {
      const auto a = ext_complex_dims(m, n);
      const int rhs = a.hom - a.ext1() + ext_complex_dims(n, m).hom;
      CHECK(form_from_edges(q->base(), m.dims(), n.dims()) == rhs);
    }
  }
}

TEST_CASE("random nilpotent modules have the requested dimensions") {
  std::mt19937_64 rng(9);
  const auto m = random_nilpotent_module(d4().quiver, F3, dv({1, 1, 2, 1, 1}), rng);
  CHECK(m.dims() == dv({1, 1, 2, 1, 1}));
  CHECK(check_relations(m).empty());
  CHECK(is_nilpotent(m));
}

TEST_CASE("combination search") {
  const auto m = direct_sum(e1_member(F3, 1, 0), e1_member(F3, 1, 0));
  const auto h = hom_space(m, m);
  CHECK(h.dim() == 4);
  const auto res = find_combination<Gf>(F3, h.basis, [&](const HomElement<Gf>& f) { return is_invertible(f, F3); });
  CHECK(res.found);
  CHECK(res.exhaustive);
}
