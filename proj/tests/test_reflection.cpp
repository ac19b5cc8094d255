#include <doctest.h>

#include <map>
#include <random>

#include "preproj/kleinian.hpp"
#include "preproj/reflection.hpp"
#include "support.hpp"

using namespace preproj;
using namespace testing_support;

namespace {

const Field<Gf> F2{FieldSpec::prime(2)};
const Field<Gf> F3{FieldSpec::prime(3)};

// s_i x from the base edges alone.
DimVec edge_reflection(const Quiver& q, int i, const DimVec& x) {
  int pairing = 2 * x(i);
  for (const auto& a : q.arrows()) {
    if (a.src == i) pairing -= x(a.dst);
    if (a.dst == i) pairing -= x(a.src);
  }
  DimVec y = x;
  y(i) -= pairing;
  return y;
}

std::vector<Theta> wall_thetas() {
  return {make_theta({-1, 0, 1}), make_theta({-1, 1, 0}), make_theta({0, 1, -1}),
          make_theta({1, -1, 0}), make_theta({0, -1, 1}), make_theta({1, 0, -1})};
}

}  // namespace

TEST_CASE("reflections of simples") {
  const auto q = a2().quiver;
  const auto r = reflect_plus(1, Representation<Gf>::simple(q, F3, 2));
  CHECK(r.defect == 0);
  CHECK(r.module.dims() == dv({0, 1, 1}));
  for (int i = 0; i < 3; ++i) {
    const auto s = Representation<Gf>::simple(q, F3, i);
    const auto p = reflect_plus(i, s);
    CHECK(p.defect == 1);
    CHECK(p.module.is_zero());
    const auto m = reflect_minus(i, s);
    CHECK(m.defect == 1);
    CHECK(m.module.is_zero());
  }
}

TEST_CASE("reflection at vertex 1 on the first line") {
  for (long a = 0; a < 3; ++a) {
    for (long b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      const auto m = e1_member(F3, a, b);
      const auto r = reflect_plus(1, m);
      if (a == 1 && b == 0) CHECK(r.module.dims() == dv({1, 1, 1}));
      if (r.defect != 0) continue;
      CHECK(r.module.dims() == reflect_dimvec(m.dq(), 1, m.dims()));
      const auto back = reflect_minus(1, r.module);
      CHECK(back.defect == 0);
      CHECK(is_isomorphic(back.module, m));
    }
  }
}

TEST_CASE("dimension law when the socle avoids S_i") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> dist(0, 2);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    DimVec d = dv({dist(rng), dist(rng), dist(rng)});
    if (d.sum() == 0) d(0) = 1;
    const auto m = random_nilpotent_module(a2().quiver, F3, d, rng);
    for (int i = 0; i < 3; ++i) {
      if (socle(m)(i) != 0) continue;
      const auto r = reflect_minus(i, m);
      CHECK(r.defect == 0);
      CHECK(r.module.dims() == edge_reflection(m.dq().base(), i, m.dims()));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("functor words") {
  const RootSystem rs(a2());
  const Theta theta = rs.base_theta();
  std::vector<Representation<Gf>> stable;
  for (const auto& m : enumerate_thin_modules(a2().quiver, F3, dv({1, 1, 1})))
    if (stability_verdict(m, theta).status == Status::Stable) stable.push_back(m);
  REQUIRE(stable.size() > 5);
  for (const auto& m : stable) {
    for (int i = 0; i < 3; ++i) CHECK(is_isomorphic(apply_word({i, i}, m, theta).module, m));
    const auto x = apply_word({1, 2, 1}, m, theta);
    const auto y = apply_word({2, 1, 2}, m, theta);
    CHECK(x.theta == y.theta);
    CHECK(is_isomorphic(x.module, y.module));
    // Stability is kept at every step.
    Representation<Gf> cur = m;
    Theta t = theta;
    for (int letter : {1, 2, 1}) {
      const auto step = apply_word({letter}, cur, t);
      cur = step.module;
      t = step.theta;
      CHECK(stability_verdict(cur, t).status == Status::Stable);
    }
  }
  CHECK_THROWS_AS(apply_word({1}, stable.front(), make_theta({-1, 0, 1})), NotGenericStep);
  const auto unstable = e1_member(F3, 1, 1);
  CHECK_THROWS_AS(apply_word({1}, unstable, rs.chamber_sample({1, 2})), PreconditionViolated);
}

TEST_CASE("stalk complexes of short words") {
  const RootSystem rs(a2());
  const auto s = compute_siw(rs, F3, {}, 2);
  CHECK(s.degree == 0);
  CHECK(s.module.dims() == dv({0, 0, 1}));
  const auto a = compute_siw(rs, F3, {1}, 1);
  CHECK(a.degree == 1);
  CHECK(a.module.dims() == dv({0, 1, 0}));
  const auto b = compute_siw(rs, F3, {1}, 2);
  CHECK(b.degree == 0);
  CHECK(b.module.dims() == dv({0, 1, 1}));
  CHECK_THROWS_AS(compute_siw(rs, F3, {1, 1}, 1), PreconditionViolated);
}

TEST_CASE("fixed points of the plus functor") {
  for (const auto& field : {F2, F3}) {
    const RootSystem rs(a2());
    std::vector<Theta> thetas = wall_thetas();
    for (const auto& w : rs.all_elements()) thetas.push_back(rs.chamber_sample(w));
    for (const auto& theta : thetas) {
      for (int mask = 1; mask < 8; ++mask) {
        const DimVec alpha = dv({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1});
        if (pair(theta, alpha) != 0) continue;
        for (const auto& m : enumerate_thin_modules(a2().quiver, field, alpha)) {
          if (!stability_verdict(m, theta).semistable()) continue;
          for (int i = 0; i < 3; ++i) {
            if (theta(i) <= 0) continue;
            const auto r = reflect_plus(i, m);
            CHECK(r.defect == 0);
            const bool fixed = r.module.dims() == m.dims() && is_isomorphic(r.module, m);
            const bool predicted = socle(m)(i) == 0 && bilinear_form(m.dq(), m.dims(), unit_vector(3, i)) == 0;
            CHECK(fixed == predicted);
          }
        }
      }
    }
  }
}

TEST_CASE("S-equivalence is preserved across a wall") {
  const auto d = dv({1, 1, 1});
  for (const auto& theta : wall_thetas()) {
    const auto mods = enumerate_thin_modules(a2().quiver, F3, d);
    for (int i = 0; i < 3; ++i) {
      if (theta(i) == 0) continue;
      const Theta next = reflect_theta(*a2().quiver, i, theta);
      std::map<std::vector<std::string>, std::set<std::vector<std::string>>> images;
      for (const auto& m : mods) {
        if (!stability_verdict(m, theta).semistable()) continue;
        const auto moved = apply_word({i}, m, theta);
        images[sequiv_class(m, theta)].insert(sequiv_class(moved.module, next));
      }
      REQUIRE_FALSE(images.empty());
      std::set<std::vector<std::string>> targets;
      for (const auto& [src, dst] : images) {
        CHECK(dst.size() == 1);
        targets.insert(*dst.begin());
      }
      CHECK(targets.size() == images.size());
    }
  }
}
