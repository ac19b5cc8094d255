#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "preproj/stability.hpp"
#include "support.hpp"

using namespace preproj;
using namespace testing_support;

namespace {

const Field<Gf> F2{FieldSpec::prime(2)};
const Field<Gf> F3{FieldSpec::prime(3)};

std::vector<Representation<Gf>> all_thin(const Field<Gf>& f) {
  std::vector<Representation<Gf>> out;
  for (int mask = 1; mask < 8; ++mask) {
    const DimVec d = dv({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1});
    for (auto& m : enumerate_thin_modules(a2().quiver, f, d)) out.push_back(std::move(m));
  }
  return out;
}

// Orbits of thin assignments of d = (1,1,1) under vertex rescaling, by listing
// each orbit in full. Arrow order follows the double quiver.
int orbit_count(const Field<Gf>& f, const Theta& theta, bool stable_only) {
  const auto q = a2().quiver;
  const auto mods = enumerate_thin_modules(q, f, dv({1, 1, 1}));
  const std::uint32_t n = f.size();
  std::set<std::vector<std::uint32_t>> seen;
  int orbits = 0;
  for (const auto& m : mods) {
    const auto v = stability_verdict(m, theta);
    if (!v.semistable() || (stable_only && v.status != Status::Stable)) continue;
    std::vector<std::uint32_t> x;
    for (int a = 0; a < q->arrow_count(); ++a) x.push_back(f.index(m.mat(a)(0, 0)));
    if (seen.count(x)) continue;
    ++orbits;
    for (std::uint32_t g0 = 1; g0 < n; ++g0)
      for (std::uint32_t g1 = 1; g1 < n; ++g1)
        for (std::uint32_t g2 = 1; g2 < n; ++g2) {
          const std::array<Gf, 3> g{f.element(g0), f.element(g1), f.element(g2)};
          std::vector<std::uint32_t> y;
          for (int a = 0; a < q->arrow_count(); ++a) {
            const auto& arrow = q->arrow(a);
            const Gf s = g[static_cast<std::size_t>(arrow.dst)] * m.mat(a)(0, 0) / g[static_cast<std::size_t>(arrow.src)];
            y.push_back(f.index(s));
          }
          seen.insert(y);
        }
  }
  return orbits;
}

}  // namespace

TEST_CASE("submodules of a point on the first line") {
  const auto m = e1_member(F3, 1, 0);
  const auto subs = submodule_dimvecs(m);
  std::set<std::vector<int>> proper;
  for (const auto& b : subs)
    if (b.sum() != 0 && b != m.dims()) proper.insert({b(0), b(1), b(2)});
  CHECK(proper == std::set<std::vector<int>>{{0, 1, 0}, {0, 0, 1}, {0, 1, 1}});
  const auto s = submodule_dimvecs(Representation<Gf>::simple(a2().quiver, F3, 2));
  CHECK(s == std::vector<DimVec>{dv({0, 0, 0}), dv({0, 0, 1})});
}

TEST_CASE("thin and brute force submodule enumeration agree over F2") {
  const auto mods = all_thin(F2);
  REQUIRE(mods.size() >= 40);
  for (const auto& m : mods) CHECK(submodule_dimvecs_thin(m) == submodule_dimvecs_bruteforce(m));
  const auto big = direct_sum(e1_member(F2, 1, 1), Representation<Gf>::simple(a2().quiver, F2, 1));
  const auto brute = submodule_dimvecs_bruteforce(big);
  CHECK(submodule_dimvecs(big) == brute);
  CHECK(std::find(brute.begin(), brute.end(), dv({0, 2, 0})) != brute.end());
  CHECK_THROWS_AS(submodule_dimvecs_bruteforce(big, 3), SearchBudgetExceeded);
}

TEST_CASE("verdicts") {
  const Theta theta = make_theta({-2, 1, 1});
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      const auto v = stability_verdict(e1_member(F3, a, b), theta);
      CHECK(v.status == Status::Stable);
      CHECK_FALSE(v.witness.has_value());
    }
  CHECK(stability_verdict(Representation<Gf>::simple(a2().quiver, F3, 1), theta).status == Status::NotInThetaKernel);
  const Theta wall = make_theta({-1, 0, 1});
  const auto s1 = Representation<Gf>::simple(a2().quiver, F3, 1);
  const auto n = a2_thin(F3, {{"02", 1}}, dv({1, 0, 1}));
  REQUIRE(stability_verdict(s1, wall).status == Status::Stable);
  REQUIRE(stability_verdict(n, wall).status == Status::Stable);
  const auto sum = stability_verdict(direct_sum(n, s1), wall);
  CHECK(sum.status == Status::StrictlySemistable);
  REQUIRE(sum.witness.has_value());
  CHECK(pair(wall, *sum.witness) == 0);
  const auto zero = stability_verdict(Representation<Gf>::with_zero_maps(a2().quiver, F3, dv({0, 0, 0})), theta);
  CHECK(zero.status == Status::StrictlySemistable);
  const auto bad = stability_verdict(a2_thin(F3, {{"01", 1}, {"02", 1}}), make_theta({2, -1, -1}));
  CHECK(bad.status == Status::Unstable);
}

TEST_CASE("unstable witnesses are realized by submodules") {
  const RootSystem rs(a2());
  const auto mods = enumerate_thin_modules(a2().quiver, F3, dv({1, 1, 1}));
  int unstable = 0;
  for (const auto& w : rs.all_elements()) {
    const Theta theta = rs.chamber_sample(w);
    for (const auto& m : mods) {
      const auto v = stability_verdict(m, theta);
      if (v.status != Status::Unstable) continue;
      ++unstable;
      REQUIRE(v.witness.has_value());
      CHECK(pair(theta, *v.witness) < 0);
      const auto u = find_submodule(m, *v.witness);
      REQUIRE(u.has_value());
      CHECK(is_submodule(m, *u));
    }
  }
  CHECK(unstable > 0);
}

TEST_CASE("S-equivalence on a wall") {
  const Theta wall = make_theta({-1, 0, 1});
  const auto m1 = e1_member(F3, 1, 0);
  const auto m2 = a2_thin(F3, {{"10", 1}, {"02", 1}});
  REQUIRE(check_relations(m2).empty());
  REQUIRE(stability_verdict(m1, wall).status == Status::StrictlySemistable);
  REQUIRE(stability_verdict(m2, wall).status == Status::StrictlySemistable);
  CHECK_FALSE(is_isomorphic(m1, m2));
  const auto c1 = sequiv_class(m1, wall);
  CHECK(c1.size() == 2);
  CHECK(c1 == sequiv_class(m2, wall));
  const auto stable = e1_member(F3, 1, 1);
  const Theta generic = make_theta({-2, 1, 1});
  CHECK(sequiv_class(stable, generic) == std::vector<std::string>{thin_canonical_key(stable)});
  CHECK_THROWS_AS(sequiv_class(direct_sum(m1, m1), wall), UnsupportedShape);
}

TEST_CASE("canonical forms classify thin modules") {
  const auto mods = enumerate_thin_modules(a2().quiver, F3, dv({1, 1, 1}));
  for (std::size_t i = 0; i < mods.size(); i += 7)
    for (std::size_t j = 0; j < mods.size(); j += 5)
      CHECK((thin_canonical_key(mods[i]) == thin_canonical_key(mods[j])) == is_isomorphic(mods[i], mods[j]));
}

TEST_CASE("scan counts match a plain orbit count") {
  const RootSystem rs(a2());
  for (std::uint32_t q : {2u, 3u}) {
    const Field<Gf> f(FieldSpec::prime(q));
    for (const auto& w : rs.all_elements()) {
      const Theta theta = rs.chamber_sample(w);
      const auto scan = moduli_scan(a2().quiver, dv({1, 1, 1}), theta, f);
      CHECK(static_cast<int>(scan.classes.size()) == orbit_count(f, theta, false));
      CHECK(scan.stable_count() == orbit_count(f, theta, true));
      for (const auto& r : scan.classes) {
        CHECK(check_relations(r.rep).empty());
        CHECK((stability_verdict(r.rep, theta).status == Status::Stable) == r.stable);
      }
    }
  }
}

TEST_CASE("stable class counts agree across chambers") {
  const RootSystem rs(a2());
  for (const auto& spec : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::finite(4)}) {
    const Field<Gf> f(spec);
    std::set<int> counts;
    for (const auto& w : rs.all_elements())
      counts.insert(moduli_scan(a2().quiver, dv({1, 1, 1}), rs.chamber_sample(w), f).stable_count());
    CHECK(counts.size() == 1);
  }
}
