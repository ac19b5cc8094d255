#include <doctest.h>

#include "preproj/kleinian.hpp"
#include "support.hpp"

using namespace preproj;
using namespace testing_support;

namespace {

const Field<Gf> F3{FieldSpec::prime(3)};

}  // namespace

TEST_CASE("suites") {
  SuiteOptions opt;
  opt.field = FieldSpec::prime(2);
  const auto chs = run_suite("chs", opt);
  CHECK(chs.cases.size() > 100);
  CHECK(chs.all_pass());
  const auto cox = run_suite("coxeter");
  CHECK(cox.all_pass());
  CHECK_THROWS_AS(run_suite("nope"), UsageError);
  CHECK(suite_names().front() == "all");
}

TEST_CASE("reports") {
  SuiteReport r;
  r.name = "x";
  r.add("a", "1", "1");
  r.check("b", false);
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 1);
  SuiteReport all;
  all.merge(r);
  CHECK(all.cases[0].inputs == "x: a");
  const auto j = report_to_json(r);
  CHECK(j["cases"].size() == 2);
  CHECK(report_table(r, true).find("b") != std::string::npos);
}

TEST_CASE("membership in the fundamental chamber") {
  const RootSystem rs(a2());
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      CHECK(exceptional_membership(rs, e1_member(F3, a, b), {}, 1));
    }
  CHECK_FALSE(exceptional_membership(rs, e2_member(F3, 1, 1), {}, 1));
  CHECK(exceptional_membership(rs, e2_member(F3, 1, 1), {}, 2));
  // The common point lies on both lines.
  const auto common = a2_thin(F3, {{"01", 1}, {"02", 1}});
  CHECK(exceptional_membership(rs, common, {}, 1));
  CHECK(exceptional_membership(rs, common, {}, 2));
}

TEST_CASE("membership after crossing the first wall") {
  const RootSystem rs(a2());
  const WeylWord s1{1};
  const Theta theta = rs.chamber_sample(s1);
  // Nonzero arrows 0->2 and 1->2: the common point of both lines in C(s1).
  const auto common = a2_thin(F3, {{"02", 1}, {"12", 1}});
  REQUIRE(stability_verdict(common, theta).status == Status::Stable);
  CHECK(exceptional_membership(rs, common, s1, 1));
  CHECK(exceptional_membership(rs, common, s1, 2));
  CHECK(simple_image_sign(rs, s1, 1) == -1);
  CHECK(simple_image_sign(rs, s1, 2) == 1);
  int on1 = 0, on2 = 0, both = 0;
  for (const auto& m : enumerate_thin_modules(a2().quiver, F3, dv({1, 1, 1}))) {
    if (stability_verdict(m, theta).status != Status::Stable) continue;
    const bool x = exceptional_membership(rs, m, s1, 1);
    const bool y = exceptional_membership(rs, m, s1, 2);
    on1 += x;
    on2 += y;
    both += x && y;
  }
  CHECK(both >= 1);
  CHECK(on1 > both);
  CHECK(on2 > both);
}

TEST_CASE("stalk complexes agree with the simple images") {
  const RootSystem rs(a2());
  for (const auto& w : rs.all_elements())
    for (int i = 1; i <= 2; ++i) {
      const auto s = compute_siw(rs, F3, w, i);
      CHECK((s.degree == 0) == (simple_image_sign(rs, w, i) > 0));
    }
}

TEST_CASE("sampled characterization on D~4") {
  const RootSystem rs(d4());
  std::mt19937_64 rng(3);
  const auto r = check_stability_characterization(d4(), rs.random_element(rng, 4), F3, 10, 7);
  CHECK(r.cases.size() >= 10);
  CHECK(r.all_pass());
}
