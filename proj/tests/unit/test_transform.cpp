#include "helpers.hpp"
#include "oracles.hpp"
#include "random.hpp"

#include "minlin/error.hpp"
#include "minlin/sampling.hpp"
#include "minlin/transform.hpp"

#include <doctest.h>

#include <thread>

using namespace minlin;
using minlin::testing::fn;
using minlin::testing::ms;

namespace {
const Space kAB({"a", "b"}, Matrix{{0, 1}, {1, 0}});
const Space kX3 = Space::indexed(3);
const FunctionClass kFull = FunctionClass::full();
}  // namespace

TEST_CASE("transform on and off the simplex") {
  const ExtFun f = fn({"0", "1"});
  CHECK(fenchel_transform(kAB, f, kFull, dirac(kAB, "a")).value == Extended(0));
  CHECK(fenchel_transform(kAB, f, kFull, ms({"1/2", "1/2"})).value == Extended(Rational(1, 2)));

  const Measure off = ms({"2", "-1"});
  const auto tv = fenchel_transform(kAB, f, kFull, off);
  CHECK(tv.value.is_infinite());
  CHECK(certifies_divergence(kAB, f, kFull, off, tv.ray));
  CHECK(testing::full_class_ray_diverges(f, off, tv.ray));

  // Mass off the domain diverges too.
  CHECK(fenchel_transform(kAB, fn({"0", "+inf"}), kFull, ms({"1/2", "1/2"})).value.is_infinite());
  CHECK(fenchel_transform(kAB, fn({"0", "+inf"}), kFull, ms({"1", "0"})).value == Extended(0));
  CHECK_THROWS_AS(fenchel_transform(kAB, f, kFull, ms({"1", "0", "0"})), InvalidInput);
}

TEST_CASE("transform matches the closed form for full and Lipschitz classes") {
  testing::RandomSource rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Space s = Space::indexed(n, rng.metric(n));
    const ExtFun f = rng.extended_function(n, 25);
    auto sample = sample_simplex(n, 8, static_cast<std::uint64_t>(trial));
    for (auto& m : sample_outside_simplex(n, 4, static_cast<std::uint64_t>(trial))) sample.push_back(m);
    for (const auto& cls : {kFull, FunctionClass::lipschitz()}) {
      for (const auto& m : sample) {
        const auto tv = fenchel_transform(s, f, cls, m);
        CHECK(tv.value == testing::closed_form_transform(f, m));
        if (tv.value.is_infinite()) CHECK(testing::full_class_ray_diverges(f, m, tv.ray));
      }
    }
  }
}

TEST_CASE("constants") {
  const auto r = check_constant_transform(kAB, 3, {ms({"1/2", "1/2"}), ms({"2", "-1"})});
  REQUIRE(r.checks.size() == 2);
  CHECK(r.checks[0].lhs == Extended(3));
  CHECK(r.checks[1].lhs.is_infinite());
  CHECK(r.passed());
  const auto z = check_constant_transform(kAB, 0, {dirac(kAB, "a")});
  CHECK(z.checks[0].lhs == Extended(0));
  CHECK(z.passed());
  const auto cone = FunctionClass::finite_cone(2, {fn({"0", "1"})});
  CHECK(check_constant_transform(kAB, Rational(-5, 2), sample_simplex(2, 10, 1), cone).passed());
}

TEST_CASE("translation") {
  const ExtFun f = fn({"0", "1"});
  const Measure q = ms({"1/2", "1/2"});
  CHECK(fenchel_transform(kAB, f - fn({"1", "1"}), kFull, q).value == Extended(Rational(-1, 2)));
  CHECK(check_translation(kAB, f, fn({"1", "1"}), {q}).passed());
  CHECK(check_translation(kAB, f, fn({"0", "0"}), sample_simplex(2, 10, 2)).passed());
  CHECK(check_translation(kAB, f, f, sample_simplex(2, 10, 3)).passed());
  CHECK(fenchel_transform(kAB, f - f, kFull, q).value == Extended(0));
}

TEST_CASE("delta sets") {
  CHECK(delta_set_to_function(DeltaSet({1, 2})) == fn({"1", "2"}));
  CHECK(delta_set_to_function(DeltaSet({0, 0})) == fn({"0", "0"}));
  CHECK(delta_set_to_function(DeltaSet({-1, 5})) == fn({"-1", "5"}));
  CHECK(function_to_delta_set(fn({"1", "2"})) == DeltaSet({1, 2}));
  CHECK_THROWS_AS(function_to_delta_set(fn({"0", "+inf"})), NotFinite);

  const DeltaSet a({1, 2});
  CHECK(support_function(a, ms({"1/2", "1/2"})).value == Extended(Rational(3, 2)));
  CHECK(support_function(a, dirac(kAB, "a")).value == Extended(1));
  const Measure off = ms({"-1", "2"});
  const auto sv = support_function(a, off);
  CHECK(sv.value.is_infinite());
  REQUIRE(sv.ray.size() == 2);
  for (const auto& r : sv.ray) CHECK(r <= 0);
  CHECK(pairing(off, ExtFun::real(sv.ray)) > 0);

  testing::RandomSource rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const ExtFun f = rng.real_function(1 + trial % 6);
    CHECK(delta_set_to_function(function_to_delta_set(f)) == f);
    const DeltaSet d(rng.real_vector(1 + trial % 6, -4, 4));
    CHECK(function_to_delta_set(delta_set_to_function(d)) == d);
  }
}

TEST_CASE("T extends f and is affine on test functions") {
  const ExtFun f = fn({"4", "-1", "1/3"});
  const auto t = transform_T(kX3, f);
  for (std::size_t x = 0; x < 3; ++x) CHECK(t(dirac(3, x)) == f[x]);
  for (const auto& m : sample_simplex(3, 10, 9)) CHECK(t(m) == Extended(pairing(m, f)));
  const auto c = transform_T(kX3, ExtFun::constant(3, 7));
  for (const auto& m : sample_simplex(3, 10, 10)) CHECK(c(m) == Extended(7));
  CHECK_THROWS_AS(t(ms({"2", "-1", "0"})), PreconditionError);
  CHECK_THROWS_AS(transform_T(kX3, fn({"0", "+inf", "1"})), NotFinite);
}

TEST_CASE("T memoizes and tolerates concurrent readers") {
  const auto t = transform_T(kX3, fn({"1", "2", "3"}));
  const auto sample = sample_simplex(3, 20, 44);
  std::vector<std::vector<Extended>> seen(4);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < seen.size(); ++w) {
    workers.emplace_back([&, w] {
      for (const auto& m : sample) seen[w].push_back(t(m));
    });
  }
  for (auto& th : workers) th.join();
  for (std::size_t w = 1; w < seen.size(); ++w) CHECK(seen[w] == seen[0]);
  CHECK(t.cache_size() <= sample.size());
  CHECK(t.cache_size() > 0);
  const auto copy = t;
  CHECK(copy.cache_size() == t.cache_size());
}

TEST_CASE("cone morphism") {
  const ExtFun f = fn({"0", "1"});
  const ExtFun g = fn({"2", "0"});
  const Measure q = ms({"1/2", "1/2"});
  const auto r = check_cone_morphism(kAB, f, g, 1, 1, {q});
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].lhs == Extended(Rational(3, 2)));
  CHECK(r.checks[0].rhs == Extended(Rational(3, 2)));
  CHECK(r.passed());

  const auto sample = sample_simplex(2, kDefaultSampleCount, 5);
  const auto zero = check_cone_morphism(kAB, f, g, 0, 0, sample);
  CHECK(zero.passed());
  for (const auto& c : zero.checks) CHECK(c.lhs == Extended(0));
  CHECK(check_cone_morphism(kAB, f, fn({"0", "0"}), 2, 0, sample).passed());
  CHECK_THROWS_AS(check_cone_morphism(kAB, f, g, -1, 0, sample), PreconditionError);
}

TEST_CASE("isotone") {
  const auto sample = sample_simplex(2, kDefaultSampleCount, 6);
  const auto le = check_isotone(kAB, fn({"0", "1"}), fn({"1", "1"}), sample);
  CHECK(le.f_le_g);
  CHECK(le.transform_f_le_g);
  CHECK(le.dirac_f_le_g);
  CHECK_FALSE(le.transform_g_le_f);
  CHECK(le.consistent());

  const auto same = check_isotone(kAB, fn({"0", "1"}), fn({"0", "1"}), sample);
  CHECK(same.transform_f_le_g);
  CHECK(same.transform_g_le_f);
  CHECK(same.consistent());

  const auto inc = check_isotone(kAB, fn({"0", "2"}), fn({"1", "1"}), sample);
  CHECK_FALSE(inc.f_le_g);
  CHECK_FALSE(inc.g_le_f);
  CHECK(inc.consistent());
  CHECK(inc.summary().find("neither direction's hypothesis holds") != std::string::npos);
}

TEST_CASE("minimization over the simplex") {
  const auto r = minimize_equivalence(kX3, fn({"3", "1", "2"}));
  CHECK(r.infimum == 1);
  CHECK(r.simplex_minimum == 1);
  CHECK(r.argmin == std::vector<std::size_t>{1});
  CHECK(r.dirac_argmin == std::vector<std::size_t>{1});
  CHECK(r.lp_minimizer == dirac(3, 1));
  CHECK(r.passed());

  const auto flat = minimize_equivalence(kX3, ExtFun::constant(3, 4));
  CHECK(flat.simplex_minimum == 4);
  CHECK(flat.dirac_argmin == std::vector<std::size_t>{0, 1, 2});
  CHECK(flat.passed());

  const auto seg = minimize_equivalence(kX3, fn({"0", "0", "7"}));
  CHECK(seg.dirac_argmin == std::vector<std::size_t>{0, 1});
  CHECK(seg.minimizer_in_face);
  CHECK(seg.lp_minimizer[2] == 0);
  CHECK(seg.passed());

  const auto ext = minimize_equivalence(kX3, fn({"+inf", "5", "2"}));
  CHECK(ext.simplex_minimum == 2);
  CHECK(ext.dirac_argmin == std::vector<std::size_t>{2});
  CHECK(ext.passed());
}

TEST_CASE("perturbation") {
  const auto sample = sample_simplex(2, kDefaultSampleCount, 7);
  const ExtFun f = fn({"0", "1"});
  const auto r = perturbation_principle(kAB, f, fn({"1", "-1"}), sample);
  CHECK(r.perturbed.argmin == std::vector<std::size_t>{1});
  CHECK(r.perturbed.dirac_argmin == std::vector<std::size_t>{1});
  CHECK(r.passed());

  const auto none = perturbation_principle(kAB, f, fn({"0", "0"}), sample);
  CHECK(none.perturbed.dirac_argmin == minimize_equivalence(kAB, f).dirac_argmin);
  CHECK(none.passed());

  const auto flat = perturbation_principle(kAB, f, fn({"0", "-1"}), sample);
  CHECK(flat.perturbed.dirac_argmin == std::vector<std::size_t>{0, 1});
  CHECK(flat.passed());
}

TEST_CASE("minimizing sequences lift") {
  const Space abc({"a", "b", "c"});
  const ExtFun f = fn({"0", "1/10", "5"});
  const auto r = minimizing_sequence_lift(abc, f, Rational(1, 10));
  CHECK(r.near_minimizers == std::vector<std::size_t>{0, 1});
  CHECK(r.passed());
  CHECK(minimizing_sequence_lift(abc, f, 1000).near_minimizers == std::vector<std::size_t>{0, 1, 2});
  const auto exact = minimizing_sequence_lift(abc, f, 0);
  CHECK(exact.near_minimizers == std::vector<std::size_t>{0});
  CHECK(exact.passed());
  CHECK_THROWS_AS(minimizing_sequence_lift(abc, f, -1), PreconditionError);
}
