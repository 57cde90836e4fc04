// Acceptance gate. Runs each criterion at exact tolerance, prints one line per
// criterion and exits nonzero if any fails. Worked-example concordance runs
// first; a mismatch there stops the run before the identity checks.

#include "concordance.hpp"
#include "oracles.hpp"
#include "random.hpp"

#include "minlin/cli/instance.hpp"
#include "minlin/cli/suite.hpp"
#include "minlin/duality.hpp"
#include "minlin/function_class.hpp"
#include "minlin/oracle.hpp"
#include "minlin/sampling.hpp"
#include "minlin/transform.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace minlin;
using minlin::testing::RandomSource;

namespace {

constexpr std::uint64_t kBaseSeed = 20240601;

struct Outcome {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++total;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = describe();
    }
  }
  bool ok() const { return total > 0 && passed == total; }
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Outcome(std::uint64_t seed)> run;
};

ExtFun fn(std::initializer_list<const char*> values) {
  std::vector<Extended> out;
  for (const char* v : values) out.push_back(parse_extended(v));
  return ExtFun(std::move(out));
}

FunctionClass alternate_class(std::size_t i) {
  return i % 2 == 0 ? FunctionClass::full() : FunctionClass::lipschitz();
}

Outcome concordance(std::uint64_t) {
  Outcome out;
  for (const auto& item : testing::run_concordance()) {
    out.record(item.ok(), [&] {
      return item.name + ": expected " + item.expected + ", oracle " + item.oracle + ", library " +
             item.library;
    });
  }
  return out;
}

Outcome biconjugation(std::uint64_t seed) {
  RandomSource rng(seed);
  Outcome out;
  for (std::size_t i = 0; i < 500; ++i) {
    const std::size_t n = 2 + i % 9;
    const Space space = Space::indexed(n, rng.metric(n));
    const ExtFun f = i % 2 == 0 ? rng.real_function(n) : rng.extended_function(n, 30);
    for (const auto& cls : {FunctionClass::full(), FunctionClass::lipschitz()}) {
      const ExtFun bb = biconjugate(space, f, cls);
      out.record(bb == f, [&] { return "f = " + f.str() + ", f^xx = " + bb.str(); });
    }
  }
  return out;
}

Outcome hypothesis_necessity(std::uint64_t) {
  Outcome out;
  const Space space({"a", "b"});
  const auto cone = FunctionClass::finite_cone(2, {fn({"0", "1"})}, true);
  const ExtFun f = fn({"5", "0"});

  const auto report = check_biconjugation(space, f, cone);
  out.record(report.biconjugate && *report.biconjugate == fn({"0", "0"}),
             [&] { return "f^xx = " + (report.biconjugate ? report.biconjugate->str() : "none"); });
  out.record(report.gap_points == std::vector<std::size_t>{0}, [] { return "gap not at a"; });

  const auto h = check_property_H_all(space, cone);
  const BumpWitness* fail = h.first_failure();
  out.record(fail && fail->point == 0 && fail->neighborhood == std::vector<std::size_t>{0},
             [] { return "(H) failure not reported at (a, {a})"; });
  out.record(!report.property_H && !report.equal(), [] { return "gap and (H) failure do not co-occur"; });

  const auto suite = cli::run_suite(cli::parse_instance(R"({
    "points": ["a", "b"],
    "class": {"kind": "finite_cone", "generators": [["0", "1"]], "affine_closed": true},
    "functions": {"f": ["5", "0"]},
    "expect_fail": ["biconjugation"]
  })"),
                                    cli::Suite::Biconjugation, 0);
  bool gap_flagged = false;
  bool h_flagged = false;
  for (const auto& item : suite.items) {
    if (item.status != cli::Status::Fail || !item.expected_failure) continue;
    const bool note = item.detail.find("hypothesis (H) fails: expected") != std::string::npos;
    gap_flagged = gap_flagged || (note && item.detail.find("(0, 0) < f = (5, 0)") != std::string::npos);
    h_flagged = h_flagged || (note && item.detail.find("(a, {a})") != std::string::npos);
  }
  out.record(gap_flagged && h_flagged && !suite.all_passed(),
             [] { return "suite does not flag both the gap and the (H) failure"; });
  return out;
}

Outcome inf_convolution(std::uint64_t seed) {
  RandomSource rng(seed);
  Outcome out;
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 7;
    const ExtFun f = rng.real_function(n);
    const ExtFun g = rng.real_function(n);
    const ExtFun theta = rng.real_function(n);
    const auto ic = infconv_eval(f, g, theta);
    const Rational direct = testing::direct_conjugate(f + g, theta);
    const Rational attained =
        testing::direct_conjugate(f, ic.xi) + testing::direct_conjugate(g, theta - ic.xi);
    out.record(ic.value == direct && attained == direct && conjugate(f + g, theta).value == direct, [&] {
      return "f = " + f.str() + ", g = " + g.str() + ", theta = " + theta.str() +
             ": infconv = " + to_string(ic.value) + ", (f+g)^x = " + to_string(direct);
    });
  }
  return out;
}

Outcome minimax(std::uint64_t seed) {
  RandomSource rng(seed);
  Outcome out;
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 7;
    const ExtFun f = i % 3 == 2 ? rng.extended_function(n, 30) : rng.real_function(n);
    const ExtFun xi = rng.real_function(n);
    const auto r = minimax_identity_check(f, xi);
    const Rational direct = testing::direct_conjugate(f, xi);
    const bool minorant_ok = r.optimal_minorant.pointwise_le(f) &&
                             testing::direct_conjugate(r.optimal_minorant, xi) == r.via_minorants;
    out.record(r.via_minorants == direct && r.direct == direct && minorant_ok, [&] {
      return "f = " + f.str() + ", xi = " + xi.str() + ": LP " + to_string(r.via_minorants) +
             ", f^x = " + to_string(direct);
    });
  }
  return out;
}

Outcome decomposition(std::uint64_t seed) {
  RandomSource rng(seed);
  Outcome out;
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 7;
    const Space space = Space::indexed(n, rng.metric(n));
    const ExtFun f = rng.real_function(n);
    const ExtFun g = rng.real_function(n);
    const ExtFun phi = (f + g) - ExtFun::real(rng.real_vector(n, 0, 3));
    for (const auto& cls : {FunctionClass::full(), FunctionClass::lipschitz()}) {
      const auto d = sum_decompose(space, phi, f, g, cls);
      const bool exact = d.first.pointwise_le(f) && d.second.pointwise_le(g) &&
                         d.first + d.second == phi && contains(space, cls, d.first).member &&
                         contains(space, cls, d.second).member;
      out.record(exact && certify_decomposition(space, phi, f, g, cls, d), [&] {
        return std::string(to_string(cls.kind())) + ": phi = " + phi.str() + " -> " + d.first.str() +
               " + " + d.second.str();
      });
    }
  }
  return out;
}

Outcome cone_morphism(std::uint64_t seed) {
  RandomSource rng(seed);
  Outcome out;
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 7;
    const Space space = Space::indexed(n, rng.metric(n));
    const ExtFun f = rng.real_function(n);
    const ExtFun g = rng.real_function(n);
    Rational alpha = rng.rational(0, 3);
    Rational beta = rng.rational(0, 3);
    switch (i % 4) {
      case 0: alpha = 0; beta = 0; break;
      case 1: alpha = 1; beta = 1; break;
      case 2: alpha = 0; break;
      default: if (i % 8 == 3) beta = 0; break;
    }
    const auto sample = sample_simplex(n, kDefaultSampleCount, derive_seed(seed, i));
    const auto cls = alternate_class(i);
    const auto report = check_cone_morphism(space, f, g, alpha, beta, sample, cls);
    const ExtFun combo = f.scaled(alpha) + g.scaled(beta);
    for (const auto& c : report.checks) {
      out.record(c.holds() && c.lhs == Extended(pairing(c.measure, combo)), [&] {
        return "alpha = " + to_string(alpha) + ", beta = " + to_string(beta) + ", Q = " + c.measure.str() +
               ": " + c.lhs.str() + " vs " + c.rhs.str();
      });
    }
    out.record(report.checks.size() == kDefaultSampleCount, [] { return "short sample"; });
  }
  return out;
}

Outcome minimization(std::uint64_t seed) {
  RandomSource rng(seed);
  Outcome out;
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 7;
    const Space space = Space::indexed(n, rng.metric(n));
    const ExtFun f = i % 2 == 0 ? rng.tied_function(n, 30) : rng.extended_function(n, 30);
    const auto r = minimize_equivalence(space, f, alternate_class(i));
    const auto vm = oracle::vertex_enumerate_min(f);
    out.record(r.passed() && r.simplex_minimum == vm.value && vm.argmin == r.dirac_argmin &&
                   vm.argmin == r.argmin,
               [&] {
                 return "f = " + f.str() + ": LP min " + to_string(r.simplex_minimum) + ", scan " +
                        to_string(vm.value);
               });
  }
  return out;
}

Outcome sigma_representation(std::uint64_t seed) {
  RandomSource rng(seed);
  Outcome out;
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 7;
    const Space space = Space::indexed(n);
    const ExtFun f = rng.real_function(n);
    const DeltaSet a = function_to_delta_set(f);
    for (const auto& q : sample_simplex(n, kDefaultSampleCount, derive_seed(seed, i))) {
      const Extended sigma = support_function(a, q).value;
      const Extended transform = fenchel_transform(space, f, FunctionClass::full(), q).value;
      out.record(sigma == transform && sigma == testing::closed_form_transform(f, q), [&] {
        return "f = " + f.str() + ", Q = " + q.str() + ": sigma " + sigma.str() + ", F " + transform.str();
      });
    }
  }
  for (std::size_t i = 0; i < 100; ++i) {
    const ExtFun f = rng.real_function(1 + i % 10);
    const ExtFun back = delta_set_to_function(function_to_delta_set(f));
    out.record(back == f, [&] { return "round trip " + f.str() + " -> " + back.str(); });
  }
  return out;
}

Outcome domain_confinement(std::uint64_t seed) {
  RandomSource rng(seed);
  Outcome out;
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 7;
    const Space space = Space::indexed(n, rng.metric(n));
    const ExtFun f = i % 2 == 0 ? rng.real_function(n) : rng.extended_function(n, 30);
    const Measure q = sample_outside_simplex(n, 1, derive_seed(seed, i)).front();
    const auto cls = alternate_class(i);
    const auto tv = fenchel_transform(space, f, cls, q);
    out.record(tv.value.is_infinite() && certifies_divergence(space, f, cls, q, tv.ray) &&
                   testing::full_class_ray_diverges(f, q, tv.ray),
               [&] { return "f = " + f.str() + ", Q = " + q.str() + ": F = " + tv.value.str(); });
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC10", "oracle concordance on worked examples", 30, concordance},
      {"AC1", "biconjugation f^xx = f (full, Lipschitz)", 10, biconjugation},
      {"AC2", "hypothesis necessity: gap iff (H) fails", 1, hypothesis_necessity},
      {"AC3", "inf-convolution (f+g)^x = f^x <> g^x", 30, inf_convolution},
      {"AC4", "minimax inf_{phi<=f} phi^x(xi) = f^x(xi)", 20, minimax},
      {"AC5", "decomposition A(f+g) = A(f) + A(g)", 10, decomposition},
      {"AC6", "cone morphism T(af+bg) = aT(f)+bT(g)", 30, cone_morphism},
      {"AC7", "conservation of infima, argmin correspondence", 20, minimization},
      {"AC8", "support function representation, delta-set round trip", 20, sigma_representation},
      {"AC9", "domain confinement off the simplex", 10, domain_confinement},
  };

  std::printf("acceptance: base seed %llu, exact rational tolerance\n",
              static_cast<unsigned long long>(kBaseSeed));
  bool all_ok = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Criterion& c = criteria[k];
    const std::uint64_t seed = derive_seed(kBaseSeed, k);
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    std::string error;
    try {
      outcome = c.run(seed);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool ok = error.empty() && outcome.ok() && in_time;
    all_ok = all_ok && ok;

    std::printf("[%s] %-4s %-56s %zu/%zu exact  %.2fs (limit %.0fs)\n", ok ? "PASS" : "FAIL",
                c.id.c_str(), c.title.c_str(), outcome.passed, outcome.total, seconds, c.limit_seconds);
    if (!error.empty()) std::printf("       exception: %s\n", error.c_str());
    if (!outcome.first_failure.empty()) std::printf("       first failure: %s\n", outcome.first_failure.c_str());
    if (!in_time) std::printf("       runtime limit exceeded\n");

    if (k == 0 && !ok) {
      std::printf("concordance failed; identity criteria not run\n");
      return 1;
    }
  }
  std::printf("acceptance: %s\n", all_ok ? "all criteria pass" : "FAILED");
  return all_ok ? 0 : 1;
}
