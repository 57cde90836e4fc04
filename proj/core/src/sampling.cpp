#include "minlin/sampling.hpp"

#include <random>

namespace minlin {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Raw engine output only; distribution objects are not portable across
// standard libraries.
Measure simplex_point(std::size_t n, std::mt19937_64& rng) {
  std::vector<Rational> w(n, Rational(0));
  if (rng() % 5 == 0) {
    w[rng() % n] = 1;
    return Measure(std::move(w));
  }
  std::uint64_t total = 0;
  std::vector<std::uint64_t> raw(n);
  for (auto& r : raw) {
    r = rng() % 7;
    total += r;
  }
  if (total == 0) {
    raw[rng() % n] = 1;
    total = 1;
  }
  for (std::size_t i = 0; i < n; ++i) w[i] = Rational(raw[i]) / Rational(total);
  return Measure(std::move(w));
}

}  // namespace

std::vector<Measure> sample_simplex(std::size_t num_points, std::size_t count,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Measure> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(simplex_point(num_points, rng));
  return out;
}

std::vector<Measure> sample_outside_simplex(std::size_t num_points, std::size_t count,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Measure> out;
  out.reserve(count);
  while (out.size() < count) {
    std::vector<Rational> w = simplex_point(num_points, rng).weights();
    if (num_points >= 2 && rng() % 2 == 0) {
      // Move mass so that one weight turns negative; total mass stays one.
      const std::size_t i = rng() % num_points;
      const std::size_t j = (i + 1 + rng() % (num_points - 1)) % num_points;
      const Rational target = -Rational(1 + rng() % 4, 1 + rng() % 3);
      w[j] += w[i] - target;
      w[i] = target;
    } else {
      static const Rational kFactors[] = {Rational(0), Rational(1, 2), Rational(3, 2),
                                          Rational(2), Rational(5, 3)};
      const Rational& factor = kFactors[rng() % 5];
      for (auto& v : w) v *= factor;
    }
    Measure q(std::move(w));
    if (!in_simplex(q)) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace minlin
