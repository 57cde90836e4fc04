#include "minlin/separation.hpp"

#include "minlin/error.hpp"

#include <algorithm>

namespace minlin {

bool SeparationReport::separates() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const SeparatingPair& p) { return p.witness.has_value(); });
}

const SeparatingPair* SeparationReport::first_failure() const {
  for (const auto& p : pairs) {
    if (!p.witness) return &p;
  }
  return nullptr;
}

SeparationReport separates_points(const Space& space, const FunctionClass& cls) {
  const std::size_t n = space.size();
  if (cls.kind() == FunctionClass::Kind::Lipschitz && !space.has_metric()) {
    throw PreconditionError("Lipschitz class requires a metric");
  }
  SeparationReport report;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      SeparatingPair pair{x, y, std::nullopt};
      switch (cls.kind()) {
        case FunctionClass::Kind::Full: {
          std::vector<Rational> indicator(n, Rational(0));
          indicator[x] = 1;
          pair.witness = ExtFun::real(indicator);
          break;
        }
        case FunctionClass::Kind::Lipschitz: {
          std::vector<Rational> dist(n);
          for (std::size_t z = 0; z < n; ++z) dist[z] = space.distance(x, z);
          pair.witness = ExtFun::real(dist);
          break;
        }
        case FunctionClass::Kind::FiniteCone:
          for (const auto& g : cls.generators()) {
            if (g[x] != g[y]) {
              pair.witness = g;
              break;
            }
          }
          break;
      }
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

}  // namespace minlin
