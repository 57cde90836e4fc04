#pragma once

#include "minlin/cli/instance.hpp"
#include "minlin/cli/report.hpp"

#include <cstdint>
#include <string_view>

namespace minlin::cli {

enum class Suite { Biconjugation, InfConv, Minimax, Transform, Isotone, Minimize, Delta, All };

/// Throws InvalidInput for an unknown name.
Suite parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

/// Runs the identity checks of a suite on every applicable named object.
/// Items appear in a fixed order and all pseudo-random choices derive from
/// `seed`, so the report is a pure function of (instance, suite, seed).
Report run_suite(const Instance& instance, Suite suite, std::uint64_t seed);

}  // namespace minlin::cli
