#pragma once

#include <cstddef>

namespace novikov {

/// Row operations allowed in the elimination between residual equations.
/// Enough for the free 4-step nilpotent algebra on two generators.
inline constexpr std::size_t kDefaultEffort = 4096;

}  // namespace novikov
