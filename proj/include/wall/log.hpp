#pragma once

#include <memory>

#include <spdlog/logger.h>

namespace wall {

/// Shared "wall" logger; writes to stderr so stdout stays machine-readable.
spdlog::logger& log();

}  // namespace wall
