#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace weyl::cli {

/// Runs task(0) ... task(count − 1) on up to `jobs` threads (0 = hardware concurrency).
/// Tasks must not share mutable state. The first exception by task index is rethrown
/// after every task has finished.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

/// Independent 64-bit seed for sample `index` of stream `stream` (splitmix64 mixing), so that
/// results do not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

} // namespace weyl::cli
