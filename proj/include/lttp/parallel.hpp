// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace lttp {

/// Run fn(i) for i in [0, n) across up to `workers` threads. Work items are
/// handed out by an atomic counter; callers write results into slot i only,
/// which keeps outputs independent of the schedule. The first exception
/// thrown by any worker is rethrown on the calling thread after join.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

/// std::thread::hardware_concurrency with a floor of 1.
int default_workers();

} // namespace lttp
