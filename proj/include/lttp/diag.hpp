// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string_view>

namespace lttp {

/// Sink for warning diagnostics. The default prints "warning: <msg>" on
/// stderr, one line per call, so output stays machine-parsable.
using WarnSink = std::function<void(std::string_view)>;

/// Replace the process-wide warning sink. Returns the previous sink.
/// Intended for test capture and for the CLI; not thread-safe against
/// concurrent warn() calls, so install sinks before spawning workers.
WarnSink set_warn_sink(WarnSink sink);

/// Emit one warning line through the active sink.
void warn(std::string_view msg);

} // namespace lttp
