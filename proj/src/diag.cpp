// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "lttp/diag.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace lttp {

namespace {

std::mutex g_warn_mutex;

WarnSink& sink_slot() {
    static WarnSink sink = [](std::string_view msg) {
        std::cerr << "warning: " << msg << '\n';
    };
    return sink;
}

} // namespace

WarnSink set_warn_sink(WarnSink sink) {
    std::lock_guard lock(g_warn_mutex);
    WarnSink prev = std::move(sink_slot());
    sink_slot() = std::move(sink);
    return prev;
}

void warn(std::string_view msg) {
    std::lock_guard lock(g_warn_mutex);
    if (sink_slot()) sink_slot()(msg);
}

} // namespace lttp
