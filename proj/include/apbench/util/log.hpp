#pragma once

#include <functional>
#include <string>

namespace apbench::log {

// Warnings carry auditability duties (dropped selector ids, clamped judge
// scores, normalized annotations) so they go through one sink tests can
// capture. Default sink writes to stderr.

using Sink = std::function<void(const std::string&)>;

void warn(const std::string& message);

// Replaces the sink; returns the previous one. Pass nullptr to restore stderr.
Sink set_sink(Sink sink);

}  // namespace apbench::log
