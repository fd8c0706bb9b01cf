#include "apbench/util/log.hpp"

#include <iostream>
#include <mutex>

namespace apbench::log {

namespace {
std::mutex g_mutex;
Sink g_sink;
}  // namespace

void warn(const std::string& message) {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (g_sink) {
        g_sink(message);
    } else {
        std::cerr << "[warn] " << message << '\n';
    }
}

Sink set_sink(Sink sink) {
    std::lock_guard<std::mutex> lock(g_mutex);
    std::swap(g_sink, sink);
    return sink;
}

}  // namespace apbench::log
