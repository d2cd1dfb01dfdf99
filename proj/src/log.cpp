#include "saacbr/log.hpp"

#include <atomic>
#include <cstdio>

namespace saacbr {

namespace {
std::atomic<int> g_level{static_cast<int>(LogLevel::Normal)};

void vlog(const char* prefix, const char* fmt, va_list args) {
    std::fprintf(stderr, "%s", prefix);
    std::vfprintf(stderr, fmt, args);
    std::fputc('\n', stderr);
}
} // namespace

void set_log_level(LogLevel level) { g_level.store(static_cast<int>(level)); }

LogLevel log_level() { return static_cast<LogLevel>(g_level.load()); }

void log_info(const char* fmt, ...) {
    if (g_level.load() < static_cast<int>(LogLevel::Normal)) return;
    va_list args;
    va_start(args, fmt);
    vlog("[saacbr] ", fmt, args);
    va_end(args);
}

void log_debug(const char* fmt, ...) {
    if (g_level.load() < static_cast<int>(LogLevel::Debug)) return;
    va_list args;
    va_start(args, fmt);
    vlog("[saacbr:debug] ", fmt, args);
    va_end(args);
}

} // namespace saacbr
