#pragma once

#include <cstdarg>

namespace saacbr {

enum class LogLevel : int { Quiet = 0, Normal = 1, Debug = 2 };

void set_log_level(LogLevel level);
LogLevel log_level();

// printf-style messages to stderr; info prints at Normal+, debug at Debug only.
void log_info(const char* fmt, ...);
void log_debug(const char* fmt, ...);

inline bool debug_enabled() { return log_level() == LogLevel::Debug; }

} // namespace saacbr
