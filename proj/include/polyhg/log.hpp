#pragma once

#include <string>

namespace polyhg {

enum class LogLevel { Quiet = 0, Error = 1, Warn = 2, Info = 3, Debug = 4 };

/// From POLYHG_LOG (quiet|error|warn|info|debug, default warn), read once.
[[nodiscard]] LogLevel log_level();
void set_log_level(LogLevel level);
/// Writes "[level] message" to stderr when `level` is enabled.
void log(LogLevel level, const std::string& message);

}  // namespace polyhg
