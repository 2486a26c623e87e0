#include "polyhg/log.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

namespace polyhg {

namespace {

std::optional<LogLevel>& current() {
    static std::optional<LogLevel> level;
    return level;
}

LogLevel from_env() {
    const char* v = std::getenv("POLYHG_LOG");
    if (!v) return LogLevel::Warn;
    const std::string s = v;
    if (s == "quiet") return LogLevel::Quiet;
    if (s == "error") return LogLevel::Error;
    if (s == "info") return LogLevel::Info;
    if (s == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
}

const char* name(LogLevel l) {
    switch (l) {
        case LogLevel::Error: return "error";
        case LogLevel::Warn: return "warn";
        case LogLevel::Info: return "info";
        case LogLevel::Debug: return "debug";
        default: return "";
    }
}

}  // namespace

LogLevel log_level() {
    if (!current()) current() = from_env();
    return *current();
}

void set_log_level(LogLevel level) { current() = level; }

void log(LogLevel level, const std::string& message) {
    if (level == LogLevel::Quiet || level > log_level()) return;
    std::cerr << "[" << name(level) << "] " << message << "\n";
}

}  // namespace polyhg
