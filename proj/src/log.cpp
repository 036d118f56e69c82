#include "cfcon/log.hpp"

#include <cstdlib>
#include <iostream>

namespace cfcon {

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("LOG_LEVEL");
        if (!env) return LogLevel::error;
        const std::string v(env);
        if (v == "debug") return LogLevel::debug;
        if (v == "info") return LogLevel::info;
        return LogLevel::error;
    }();
    return level;
}

void log(LogLevel level, const std::string& message) {
    if (level > log_level()) return;
    static const char* names[] = {"error", "info", "debug"};
    std::cerr << "[" << names[static_cast<int>(level)] << "] " << message << '\n';
}

}  // namespace cfcon
