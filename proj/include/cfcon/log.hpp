#pragma once

#include <string>

namespace cfcon {

enum class LogLevel { error = 0, info = 1, debug = 2 };

// Read once from the LOG_LEVEL environment variable (error|info|debug);
// defaults to error. Messages go to stderr only.
LogLevel log_level();
void log(LogLevel level, const std::string& message);

}  // namespace cfcon
