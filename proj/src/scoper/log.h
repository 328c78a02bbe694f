#pragma once

#include <iostream>
#include <string>

namespace scoper::log {

enum class Level { Error = 0, Info = 1, Debug = 2 };

// Threshold comes from the SCOPER_LOG environment variable
// (error | info | debug); default is error.
Level threshold();

void write(Level level, const std::string& message);

inline void error(const std::string& message) { write(Level::Error, message); }
inline void info(const std::string& message) { write(Level::Info, message); }
inline void debug(const std::string& message) { write(Level::Debug, message); }

}  // namespace scoper::log
