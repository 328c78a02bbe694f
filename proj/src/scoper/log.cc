#include "scoper/log.h"

#include <cstdlib>
#include <cstring>

namespace scoper::log {

Level threshold() {
    static Level level = [] {
        const char* env = std::getenv("SCOPER_LOG");
        if (env && std::strcmp(env, "debug") == 0)
            return Level::Debug;
        if (env && std::strcmp(env, "info") == 0)
            return Level::Info;
        return Level::Error;
    }();
    return level;
}

void write(Level level, const std::string& message) {
    if (level > threshold())
        return;
    const char* tag = level == Level::Error ? "error"
                      : level == Level::Info ? "info"
                                             : "debug";
    std::cerr << "[" << tag << "] " << message << "\n";
}

}  // namespace scoper::log
