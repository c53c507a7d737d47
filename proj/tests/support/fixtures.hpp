#pragma once

#include <filesystem>
#include <string>

#ifndef LOGSYNTH_FIXTURES_DIR
#error "LOGSYNTH_FIXTURES_DIR must be defined by the build"
#endif

namespace logsynth::test {

inline std::filesystem::path fixture_path(const std::string& name) {
    return std::filesystem::path(LOGSYNTH_FIXTURES_DIR) / name;
}

}  // namespace logsynth::test
