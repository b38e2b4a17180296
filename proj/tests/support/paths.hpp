#pragma once

#include <cstdlib>
#include <filesystem>
#include <stdexcept>

inline std::filesystem::path fixtures_root() {
    if (const char* env = std::getenv("FTQC_FIXTURES"); env && *env) {
        return std::filesystem::path(env);
    }
    // Fall back to the source layout when run from the build tree.
    for (auto dir = std::filesystem::current_path(); dir.has_parent_path();
         dir = dir.parent_path()) {
        if (std::filesystem::is_directory(dir / "fixtures" / "presets")) {
            return dir / "fixtures";
        }
        if (dir == dir.parent_path()) break;
    }
    throw std::runtime_error("fixtures directory not found; set FTQC_FIXTURES");
}

inline std::filesystem::path preset_root() { return fixtures_root() / "presets"; }
