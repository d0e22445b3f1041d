#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace netload {

inline constexpr const char* kToolVersion = "0.1.0";

// Flat key-value record of one CLI run, written next to the run's outputs so
// any result can be regenerated from its manifest (timestamps aside).
struct RunManifest {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> config; // ordered snapshot
    std::vector<std::string> outputs;
    std::string started;
    std::string ended;
};

std::string manifest_text(const RunManifest& manifest);
void write_manifest(const RunManifest& manifest, const std::string& path);
std::string iso8601_now();

} // namespace netload
