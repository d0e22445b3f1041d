#include "netload/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "netload/csv.hpp"

namespace netload {

std::string iso8601_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string manifest_text(const RunManifest& m) {
    std::string out;
    out += "command = " + m.command + "\n";
    out += "tool_version = " + std::string(kToolVersion) + "\n";
    out += "seed = " + std::to_string(m.seed) + "\n";
    out += "started = " + m.started + "\n";
    out += "ended = " + m.ended + "\n";
    for (const auto& [key, value] : m.config) out += key + " = " + value + "\n";
    for (const std::string& path : m.outputs) out += "output = " + path + "\n";
    return out;
}

void write_manifest(const RunManifest& m, const std::string& path) {
    write_text_file(path, manifest_text(m));
}

} // namespace netload
