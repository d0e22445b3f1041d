#include "netload/csv.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace netload {

namespace {

bool parse_pair(const std::string& line, double& a, double& b) {
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) return false;
    const std::string left = line.substr(0, comma);
    const std::string right = line.substr(comma + 1);
    char* end = nullptr;
    errno = 0;
    a = std::strtod(left.c_str(), &end);
    if (end == left.c_str() || errno == ERANGE) return false;
    while (*end == ' ' || *end == '\t') ++end;
    if (*end != '\0') return false;
    errno = 0;
    b = std::strtod(right.c_str(), &end);
    if (end == right.c_str() || errno == ERANGE) return false;
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    return *end == '\0';
}

} // namespace

std::vector<std::pair<double, double>> read_pair_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::pair<double, double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        double a = 0.0, b = 0.0;
        if (!parse_pair(line, a, b)) {
            if (line_no == 1) continue; // header
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": cannot parse CSV row '" + line + "'");
        }
        rows.emplace_back(a, b);
    }
    return rows;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace netload
