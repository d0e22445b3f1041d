#pragma once

#include <string>
#include <utility>
#include <vector>

namespace netload {

// Two numeric columns per row. A leading non-numeric header line is skipped;
// any other unparsable row raises with its 1-based line number.
std::vector<std::pair<double, double>> read_pair_csv(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace netload
