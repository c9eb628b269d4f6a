#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace anyonsim::report {

inline constexpr int kSchemaVersion = 1;

/// Round to `digits` significant digits so reports are byte-stable.
double round_sig(double x, int digits = 12);

struct InvariantCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

nlohmann::json make_report(const std::string& scenario, nlohmann::json config_echo,
                           nlohmann::json results,
                           const std::vector<InvariantCheck>& checks);

void write_text(const std::string& path, const std::string& text);  // "" or "-" -> stdout

}  // namespace anyonsim::report
