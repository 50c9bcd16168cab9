#ifndef KNOTCONC_REPORT_HPP
#define KNOTCONC_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace knotconc {

// Structured command output. Exact values always travel as strings
// ("num/den" for rationals, decimal for big integers); JSON emission is
// canonical: field order fixed at build time, two-space indent.
struct Report {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<nlohmann::ordered_json> rows;
    std::optional<std::string> verdict;

    nlohmann::ordered_json to_json() const;
    std::string to_json_text() const; // dump(2) + newline
    std::string to_text() const;      // aligned columns
};

} // namespace knotconc

#endif
