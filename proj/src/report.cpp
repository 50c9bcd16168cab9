#include "knotconc/report.hpp"

#include <algorithm>
#include <sstream>

namespace knotconc {

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["params"] = params;
    j["rows"] = rows;
    j["verdict"] = verdict ? nlohmann::ordered_json(*verdict) : nlohmann::ordered_json(nullptr);
    return j;
}

std::string Report::to_json_text() const { return to_json().dump(2) + "\n"; }

namespace {

std::string cell_text(const nlohmann::ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

} // namespace

std::string Report::to_text() const {
    std::ostringstream os;
    os << "# " << command;
    for (const auto& [key, value] : params.items()) os << " " << key << "=" << cell_text(value);
    os << "\n";
    if (!rows.empty()) {
        std::vector<std::string> keys; // union over rows, first-seen order
        for (const auto& row : rows)
            for (const auto& [key, value] : row.items())
                if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
        std::vector<std::size_t> width(keys.size());
        std::vector<std::vector<std::string>> cells;
        for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
        for (const auto& row : rows) {
            std::vector<std::string> line;
            for (std::size_t c = 0; c < keys.size(); ++c) {
                std::string s = row.contains(keys[c]) ? cell_text(row[keys[c]]) : "";
                width[c] = std::max(width[c], s.size());
                line.push_back(std::move(s));
            }
            cells.push_back(std::move(line));
        }
        auto emit_line = [&](const std::vector<std::string>& line) {
            for (std::size_t c = 0; c < line.size(); ++c) {
                os << line[c];
                if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
            }
            os << "\n";
        };
        emit_line(keys);
        for (const auto& line : cells) emit_line(line);
    }
    if (verdict) os << "verdict: " << *verdict << "\n";
    return os.str();
}

} // namespace knotconc
