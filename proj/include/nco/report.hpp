#ifndef NCO_REPORT_HPP
#define NCO_REPORT_HPP

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace nco {

// Machine-readable command report: per-check status plus output tables.
// Identical invocations produce identical reports except for elapsed_ms,
// which golden comparisons must ignore.
struct Report {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    struct Table {
        std::string name;
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;
    };

    std::string command;
    std::vector<Check> checks;
    std::vector<Table> tables;
    double elapsed_ms = 0.0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({name, ok, detail});
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["pass"] = pass();
        j["elapsed_ms"] = elapsed_ms;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["tables"] = nlohmann::json::array();
        for (const auto& t : tables) {
            nlohmann::json jt;
            jt["name"] = t.name;
            jt["header"] = t.header;
            jt["rows"] = t.rows;
            j["tables"].push_back(jt);
        }
        return j;
    }

    void print_human(std::ostream& os) const {
        os << "# " << command << "\n";
        for (const auto& t : tables) {
            os << "\n" << t.name << "\n";
            std::vector<std::size_t> width(t.header.size(), 0);
            auto widen = [&](const std::vector<std::string>& row) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    width[i] = std::max(width[i], row[i].size());
            };
            widen(t.header);
            for (const auto& r : t.rows) widen(r);
            auto line = [&](const std::vector<std::string>& row) {
                os << "  ";
                for (std::size_t i = 0; i < row.size(); ++i)
                    os << row[i] << std::string(width[i] - row[i].size() + 2, ' ');
                os << "\n";
            };
            line(t.header);
            for (const auto& r : t.rows) line(r);
        }
        if (!checks.empty()) os << "\n";
        for (const auto& c : checks) {
            os << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
            if (!c.detail.empty()) os << ": " << c.detail;
            os << "\n";
        }
        os << "\n" << (pass() ? "OK" : "FAILED") << " (" << elapsed_ms << " ms)\n";
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace nco

#endif
