#include "fanoku/report.hpp"

#include "fanoku/error.hpp"

#include <algorithm>

namespace fanoku {

bool Report::verdict() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::expect_equal(std::string description, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    checks.push_back({std::move(description), std::move(expected), std::move(actual), pass});
}

void Report::expect_true(std::string description, bool condition, std::string actual) {
    if (actual.empty()) actual = condition ? "true" : "false";
    checks.push_back({std::move(description), "true", std::move(actual), condition});
}

json to_json(const Report& r) {
    json checks = json::array();
    for (const Check& c : r.checks) {
        checks.push_back(
            json{{"description", c.description}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    }
    return json{{"schema_version", Report::schema_version},
                {"scenario", r.scenario},
                {"d", r.d},
                {"checks", checks},
                {"verdict", r.verdict() ? "pass" : "fail"}};
}

Report report_from_json(const json& j) {
    if (j.at("schema_version").get<int>() != Report::schema_version) throw InvalidInput("unsupported schema_version");
    Report r;
    r.scenario = j.at("scenario").get<std::string>();
    r.d = j.at("d").get<int>();
    for (const auto& c : j.at("checks")) {
        r.checks.push_back({c.at("description").get<std::string>(), c.at("expected").get<std::string>(),
                            c.at("actual").get<std::string>(), c.at("pass").get<bool>()});
    }
    return r;
}

namespace {

std::string md_cell(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_markdown(const std::vector<Report>& reports) {
    std::string out;
    for (const Report& r : reports) {
        out += "## " + r.scenario + " (d = " + std::to_string(r.d) + "): " + (r.verdict() ? "pass" : "fail") + "\n\n";
        out += "| check | expected | actual | pass |\n|---|---|---|---|\n";
        for (const Check& c : r.checks) {
            out += "| " + md_cell(c.description) + " | " + md_cell(c.expected) + " | " + md_cell(c.actual) + " | " +
                   (c.pass ? "yes" : "no") + " |\n";
        }
        out += "\n";
    }
    return out;
}

std::string to_csv(const std::vector<Report>& reports) {
    std::string out = "scenario,d,description,expected,actual,pass\n";
    for (const Report& r : reports) {
        for (const Check& c : r.checks) {
            out += csv_cell(r.scenario) + "," + std::to_string(r.d) + "," + csv_cell(c.description) + "," +
                   csv_cell(c.expected) + "," + csv_cell(c.actual) + "," + (c.pass ? "true" : "false") + "\n";
        }
    }
    return out;
}

}  // namespace fanoku
