#pragma once

#include "fanoku/io.hpp"

#include <string>
#include <vector>

namespace fanoku {

struct Check {
    std::string description;
    std::string expected;
    std::string actual;
    bool pass = false;

    friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
    static constexpr int schema_version = 1;

    std::string scenario;
    int d = 0;
    std::vector<Check> checks;

    bool verdict() const;

    /// Records a check; pass is expected == actual.
    void expect_equal(std::string description, std::string expected, std::string actual);
    void expect_true(std::string description, bool condition, std::string actual = {});

    friend bool operator==(const Report&, const Report&) = default;
};

json to_json(const Report& r);
Report report_from_json(const json& j);

std::string to_markdown(const std::vector<Report>& reports);
std::string to_csv(const std::vector<Report>& reports);

}  // namespace fanoku
