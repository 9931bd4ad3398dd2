#pragma once

// Text and JSON forms of characters and stability parameters.
//   "c0,c1,c2,c3"  full character; "c0,c1,c2" truncated.
//   Named classes: O, O(k), I, J, Oline(m), pt; a trailing "[n]" shifts.

#include "fanoku/lattice.hpp"
#include "fanoku/rational.hpp"
#include "fanoku/tiltplane.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace fanoku {

using json = nlohmann::ordered_json;

/// Full character. Three-component input sets c3 = 0.
ChernCharacter<Rational> parse_character(const FanoThreefold<Rational>& X, std::string_view text);

/// Truncated character; accepts anything parse_character accepts.
TruncChar<Rational> parse_trunc(const FanoThreefold<Rational>& X, std::string_view text);

std::vector<Rational> parse_rational_list(std::string_view text, std::size_t expected);

LiZhaoPoint<Rational> parse_sq(std::string_view text);

template <typename Derived>
std::string format_character(const Eigen::MatrixBase<Derived>& ch) {
    std::string s;
    for (int k = 0; k < ch.size(); ++k) {
        if (k) s += ",";
        s += to_string(Rational(ch(k)));
    }
    return s;
}

template <typename Derived>
json character_json(const Eigen::MatrixBase<Derived>& ch) {
    json j = json::object();
    for (int k = 0; k < ch.size(); ++k) j["c" + std::to_string(k)] = to_string(Rational(ch(k)));
    return j;
}

ChernCharacter<Rational> character_from_json(const json& j);

json complex_json(const ExactComplex<Rational>& z);
json slope_json(const Slope<Rational>& s);
std::string slope_string(const Slope<Rational>& s);

template <typename Derived>
json matrix_json(const Eigen::MatrixBase<Derived>& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < M.cols(); ++j) row.push_back(to_string(Rational(M(i, j))));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace fanoku
