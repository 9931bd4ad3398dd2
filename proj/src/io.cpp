#include "fanoku/io.hpp"

#include "fanoku/error.hpp"

#include <cctype>

namespace fanoku {

namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

/// "name(arg)" -> arg as an integer.
long paren_arg(const std::string& s, std::size_t open) {
    if (s.back() != ')') throw InvalidInput("malformed class name: '" + s + "'");
    const Rational r = parse_rational(s.substr(open + 1, s.size() - open - 2));
    if (!is_integer(r)) throw InvalidInput("integer argument expected in '" + s + "'");
    return numerator(r).convert_to<long>();
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text, std::size_t expected) {
    std::vector<Rational> out;
    std::size_t start = 0;
    const std::string s(text);
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(parse_rational(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (expected && out.size() != expected)
        throw InvalidInput("expected " + std::to_string(expected) + " comma-separated rationals in '" + s + "'");
    return out;
}

ChernCharacter<Rational> parse_character(const FanoThreefold<Rational>& X, std::string_view text) {
    std::string s = strip(text);
    if (s.empty()) throw InvalidInput("empty class");
    long shift = 0;
    if (s.back() == ']') {
        const auto open = s.rfind('[');
        if (open == std::string::npos) throw InvalidInput("malformed shift in '" + s + "'");
        const Rational r = parse_rational(s.substr(open + 1, s.size() - open - 2));
        if (!is_integer(r)) throw InvalidInput("integer shift expected in '" + s + "'");
        shift = numerator(r).convert_to<long>();
        s = s.substr(0, open);
    }
    ChernCharacter<Rational> ch;
    if (std::isalpha(static_cast<unsigned char>(s.front()))) {
        if (s == "O") ch = chern_line_bundle(X, 0);
        else if (s == "I") ch = chern_ideal_line(X);
        else if (s == "J") ch = chern_J(X);
        else if (s == "pt") ch = chern_point(X);
        else if (s.rfind("Oline(", 0) == 0) ch = chern_O_line(X, paren_arg(s, 5));
        else if (s.rfind("O(", 0) == 0) ch = chern_line_bundle(X, paren_arg(s, 1));
        else throw InvalidInput("unknown class name '" + s + "'");
    } else {
        const auto parts = parse_rational_list(s, 0);
        if (parts.size() != 3 && parts.size() != 4)
            throw InvalidInput("a class needs 3 or 4 components, got '" + s + "'");
        ch = make_chern<Rational>(parts[0], parts[1], parts[2], parts.size() == 4 ? parts[3] : Rational(0));
    }
    if (shift % 2 != 0) ch = -ch;
    return ch;
}

TruncChar<Rational> parse_trunc(const FanoThreefold<Rational>& X, std::string_view text) {
    return truncate(parse_character(X, text));
}

LiZhaoPoint<Rational> parse_sq(std::string_view text) {
    const auto v = parse_rational_list(text, 2);
    return {v[0], v[1]};
}

ChernCharacter<Rational> character_from_json(const json& j) {
    ChernCharacter<Rational> ch = ChernCharacter<Rational>::Zero();
    for (int k = 0; k < 4; ++k) {
        const std::string key = "c" + std::to_string(k);
        if (j.contains(key)) ch(k) = parse_rational(j.at(key).get<std::string>());
        else if (k < 3) throw InvalidInput("missing " + key);
    }
    return ch;
}

json complex_json(const ExactComplex<Rational>& z) { return json{{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

std::string slope_string(const Slope<Rational>& s) {
    switch (s.kind) {
        case SlopeKind::finite: return to_string(s.value);
        case SlopeKind::plus_infinity: return "+inf";
        case SlopeKind::minus_infinity: return "-inf";
        case SlopeKind::indeterminate: return "indeterminate";
    }
    return "?";
}

json slope_json(const Slope<Rational>& s) { return slope_string(s); }

}  // namespace fanoku
