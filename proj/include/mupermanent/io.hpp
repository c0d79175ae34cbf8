#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <string>

#include "errors.hpp"

namespace muperm::detail {

// Next whitespace-delimited token; '#' starts a comment running to end of line.
// Returns an empty string at end of input.
inline std::string next_token(std::istream& in) {
    std::string token;
    char ch;
    while (in.get(ch)) {
        if (ch == '#') {
            while (in.get(ch) && ch != '\n') {
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        token.push_back(ch);
        while (in.get(ch)) {
            if (std::isspace(static_cast<unsigned char>(ch))) break;
            if (ch == '#') {
                in.unget();
                break;
            }
            token.push_back(ch);
        }
        return token;
    }
    return token;
}

inline void require_end_of_input(std::istream& in, const std::string& what) {
    if (!next_token(in).empty()) throw parse_error(what + ": trailing data after expected content");
}

inline std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    return in;
}

// Small positive integer such as a matrix order or vertex count.
inline int parse_count(const std::string& token, const std::string& what) {
    if (token.empty()) throw parse_error(what + ": unexpected end of input");
    for (char c : token)
        if (c < '0' || c > '9') throw parse_error(what + ": expected a positive integer, got '" + token + "'");
    if (token.size() > 9) throw parse_error(what + ": value out of range: " + token);
    return std::stoi(token);
}

}  // namespace muperm::detail
