#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "symds/matrix.hpp"

namespace symds {

// Text format for exact matrices:
//   - '#' starts a comment that runs to end of line
//   - first meaningful token line: the order n
//   - then n lines of n whitespace-separated entries, each an integer or p/q
namespace detail {
inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}
}  // namespace detail

inline ExactMatrix read_dsm(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(detail::strip_comment(line));
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    if (tokens.empty()) throw std::invalid_argument("dsm: empty input");
    size_t k = 0;
    long n_long = 0;
    try {
        size_t used = 0;
        n_long = std::stol(tokens[k], &used);
        if (used != tokens[k].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw std::invalid_argument("dsm: first value must be the matrix order, got '" + tokens[k] + "'");
    }
    ++k;
    if (n_long < 1 || n_long > 10000) throw std::invalid_argument("dsm: order out of range");
    const int n = static_cast<int>(n_long);
    const size_t need = static_cast<size_t>(n) * static_cast<size_t>(n);
    if (tokens.size() - k != need)
        throw std::invalid_argument("dsm: expected " + std::to_string(need) + " entries, got " +
                                    std::to_string(tokens.size() - k));
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            try {
                m.at(i, j) = Rational::parse(tokens[k]);
            } catch (const std::exception&) {
                throw std::invalid_argument("dsm: bad entry '" + tokens[k] + "' at row " + std::to_string(i) +
                                            ", column " + std::to_string(j));
            }
            ++k;
        }
    return m;
}

inline ExactMatrix read_dsm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("dsm: cannot open '" + path + "'");
    return read_dsm(in);
}

inline ExactMatrix read_dsm_string(const std::string& text) {
    std::istringstream in(text);
    return read_dsm(in);
}

inline void write_dsm(std::ostream& out, const ExactMatrix& a, const std::string& comment = "") {
    if (!comment.empty()) out << "# " << comment << "\n";
    out << a.order() << "\n";
    for (int i = 1; i <= a.order(); ++i) {
        for (int j = 1; j <= a.order(); ++j) {
            if (j > 1) out << " ";
            out << a.at(i, j).str();
        }
        out << "\n";
    }
}

inline std::string write_dsm_string(const ExactMatrix& a, const std::string& comment = "") {
    std::ostringstream out;
    write_dsm(out, a, comment);
    return out.str();
}

}  // namespace symds
