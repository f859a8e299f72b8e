#include "knotdist/io.hpp"

#include <fstream>
#include <sstream>

namespace knotdist {

IntMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<Integer>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::vector<Integer> row;
        std::string token;
        while (fields >> token) {
            Integer v;
            const std::string_view digits =
                token.size() > 1 && (token[0] == '-' || token[0] == '+') ? std::string_view(token).substr(1) : token;
            const bool ok = !digits.empty() && digits.find_first_not_of("0123456789") == std::string_view::npos &&
                            v.set_str(token[0] == '+' ? token.substr(1) : token, 10) == 0;
            if (!ok) {
                throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
            }
            row.push_back(v);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected " +
                                              std::to_string(rows.front().size()) + " entries, got " +
                                              std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n > 0 && rows.front().size() != n) {
        throw Error(ErrorCode::Parse, "matrix must be square, got " + std::to_string(n) + "x" +
                                          std::to_string(rows.front().size()));
    }
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return m;
}

SeifertMatrix parse_seifert(std::string_view text) { return SeifertMatrix::validate(parse_matrix(text)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SeifertMatrix load_seifert(const std::string& path) { return parse_seifert(read_file(path)); }

std::string format_matrix(const IntMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ' ';
            out += m(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

}  // namespace knotdist
