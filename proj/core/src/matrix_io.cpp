#include "convcodes/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "convcodes/errors.hpp"

namespace convcodes {

namespace {

std::size_t parse_count(const std::string& token) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgument("expected a decimal count, got '" + token + "'");
    return static_cast<std::size_t>(std::stoull(token));
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

MatrixFile parse_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidArgument("matrix file is empty");
    strip_cr(line);
    std::istringstream header(line);
    std::string rows_tok;
    std::string cols_tok;
    std::string extra;
    if (!(header >> rows_tok >> cols_tok) || (header >> extra))
        throw InvalidArgument("matrix header must be 'ROWS COLS'");
    const std::size_t rows = parse_count(rows_tok);
    const std::size_t cols = parse_count(cols_tok);
    if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");

    std::vector<std::string> body;
    body.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(in, line)) throw InvalidArgument("matrix file ends after " + std::to_string(r) + " rows");
        strip_cr(line);
        if (line.size() != cols)
            throw InvalidArgument("matrix row " + std::to_string(r + 1) + " has " + std::to_string(line.size()) +
                                  " characters, expected " + std::to_string(cols));
        if (line.find_first_not_of("01") != std::string::npos)
            throw InvalidArgument("matrix row " + std::to_string(r + 1) + " contains characters other than 0/1");
        body.push_back(line);
    }

    MatrixFile out{BitMatrix::from_strings(body), {}};
    while (std::getline(in, line)) {
        strip_cr(line);
        if (line.empty()) continue;
        if (line.front() != '#') throw InvalidArgument("unexpected trailing content: '" + line + "'");
        out.comments.push_back(line.substr(1));
    }
    return out;
}

MatrixFile parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path.string());
    return parse_matrix(in);
}

void write_matrix(std::ostream& out, const BitMatrix& m, const std::vector<std::string>& comments) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (const auto& row : m.to_strings()) out << row << '\n';
    for (const auto& c : comments) out << '#' << c << '\n';
}

std::string format_matrix(const BitMatrix& m, const std::vector<std::string>& comments) {
    std::ostringstream out;
    write_matrix(out, m, comments);
    return out.str();
}

void write_matrix_file(const std::filesystem::path& path, const BitMatrix& m,
                       const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    write_matrix(out, m, comments);
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::string token;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ' ') {
            if (!token.empty()) out.push_back(parse_count(token));
            token.clear();
        } else {
            token.push_back(ch);
        }
    }
    return out;
}

std::vector<std::size_t> blocks_from_comments(const std::vector<std::string>& comments) {
    for (const auto& c : comments)
        if (c.rfind("blocks", 0) == 0) return parse_size_list(c.substr(6));
    return {};
}

}  // namespace convcodes
