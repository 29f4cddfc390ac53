#pragma once

// Plain-text matrix format shared by every tool:
//
//   ROWS COLS
//   <ROWS lines of exactly COLS '0'/'1' characters>
//
// optionally followed by comment lines starting with '#', e.g. `#blocks 3,3`.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "convcodes/gf2.hpp"

namespace convcodes {

struct MatrixFile {
    BitMatrix matrix;
    std::vector<std::string> comments;  // without the leading '#'
};

MatrixFile parse_matrix(std::istream& in);
MatrixFile parse_matrix(const std::string& text);
MatrixFile read_matrix_file(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const BitMatrix& m, const std::vector<std::string>& comments = {});
std::string format_matrix(const BitMatrix& m, const std::vector<std::string>& comments = {});
void write_matrix_file(const std::filesystem::path& path, const BitMatrix& m,
                       const std::vector<std::string>& comments = {});

// Parses "3,3" or "3 3" into {3, 3}.
std::vector<std::size_t> parse_size_list(const std::string& text);
// Value of a "#blocks ..." comment, if present.
std::vector<std::size_t> blocks_from_comments(const std::vector<std::string>& comments);

}  // namespace convcodes
