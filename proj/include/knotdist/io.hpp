#pragma once

// Matrix text files: one row per line, integers separated by spaces,
// blank lines and '#' comments ignored. An empty file is the 0x0 matrix.

#include <string>
#include <string_view>

#include "knotdist/matrix.hpp"
#include "knotdist/seifert.hpp"

namespace knotdist {

// Throws Parse for bad tokens, ragged rows, or a non-square shape.
IntMatrix parse_matrix(std::string_view text);

// parse_matrix followed by SeifertMatrix::validate.
SeifertMatrix parse_seifert(std::string_view text);

// Throws InvalidArgument if the file cannot be read.
std::string read_file(const std::string& path);

SeifertMatrix load_seifert(const std::string& path);

// Inverse of parse_matrix.
std::string format_matrix(const IntMatrix& m);

}  // namespace knotdist
