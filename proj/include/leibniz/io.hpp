#pragma once

#include "leibniz/linalg.hpp"
#include "leibniz/structure_table.hpp"

#include <map>
#include <string>
#include <string_view>

namespace leibniz {

/// Algebra file: a JSON document
///   {"dim": d, "labels": [...],
///    "brackets": [{"left": l, "right": r, "value": [{"coef": Scalar, "basis": b}, ...]}, ...]}
/// Omitted brackets are zero. Output lists brackets by (left, right) position
/// and value entries by basis position, so equal tables give equal text.
std::string write_algebra(const ScalarTable& table);

/// Throws InputError with the line for syntax errors and the field path for
/// content errors (unknown label, bad Scalar text, duplicate bracket, ...).
ScalarTable read_algebra(std::string_view text);

ScalarTable load_algebra(const std::string& path);
void save_algebra(const std::string& path, const ScalarTable& table);

/// Parameter file: one "name = Scalar" per line; blank lines and lines
/// starting with '#' are ignored. Throws InputError naming the line.
std::map<std::string, Scalar> read_params(std::string_view text);
std::map<std::string, Scalar> load_params(const std::string& path);
std::string write_params(const std::map<std::string, Scalar>& params);

/// Rows of space-separated Scalar text.
std::string write_matrix(const Matrix& m);

/// Whole file as a string; throws InputError when it cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace leibniz
