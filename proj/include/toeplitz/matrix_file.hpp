#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "toeplitz/core.hpp"
#include "toeplitz/dense.hpp"

namespace toeplitz {

/// Malformed or inconsistent matrix file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using MatrixValue = std::variant<AsymToeplitz, AsymHankel, DenseMatrix>;

/// "toeplitz", "hankel" or "dense".
std::string_view kind_of(const MatrixValue& v);

DenseMatrix dense_of(const MatrixValue& v);

// JSON layout, complex numbers as [re, im] pairs, unknown keys rejected:
//   {"kind": "toeplitz", "rows": n, "cols": m, "first_row": [...m], "first_col": [...n]}
//   {"kind": "hankel",   "rows": n, "cols": m, "first_row": [...m], "last_col": [...n]}
//   {"kind": "dense",    "rows": n, "cols": m, "data": [...n*m row-major]}

/// Throws FormatError.
MatrixValue parse_matrix(std::string_view text);

/// Throws FormatError (including when the file cannot be read).
MatrixValue read_matrix_file(const std::filesystem::path& path);

/// Canonical text: sorted keys, one key per line, every number printed with
/// 17 significant digits. parse_matrix(format_matrix(v)) reproduces v bit
/// for bit, and formatting again reproduces the text.
std::string format_matrix(const MatrixValue& v);

/// Throws FormatError when the file cannot be written.
void write_matrix_file(const std::filesystem::path& path, const MatrixValue& v);

/// "%.17g".
std::string format_number(double x);

}  // namespace toeplitz
