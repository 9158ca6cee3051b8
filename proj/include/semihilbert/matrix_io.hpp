// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIHILBERT_MATRIX_IO_HPP
#define SEMIHILBERT_MATRIX_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "semihilbert/matrix.hpp"

namespace semihilbert
{

// File format: {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.

nlohmann::json to_json(const Matrix &m);

/// Throws Error(Parse) on missing fields, wrong counts or non-finite values.
Matrix matrix_from_json(const nlohmann::json &j);

Matrix parse_matrix(const std::string &text);
Matrix read_matrix(const std::filesystem::path &path);
void write_matrix(const std::filesystem::path &path, const Matrix &m);

/// The document as text, entries printed with 15 significant digits.
std::string format_matrix(const Matrix &m);

}  // namespace semihilbert

#endif  // SEMIHILBERT_MATRIX_IO_HPP
