/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QTOM_IO_HPP
#define QTOM_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtom/channels.hpp"
#include "qtom/tomography.hpp"

namespace qtom::io {

using nlohmann::json;

// Matrices are nested arrays of [re, im] pairs; round trips are bit-faithful.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

struct LoadedState {
    ComplexMatrix mat;
    std::vector<Index> dims;
};

/// State file layout: {"dim": n, "dims": [...], "data": [[[re, im], ...], ...]}.
json state_to_json(const ComplexMatrix& mat, std::span<const Index> dims);
LoadedState state_from_json(const json& j);
LoadedState load_state_file(const std::filesystem::path& path);
void save_state_file(const std::filesystem::path& path, const ComplexMatrix& mat,
                     std::span<const Index> dims);

/// Kraus file: JSON list of matrices, each either a bare nested array or
/// {"matrix": ..., "sign": "+"|"-"}.
KrausMap kraus_from_json(const json& j);
KrausMap load_kraus_file(const std::filesystem::path& path);

/// Measurements file: {"dims": [...], "measurements":
/// [{"g": matrix, "values": [...]}, ...]}.
json measurements_to_json(std::span<const TomogramMeasurement> ms,
                          std::span<const Index> dims);
std::pair<std::vector<TomogramMeasurement>, std::vector<Index>>
measurements_from_json(const json& j);

/// Minimal JSON-schema validator covering the subset used by the shipped
/// schema documents (type, properties, required, items, enum,
/// additionalProperties). Returns an error description or nullopt.
std::optional<std::string> schema_check(const json& value, const json& schema);

/// 1-based line/column of a byte offset in text (for parse diagnostics).
std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                std::size_t byte);

}  // namespace qtom::io

#endif
