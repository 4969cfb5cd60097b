/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qtom/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qtom::io {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    return json::parse(in);
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << j.dump(2) << "\n";
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
    require(j.is_array() && !j.empty(), "matrix: expected a nonempty array");
    const Index rows = static_cast<Index>(j.size());
    require(j[0].is_array() && !j[0].empty(), "matrix: expected nested arrays");
    const Index cols = static_cast<Index>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        require(j[r].is_array() && static_cast<Index>(j[r].size()) == cols,
                "matrix: ragged rows");
        for (Index c = 0; c < cols; ++c) {
            const json& entry = j[r][c];
            require(entry.is_array() && entry.size() == 2 &&
                        entry[0].is_number() && entry[1].is_number(),
                    "matrix: entries must be [re, im] pairs");
            m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return m;
}

json state_to_json(const ComplexMatrix& mat, std::span<const Index> dims) {
    json j;
    j["dim"] = mat.rows();
    j["dims"] = json::array();
    for (Index d : dims) j["dims"].push_back(d);
    j["data"] = matrix_to_json(mat);
    return j;
}

LoadedState state_from_json(const json& j) {
    require(j.is_object(), "state: expected an object");
    require(j.contains("data"), "state: missing \"data\"");
    LoadedState state;
    state.mat = matrix_from_json(j.at("data"));
    require(state.mat.rows() == state.mat.cols(), "state: matrix must be square");
    if (j.contains("dims")) {
        for (const auto& d : j.at("dims")) {
            require(d.is_number_integer() && d.get<Index>() >= 1,
                    "state: dims must be positive integers");
            state.dims.push_back(d.get<Index>());
        }
    } else {
        state.dims = {state.mat.rows()};
    }
    Index prod = 1;
    for (Index d : state.dims) prod *= d;
    require(prod == state.mat.rows(), "state: dims do not match matrix size");
    if (j.contains("dim"))
        require(j.at("dim").get<Index>() == state.mat.rows(),
                "state: \"dim\" does not match matrix size");
    return state;
}

LoadedState load_state_file(const std::filesystem::path& path) {
    return state_from_json(read_json_file(path));
}

void save_state_file(const std::filesystem::path& path, const ComplexMatrix& mat,
                     std::span<const Index> dims) {
    write_json_file(path, state_to_json(mat, dims));
}

KrausMap kraus_from_json(const json& j) {
    require(j.is_array() && !j.empty(), "kraus: expected a nonempty list");
    std::vector<ComplexMatrix> positive, negative;
    for (const auto& entry : j) {
        if (entry.is_array()) {
            positive.push_back(matrix_from_json(entry));
            continue;
        }
        require(entry.is_object() && entry.contains("matrix"),
                "kraus: entries must be matrices or {\"matrix\": ...} objects");
        std::string sign = entry.value("sign", "+");
        require(sign == "+" || sign == "-", "kraus: sign must be \"+\" or \"-\"");
        ComplexMatrix v = matrix_from_json(entry.at("matrix"));
        if (sign == "+")
            positive.push_back(std::move(v));
        else
            negative.push_back(std::move(v));
    }
    return KrausMap(std::move(positive), std::move(negative));
}

KrausMap load_kraus_file(const std::filesystem::path& path) {
    return kraus_from_json(read_json_file(path));
}

json measurements_to_json(std::span<const TomogramMeasurement> ms,
                          std::span<const Index> dims) {
    json j;
    j["dims"] = json::array();
    for (Index d : dims) j["dims"].push_back(d);
    j["measurements"] = json::array();
    for (const auto& m : ms) {
        json entry;
        entry["g"] = matrix_to_json(m.g);
        entry["values"] = json::array();
        for (Index i = 0; i < m.values.size(); ++i)
            entry["values"].push_back(m.values(i));
        j["measurements"].push_back(std::move(entry));
    }
    return j;
}

std::pair<std::vector<TomogramMeasurement>, std::vector<Index>>
measurements_from_json(const json& j) {
    require(j.is_object() && j.contains("measurements"),
            "measurements: missing \"measurements\"");
    std::vector<Index> dims;
    if (j.contains("dims"))
        for (const auto& d : j.at("dims")) dims.push_back(d.get<Index>());
    std::vector<TomogramMeasurement> ms;
    for (const auto& entry : j.at("measurements")) {
        require(entry.contains("g") && entry.contains("values"),
                "measurements: entries need \"g\" and \"values\"");
        TomogramMeasurement m;
        m.g = matrix_from_json(entry.at("g"));
        const auto& vals = entry.at("values");
        m.values.resize(static_cast<Index>(vals.size()));
        for (Index i = 0; i < m.values.size(); ++i)
            m.values(i) = vals[static_cast<std::size_t>(i)].get<double>();
        ms.push_back(std::move(m));
    }
    return {std::move(ms), std::move(dims)};
}

namespace {

bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "number") return value.is_number();
    if (type == "integer") return value.is_number_integer();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

std::optional<std::string> check_node(const json& value, const json& schema,
                                      const std::string& path) {
    if (schema.contains("type") &&
        !type_matches(value, schema.at("type").get<std::string>()))
        return path + ": expected type " + schema.at("type").get<std::string>();
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& option : schema.at("enum"))
            if (option == value) found = true;
        if (!found) return path + ": value not in enum";
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!value.contains(key.get<std::string>()))
                    return path + ": missing required key \"" +
                           key.get<std::string>() + "\"";
        if (schema.contains("properties")) {
            for (auto it = schema.at("properties").begin();
                 it != schema.at("properties").end(); ++it) {
                if (!value.contains(it.key())) continue;
                auto err = check_node(value.at(it.key()), it.value(),
                                      path + "/" + it.key());
                if (err) return err;
            }
            if (schema.value("additionalProperties", true) == false)
                for (auto it = value.begin(); it != value.end(); ++it)
                    if (!schema.at("properties").contains(it.key()))
                        return path + ": unexpected key \"" + it.key() + "\"";
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            auto err = check_node(value[i], schema.at("items"),
                                  path + "[" + std::to_string(i) + "]");
            if (err) return err;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> schema_check(const json& value, const json& schema) {
    return check_node(value, schema, "$");
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace qtom::io
