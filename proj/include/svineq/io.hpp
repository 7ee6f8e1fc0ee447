#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "svineq/matrix.hpp"

namespace svineq {

// Matrix wire format: {"rows": [[[re, im], ...], ...]} with IEEE doubles
// serialized as shortest round-trip decimals, so witnesses replay exactly.

inline nlohmann::json matrix_to_json(const ComplexMatrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < a.cols(); ++j)
            row.push_back({a(i, j).real(), a(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return {{"rows", std::move(rows)}};
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
        throw ParameterError("matrix json: missing non-empty \"rows\" array");
    const auto& rows = j["rows"];
    const std::size_t r = rows.size();
    const std::size_t c = rows[0].size();
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c)
            throw ParameterError("matrix json: ragged rows");
        for (std::size_t k = 0; k < c; ++k) {
            const auto& e = rows[i][k];
            if (!e.is_array() || e.size() != 2)
                throw ParameterError("matrix json: entry must be [re, im]");
            m(i, k) = Complex{e[0].get<double>(), e[1].get<double>()};
        }
    }
    if (!m.is_finite()) throw ParameterError("matrix json: non-finite entry");
    return m;
}

struct MatrixFile {
    std::vector<ComplexMatrix> matrices;
    std::optional<double> alpha;
};

// Accepts either a single matrix object or
// {"matrices": [...], "alpha": <optional>}.
inline MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open input file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParameterError("parse error in " + path + ": " + e.what());
    }
    MatrixFile out;
    if (j.contains("rows")) {
        out.matrices.push_back(matrix_from_json(j));
        return out;
    }
    if (!j.contains("matrices") || !j["matrices"].is_array())
        throw ParameterError(path + ": expected \"rows\" or \"matrices\"");
    for (const auto& mj : j["matrices"])
        out.matrices.push_back(matrix_from_json(mj));
    if (j.contains("alpha")) out.alpha = j["alpha"].get<double>();
    return out;
}

inline void write_matrix_file(const std::string& path,
                              const std::vector<ComplexMatrix>& matrices,
                              std::optional<double> alpha = std::nullopt) {
    nlohmann::json j;
    if (matrices.size() == 1 && !alpha) {
        j = matrix_to_json(matrices[0]);
    } else {
        j["matrices"] = nlohmann::json::array();
        for (const auto& m : matrices) j["matrices"].push_back(matrix_to_json(m));
        if (alpha) j["alpha"] = *alpha;
    }
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write output file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace svineq
