#pragma once

#include <string>

#include <json.hpp>

#include "su11/gaussian_state.hpp"

namespace su11 {

/// JSON form of a state's covariance blocks:
///   {"m": M, "A": [[{"re": x, "im": y}, ...], ...], "B": [[...], ...]}
/// The displacement is not serialized (states produced here have none).
inline nlohmann::json state_to_json(const GaussianState& state) {
    const auto matrix_to_json = [](const CMatrix& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                row.push_back({{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };
    return nlohmann::json{{"m", state.mode_count()},
                          {"A", matrix_to_json(state.block_a())},
                          {"B", matrix_to_json(state.block_b())}};
}

inline GaussianState state_from_json(const nlohmann::json& j) {
    const int m = j.at("m").get<int>();
    if (m < 1) {
        throw std::invalid_argument("state JSON has non-positive mode count");
    }
    const auto matrix_from_json = [m](const nlohmann::json& rows) {
        if (static_cast<int>(rows.size()) != m) {
            throw std::invalid_argument("state JSON block has wrong row count");
        }
        CMatrix out(m, m);
        for (int r = 0; r < m; ++r) {
            const auto& row = rows.at(r);
            if (static_cast<int>(row.size()) != m) {
                throw std::invalid_argument("state JSON block has wrong column count");
            }
            for (int c = 0; c < m; ++c) {
                out(r, c) = Complex(row.at(c).at("re").get<double>(),
                                    row.at(c).at("im").get<double>());
            }
        }
        return out;
    };
    return GaussianState(matrix_from_json(j.at("A")), matrix_from_json(j.at("B")),
                         CVector::Zero(2 * m));
}

}  // namespace su11
