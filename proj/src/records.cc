// Copyright 2026 The agcss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "agcss/records.h"

#include "agcss/errors.h"

namespace agcss {

namespace {

nlohmann::json matrix_rows(const BitMatrix &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

BitMatrix matrix_from_rows(const nlohmann::json &rows, std::size_t n) {
    BitMatrix m(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != n) throw UsageError("matrix row width does not match n");
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, rows[r][c].get<int>() != 0);
    }
    return m;
}

}  // namespace

nlohmann::json curve_descriptor(const CurveModel &curve) { return {{"family", curve.family()}, {"t", curve.t()}}; }

CurveModel curve_from_descriptor(const nlohmann::json &j) {
    return CurveModel::from_descriptor(j.at("family").get<std::string>(), j.at("t").get<unsigned>());
}

nlohmann::json source_record(const Provenance &source) {
    nlohmann::json j;
    j["theorem"] = source.theorem;
    j["curve"] = source.curve ? curve_descriptor(*source.curve) : nlohmann::json(nullptr);
    j["t"] = source.t;
    j["m"] = source.m;
    j["mprime"] = source.mprime;
    return j;
}

nlohmann::json code_record(const CssCode &code) {
    nlohmann::json j;
    j["n"] = code.n_q;
    j["k"] = code.k_q;
    j["d_designed"] = code.d_designed;
    j["d_exact"] = code.d_exact ? nlohmann::json(*code.d_exact) : nlohmann::json(nullptr);
    j["source"] = source_record(code.source);
    j["h_x"] = matrix_rows(code.h_x);
    j["h_z"] = matrix_rows(code.h_z);
    return j;
}

CssCode code_from_record(const nlohmann::json &j) {
    try {
        CssCode code;
        code.n_q = j.at("n").get<long long>();
        code.k_q = j.at("k").get<long long>();
        code.d_designed = j.at("d_designed").get<long long>();
        if (!j.at("d_exact").is_null()) code.d_exact = j.at("d_exact").get<long long>();
        const auto &src = j.at("source");
        code.source.theorem = src.at("theorem").get<std::string>();
        if (!src.at("curve").is_null()) code.source.curve = curve_from_descriptor(src.at("curve"));
        code.source.t = src.at("t").get<long long>();
        code.source.m = src.at("m").get<long long>();
        code.source.mprime = src.at("mprime").get<long long>();
        const auto n = static_cast<std::size_t>(code.n_q);
        code.h_x = matrix_from_rows(j.at("h_x"), n);
        code.h_z = matrix_from_rows(j.at("h_z"), n);
        return code;
    } catch (const nlohmann::json::exception &e) {
        throw UsageError(std::string("malformed code record: ") + e.what());
    }
}

nlohmann::json params_record(const QuantumParams &params) {
    return {{"n", params.n_q}, {"k", params.k_q}, {"d_designed", params.d_designed},
            {"source", source_record(params.source)}};
}

nlohmann::json family_record(const AsymptoticFamilyParams &p) {
    return {{"t", p.t},         {"m", p.m},
            {"h", p.h},         {"n", p.n},
            {"k", p.k},         {"d_21", p.d},
            {"d_exact_genus", p.d_exact_genus}, {"R", p.R.value()},
            {"delta", p.delta.value()}};
}

}  // namespace agcss
