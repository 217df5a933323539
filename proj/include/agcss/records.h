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

#ifndef AGCSS_RECORDS_H
#define AGCSS_RECORDS_H

#include <json.hpp>

#include "agcss/css.h"
#include "agcss/curves.h"
#include "agcss/tower.h"

namespace agcss {

/// {"family": "p1" | "hermitian", "t": int}
nlohmann::json curve_descriptor(const CurveModel &curve);
CurveModel curve_from_descriptor(const nlohmann::json &j);

nlohmann::json source_record(const Provenance &source);

/// {"n", "k", "d_designed", "d_exact", "source", "h_x", "h_z"}
nlohmann::json code_record(const CssCode &code);
/// Inverse of code_record. Recomputes nothing; matrices are taken as given.
CssCode code_from_record(const nlohmann::json &j);

/// Parameter-only row: {"n", "k", "d_designed", "source"}.
nlohmann::json params_record(const QuantumParams &params);

/// {"t", "m", "h", "n", "k", "d_21", "d_exact_genus", "R", "delta"}
nlohmann::json family_record(const AsymptoticFamilyParams &p);

}  // namespace agcss

#endif  // AGCSS_RECORDS_H
