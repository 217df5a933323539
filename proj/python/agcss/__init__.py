# Copyright 2026 The agcss Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""CSS quantum codes from algebraic-geometry codes over GF(2^t)."""

from ._agcss import (
    CapacityError,
    ConstructionError,
    CssCode,
    DefectError,
    DomainError,
    ParameterError,
    UsageError,
    construct,
    corollary_params,
    css_construct,
    curve_info,
    exact_distance,
    family_params,
    params,
    run_cli,
    table,
    tower_genus,
    tower_points,
)

__all__ = [
    "CapacityError",
    "ConstructionError",
    "CssCode",
    "DefectError",
    "DomainError",
    "ParameterError",
    "UsageError",
    "construct",
    "corollary_params",
    "css_construct",
    "curve_info",
    "exact_distance",
    "family_params",
    "params",
    "run_cli",
    "table",
    "tower_genus",
    "tower_points",
]
