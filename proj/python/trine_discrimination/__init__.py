# Copyright 2026 The Trine Discrimination Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Minimum-error and maximum-confidence discrimination of the qubit trine."""

from ._core import (
    DomainError,
    InsufficientDataError,
    InvalidInputError,
    PureStateError,
    RegionError,
    TrineError,
    __version__,
    boundary_determinant,
    confidence,
    critical_delta,
    max_delta,
    min_error_confidence,
    optimal,
    optimal_p_delta,
    oracle_min_error,
    simulate,
)

__all__ = [
    "DomainError",
    "InsufficientDataError",
    "InvalidInputError",
    "PureStateError",
    "RegionError",
    "TrineError",
    "__version__",
    "boundary_determinant",
    "confidence",
    "critical_delta",
    "max_delta",
    "min_error_confidence",
    "optimal",
    "optimal_p_delta",
    "oracle_min_error",
    "simulate",
]
